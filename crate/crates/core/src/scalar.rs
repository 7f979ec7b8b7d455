//! Exact arithmetic in the quadratic field Q(sqrt 2).
//!
//! Every scalar is `rat + irr * sqrt(2)` with both parts arbitrary-precision
//! rationals kept in lowest terms. Exactness is what makes the identity
//! checks in the rest of the crate meaningful; there is no floating point
//! anywhere in this crate.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

/// An element `rat + irr * sqrt(2)` of Q(sqrt 2).
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct FieldScalar {
    rat: BigRational,
    irr: BigRational,
}

impl FieldScalar {
    pub fn new(rat: BigRational, irr: BigRational) -> Self {
        FieldScalar { rat, irr }
    }

    pub fn zero() -> Self {
        FieldScalar {
            rat: BigRational::zero(),
            irr: BigRational::zero(),
        }
    }

    pub fn one() -> Self {
        FieldScalar {
            rat: BigRational::one(),
            irr: BigRational::zero(),
        }
    }

    pub fn sqrt2() -> Self {
        FieldScalar {
            rat: BigRational::zero(),
            irr: BigRational::one(),
        }
    }

    pub fn from_int(v: i64) -> Self {
        FieldScalar {
            rat: BigRational::from_integer(BigInt::from(v)),
            irr: BigRational::zero(),
        }
    }

    /// `num/den` as a purely rational scalar. Panics if `den == 0`.
    pub fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        FieldScalar {
            rat: BigRational::new(BigInt::from(num), BigInt::from(den)),
            irr: BigRational::zero(),
        }
    }

    /// `num/den * sqrt(2)`. Panics if `den == 0`.
    pub fn sqrt2_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        FieldScalar {
            rat: BigRational::zero(),
            irr: BigRational::new(BigInt::from(num), BigInt::from(den)),
        }
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.rat
    }

    pub fn sqrt2_part(&self) -> &BigRational {
        &self.irr
    }

    pub fn is_zero(&self) -> bool {
        self.rat.is_zero() && self.irr.is_zero()
    }

    /// Field conjugate `rat - irr * sqrt(2)`.
    pub fn conjugate(&self) -> FieldScalar {
        FieldScalar {
            rat: self.rat.clone(),
            irr: -self.irr.clone(),
        }
    }

    /// Field norm `rat^2 - 2 * irr^2`, a rational. Zero iff the scalar is zero,
    /// since sqrt(2) is irrational.
    pub fn norm(&self) -> BigRational {
        &self.rat * &self.rat - BigRational::from_integer(BigInt::from(2)) * &self.irr * &self.irr
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inverse(&self) -> Option<FieldScalar> {
        let n = self.norm();
        if n.is_zero() {
            return None;
        }
        let conj = self.conjugate();
        Some(FieldScalar {
            rat: conj.rat / &n,
            irr: conj.irr / &n,
        })
    }

    /// Serialized form of one rational part, always `"p/q"` with q > 0 and
    /// gcd(p, q) = 1.
    fn part_string(r: &BigRational) -> String {
        format!("{}/{}", r.numer(), r.denom())
    }

    pub fn rat_string(&self) -> String {
        Self::part_string(&self.rat)
    }

    pub fn sqrt2_string(&self) -> String {
        Self::part_string(&self.irr)
    }

    fn parse_part(s: &str) -> Result<BigRational, String> {
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n, d),
            None => (s, "1"),
        };
        let num = BigInt::from_str(num.trim()).map_err(|e| format!("bad numerator {s:?}: {e}"))?;
        let den =
            BigInt::from_str(den.trim()).map_err(|e| format!("bad denominator {s:?}: {e}"))?;
        if den.is_zero() {
            return Err(format!("zero denominator in {s:?}"));
        }
        Ok(BigRational::new(num, den))
    }

    /// Parse the `{"rat": "p/q", "sqrt2": "r/s"}` string pair.
    pub fn from_strings(rat: &str, sqrt2: &str) -> Result<FieldScalar, String> {
        Ok(FieldScalar {
            rat: Self::parse_part(rat)?,
            irr: Self::parse_part(sqrt2)?,
        })
    }
}

impl fmt::Display for FieldScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        if !self.rat.is_zero() {
            write!(f, "{}", self.rat)?;
            first = false;
        }
        if !self.irr.is_zero() {
            if !first && self.irr.is_positive() {
                write!(f, "+")?;
            }
            if self.irr.is_one() {
                write!(f, "√2")?;
            } else if (-self.irr.clone()).is_one() {
                write!(f, "-√2")?;
            } else {
                write!(f, "{}√2", self.irr)?;
            }
        }
        Ok(())
    }
}

impl Serialize for FieldScalar {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("FieldScalar", 2)?;
        s.serialize_field("rat", &self.rat_string())?;
        s.serialize_field("sqrt2", &self.sqrt2_string())?;
        s.end()
    }
}

impl<'de> Deserialize<'de> for FieldScalar {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            rat: String,
            sqrt2: String,
        }
        let r = Repr::deserialize(deserializer)?;
        FieldScalar::from_strings(&r.rat, &r.sqrt2).map_err(serde::de::Error::custom)
    }
}

impl Add for FieldScalar {
    type Output = FieldScalar;
    fn add(self, rhs: FieldScalar) -> FieldScalar {
        FieldScalar {
            rat: self.rat + rhs.rat,
            irr: self.irr + rhs.irr,
        }
    }
}

impl<'a> Add<&'a FieldScalar> for &FieldScalar {
    type Output = FieldScalar;
    fn add(self, rhs: &'a FieldScalar) -> FieldScalar {
        FieldScalar {
            rat: &self.rat + &rhs.rat,
            irr: &self.irr + &rhs.irr,
        }
    }
}

impl AddAssign<&FieldScalar> for FieldScalar {
    fn add_assign(&mut self, rhs: &FieldScalar) {
        self.rat += &rhs.rat;
        self.irr += &rhs.irr;
    }
}

impl Sub for FieldScalar {
    type Output = FieldScalar;
    fn sub(self, rhs: FieldScalar) -> FieldScalar {
        FieldScalar {
            rat: self.rat - rhs.rat,
            irr: self.irr - rhs.irr,
        }
    }
}

impl<'a> Sub<&'a FieldScalar> for &FieldScalar {
    type Output = FieldScalar;
    fn sub(self, rhs: &'a FieldScalar) -> FieldScalar {
        FieldScalar {
            rat: &self.rat - &rhs.rat,
            irr: &self.irr - &rhs.irr,
        }
    }
}

impl SubAssign<&FieldScalar> for FieldScalar {
    fn sub_assign(&mut self, rhs: &FieldScalar) {
        self.rat -= &rhs.rat;
        self.irr -= &rhs.irr;
    }
}

impl Neg for FieldScalar {
    type Output = FieldScalar;
    fn neg(self) -> FieldScalar {
        FieldScalar {
            rat: -self.rat,
            irr: -self.irr,
        }
    }
}

impl Neg for &FieldScalar {
    type Output = FieldScalar;
    fn neg(self) -> FieldScalar {
        FieldScalar {
            rat: -self.rat.clone(),
            irr: -self.irr.clone(),
        }
    }
}

impl Mul for FieldScalar {
    type Output = FieldScalar;
    fn mul(self, rhs: FieldScalar) -> FieldScalar {
        (&self).mul(&rhs)
    }
}

impl<'a> Mul<&'a FieldScalar> for &FieldScalar {
    type Output = FieldScalar;
    fn mul(self, rhs: &'a FieldScalar) -> FieldScalar {
        // (a + b√2)(c + d√2) = (ac + 2bd) + (ad + bc)√2
        let two = BigRational::from_integer(BigInt::from(2));
        FieldScalar {
            rat: &self.rat * &rhs.rat + two * &self.irr * &rhs.irr,
            irr: &self.rat * &rhs.irr + &self.irr * &rhs.rat,
        }
    }
}

impl MulAssign<&FieldScalar> for FieldScalar {
    fn mul_assign(&mut self, rhs: &FieldScalar) {
        *self = (&*self).mul(rhs);
    }
}
