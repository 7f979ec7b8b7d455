//! Z2xZ2 grading vectors and the bilinear pairing that controls bracket signs.

use serde::{Deserialize, Serialize};
use std::fmt;

/// An element of Z2xZ2, written `(a1, a2)` with each component 0 or 1.
///
/// Addition is componentwise mod 2. The pairing `a.b = a1*b1 + a2*b2 (mod 2)`
/// decides whether the graded bracket of two homogeneous elements is a
/// commutator (pairing 0) or an anticommutator (pairing 1).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(into = "[u8; 2]", try_from = "[u8; 2]")]
pub struct GradingVector {
    a1: u8,
    a2: u8,
}

impl GradingVector {
    pub const ZERO: GradingVector = GradingVector { a1: 0, a2: 0 };

    pub fn new(a1: u8, a2: u8) -> Self {
        assert!(a1 <= 1 && a2 <= 1, "grading components must be bits");
        GradingVector { a1, a2 }
    }

    pub fn components(self) -> (u8, u8) {
        (self.a1, self.a2)
    }

    /// Componentwise sum mod (2,2).
    pub fn add(self, other: GradingVector) -> GradingVector {
        GradingVector {
            a1: (self.a1 + other.a1) % 2,
            a2: (self.a2 + other.a2) % 2,
        }
    }

    /// The pairing `a1*b1 + a2*b2 (mod 2)`.
    pub fn pairing(self, other: GradingVector) -> u8 {
        (self.a1 * other.a1 + self.a2 * other.a2) % 2
    }

    /// Pairing of a grading with itself, `a1 + a2 (mod 2)`.
    pub fn self_pairing(self) -> u8 {
        self.pairing(self)
    }

    /// `(-1)^(a.b)` as a sign.
    pub fn pairing_sign(self, other: GradingVector) -> i8 {
        if self.pairing(other) == 0 {
            1
        } else {
            -1
        }
    }

    /// All four gradings in the fixed order (0,0), (1,1), (1,0), (0,1).
    pub fn all() -> [GradingVector; 4] {
        [
            GradingVector::new(0, 0),
            GradingVector::new(1, 1),
            GradingVector::new(1, 0),
            GradingVector::new(0, 1),
        ]
    }
}

impl From<GradingVector> for [u8; 2] {
    fn from(g: GradingVector) -> [u8; 2] {
        [g.a1, g.a2]
    }
}

impl TryFrom<[u8; 2]> for GradingVector {
    type Error = String;

    fn try_from(v: [u8; 2]) -> Result<Self, String> {
        if v[0] > 1 || v[1] > 1 {
            return Err(format!("grading components must be 0 or 1, got {:?}", v));
        }
        Ok(GradingVector::new(v[0], v[1]))
    }
}

impl fmt::Display for GradingVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a1, self.a2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(a: u8, b: u8) -> GradingVector {
        GradingVector::new(a, b)
    }

    #[test]
    fn addition_mod_two() {
        assert_eq!(g(1, 1).add(g(1, 0)), g(0, 1));
        assert_eq!(g(0, 0).add(g(1, 0)), g(1, 0));
        assert_eq!(g(1, 1).add(g(1, 1)), g(0, 0));
    }

    #[test]
    fn pairing_values() {
        assert_eq!(g(1, 1).pairing(g(1, 0)), 1);
        assert_eq!(g(1, 1).pairing(g(1, 1)), 0);
        for other in GradingVector::all() {
            assert_eq!(g(0, 0).pairing(other), 0);
        }
    }

    #[test]
    fn self_pairing_is_component_sum() {
        assert_eq!(g(0, 0).self_pairing(), 0);
        assert_eq!(g(1, 1).self_pairing(), 0);
        assert_eq!(g(1, 0).self_pairing(), 1);
        assert_eq!(g(0, 1).self_pairing(), 1);
    }

    #[test]
    fn serde_round_trip() {
        for gv in GradingVector::all() {
            let s = serde_json::to_string(&gv).unwrap();
            let back: GradingVector = serde_json::from_str(&s).unwrap();
            assert_eq!(gv, back);
        }
        assert_eq!(serde_json::to_string(&g(1, 0)).unwrap(), "[1,0]");
    }
}
