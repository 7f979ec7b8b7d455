//! Graded matrices over Q(sqrt 2) and the general graded bracket.
//!
//! A matrix carries an index-grading scheme assigning a Z2xZ2 degree to every
//! row/column index; entry (i, j) has degree d(i) + d(j). The bracket is
//! defined on homogeneous components as
//! `X_a Y_b - (-1)^(a.b) Y_b X_a` and extended by linearity.

use crate::error::AlgebraError;
use crate::grading::GradingVector;
use crate::scalar::FieldScalar;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

/// Total grading function on the 1-based index segment `[1 .. total_dim]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IndexGradingScheme {
    grades: Vec<GradingVector>,
}

impl IndexGradingScheme {
    pub fn new(grades: Vec<GradingVector>) -> Result<Arc<Self>, AlgebraError> {
        if grades.is_empty() {
            return Err(AlgebraError::EmptyAlgebra);
        }
        Ok(Arc::new(IndexGradingScheme { grades }))
    }

    pub fn total_dim(&self) -> usize {
        self.grades.len()
    }

    /// Degree of index `i` (1-based).
    pub fn grade_of(&self, i: usize) -> GradingVector {
        assert!(i >= 1 && i <= self.grades.len(), "index out of range");
        self.grades[i - 1]
    }

    /// Degree of the (i, j) entry position.
    pub fn entry_grade(&self, i: usize, j: usize) -> GradingVector {
        self.grade_of(i).add(self.grade_of(j))
    }

    /// Number of indices per grading, in the order (0,0), (1,1), (1,0), (0,1).
    pub fn grading_census(&self) -> [(GradingVector, usize); 4] {
        GradingVector::all().map(|g| (g, self.grades.iter().filter(|x| **x == g).count()))
    }
}

/// Sparse square matrix over [`FieldScalar`] with an attached grading scheme.
///
/// Zero entries are never stored, so structural equality is semantic equality.
/// Entries iterate in sorted (row, col) order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GradedMatrix {
    scheme: Arc<IndexGradingScheme>,
    entries: BTreeMap<(usize, usize), FieldScalar>,
}

impl GradedMatrix {
    pub fn zero(scheme: Arc<IndexGradingScheme>) -> Self {
        GradedMatrix {
            scheme,
            entries: BTreeMap::new(),
        }
    }

    /// The unit matrix `e_ij`: single entry 1 at (i, j), 1-based.
    pub fn unit(scheme: Arc<IndexGradingScheme>, i: usize, j: usize) -> Self {
        let mut m = GradedMatrix::zero(scheme);
        m.set(i, j, FieldScalar::one());
        m
    }

    pub fn scheme(&self) -> &Arc<IndexGradingScheme> {
        &self.scheme
    }

    pub fn dim(&self) -> usize {
        self.scheme.total_dim()
    }

    pub fn set(&mut self, i: usize, j: usize, value: FieldScalar) {
        let n = self.scheme.total_dim();
        assert!(i >= 1 && i <= n && j >= 1 && j <= n, "entry out of range");
        if value.is_zero() {
            self.entries.remove(&(i, j));
        } else {
            self.entries.insert((i, j), value);
        }
    }

    pub fn add_to(&mut self, i: usize, j: usize, value: &FieldScalar) {
        let current = self.get(i, j);
        self.set(i, j, &current + value);
    }

    pub fn get(&self, i: usize, j: usize) -> FieldScalar {
        self.entries
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(FieldScalar::zero)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &FieldScalar)> {
        self.entries.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn same_scheme(&self, other: &GradedMatrix) -> bool {
        Arc::ptr_eq(&self.scheme, &other.scheme) || *self.scheme == *other.scheme
    }

    fn require_same_scheme(&self, other: &GradedMatrix) -> Result<(), AlgebraError> {
        if self.same_scheme(other) {
            Ok(())
        } else {
            Err(AlgebraError::SchemeMismatch {
                left: self.dim(),
                right: other.dim(),
            })
        }
    }

    pub fn add(&self, other: &GradedMatrix) -> GradedMatrix {
        assert!(self.same_scheme(other), "scheme mismatch in add");
        let mut out = self.clone();
        for (&(i, j), v) in other.entries() {
            out.add_to(i, j, v);
        }
        out
    }

    pub fn sub(&self, other: &GradedMatrix) -> GradedMatrix {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> GradedMatrix {
        self.scale(&-&FieldScalar::one())
    }

    pub fn scale(&self, c: &FieldScalar) -> GradedMatrix {
        let mut out = GradedMatrix::zero(self.scheme.clone());
        if c.is_zero() {
            return out;
        }
        for (&(i, j), v) in self.entries() {
            out.set(i, j, c * v);
        }
        out
    }

    /// Plain associative matrix product.
    pub fn matmul(&self, other: &GradedMatrix) -> GradedMatrix {
        assert!(self.same_scheme(other), "scheme mismatch in matmul");
        let mut out = GradedMatrix::zero(self.scheme.clone());
        // Group rhs entries by row for the sparse product.
        for (&(i, k), a) in self.entries() {
            for (&(k2, j), b) in other.entries.range((k, 1)..=(k, usize::MAX)) {
                debug_assert_eq!(k, k2);
                out.add_to(i, j, &(a * b));
            }
        }
        out
    }

    /// Split into the four homogeneous components, in the grading order
    /// (0,0), (1,1), (1,0), (0,1). The components always sum back to `self`.
    pub fn homogeneous_components(&self) -> [GradedMatrix; 4] {
        let mut out = [
            GradedMatrix::zero(self.scheme.clone()),
            GradedMatrix::zero(self.scheme.clone()),
            GradedMatrix::zero(self.scheme.clone()),
            GradedMatrix::zero(self.scheme.clone()),
        ];
        let order = GradingVector::all();
        for (&(i, j), v) in self.entries() {
            let g = self.scheme.entry_grade(i, j);
            let slot = order.iter().position(|x| *x == g).unwrap();
            out[slot].set(i, j, v.clone());
        }
        out
    }

    /// Degree of a homogeneous matrix. The zero matrix counts as homogeneous
    /// of degree (0,0); `None` means genuinely mixed.
    pub fn degree(&self) -> Option<GradingVector> {
        let mut found: Option<GradingVector> = None;
        for (&(i, j), _) in self.entries() {
            let g = self.scheme.entry_grade(i, j);
            match found {
                None => found = Some(g),
                Some(prev) if prev != g => return None,
                Some(_) => {}
            }
        }
        Some(found.unwrap_or(GradingVector::ZERO))
    }

    pub fn is_homogeneous(&self) -> bool {
        self.degree().is_some()
    }

    /// The general graded bracket, extended by linearity over the four
    /// homogeneous components of each operand.
    pub fn graded_bracket(&self, other: &GradedMatrix) -> Result<GradedMatrix, AlgebraError> {
        self.require_same_scheme(other)?;
        let xs = self.homogeneous_components();
        let ys = other.homogeneous_components();
        let grades = GradingVector::all();
        let mut out = GradedMatrix::zero(self.scheme.clone());
        for (a, x) in grades.iter().zip(xs.iter()) {
            if x.is_zero() {
                continue;
            }
            for (b, y) in grades.iter().zip(ys.iter()) {
                if y.is_zero() {
                    continue;
                }
                let xy = x.matmul(y);
                let yx = y.matmul(x);
                let term = if a.pairing(*b) == 0 {
                    xy.sub(&yx)
                } else {
                    xy.add(&yx)
                };
                out = out.add(&term);
            }
        }
        Ok(out)
    }

    /// Plain commutator `XY - YX`.
    pub fn commutator(&self, other: &GradedMatrix) -> GradedMatrix {
        self.matmul(other).sub(&other.matmul(self))
    }

    /// Plain anticommutator `XY + YX`.
    pub fn anticommutator(&self, other: &GradedMatrix) -> GradedMatrix {
        self.matmul(other).add(&other.matmul(self))
    }

    /// First entry where `self` and `other` differ, in (row, col) order.
    pub fn first_difference(&self, other: &GradedMatrix) -> Option<(usize, usize)> {
        self.sub(other).entries().next().map(|(&pos, _)| pos)
    }
}

impl fmt::Display for GradedMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(i, j), v) in self.entries() {
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "({v})·e[{i},{j}]")?;
            first = false;
        }
        Ok(())
    }
}
