//! The general linear Z2xZ2-graded superalgebra gl(m1,m2|n1,n2) with its
//! unit-matrix Cartan-Weyl basis.

use crate::error::AlgebraError;
use crate::grading::GradingVector;
use crate::matrix::{GradedMatrix, IndexGradingScheme};
use crate::report::{AlgebraParams, VerificationReport};
use crate::scalar::FieldScalar;
use std::sync::Arc;

/// Basis element `e_ij` with its degree `d(i) + d(j)`.
#[derive(Clone, Debug)]
pub struct GlBasisElement {
    pub i: usize,
    pub j: usize,
    pub degree: GradingVector,
    pub matrix: GradedMatrix,
}

/// gl(m1,m2|n1,n2): grading (0,0) on the first m1 indices, (1,1) on the next
/// m2, (1,0) on the next n1, (0,1) on the last n2.
#[derive(Clone, Debug)]
pub struct GlScheme {
    pub m1: usize,
    pub m2: usize,
    pub n1: usize,
    pub n2: usize,
    scheme: Arc<IndexGradingScheme>,
}

impl GlScheme {
    pub fn build(m1: usize, m2: usize, n1: usize, n2: usize) -> Result<Self, AlgebraError> {
        let mut grades = Vec::with_capacity(m1 + m2 + n1 + n2);
        grades.extend(std::iter::repeat(GradingVector::new(0, 0)).take(m1));
        grades.extend(std::iter::repeat(GradingVector::new(1, 1)).take(m2));
        grades.extend(std::iter::repeat(GradingVector::new(1, 0)).take(n1));
        grades.extend(std::iter::repeat(GradingVector::new(0, 1)).take(n2));
        let scheme = IndexGradingScheme::new(grades)?;
        Ok(GlScheme { m1, m2, n1, n2, scheme })
    }

    pub fn params(&self) -> AlgebraParams {
        AlgebraParams::Gl {
            m1: self.m1,
            m2: self.m2,
            n1: self.n1,
            n2: self.n2,
        }
    }

    pub fn total_dim(&self) -> usize {
        self.scheme.total_dim()
    }

    pub fn scheme(&self) -> &Arc<IndexGradingScheme> {
        &self.scheme
    }

    pub fn grade_of(&self, i: usize) -> GradingVector {
        self.scheme.grade_of(i)
    }

    pub fn unit(&self, i: usize, j: usize) -> GradedMatrix {
        GradedMatrix::unit(self.scheme.clone(), i, j)
    }

    /// The full basis `{e_ij}` in (i, j) order: `total_dim^2` elements.
    pub fn basis(&self) -> Vec<GlBasisElement> {
        let n = self.total_dim();
        let mut out = Vec::with_capacity(n * n);
        for i in 1..=n {
            for j in 1..=n {
                out.push(GlBasisElement {
                    i,
                    j,
                    degree: self.scheme.grade_of(i).add(self.scheme.grade_of(j)),
                    matrix: self.unit(i, j),
                });
            }
        }
        out
    }

    /// Cartan subalgebra basis `h_i = e_ii`, all of degree (0,0).
    pub fn cartan(&self) -> Vec<GradedMatrix> {
        (1..=self.total_dim()).map(|i| self.unit(i, i)).collect()
    }

    /// Right-hand side of the closed-form relation
    /// `[[e_ij, e_kl]] = d_jk e_il - (-1)^(d_ij.d_kl) d_il e_kj`.
    pub fn closed_form_rhs(&self, i: usize, j: usize, k: usize, l: usize) -> GradedMatrix {
        let mut rhs = GradedMatrix::zero(self.scheme.clone());
        if j == k {
            rhs.add_to(i, l, &FieldScalar::one());
        }
        if i == l {
            let d_ij = self.scheme.grade_of(i).add(self.scheme.grade_of(j));
            let d_kl = self.scheme.grade_of(k).add(self.scheme.grade_of(l));
            let sign = FieldScalar::from_int(d_ij.pairing_sign(d_kl) as i64);
            rhs.add_to(k, j, &-&sign);
        }
        rhs
    }

    /// Exhaustively check the closed-form bracket relation for every
    /// quadruple (i, j, k, l).
    pub fn check_closed_form(&self, witness_limit: usize) -> VerificationReport {
        let mut report = VerificationReport::new("gl-closed-form", self.params(), witness_limit);
        let n = self.total_dim();
        for i in 1..=n {
            for j in 1..=n {
                let eij = self.unit(i, j);
                for k in 1..=n {
                    for l in 1..=n {
                        let ekl = self.unit(k, l);
                        let lhs = eij.graded_bracket(&ekl).expect("shared scheme");
                        let rhs = self.closed_form_rhs(i, j, k, l);
                        if lhs == rhs {
                            report.record_pass();
                        } else {
                            report.record_failure(
                                format!("(i,j,k,l)=({i},{j},{k},{l})"),
                                lhs.to_string(),
                                rhs.to_string(),
                            );
                        }
                    }
                }
            }
        }
        report.finish()
    }
}
