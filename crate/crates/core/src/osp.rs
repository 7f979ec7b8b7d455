//! The orthosymplectic Z2xZ2-graded superalgebra osp(2m1+1,2m2|2n,0),
//! embedded in gl(2m1+1,2m2|2n,0) as the span of the generators
//!
//! `x_ij = e_{i,-j} - (-1)^(d_i.d_j + (d_i+d_j).(d_i+d_j)) phi_i phi_j e_{j,-i}`
//!
//! over the signed index set {0, ±1, ..., ±N}.

use crate::error::AlgebraError;
use crate::grading::GradingVector;
use crate::linalg::{SparseVec, SpanBasis};
use crate::matrix::{GradedMatrix, IndexGradingScheme};
use crate::report::{AlgebraParams, VerificationReport};
use crate::scalar::FieldScalar;
use std::sync::Arc;

/// The signed index set {0, ±1, ..., ±N} with its grading, sign function phi
/// and the matrix-slot enumeration 0, 1, -1, 2, -2, ..., N, -N.
#[derive(Clone, Debug)]
pub struct SignedIndexScheme {
    pub m1: usize,
    pub m2: usize,
    pub n: usize,
    scheme: Arc<IndexGradingScheme>,
}

impl SignedIndexScheme {
    pub fn build(m1: usize, m2: usize, n: usize) -> Result<Self, AlgebraError> {
        if m1 + m2 + n == 0 {
            return Err(AlgebraError::EmptyAlgebra);
        }
        let pending = SignedIndexScheme {
            m1,
            m2,
            n,
            scheme: IndexGradingScheme::new(vec![GradingVector::ZERO])?,
        };
        // Grades in matrix-slot order.
        let grades: Vec<GradingVector> = pending
            .signed_indices()
            .map(|i| pending.grade_of(i))
            .collect();
        Ok(SignedIndexScheme {
            m1,
            m2,
            n,
            scheme: IndexGradingScheme::new(grades)?,
        })
    }

    pub fn params(&self) -> AlgebraParams {
        AlgebraParams::Osp {
            m1: self.m1,
            m2: self.m2,
            n: self.n,
        }
    }

    pub fn n_total(&self) -> usize {
        self.m1 + self.m2 + self.n
    }

    pub fn matrix_dim(&self) -> usize {
        2 * self.n_total() + 1
    }

    pub fn scheme(&self) -> &Arc<IndexGradingScheme> {
        &self.scheme
    }

    /// Signed indices in matrix-slot order: 0, 1, -1, 2, -2, ..., N, -N.
    pub fn signed_indices(&self) -> impl Iterator<Item = i64> + '_ {
        let n = self.n_total() as i64;
        std::iter::once(0).chain((1..=n).flat_map(|k| [k, -k]))
    }

    /// Nonzero signed indices in the same slot order.
    pub fn nonzero_indices(&self) -> impl Iterator<Item = i64> + '_ {
        self.signed_indices().filter(|&i| i != 0)
    }

    pub fn contains(&self, i: i64) -> bool {
        i.unsigned_abs() as usize <= self.n_total()
    }

    /// Matrix slot of a signed index: slot(0)=0, slot(+k)=2k-1, slot(-k)=2k.
    pub fn position(&self, i: i64) -> usize {
        assert!(self.contains(i), "signed index {i} out of range");
        let k = i.unsigned_abs() as usize;
        if i == 0 {
            0
        } else if i > 0 {
            2 * k - 1
        } else {
            2 * k
        }
    }

    /// Degree of a signed index, symmetric in the sign.
    pub fn grade_of(&self, i: i64) -> GradingVector {
        assert!(self.contains(i), "signed index {i} out of range");
        let k = i.unsigned_abs() as usize;
        if k <= self.m1 {
            GradingVector::new(0, 0)
        } else if k <= self.m1 + self.m2 {
            GradingVector::new(1, 1)
        } else {
            GradingVector::new(1, 0)
        }
    }

    /// The index function phi: -1 exactly on negative symplectic indices.
    pub fn phi(&self, i: i64) -> i64 {
        assert!(self.contains(i), "signed index {i} out of range");
        if i < 0 && i.unsigned_abs() as usize > self.m1 + self.m2 {
            -1
        } else {
            1
        }
    }

    /// Unit matrix `e_ij` addressed by signed indices.
    pub fn unit(&self, i: i64, j: i64) -> GradedMatrix {
        GradedMatrix::unit(self.scheme.clone(), self.position(i) + 1, self.position(j) + 1)
    }
}

/// osp(2m1+1,2m2|2n,0) with its generator map and exact rank machinery.
#[derive(Clone, Debug)]
pub struct OspAlgebra {
    pub scheme: SignedIndexScheme,
    /// Negative-control hook: flips the sign of the reflected term in the
    /// embedding formula so every downstream suite should fail.
    mutate_embedding_sign: bool,
}

/// Deterministic basis of linearly independent generators with exact
/// coordinate solving for everything in their span.
pub struct CanonicalBasis {
    pub pairs: Vec<(i64, i64)>,
    span: SpanBasis,
    dim: usize,
}

impl CanonicalBasis {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

impl OspAlgebra {
    pub fn build(m1: usize, m2: usize, n: usize) -> Result<Self, AlgebraError> {
        Ok(OspAlgebra {
            scheme: SignedIndexScheme::build(m1, m2, n)?,
            mutate_embedding_sign: false,
        })
    }

    /// Build with the embedding sign deliberately flipped (negative control).
    pub fn build_mutated(m1: usize, m2: usize, n: usize) -> Result<Self, AlgebraError> {
        Ok(OspAlgebra {
            scheme: SignedIndexScheme::build(m1, m2, n)?,
            mutate_embedding_sign: true,
        })
    }

    pub fn params(&self) -> AlgebraParams {
        self.scheme.params()
    }

    /// Exponent of the embedding sign: `d_i.d_j + (d_i + d_j)^2` mod 2.
    fn sign_exponent(&self, i: i64, j: i64) -> u8 {
        let di = self.scheme.grade_of(i);
        let dj = self.scheme.grade_of(j);
        (di.pairing(dj) + di.add(dj).self_pairing()) % 2
    }

    /// The generator `x_ij`.
    pub fn x(&self, i: i64, j: i64) -> GradedMatrix {
        let s = &self.scheme;
        let mut sign = if self.sign_exponent(i, j) == 0 { 1 } else { -1 };
        sign *= s.phi(i) * s.phi(j);
        if self.mutate_embedding_sign {
            sign = -sign;
        }
        s.unit(i, -j)
            .add(&s.unit(j, -i).scale(&FieldScalar::from_int(-sign as i64)))
    }

    pub fn x_degree(&self, i: i64, j: i64) -> GradingVector {
        self.scheme.grade_of(i).add(self.scheme.grade_of(j))
    }

    /// All generator index pairs in matrix-slot order.
    pub fn generator_pairs(&self) -> Vec<(i64, i64)> {
        let idx: Vec<i64> = self.scheme.signed_indices().collect();
        let mut out = Vec::with_capacity(idx.len() * idx.len());
        for &i in &idx {
            for &j in &idx {
                out.push((i, j));
            }
        }
        out
    }

    /// Flatten a matrix into a coordinate vector in (row, col) slot order.
    pub fn vectorize(&self, m: &GradedMatrix) -> SparseVec {
        let dim = self.scheme.matrix_dim();
        m.entries()
            .map(|(&(r, c), v)| ((r - 1) * dim + (c - 1), v.clone()))
            .collect()
    }

    /// Right-hand side of the closed-form supercommutation relation for
    /// `[[x_ij, x_kl]]`.
    pub fn closed_form_rhs(&self, i: i64, j: i64, k: i64, l: i64) -> GradedMatrix {
        let s = &self.scheme;
        let mut rhs = GradedMatrix::zero(s.scheme().clone());
        let term = |p: i64, q: i64, c: i64| -> GradedMatrix {
            if c == 0 {
                GradedMatrix::zero(s.scheme().clone())
            } else {
                self.x(p, q).scale(&FieldScalar::from_int(c))
            }
        };
        if j == -k {
            rhs = rhs.add(&term(i, l, 1));
        }
        if j == -l {
            let sign = if self.sign_exponent(k, l) == 0 { 1 } else { -1 };
            rhs = rhs.add(&term(i, k, -sign * s.phi(k) * s.phi(l)));
        }
        if i == -k {
            let sign = if self.sign_exponent(i, j) == 0 { 1 } else { -1 };
            rhs = rhs.add(&term(j, l, -sign * s.phi(i) * s.phi(j)));
        }
        if i == -l {
            let d_ij = self.x_degree(i, j);
            let d_ik = self.scheme.grade_of(i).add(self.scheme.grade_of(k));
            let sign = d_ij.pairing_sign(d_ik) as i64;
            rhs = rhs.add(&term(k, j, -sign));
        }
        rhs
    }

    /// Exhaustive check of the closed-form supercommutation relations over
    /// all signed quadruples (i, j, k, l).
    pub fn check_closed_form(&self, witness_limit: usize) -> VerificationReport {
        let mut report =
            VerificationReport::new("osp-closed-form", self.params(), witness_limit);
        let idx: Vec<i64> = self.scheme.signed_indices().collect();
        for &i in &idx {
            for &j in &idx {
                let xij = self.x(i, j);
                for &k in &idx {
                    for &l in &idx {
                        let lhs = xij.graded_bracket(&self.x(k, l)).expect("shared scheme");
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

    /// Structural identities of the embedding: the x_ij antisymmetry relation
    /// and the vanishing of x_ii on orthogonal indices.
    pub fn check_embedding_identities(&self, witness_limit: usize) -> VerificationReport {
        let mut report =
            VerificationReport::new("embedding-identities", self.params(), witness_limit);
        let s = &self.scheme;
        let m = s.m1 + s.m2;
        for (i, j) in self.generator_pairs() {
            let lhs = self.x(i, j);
            let sign = if self.sign_exponent(i, j) == 0 { 1 } else { -1 };
            let rhs = self
                .x(j, i)
                .scale(&FieldScalar::from_int(-sign * s.phi(i) * s.phi(j)));
            if lhs == rhs {
                report.record_pass();
            } else {
                report.record_failure(
                    format!("antisymmetry (i,j)=({i},{j})"),
                    lhs.to_string(),
                    rhs.to_string(),
                );
            }
        }
        for i in s.signed_indices() {
            let xii = self.x(i, i);
            let orthogonal = i.unsigned_abs() as usize <= m;
            if orthogonal == xii.is_zero() {
                report.record_pass();
            } else {
                report.record_failure(
                    format!("x_ii vanishing at i={i}"),
                    xii.to_string(),
                    if orthogonal { "0" } else { "nonzero" }.to_string(),
                );
            }
        }
        report.finish()
    }

    /// Greedy canonical basis: scan generator pairs in slot order, keep each
    /// x_ij that grows the exact rank.
    pub fn canonical_basis(&self) -> CanonicalBasis {
        self.canonical_basis_in_order(self.generator_pairs())
    }

    /// Same selection against an arbitrary pair order; the resulting rank is
    /// order-independent even though the kept pairs are not.
    pub fn canonical_basis_in_order(&self, order: Vec<(i64, i64)>) -> CanonicalBasis {
        let mut span = SpanBasis::new();
        let mut pairs = Vec::new();
        for (i, j) in order {
            if span.insert(self.vectorize(&self.x(i, j))) {
                pairs.push((i, j));
            }
        }
        let dim = span.rank();
        CanonicalBasis { pairs, span, dim }
    }

    /// Dimension of the algebra: rank of the span of all x_ij.
    pub fn dimension(&self) -> usize {
        self.canonical_basis().dim
    }

    /// Exact coordinates of `element` over the canonical basis, or `None`
    /// when it is not in the span of the x_ij.
    pub fn decompose(
        &self,
        element: &GradedMatrix,
        basis: &CanonicalBasis,
    ) -> Result<Option<Vec<FieldScalar>>, AlgebraError> {
        let probe = GradedMatrix::zero(self.scheme.scheme().clone());
        if !element.same_scheme(&probe) {
            return Err(AlgebraError::SchemeMismatch {
                left: element.dim(),
                right: probe.dim(),
            });
        }
        Ok(basis.span.solve(self.vectorize(element)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phi_values_at_111() {
        let alg = OspAlgebra::build(1, 1, 1).unwrap();
        for i in alg.scheme.signed_indices() {
            let expected = if i == -3 { -1 } else { 1 };
            assert_eq!(alg.scheme.phi(i), expected, "phi({i})");
        }
    }

    #[test]
    fn slot_order_is_zero_then_alternating() {
        let s = SignedIndexScheme::build(1, 1, 1).unwrap();
        let order: Vec<i64> = s.signed_indices().collect();
        assert_eq!(order, vec![0, 1, -1, 2, -2, 3, -3]);
        assert_eq!(s.position(0), 0);
        assert_eq!(s.position(2), 3);
        assert_eq!(s.position(-2), 4);
    }

    #[test]
    fn x_generator_examples() {
        // x_{0,1} with d_0 = d_1 = (0,0): e_{0,-1} - e_{1,0}.
        let alg = OspAlgebra::build(1, 0, 0).unwrap();
        let s = &alg.scheme;
        assert_eq!(alg.x(0, 1), s.unit(0, -1).sub(&s.unit(1, 0)));
        // First symplectic index: the self-pairing of (1,0) flips the sign.
        let alg = OspAlgebra::build(1, 0, 1).unwrap();
        let s = &alg.scheme;
        assert_eq!(alg.x(0, 2), s.unit(0, -2).add(&s.unit(2, 0)));
    }

    #[test]
    fn x_ii_vanishes_exactly_on_orthogonal_indices() {
        let alg = OspAlgebra::build(1, 1, 1).unwrap();
        for i in alg.scheme.signed_indices() {
            let xii = alg.x(i, i);
            if i.unsigned_abs() <= 2 {
                assert!(xii.is_zero(), "x_{{{i},{i}}} should vanish");
            } else {
                assert!(!xii.is_zero(), "symplectic x_{{{i},{i}}} should not vanish");
            }
        }
    }

    #[test]
    fn antisymmetry_validates_sign_interpretation() {
        for (m1, m2, n) in [(1, 0, 0), (0, 0, 1), (1, 1, 1)] {
            let alg = OspAlgebra::build(m1, m2, n).unwrap();
            let report = alg.check_embedding_identities(10);
            assert!(report.passed(), "{}", report.summary_line());
        }
    }

    #[test]
    fn closed_form_small_cases() {
        for (m1, m2, n) in [(1, 0, 0), (0, 1, 0), (0, 0, 1)] {
            let alg = OspAlgebra::build(m1, m2, n).unwrap();
            let report = alg.check_closed_form(10);
            assert!(report.passed(), "{}", report.summary_line());
            assert_eq!(report.total_cases, 81);
        }
    }

    #[test]
    fn dimensions_by_rank_oracle() {
        assert_eq!(OspAlgebra::build(1, 0, 0).unwrap().dimension(), 3);
        assert_eq!(OspAlgebra::build(0, 0, 1).unwrap().dimension(), 5);
        assert_eq!(OspAlgebra::build(1, 1, 1).unwrap().dimension(), 23);
    }

    #[test]
    fn decompose_examples() {
        let alg = OspAlgebra::build(1, 0, 0).unwrap();
        let basis = alg.canonical_basis();
        assert_eq!(basis.len(), 3);
        // x_{0,1} is the first kept generator.
        let coords = alg.decompose(&alg.x(0, 1), &basis).unwrap().unwrap();
        assert_eq!(coords[0], FieldScalar::one());
        assert!(coords[1..].iter().all(|c| c.is_zero()));
        // Zero decomposes to all-zero coordinates.
        let zero = GradedMatrix::zero(alg.scheme.scheme().clone());
        let coords = alg.decompose(&zero, &basis).unwrap().unwrap();
        assert!(coords.iter().all(|c| c.is_zero()));
        // e_{0,0} is not in the span.
        let e00 = alg.scheme.unit(0, 0);
        assert!(alg.decompose(&e00, &basis).unwrap().is_none());
    }

    #[test]
    fn closure_of_bracket_in_span() {
        let alg = OspAlgebra::build(1, 0, 1).unwrap();
        let basis = alg.canonical_basis();
        for (i, j) in alg.generator_pairs() {
            for (k, l) in [(0, 1), (1, -2), (-1, 2)] {
                let b = alg.x(i, j).graded_bracket(&alg.x(k, l)).unwrap();
                assert!(
                    alg.decompose(&b, &basis).unwrap().is_some(),
                    "bracket of x_({i},{j}) and x_({k},{l}) left the span"
                );
            }
        }
    }

    #[test]
    fn mutated_embedding_breaks_closed_form() {
        let alg = OspAlgebra::build_mutated(1, 0, 0).unwrap();
        let report = alg.check_closed_form(10);
        assert!(!report.passed());
        assert!(!report.witnesses.is_empty());
    }
}
