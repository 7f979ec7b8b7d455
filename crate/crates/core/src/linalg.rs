//! Exact incremental Gaussian elimination over Q(sqrt 2).
//!
//! A [`SpanBasis`] accumulates sparse coordinate vectors, keeps those that
//! grow the rank, and can solve for exact coordinates of a vector in terms of
//! the kept ones. Pivots are the first nonzero coordinate; over an exact
//! field pivot magnitude is irrelevant.

use crate::scalar::FieldScalar;
use std::collections::BTreeMap;

/// Sparse coordinate vector: position index -> nonzero scalar.
pub type SparseVec = BTreeMap<usize, FieldScalar>;

pub fn sparse_sub_scaled(target: &mut SparseVec, factor: &FieldScalar, other: &SparseVec) {
    for (&idx, v) in other {
        let delta = factor * v;
        match target.get_mut(&idx) {
            Some(cur) => {
                *cur -= &delta;
                if cur.is_zero() {
                    target.remove(&idx);
                }
            }
            None => {
                if !delta.is_zero() {
                    target.insert(idx, -delta);
                }
            }
        }
    }
}

struct EchelonRow {
    vec: SparseVec,
    /// Expression of `vec` as a combination of the kept input vectors,
    /// indexed by keep order. Shorter than the current keep count means
    /// trailing zeros.
    coeffs: Vec<FieldScalar>,
}

/// Row space accumulator with exact rank and coordinate solving.
#[derive(Default)]
pub struct SpanBasis {
    /// Echelon rows keyed by pivot position.
    rows: BTreeMap<usize, EchelonRow>,
    kept: usize,
}

impl SpanBasis {
    pub fn new() -> Self {
        SpanBasis::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `v` against the current rows. Returns the residual and the
    /// combination of kept inputs that was subtracted.
    fn reduce(&self, mut v: SparseVec) -> (SparseVec, Vec<FieldScalar>) {
        let mut combo = vec![FieldScalar::zero(); self.kept];
        loop {
            let pivot = match v.keys().next() {
                Some(&p) => p,
                None => break,
            };
            let row = match self.rows.get(&pivot) {
                Some(r) => r,
                None => break,
            };
            let factor = &v[&pivot] * &row.vec[&pivot].inverse().expect("pivot nonzero");
            sparse_sub_scaled(&mut v, &factor, &row.vec);
            debug_assert!(!v.contains_key(&pivot));
            for (slot, c) in row.coeffs.iter().enumerate() {
                combo[slot] += &(&factor * c);
            }
        }
        (v, combo)
    }

    /// Insert a vector; returns `true` iff it increased the rank (and was
    /// kept as a new basis member).
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let (residual, mut combo) = self.reduce(v);
        if residual.is_empty() {
            return false;
        }
        let pivot = *residual.keys().next().unwrap();
        self.kept += 1;
        combo.push(FieldScalar::one());
        // residual = 1 * b_new - sum(combo[t] * b_t), fold the sign in.
        let mut coeffs: Vec<FieldScalar> = combo[..combo.len() - 1].iter().map(|c| -c).collect();
        coeffs.push(FieldScalar::one());
        self.rows.insert(pivot, EchelonRow { vec: residual, coeffs });
        true
    }

    /// Exact coordinates of `v` over the kept input vectors, or `None` if
    /// `v` is not in the span.
    pub fn solve(&self, v: SparseVec) -> Option<Vec<FieldScalar>> {
        let (residual, combo) = self.reduce(v);
        if residual.is_empty() {
            Some(combo)
        } else {
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vec_of(pairs: &[(usize, i64)]) -> SparseVec {
        pairs
            .iter()
            .map(|&(i, c)| (i, FieldScalar::from_int(c)))
            .collect()
    }

    #[test]
    fn rank_counts_independent_vectors() {
        let mut b = SpanBasis::new();
        assert!(b.insert(vec_of(&[(0, 1), (1, 2)])));
        assert!(b.insert(vec_of(&[(1, 1)])));
        assert!(!b.insert(vec_of(&[(0, 3), (1, 1)])));
        assert_eq!(b.rank(), 2);
    }

    #[test]
    fn zero_vector_never_kept() {
        let mut b = SpanBasis::new();
        assert!(!b.insert(SparseVec::new()));
        assert_eq!(b.rank(), 0);
    }

    #[test]
    fn solve_recovers_coordinates() {
        let mut b = SpanBasis::new();
        let b0 = vec_of(&[(0, 1), (2, 1)]);
        let b1 = vec_of(&[(1, 1), (2, -1)]);
        assert!(b.insert(b0.clone()));
        assert!(b.insert(b1.clone()));
        // w = 3*b0 - 2*b1
        let mut w = SparseVec::new();
        sparse_sub_scaled(&mut w, &FieldScalar::from_int(-3), &b0);
        sparse_sub_scaled(&mut w, &FieldScalar::from_int(2), &b1);
        let coords = b.solve(w).unwrap();
        assert_eq!(coords, vec![FieldScalar::from_int(3), FieldScalar::from_int(-2)]);
        // Something outside the span.
        assert!(b.solve(vec_of(&[(3, 1)])).is_none());
    }

    #[test]
    fn solve_with_sqrt2_coefficients() {
        let mut b = SpanBasis::new();
        let b0: SparseVec = [(0usize, FieldScalar::sqrt2())].into_iter().collect();
        assert!(b.insert(b0));
        let w: SparseVec = [(0usize, FieldScalar::from_int(2))].into_iter().collect();
        let coords = b.solve(w).unwrap();
        assert_eq!(coords, vec![FieldScalar::sqrt2()]);
    }
}
