//! Structure-constants export: the full bracket table of a chosen basis,
//! serialized deterministically.

use crate::error::AlgebraError;
use crate::gl::GlScheme;
use crate::grading::GradingVector;
use crate::osp::OspAlgebra;
use crate::report::AlgebraParams;
use crate::scalar::FieldScalar;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct BasisLabel {
    pub label: String,
    pub grading: GradingVector,
}

/// `bracket(basis[p], basis[q]) = sum_r coefficient * basis[r]`, zero
/// coefficients omitted.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct StructureTriple {
    pub p: usize,
    pub q: usize,
    pub r: usize,
    pub coefficient: FieldScalar,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct StructureConstantsExport {
    #[serde(flatten)]
    pub params: AlgebraParams,
    pub dimension: usize,
    pub basis: Vec<BasisLabel>,
    pub triples: Vec<StructureTriple>,
}

impl StructureConstantsExport {
    /// Bracket table of gl in its unit-matrix basis.
    pub fn for_gl(gl: &GlScheme) -> Self {
        let basis = gl.basis();
        let labels = basis
            .iter()
            .map(|b| BasisLabel {
                label: format!("e[{},{}]", b.i, b.j),
                grading: b.degree,
            })
            .collect();
        let mut triples = Vec::new();
        for (p, bp) in basis.iter().enumerate() {
            for (q, bq) in basis.iter().enumerate() {
                let bracket = bp.matrix.graded_bracket(&bq.matrix).expect("shared scheme");
                // Coordinates in the unit basis are just the entries.
                for (&(i, j), v) in bracket.entries() {
                    let r = basis
                        .iter()
                        .position(|b| (b.i, b.j) == (i, j))
                        .expect("unit basis is complete");
                    triples.push(StructureTriple {
                        p,
                        q,
                        r,
                        coefficient: v.clone(),
                    });
                }
            }
        }
        StructureConstantsExport {
            params: gl.params(),
            dimension: basis.len(),
            basis: labels,
            triples,
        }
    }

    /// Bracket table of osp in its canonical x_ij basis.
    pub fn for_osp(alg: &OspAlgebra) -> Result<Self, AlgebraError> {
        let basis = alg.canonical_basis();
        let labels = basis
            .pairs
            .iter()
            .map(|&(i, j)| BasisLabel {
                label: format!("x[{i},{j}]"),
                grading: alg.x_degree(i, j),
            })
            .collect();
        let mats: Vec<_> = basis.pairs.iter().map(|&(i, j)| alg.x(i, j)).collect();
        let mut triples = Vec::new();
        for (p, mp) in mats.iter().enumerate() {
            for (q, mq) in mats.iter().enumerate() {
                let bracket = mp.graded_bracket(mq)?;
                let coords = alg
                    .decompose(&bracket, &basis)?
                    .expect("osp is closed under the bracket");
                for (r, c) in coords.into_iter().enumerate() {
                    if !c.is_zero() {
                        triples.push(StructureTriple { p, q, r, coefficient: c });
                    }
                }
            }
        }
        Ok(StructureConstantsExport {
            params: alg.params(),
            dimension: basis.len(),
            basis: labels,
            triples,
        })
    }

    /// Deterministic UTF-8 JSON, newline-terminated.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }
}
