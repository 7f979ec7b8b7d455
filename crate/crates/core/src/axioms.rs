//! Verifiers for the three defining identities of a Z2xZ2-graded Lie
//! superalgebra: grading, symmetry and Jacobi.

use crate::error::AlgebraError;
use crate::grading::GradingVector;
use crate::matrix::GradedMatrix;

/// Outcome of one exact identity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheckOutcome {
    Pass,
    /// First entry position where the two sides differ, with both values
    /// rendered exactly.
    Fail {
        position: (usize, usize),
        lhs: String,
        rhs: String,
    },
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        matches!(self, CheckOutcome::Pass)
    }

    fn compare(lhs: &GradedMatrix, rhs: &GradedMatrix) -> CheckOutcome {
        match lhs.first_difference(rhs) {
            None => CheckOutcome::Pass,
            Some(pos) => CheckOutcome::Fail {
                position: pos,
                lhs: lhs.get(pos.0, pos.1).to_string(),
                rhs: rhs.get(pos.0, pos.1).to_string(),
            },
        }
    }
}

fn homogeneous_degree(m: &GradedMatrix, name: &str) -> Result<GradingVector, AlgebraError> {
    m.degree()
        .ok_or_else(|| AlgebraError::NotHomogeneous(name.to_string()))
}

/// Graded antisymmetry `[[x_a, y_b]] = -(-1)^(a.b) [[y_b, x_a]]` for
/// homogeneous `x`, `y`.
pub fn verify_symmetry(x: &GradedMatrix, y: &GradedMatrix) -> Result<CheckOutcome, AlgebraError> {
    let a = homogeneous_degree(x, "x")?;
    let b = homogeneous_degree(y, "y")?;
    let lhs = x.graded_bracket(y)?;
    let yx = y.graded_bracket(x)?;
    let rhs = if a.pairing(b) == 0 { yx.neg() } else { yx };
    Ok(CheckOutcome::compare(&lhs, &rhs))
}

/// Graded Jacobi
/// `[[x_a, [[y_b, z]]]] = [[[[x_a, y_b]], z]] + (-1)^(a.b) [[y_b, [[x_a, z]]]]`
/// for homogeneous `x`, `y` and arbitrary `z`.
pub fn verify_jacobi(
    x: &GradedMatrix,
    y: &GradedMatrix,
    z: &GradedMatrix,
) -> Result<CheckOutcome, AlgebraError> {
    let a = homogeneous_degree(x, "x")?;
    let b = homogeneous_degree(y, "y")?;
    let lhs = x.graded_bracket(&y.graded_bracket(z)?)?;
    let first = x.graded_bracket(y)?.graded_bracket(z)?;
    let second = y.graded_bracket(&x.graded_bracket(z)?)?;
    let rhs = if a.pairing(b) == 0 {
        first.add(&second)
    } else {
        first.sub(&second)
    };
    Ok(CheckOutcome::compare(&lhs, &rhs))
}

/// Grading closure: for homogeneous `x`, `y`, the bracket is zero or
/// homogeneous of degree `a + b`.
pub fn verify_grading(x: &GradedMatrix, y: &GradedMatrix) -> Result<CheckOutcome, AlgebraError> {
    let a = homogeneous_degree(x, "x")?;
    let b = homogeneous_degree(y, "y")?;
    let bracket = x.graded_bracket(y)?;
    if bracket.is_zero() || bracket.degree() == Some(a.add(b)) {
        Ok(CheckOutcome::Pass)
    } else {
        let pos = *bracket.entries().next().unwrap().0;
        Ok(CheckOutcome::Fail {
            position: pos,
            lhs: format!("entry of degree {}", bracket.scheme().entry_grade(pos.0, pos.1)),
            rhs: format!("expected degree {}", a.add(b)),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::IndexGradingScheme;
    use crate::scalar::FieldScalar;

    fn scheme() -> std::sync::Arc<IndexGradingScheme> {
        IndexGradingScheme::new(vec![
            GradingVector::new(0, 0),
            GradingVector::new(1, 1),
            GradingVector::new(1, 0),
        ])
        .unwrap()
    }

    #[test]
    fn symmetry_holds_for_unit_basis() {
        let s = scheme();
        for (i, j) in [(1, 2), (2, 1), (1, 3), (3, 3)] {
            let x = GradedMatrix::unit(s.clone(), i, j);
            for (k, l) in [(2, 3), (3, 1), (1, 1)] {
                let y = GradedMatrix::unit(s.clone(), k, l);
                assert!(verify_symmetry(&x, &y).unwrap().passed());
            }
        }
    }

    #[test]
    fn corrupted_sign_fails_with_witness() {
        let s = scheme();
        let x = GradedMatrix::unit(s.clone(), 1, 3);
        let y = GradedMatrix::unit(s.clone(), 3, 1);
        // Flip the bracket sign by hand: compare {x,y} against -{y,x}.
        let lhs = x.graded_bracket(&y).unwrap();
        let wrong_rhs = y.graded_bracket(&x).unwrap().neg();
        let outcome = CheckOutcome::compare(&lhs, &wrong_rhs);
        match outcome {
            CheckOutcome::Fail { position, .. } => assert_eq!(position, (1, 1)),
            CheckOutcome::Pass => panic!("corrupted table must fail"),
        }
    }

    #[test]
    fn jacobi_exhaustive_small() {
        let s = scheme();
        let basis: Vec<GradedMatrix> = (1..=3)
            .flat_map(|i| (1..=3).map(move |j| (i, j)))
            .map(|(i, j)| GradedMatrix::unit(s.clone(), i, j))
            .collect();
        for x in &basis {
            for y in &basis {
                for z in &basis {
                    assert!(verify_jacobi(x, y, z).unwrap().passed());
                }
            }
        }
    }

    #[test]
    fn jacobi_with_non_homogeneous_z() {
        let s = scheme();
        let x = GradedMatrix::unit(s.clone(), 1, 3);
        let y = GradedMatrix::unit(s.clone(), 2, 1);
        let z = GradedMatrix::unit(s.clone(), 1, 2)
            .add(&GradedMatrix::unit(s.clone(), 3, 1).scale(&FieldScalar::sqrt2()));
        assert!(verify_jacobi(&x, &y, &z).unwrap().passed());
    }

    #[test]
    fn non_homogeneous_x_is_a_precondition_error() {
        let s = scheme();
        let mixed = GradedMatrix::unit(s.clone(), 1, 2).add(&GradedMatrix::unit(s.clone(), 1, 3));
        let y = GradedMatrix::unit(s.clone(), 1, 1);
        assert!(matches!(
            verify_symmetry(&mixed, &y),
            Err(AlgebraError::NotHomogeneous(_))
        ));
        assert!(matches!(
            verify_jacobi(&mixed, &y, &y),
            Err(AlgebraError::NotHomogeneous(_))
        ));
    }

    #[test]
    fn grading_closure_on_basis() {
        let s = scheme();
        for i in 1..=3usize {
            for j in 1..=3usize {
                for k in 1..=3usize {
                    for l in 1..=3usize {
                        let x = GradedMatrix::unit(s.clone(), i, j);
                        let y = GradedMatrix::unit(s.clone(), k, l);
                        assert!(verify_grading(&x, &y).unwrap().passed());
                    }
                }
            }
        }
    }
}
