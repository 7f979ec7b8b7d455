//! Exact construction and machine verification of the Z2xZ2-graded Lie
//! superalgebras gl(m1,m2|n1,n2) and osp(2m1+1,2m2|2n,0), together with the
//! parastatistics triple-relation families their short root vectors satisfy.
//!
//! Everything is computed over the exact quadratic field Q(sqrt 2); every
//! identity check is exact equality of sparse matrices, never approximate.
//!
//! The crate is organized as:
//!
//! * [`grading`], [`scalar`], [`matrix`], [`axioms`] — gradings, exact
//!   scalars, graded matrices, the general graded bracket and the three
//!   defining-axiom verifiers;
//! * [`gl`] — gl(m1,m2|n1,n2) with its unit-matrix Cartan-Weyl basis;
//! * [`linalg`] — exact incremental Gaussian elimination for ranks and
//!   coordinate solving;
//! * [`osp`] — the orthosymplectic embedding, closed-form supercommutation
//!   relations, canonical basis and dimension;
//! * [`parastat`] — parastatistics generators, relation-family suites,
//!   degenerations and the generation (closure) claim;
//! * [`report`], [`export`] — verification reports and the
//!   structure-constants export.
//!
//! All values are immutable after construction and all operations are pure,
//! so anything here can be shared freely across threads.

pub mod axioms;
pub mod error;
pub mod export;
pub mod gl;
pub mod grading;
pub mod linalg;
pub mod matrix;
pub mod osp;
pub mod parastat;
pub mod report;
pub mod scalar;

pub use axioms::{verify_grading, verify_jacobi, verify_symmetry, CheckOutcome};
pub use error::AlgebraError;
pub use export::StructureConstantsExport;
pub use gl::{GlBasisElement, GlScheme};
pub use grading::GradingVector;
pub use matrix::{GradedMatrix, IndexGradingScheme};
pub use osp::{CanonicalBasis, OspAlgebra, SignedIndexScheme};
pub use parastat::{ClosureResult, FamilyId, ParaFamily, ParaGenerator, ParaSystem};
pub use report::{AlgebraParams, VerificationReport, Witness, DEFAULT_WITNESS_LIMIT};
pub use scalar::FieldScalar;
