//! Exact integer lattices: Smith normal form, stacked bases, integer
//! endomorphisms of `Zⁿ` and their extension to automorphisms.
//!
//! Vectors are columns; a matrix `σ` acts by `σ · v`. Everything is exact.

mod extend;
mod formulas;
mod matrix;
mod smith;

use thiserror::Error;

pub use extend::{abelian_extend, solve_endo, ExtensionCertificate};
pub use formulas::{eval_u_abelian, eval_v_abelian};
pub use matrix::{vector, IntMatrix, IntVector};
pub use smith::{smith_normal_form, stacked_basis, SmithForm, StackedBasis};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("no integer endomorphism sends the source tuple to the target tuple")]
    NoForwardEndo,
    #[error("no integer endomorphism sends the target tuple back to the source tuple")]
    NoBackwardEndo,
    #[error("internal check failed: {0}")]
    InternalCheckFailed(String),
    #[error("the parameters may not all be zero")]
    ZeroParameter,
}
