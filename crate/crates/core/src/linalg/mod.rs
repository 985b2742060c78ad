//! Exact linear algebra over ℚ: scalars, dense vectors and matrices, and
//! subspaces in canonical reduced row-echelon form.

mod matrix;
mod rational;
mod subspace;
mod vector;

pub use matrix::{kernel, solve, Matrix};
pub use rational::{ParseRationalError, Rational};
pub use subspace::Subspace;
pub use vector::Vector;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("subspaces are not supplementary")]
    NotSupplementary,
}
