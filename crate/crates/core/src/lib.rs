//! Exact verification of CR, Kähler-CR and pseudo-Poisson structures on
//! finite-dimensional real Lie algebras given by rational structure
//! constants.

pub mod catalog;
pub mod checks;
pub mod cr_kahler;
pub mod document;
pub mod lie;
pub mod linalg;
pub mod multivector;
pub mod poisson;
pub mod report;

pub use catalog::CatalogEntry;
pub use checks::run_all;
pub use document::{Document, DocumentError};
pub use lie::LieAlgebra;
pub use linalg::{Matrix, Rational, Subspace, Vector};
pub use multivector::{Bivector, Trivector};
pub use report::{CheckResult, Report, Status, Witness};
