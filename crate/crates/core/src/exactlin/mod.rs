//! Exact dense linear algebra over prime fields, plus Smith normal form over
//! the integers.
//!
//! Everything here is small and dense: ambient dimensions in this crate stay
//! around twenty, so no sparse representation is used.

mod field;
mod matrix;
mod smith;
mod subspace;

pub use field::{AllVectors, PrimeField};
pub use matrix::{kernel, rref, FpMatrix};
pub use smith::{smith_normal_form, IntMatrix};
pub use subspace::{EchelonBuilder, Subspace};

use thiserror::Error;

/// Field elements are `u32` residues; vectors are plain coordinate lists.
pub type FpVector = Vec<u32>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinError {
    #[error("{0} is not a supported prime modulus")]
    NotPrime(u32),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is {rows}x{cols}, not square")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("subspace is not contained in the ambient subspace")]
    NotContained,
}
