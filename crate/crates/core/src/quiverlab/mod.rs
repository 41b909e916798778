//! Algebras from presentations: bound quiver algebras `kQ/I` and commutative
//! algebras `k[x_1..x_n]/I`, computed as finite quotients of a truncated
//! path or monomial space.
//!
//! Truncation at path length `L` (or exponent bound `B`) treats longer paths
//! as zero, so the result is `kQ/(I + J^(L+1))` with `J` the arrow ideal. A
//! build is only accepted if the answer is unchanged one step further out and
//! every path of length `L + 1` already lies in the ideal. That pins down the
//! `J`-adic completion of `kQ/I`, which is `kQ/I` itself whenever `I` contains
//! all long enough paths (admissible ideals, and any finite-dimensional
//! `kQ/I` with nilpotent arrows). Relations may not have trivial-path or
//! constant terms.

mod candidate;
mod comm;
mod dsl;
mod path;
mod truncated;

pub use candidate::{algebra_a, algebra_a_centre_basis, algebra_a_form, ALGEBRA_A_SPEC};
pub use comm::{build_comm_presented, PresentedAlgebra};
pub use dsl::{
    parse_comm, parse_quiver, Arrow, Exponents, Path, PresentedCommSpec, QuiverSpec, Relation, DEFAULT_BOUND,
    DEFAULT_MAXLEN, MAX_GENERATORS,
};
pub use path::{build_path_algebra, PathAlgebra};

use thiserror::Error;

use crate::algcore::AlgebraError;
use crate::exactlin::LinError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuiverError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: path '{path}' is not composable")]
    NonComposablePath { line: usize, path: String },
    #[error("line {line}: unknown label '{label}'")]
    UnknownLabel { line: usize, label: String },
    #[error("truncation at {bound} is not stable; raise the length or exponent bound")]
    TruncationUnstable { bound: usize },
    #[error("{0} generators given; at most 3 are supported")]
    TooManyGenerators(usize),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Lin(#[from] LinError),
}
