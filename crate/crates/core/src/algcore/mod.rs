//! Structure-constant algebras and their invariants: centre, commutator
//! space, symmetrising forms and dual bases, relative trace and Higman
//! ideal, quotients, radicals and socles, corner algebras, Cartan matrices,
//! and algebra maps.
//!
//! All checks are exact equalities over GF(p).

mod algebra;
mod construct;
mod forms;
mod invariants;
mod maps;

pub use algebra::Algebra;
pub use construct::{Quotient, Subalgebra};
pub use forms::{FormCheck, LinearForm};
pub use invariants::RadicalStrategy;
pub use maps::{check_map, AlgebraMap, MapClass};

use thiserror::Error;

use crate::exactlin::LinError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("structure table does not fit dimension {dim} ({products} entries)")]
    Shape { dim: usize, products: usize },
    #[error("associativity fails on basis triple ({u}, {v}, {w})")]
    NonAssociative { u: usize, v: usize, w: usize },
    #[error("unit law fails")]
    BadUnit,
    #[error("form is degenerate")]
    DegenerateForm,
    #[error("form is not symmetric")]
    AsymmetricForm,
    #[error("subspace is not a two-sided ideal")]
    NotAnIdeal,
    #[error("span is not a subalgebra with the given unit")]
    NotSubalgebra,
    #[error("algebra is not commutative")]
    NotCommutative,
    #[error("algebra is not split local (basis element {basis})")]
    NotSplitLocal { basis: usize },
    #[error("radical candidate is not nilpotent")]
    CandidateNotNilpotent,
    #[error("radical candidate is not a two-sided ideal")]
    CandidateNotIdeal,
    #[error("radical candidate is not maximal: quotient has nonzero radical")]
    RadicalNotMaximal,
    #[error("quotient of dimension {dim} is too large for the semisimplicity scan")]
    ScanTooLarge { dim: usize },
    #[error("not a Frobenius algebra: socle has dimension {socle_dim}")]
    NotFrobenius { socle_dim: usize },
    #[error("element is not idempotent")]
    NotIdempotent,
    #[error("idempotents {u} and {v} are not orthogonal")]
    NotOrthogonal { u: usize, v: usize },
    #[error("idempotents do not sum to the unit")]
    NotUnitSum,
    #[error(transparent)]
    Lin(#[from] LinError),
}
