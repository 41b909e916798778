//! Exact verification toolkit for small finite-dimensional algebras over
//! prime fields.
//!
//! The crate builds algebras from quiver or commutative presentations and
//! from finite groups, and computes the invariants needed to compare a
//! nine-dimensional symmetric algebra in characteristic 3 against the group
//! algebra of the Frobenius group `(C3 x C3) ⋊ C2`: centres, Higman ideals,
//! stable centres, radical filtrations, fixed-point subalgebras and
//! homomorphism searches. [`pipeline`] strings these together into a
//! deterministic report.
//!
//! Computations run over GF(p) rather than an algebraically closed field.
//! Every structure constant involved lies in the prime field, and dimensions
//! of centres, radical powers, socles and Higman ideals do not change under
//! extension of scalars.

pub mod algcore;
pub mod exactlin;
pub mod groups;
pub mod pipeline;
pub mod quiverlab;

pub use algcore::{Algebra, AlgebraError, AlgebraMap, LinearForm, MapClass, RadicalStrategy};
pub use exactlin::{FpMatrix, FpVector, IntMatrix, PrimeField, Subspace};
