//! Finite groups as multiplication tables, their group algebras, fixed-point
//! subalgebras, linear actions of subgroups of GL(2, p) on `C_p x C_p`, and
//! brute-force homomorphism searches between small commutative algebras.

mod classify;
mod frobenius;
mod group_algebra;
mod homs;
mod matgroup;
mod table;

pub use classify::{classify_small_group, SmallGroupType};
pub use frobenius::{frobenius_c3xc3_c2, FrobeniusSetup};
pub use group_algebra::{
    class_sum, class_sums, fixed_subalgebra, group_algebra, group_algebra_form, normal_subgroup_radical_candidate,
    relative_trace,
};
pub use homs::{enumerate_homs, find_isomorphism, has_split_surjection, surjections, SplitSearch};
pub use matgroup::{gl2, inertial_candidate, mat_closure, subgroups_gl2, MatGroup, INERTIAL_TYPES};
pub use table::{cyclic, direct_product, semidirect, GroupAction, GroupTable};

use thiserror::Error;

use crate::algcore::AlgebraError;
use crate::exactlin::LinError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("multiplication table is not a group: {0}")]
    InvalidTable(String),
    #[error("action is invalid: {0}")]
    InvalidAction(String),
    #[error("permutation does not induce an algebra automorphism")]
    NotAnAutomorphism,
    #[error("generator is singular")]
    SingularGenerator,
    #[error("group of order {order} is not one of the supported types")]
    Unclassified { order: usize },
    #[error("source algebra has {0} generators; at most 2 are supported")]
    SourceNotTwoGenerated(usize),
    #[error("unknown group name '{0}'")]
    UnknownGroup(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Lin(#[from] LinError),
}
