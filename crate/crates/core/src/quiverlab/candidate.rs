//! The nine-dimensional algebra `A = kQ/I` with
//! `Q: alpha: i -> j, beta: j -> i, gamma, delta: i -> i` and
//! `delta^2 = gamma^3 = alpha beta`, `delta gamma = gamma delta = 0`,
//! `delta alpha = gamma alpha = beta delta = beta gamma = 0`.

use crate::algcore::LinearForm;
use crate::exactlin::FpVector;

use super::{build_path_algebra, parse_quiver, PathAlgebra, QuiverError};

pub const ALGEBRA_A_SPEC: &str = include_str!("../../../../specs/algebra_A.quiver");

/// `A` over GF(p). The relations have coefficients `±1`, so any prime works.
pub fn algebra_a(p: u32) -> Result<PathAlgebra, QuiverError> {
    let mut spec = parse_quiver(ALGEBRA_A_SPEC)?;
    spec.field = p;
    build_path_algebra(&spec)
}

/// `1, gamma, gamma^2, delta, delta^2, beta alpha`.
pub fn algebra_a_centre_basis(a: &PathAlgebra) -> Vec<FpVector> {
    ["1", "gamma", "gamma.gamma", "delta", "delta.delta", "beta.alpha"]
        .iter()
        .map(|t| a.eval(t).expect("paths of A"))
        .collect()
}

/// The form that is 1 on `beta alpha` and `delta^2` and vanishes on the
/// other basis paths.
pub fn algebra_a_form(a: &PathAlgebra) -> LinearForm {
    let alg = a.algebra();
    let coeffs = alg
        .labels()
        .iter()
        .map(|l| u32::from(l == "beta.alpha" || l == "delta.delta"))
        .collect();
    LinearForm::new(coeffs)
}
