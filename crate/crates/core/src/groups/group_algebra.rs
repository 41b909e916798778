use crate::algcore::{Algebra, LinearForm, Subalgebra};
use crate::exactlin::{FpVector, PrimeField, Subspace};

use super::{GroupError, GroupTable};

/// `kG` over GF(p), with the group elements as basis.
pub fn group_algebra(g: &GroupTable, p: u32) -> Result<Algebra, GroupError> {
    let f = PrimeField::new(p)?;
    let n = g.order();
    let a = Algebra::from_fn(f, g.labels().to_vec(), f.unit_vec(n, g.identity()), |u, v| {
        f.unit_vec(n, g.mul(u, v))
    })?;
    Ok(a)
}

/// The symmetrising form picking out the coefficient of the identity.
pub fn group_algebra_form(g: &GroupTable, p: u32) -> Result<LinearForm, GroupError> {
    let f = PrimeField::new(p)?;
    Ok(LinearForm::new(f.unit_vec(g.order(), g.identity())))
}

pub fn class_sum(g: &GroupTable, class: &[usize]) -> FpVector {
    let mut v = vec![0; g.order()];
    for &x in class {
        v[x] = 1;
    }
    v
}

pub fn class_sums(g: &GroupTable) -> Vec<FpVector> {
    g.conjugacy_classes().iter().map(|c| class_sum(g, c)).collect()
}

/// `Tr_Q^R(x) = Σ g x g^-1` over left coset representatives `g` of `Q` in
/// `R`, for `x` in `kG` fixed by `Q`.
pub fn relative_trace(g: &GroupTable, a: &Algebra, subgroup: &[usize], overgroup: &[usize], x: &[u32]) -> FpVector {
    let f = a.field();
    let sub: std::collections::BTreeSet<usize> = subgroup.iter().copied().collect();
    let mut covered = std::collections::BTreeSet::new();
    let mut out = a.zero();
    for &r in overgroup {
        if covered.contains(&r) {
            continue;
        }
        for &q in &sub {
            covered.insert(g.mul(r, q));
        }
        let conj = a.mul(&a.mul(&a.basis(r), x), &a.basis(g.inv(r)));
        out = f.add_vec(&out, &conj);
    }
    out
}

/// The ideal `kG · I(kN)` spanned by `(n - 1) h`. For a normal p-subgroup
/// `N` with `G/N` of order prime to p this is `J(kG)`.
pub fn normal_subgroup_radical_candidate(g: &GroupTable, a: &Algebra, n: &[usize]) -> Result<Subspace, GroupError> {
    let f = a.field();
    let one = a.one();
    let mut vs = Vec::new();
    for &x in n {
        let d = f.sub_vec(&a.basis(x), &one);
        for h in 0..g.order() {
            vs.push(a.mul(&d, &a.basis(h)));
        }
    }
    Ok(Subspace::span(f, a.dim(), &vs)?)
}

/// Fixed points of a group of basis permutations, each of which must be an
/// algebra automorphism. The basis of the result is the orbit sums, ordered
/// by smallest element.
pub fn fixed_subalgebra(a: &Algebra, perms: &[Vec<usize>]) -> Result<Subalgebra, GroupError> {
    let n = a.dim();
    for perm in perms {
        let mut hit = vec![false; n];
        if perm.len() != n || perm.iter().any(|&x| x >= n || std::mem::replace(&mut hit[x], true)) {
            return Err(GroupError::NotAnAutomorphism);
        }
        let image = |v: &[u32]| -> FpVector {
            let mut w = vec![0; n];
            for (u, &c) in v.iter().enumerate() {
                w[perm[u]] = c;
            }
            w
        };
        for u in 0..n {
            for v in 0..n {
                if image(a.basis_product(u, v)) != a.basis_product(perm[u], perm[v]) {
                    return Err(GroupError::NotAnAutomorphism);
                }
            }
        }
    }

    let mut orbit_of = vec![usize::MAX; n];
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    for start in 0..n {
        if orbit_of[start] != usize::MAX {
            continue;
        }
        let id = orbits.len();
        let mut orbit = vec![start];
        orbit_of[start] = id;
        let mut i = 0;
        while i < orbit.len() {
            let x = orbit[i];
            for perm in perms {
                let y = perm[x];
                if orbit_of[y] == usize::MAX {
                    orbit_of[y] = id;
                    orbit.push(y);
                }
            }
            i += 1;
        }
        orbit.sort_unstable();
        orbits.push(orbit);
    }

    let basis: Vec<FpVector> = orbits
        .iter()
        .map(|o| {
            let mut v = vec![0; n];
            for &x in o {
                v[x] = 1;
            }
            v
        })
        .collect();
    let labels = orbits
        .iter()
        .map(|o| o.iter().map(|&x| a.label(x)).collect::<Vec<_>>().join("+"))
        .collect();
    Ok(a.subalgebra(&basis, labels)?)
}

#[cfg(test)]
mod tests {
    use super::super::{cyclic, direct_product};
    use super::*;

    #[test]
    fn cyclic_group_algebra_in_its_characteristic() {
        let c3 = cyclic(3, "r");
        let a = group_algebra(&c3, 3).unwrap();
        assert_eq!(a.dim(), 3);
        assert!(a.is_commutative());
        assert!(a.is_uniserial_local().unwrap());
    }

    #[test]
    fn trivial_permutation_group_fixes_everything() {
        let c3 = cyclic(3, "r");
        let a = group_algebra(&c3, 3).unwrap();
        let fixed = fixed_subalgebra(&a, &[vec![0, 1, 2]]).unwrap();
        assert_eq!(fixed.algebra().dim(), 3);
    }

    #[test]
    fn non_automorphisms_are_rejected() {
        let c3 = cyclic(3, "r");
        let a = group_algebra(&c3, 3).unwrap();
        assert_eq!(
            fixed_subalgebra(&a, &[vec![1, 0, 2]]).unwrap_err(),
            GroupError::NotAnAutomorphism
        );
    }

    #[test]
    fn relative_trace_from_trivial_subgroup_is_conjugation_sum() {
        let g = direct_product(&cyclic(3, "r"), &cyclic(2, "t"));
        let a = group_algebra(&g, 5).unwrap();
        let all: Vec<usize> = (0..g.order()).collect();
        let x = a.basis(1);
        // Abelian: every conjugate is x itself.
        assert_eq!(relative_trace(&g, &a, &[g.identity()], &all, &x), a.scale(6, &x));
    }
}
