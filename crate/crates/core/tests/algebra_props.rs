use blockalg::algcore::{Algebra, LinearForm, MapClass, RadicalStrategy};
use blockalg::exactlin::{FpMatrix, FpVector, PrimeField, Subspace};
use blockalg::groups::{cyclic, direct_product, group_algebra, group_algebra_form, semidirect, GroupAction, GroupTable};
use blockalg::quiverlab::{algebra_a, algebra_a_form};
use blockalg::AlgebraMap;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn s3() -> GroupTable {
    let c3 = cyclic(3, "r");
    let c2 = cyclic(2, "t");
    let inv: Vec<usize> = (0..3).map(|x| c3.inv(x)).collect();
    semidirect(&GroupAction::new(c2, c3, vec![(0..3).collect(), inv]).unwrap())
}

/// Central elements by exhaustion.
fn central_count(a: &Algebra) -> usize {
    a.field()
        .all_vectors(a.dim())
        .filter(|z| (0..a.dim()).all(|u| Algebra::is_zero(&a.commutator(z, &a.basis(u)))))
        .count()
}

#[test]
fn centre_dimension_matches_exhaustive_count() {
    for p in [2, 3, 5] {
        let a = group_algebra(&s3(), p).unwrap();
        let dim = a.center().dim();
        assert_eq!(dim, 3, "S3 has three classes");
        assert_eq!(central_count(&a), (p as usize).pow(dim as u32));
    }
    let a = algebra_a(3).unwrap();
    assert_eq!(central_count(a.algebra()), 3usize.pow(a.algebra().center().dim() as u32));
}

#[test]
fn higman_ideal_of_a_ignores_every_central_unit_twist() {
    let pa = algebra_a(3).unwrap();
    let a = pa.algebra();
    let s = algebra_a_form(&pa);
    let reference = a.higman_ideal(&s).unwrap();
    let f = a.field();
    let mut units = 0;
    for z in f.all_vectors(a.dim()) {
        let central = (0..a.dim()).all(|u| Algebra::is_zero(&a.commutator(&z, &a.basis(u))));
        if !central || a.left_mul_matrix(&z).rank() != a.dim() {
            continue;
        }
        units += 1;
        assert_eq!(a.higman_ideal(&s.twisted(a, &z)).unwrap(), reference);
    }
    // units of Z(A) = k^* x (1 + J(Z(A))), and J(Z(A)) has dimension 5
    assert_eq!(units, 2 * 3usize.pow(5));
}

#[test]
fn higman_ideal_of_a_group_algebra_is_spanned_by_class_traces() {
    let g = s3();
    for p in [2, 3, 5] {
        let a = group_algebra(&g, p).unwrap();
        let s = group_algebra_form(&g, p).unwrap();
        let traces: Vec<FpVector> = (0..g.order())
            .map(|x| {
                let mut v = vec![0u32; g.order()];
                for h in 0..g.order() {
                    let c = g.mul(g.mul(h, x), g.inv(h));
                    v[c] = (v[c] + 1) % p;
                }
                v
            })
            .collect();
        assert_eq!(a.higman_ideal(&s).unwrap(), Subspace::span(a.field(), a.dim(), &traces).unwrap());
    }
}

fn transported(inv: &FpMatrix, s: &Subspace) -> Subspace {
    let rows: Vec<FpVector> = s.basis_vectors().iter().map(|v| inv.apply_row(v)).collect();
    Subspace::span(s.field(), s.ambient_dim(), &rows).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn invariants_of_a_survive_a_change_of_basis(p in prop::sample::select(vec![2u32, 3, 5, 7]), seed in any::<u64>()) {
        let pa = algebra_a(p).unwrap();
        let a = pa.algebra();
        let f = a.field();
        let change = FpMatrix::random_invertible(f, a.dim(), &mut ChaCha8Rng::seed_from_u64(seed));
        let inv = change.inverse().unwrap();
        let b = a.change_basis(&change).unwrap();
        prop_assert!(b.validate().is_ok());
        prop_assert_eq!(b.center(), transported(&inv, &a.center()));
        prop_assert_eq!(b.commutator_subspace(), transported(&inv, &a.commutator_subspace()));

        let j = a.radical(&RadicalStrategy::ArrowIdeal(pa.arrow_ideal())).unwrap();
        let jb = b.radical(&RadicalStrategy::ArrowIdeal(transported(&inv, &j))).unwrap();
        prop_assert_eq!(b.radical_layers(&jb).unwrap(), a.radical_layers(&j).unwrap());
        prop_assert_eq!(b.socle(&jb).unwrap(), transported(&inv, &a.socle(&j).unwrap()));

        let s = algebra_a_form(&pa);
        let sb = LinearForm::new(change.apply_col(&s.coeffs));
        for u in 0..a.dim() {
            let x = a.basis(u);
            prop_assert_eq!(sb.eval(&b, &inv.apply_row(&x)), s.eval(a, &x));
        }
        prop_assert_eq!(b.higman_ideal(&sb).unwrap(), transported(&inv, &a.higman_ideal(&s).unwrap()));

        let idem: Vec<FpVector> = pa.vertex_idempotents().iter().map(|e| inv.apply_row(e)).collect();
        prop_assert_eq!(b.cartan_matrix(&idem).unwrap(), a.cartan_matrix(&pa.vertex_idempotents()).unwrap());

        // The basis change itself is an algebra isomorphism.
        let images: Vec<FpVector> = (0..a.dim()).map(|u| inv.apply_row(&a.basis(u))).collect();
        let map = AlgebraMap::from_images(a.clone(), b.clone(), &images).unwrap();
        prop_assert_eq!(map.classify(), MapClass::Isomorphism);
    }

    #[test]
    fn group_algebra_centre_survives_a_change_of_basis(p in prop::sample::select(vec![2u32, 3, 5]), seed in any::<u64>()) {
        let g = direct_product(&cyclic(2, "a"), &s3());
        let a = group_algebra(&g, p).unwrap();
        let f = PrimeField::new(p).unwrap();
        let change = FpMatrix::random_invertible(f, a.dim(), &mut ChaCha8Rng::seed_from_u64(seed));
        let b = a.change_basis(&change).unwrap();
        prop_assert_eq!(b.center().dim(), 6);
        prop_assert_eq!(b.commutator_subspace().dim(), a.commutator_subspace().dim());
        prop_assert!(!b.is_commutative());
    }
}

#[test]
fn perturbed_structure_constants_are_rejected() {
    let pa = algebra_a(3).unwrap();
    let a = pa.algebra();
    let n = a.dim();
    let mut rejected = 0;
    let mut total = 0;
    // Bump each product of two arrows by each vertex idempotent.
    for x in ["alpha", "beta", "gamma", "delta"] {
        for y in ["alpha", "beta", "gamma", "delta"] {
            for e in ["i", "j"] {
                let (u, v, k) = (a.index_of(x).unwrap(), a.index_of(y).unwrap(), a.index_of(e).unwrap());
                let mut table = a.raw_table().to_vec();
                table[(u * n + v) * n + k] = (table[(u * n + v) * n + k] + 1) % 3;
                let broken = Algebra::from_raw_unchecked(a.field(), table, a.one(), a.labels().to_vec());
                total += 1;
                if broken.validate().is_err() {
                    rejected += 1;
                }
            }
        }
    }
    assert_eq!(rejected, total);
}
