use std::collections::{BTreeMap, BTreeSet};

use crate::algcore::{Algebra, AlgebraMap, MapClass, RadicalStrategy};
use crate::exactlin::{kernel, FpMatrix, FpVector, Subspace};
use crate::groups::{
    classify_small_group, enumerate_homs, fixed_subalgebra, has_split_surjection, inertial_candidate, subgroups_gl2,
    surjections, INERTIAL_TYPES,
};

use super::context::{form_from_values, render_dims, Ctx};
use super::{Recorder, StepError, StepResult};

fn span(a: &Algebra, xs: &[FpVector]) -> Result<Subspace, StepError> {
    Ok(Subspace::span(a.field(), a.dim(), xs)?)
}

fn render_classes(classes: &[Vec<String>]) -> String {
    let mut sorted: Vec<Vec<String>> = classes
        .iter()
        .map(|c| {
            let mut c = c.clone();
            c.sort();
            c
        })
        .collect();
    sorted.sort();
    sorted
        .iter()
        .map(|c| format!("{{{}}}", c.join(",")))
        .collect::<Vec<_>>()
        .join(" ")
}

pub(super) fn s5(ctx: &Ctx, rec: &mut Recorder) -> StepResult {
    let fr = ctx.frob();
    let h = &fr.h;
    rec.check("order", "[H] |H| = 18", 18, h.order());
    rec.check("nonabelian", "[H] H is nonabelian", false, h.is_abelian());
    let classes = h.conjugacy_classes();
    rec.check("classes", "[H-classes] H has 6 conjugacy classes", 6, classes.len());

    let xt: Vec<String> = fr.p.labels().iter().map(|x| if x == "1" { "t".into() } else { format!("{x}t") }).collect();
    let mut expected: Vec<Vec<String>> = [vec!["1"], vec!["r", "r^2"], vec!["s", "s^2"], vec!["r^2s", "rs^2"], vec!["rs", "r^2s^2"]]
        .iter()
        .map(|c| c.iter().map(|s| s.to_string()).collect())
        .collect();
    expected.push(xt);
    let actual: Vec<Vec<String>> = classes
        .iter()
        .map(|c| c.iter().map(|&g| h.label(g).to_string()).collect())
        .collect();
    rec.check(
        "class_list",
        "[H-classes] classes {1}, {r,r^2}, {s,s^2}, {r^2s,rs^2}, {rs,r^2s^2}, {xt : x in P}",
        render_classes(&expected),
        render_classes(&actual),
    );

    let kh = ctx.kh()?;
    rec.check("dim_kH", "[H] dim kH = 18", 18, kh.dim());
    let centre = kh.center();
    rec.check("centre_dim", "[H-stable-centre] dim Z(kH) = 6", 6, centre.dim());
    rec.check(
        "centre_class_sums",
        "[H-stable-centre] Z(kH) is spanned by the class sums",
        true,
        centre == ctx.kh_centre()?.as_subspace(),
    );
    let higman = kh.higman_ideal(&ctx.kh_form()?)?;
    let sum_xt = (0..h.order())
        .map(|g| u32::from(fr.p_in_h.binary_search(&g).is_err()))
        .collect::<Vec<_>>();
    rec.check("Zpr_dim", "[H-stable-centre] dim Z^pr(kH) = 1", 1, higman.dim());
    rec.check("Zpr_basis", "[H-stable-centre] Z^pr(kH) = span{sum of xt over x in P}", true, higman == span(kh, &[sum_xt])?);
    rec.check("Zbar_dim", "[H-stable-centre] dim Z(kH)/Z^pr(kH) = 5", 5, ctx.kh_stable()?.algebra().dim());

    let candidate = crate::groups::normal_subgroup_radical_candidate(h, kh, &fr.p_in_h)?;
    let j = kh.radical(&RadicalStrategy::NormalPSubgroup(candidate))?;
    rec.check("radical_dim", "[H-radical] dim J(kH) = 16, generated by the augmentation ideal of kP", 16, j.dim());
    Ok(())
}

pub(super) fn s6(ctx: &Ctx, rec: &mut Recorder) -> StepResult {
    let fr = ctx.frob();
    let f = ctx.field;
    let kp = ctx.kp()?;
    let fixed = ctx.kp_fixed()?;
    rec.check("dim", "[fixed-points] dim (kP)^E = 5", 5, fixed.algebra().dim());
    let pe = |labels: &[&str]| -> FpVector {
        let mut v = kp.zero();
        for l in labels {
            v[fr.p.index_of(l).expect("label of P")] = 1;
        }
        v
    };
    let orbit_sums = [pe(&["1"]), pe(&["r", "r^2"]), pe(&["s", "s^2"]), pe(&["r^2s", "rs^2"]), pe(&["rs", "r^2s^2"])];
    rec.check(
        "basis",
        "[fixed-points] (kP)^E = span{1, r+r^2, s+s^2, r^2s+rs^2, rs+r^2s^2}",
        true,
        fixed.as_subspace() == span(kp, &orbit_sums)?,
    );

    // (kP)^E -> Z(kH)/Z^pr(kH) through kP -> kH.
    let zbar_h = ctx.kh_stable()?.algebra();
    let images = (0..fixed.algebra().dim())
        .map(|u| ctx.kh_to_stable(&ctx.kp_to_kh(&fixed.embed(&fixed.algebra().basis(u)))?))
        .collect::<Result<Vec<_>, _>>()?;
    let to_stable = AlgebraMap::from_images(fixed.algebra().clone(), zbar_h.clone(), &images)?;
    rec.check(
        "iso_kP",
        "[fixed-points] x + x^-1 -> its image induces (kP)^E = Z(kH)/Z^pr(kH)",
        MapClass::Isomorphism,
        to_stable.classify(),
    );

    // k[x,y]/(x^3, y^3) -> kP, x -> r - 1, y -> s - 1.
    let b = ctx.xy_pres()?;
    let one = kp.one();
    let r = f.sub_vec(&pe(&["r"]), &one);
    let s = f.sub_vec(&pe(&["s"]), &one);
    let phi = b
        .hom_from_generator_images(kp, &[r, s])?
        .ok_or_else(|| StepError("x -> r-1, y -> s-1 violates a relation".into()))?;
    rec.check("phi", "[fixed-points] x -> r-1, y -> s-1 induces k[x,y]/(x^3,y^3) = kP", MapClass::Isomorphism, phi.classify());
    let phi_inv = phi.matrix().inverse()?;

    let t = fr.e.index_of("t").expect("t");
    let perm = &fr.action.perms()[t];
    let tp = FpMatrix::from_rows(f, kp.dim(), &(0..kp.dim()).map(|u| f.unit_vec(kp.dim(), perm[u])).collect::<Vec<_>>())?;
    let t_b = phi.matrix().mul(&tp)?.mul(&phi_inv)?;
    let ba = b.algebra();
    let poly = |terms: &[(i64, [u32; 2])]| b.eval_poly(&terms.iter().map(|(c, e)| (*c, e.to_vec())).collect::<Vec<_>>());
    rec.check(
        "t_on_x",
        "[fixed-points] x^t = x^2 + 2x",
        ba.format_element(&poly(&[(1, [2, 0]), (2, [1, 0])])),
        ba.format_element(&t_b.apply_row(&b.monomial(&[1, 0]))),
    );
    rec.check(
        "t_on_y",
        "[fixed-points] y^t = y^2 + 2y",
        ba.format_element(&poly(&[(1, [0, 2]), (2, [0, 1])])),
        ba.format_element(&t_b.apply_row(&b.monomial(&[0, 1]))),
    );

    // Fixed vectors v with v (t_B - I) = 0.
    let mut shifted = t_b.clone();
    for u in 0..ba.dim() {
        shifted.set(u, u, f.sub(shifted.get(u, u), 1));
    }
    let b_fixed = kernel(&shifted.transpose());
    let listed_basis = [
        poly(&[(1, [0, 0])]),
        poly(&[(1, [2, 0])]),
        poly(&[(1, [0, 2])]),
        poly(&[(1, [1, 1]), (1, [2, 1]), (1, [1, 2])]),
        poly(&[(1, [2, 2])]),
    ];
    rec.check("B_fixed_dim", "[fixed-points] dim k[x,y]/(x^3,y^3)^E = 5", 5, b_fixed.dim());
    rec.check(
        "B_fixed_basis",
        "[fixed-points] k[x,y]/(x^3,y^3)^E = span{1, x^2, y^2, xy+x^2y+xy^2, x^2y^2}",
        true,
        b_fixed == span(ba, &listed_basis)?,
    );

    let to_b = |labels: &[&str]| ba.format_element(&phi_inv.apply_row(&pe(labels)));
    let images = [
        ("r_image", "[fixed-points] r + r^t -> x^2 + 2", &["r", "r^2"][..], poly(&[(1, [2, 0]), (2, [0, 0])])),
        ("s_image", "[fixed-points] s + s^t -> y^2 + 2", &["s", "s^2"][..], poly(&[(1, [0, 2]), (2, [0, 0])])),
        (
            "rs_image",
            "[fixed-points] rs + (rs)^t -> 2 + x^2 + y^2 + 2xy + 2x^2y + 2xy^2 + x^2y^2",
            &["rs", "r^2s^2"][..],
            poly(&[(2, [0, 0]), (1, [2, 0]), (1, [0, 2]), (2, [1, 1]), (2, [2, 1]), (2, [1, 2]), (1, [2, 2])]),
        ),
        (
            "r2s_image",
            "[fixed-points] r^2s + (r^2s)^t -> 2 + x^2 + y^2 + xy + x^2y + xy^2",
            &["r^2s", "rs^2"][..],
            poly(&[(2, [0, 0]), (1, [2, 0]), (1, [0, 2]), (1, [1, 1]), (1, [2, 1]), (1, [1, 2])]),
        ),
    ];
    for (name, claim, labels, expected) in images {
        rec.check(name, claim, ba.format_element(&expected), to_b(labels));
    }

    // B^E -> Z(kH)/Z^pr(kH), and the structure of the target.
    let labels = ["1", "x^2", "y^2", "xy+x^2y+xy^2", "x^2y^2"].map(String::from).to_vec();
    let b_e = ba.subalgebra(&listed_basis, labels)?;
    let images = listed_basis
        .iter()
        .map(|v| ctx.kh_to_stable(&ctx.kp_to_kh(&phi.apply(v))?))
        .collect::<Result<Vec<_>, _>>()?;
    let iso = AlgebraMap::from_images(b_e.algebra().clone(), zbar_h.clone(), &images)?;
    rec.check(
        "iso_B",
        "[fixed-points] k[x,y]/(x^3,y^3)^E = Z(kH)/Z^pr(kH) via x -> r-1, y -> s-1",
        MapClass::Isomorphism,
        iso.classify(),
    );

    let z = zbar_h;
    let j = z.radical(&RadicalStrategy::SplitLocal)?;
    rec.check(
        "J_basis",
        "[fixed-points] J = span{x^2, y^2, xy+x^2y+xy^2, x^2y^2}",
        true,
        j == span(z, &images[1..])?,
    );
    rec.check("J_powers", "[fixed-points] dims of J, J^2, J^3", "4,1,0", render_dims(&z.radical_power_dims(&j)?));
    let soc = z.socle(&j)?;
    rec.check("socle", "[fixed-points] soc = span{x^2y^2}", true, soc == span(z, &images[4..])?);
    rec.check("J2_socle", "[fixed-points] J^2 = soc", true, z.radical_powers(&j)?.get(1) == Some(&soc));
    rec.check(
        "frobenius",
        "[fixed-points] Frobenius certificate from the one-dimensional socle",
        "ok",
        z.frobenius_form_split_local().map_or_else(|e| e.to_string(), |_| "ok".into()),
    );
    let sz = form_from_values(f, &images, &[0, 0, 0, 0, 1])?;
    let check = z.symm_form_check(&sz);
    rec.check(
        "form",
        "[fixed-points] s(x^2y^2) = 1, zero on the other basis elements, is symmetric and nondegenerate",
        "true,true",
        format!("{},{}", check.symmetric, check.nondegenerate),
    );
    Ok(())
}

pub(super) fn s7(ctx: &Ctx, rec: &mut Recorder) -> StepResult {
    let za = ctx.a_stable()?.algebra();
    let zh = ctx.kh_stable()?.algebra();
    let j2 = |z: &Algebra| -> Result<usize, StepError> {
        let j = z.radical(&RadicalStrategy::SplitLocal)?;
        Ok(z.radical_power_dims(&j)?.get(1).copied().unwrap_or(0))
    };
    let (da, dh) = (j2(za)?, j2(zh)?);
    rec.check("J2_A", "[obstruction] dim J(Z(A)/Z^pr(A))^2 = 2", 2, da);
    rec.check("J2_kH", "[obstruction] dim J(Z(kH)/Z^pr(kH))^2 = 1", 1, dh);
    rec.check("differ", "[obstruction] the two squares of radicals have different dimensions", true, da != dh);

    let pres = ctx.stable_pres()?;
    let to_h = enumerate_homs(pres, zh)?;
    let isos = to_h.iter().filter(|m| m.classify() == MapClass::Isomorphism).count();
    rec.check(
        "no_iso",
        "[obstruction] exhaustive search: no isomorphism k[x,y]/(x^3-y^2, xy, y^3) -> Z(kH)/Z^pr(kH)",
        0,
        isos,
    );
    let to_a = enumerate_homs(pres, za)?;
    let self_isos = to_a.iter().filter(|m| m.classify() == MapClass::Isomorphism).count();
    rec.check(
        "control",
        "[obstruction] the same search finds isomorphisms onto Z(A)/Z^pr(A)",
        true,
        self_isos > 0,
    );
    Ok(())
}

/// Orbit counts on `C3 x C3` of the inertial quotient candidates.
pub const ORBIT_TABLE: [(&str, usize); 9] = [
    ("trivial", 9),
    ("C2free", 5),
    ("C2fix", 6),
    ("V4", 4),
    ("C4", 3),
    ("C8", 2),
    ("D8", 3),
    ("Q8", 2),
    ("SD16", 2),
];

pub(super) fn s8(_ctx: &Ctx, rec: &mut Recorder) -> StepResult {
    for (name, expected) in ORBIT_TABLE {
        let g = inertial_candidate(name)?;
        let label = classify_small_group(&g.table())?;
        rec.check(
            &format!("orbits.{name}"),
            &format!("[orbit-count] {name} ({label}, order {}) has {expected} orbits on P", g.order()),
            expected,
            g.orbit_count(),
        );
    }
    let big = ["C4", "C8", "Q8", "SD16"]
        .iter()
        .map(|n| Ok(inertial_candidate(n)?.orbit_count()))
        .collect::<Result<Vec<_>, StepError>>()?;
    rec.check(
        "at_most_3",
        "[orbit-count] groups containing a cyclic subgroup of order 4 have at most 3 orbits",
        true,
        big.iter().all(|&c| c <= 3),
    );

    // Every subgroup of GL(2,3), grouped by isomorphism type.
    let mut table: BTreeMap<String, BTreeSet<usize>> = BTreeMap::new();
    let all = subgroups_gl2(inertial_candidate("trivial")?.field());
    for g in &all {
        if let Ok(t) = classify_small_group(&g.table()) {
            table.entry(t.to_string()).or_default().insert(g.orbit_count());
        }
    }
    let rendered = table
        .iter()
        .map(|(k, v)| format!("{k}:{:?}", v))
        .collect::<Vec<_>>()
        .join(" ");
    rec.check(
        "gl2_scan",
        "[GL(2,3)] orbit counts of all subgroups of GL(2,3) of each listed type",
        "1:{9} C2:{5, 6} C2xC2:{4} C4:{3} C8:{2} D8:{3} Q8:{2} SD16:{2}",
        rendered,
    );
    rec.check("gl2_subgroups", "[GL(2,3)] GL(2,3) has 55 subgroups", 55, all.len());
    rec.check("types", "[orbit-count] number of candidate types", INERTIAL_TYPES.len(), ORBIT_TABLE.len());
    Ok(())
}

pub(super) fn s9(ctx: &Ctx, rec: &mut Recorder) -> StepResult {
    let g = inertial_candidate("D8")?;
    let action = g.action_on(&ctx.frob().p)?;
    let fixed = fixed_subalgebra(ctx.kp()?, action.perms())?;
    let a = fixed.algebra();
    rec.check("dim", "[D8-fixed-points] dim (kP)^D8 = 3", 3, a.dim());
    rec.check("uniserial", "[D8-fixed-points] (kP)^D8 is uniserial", true, a.is_uniserial_local()?);
    Ok(())
}

pub(super) fn s10(ctx: &Ctx, rec: &mut Recorder) -> StepResult {
    let src = ctx.stable_pres()?;
    let tgt = ctx.u_pres()?;
    let field = format!("GF({})", ctx.p());
    let surj = surjections(src, tgt.algebra())?;
    rec.check_over(
        "surjection_exists",
        "[split-surjection] Z(A)/Z^pr(A) maps onto k[u]/(u^3)",
        &field,
        true,
        !surj.is_empty(),
    );
    let witness = src
        .hom_from_generator_images(tgt.algebra(), &[tgt.generator(0), tgt.algebra().zero()])?
        .map_or_else(|| "relations fail".into(), |m| m.classify().to_string());
    rec.check_over(
        "witness",
        "[split-surjection] x -> u, y -> 0 is a surjective homomorphism",
        &field,
        MapClass::Surjective,
        witness,
    );
    let split = has_split_surjection(src, tgt)?;
    rec.check_over(
        "no_split",
        &format!(
            "[split-surjection] none of the {} surjections onto k[u]/(u^3) has a homomorphic section (verified over {field})",
            split.surjections
        ),
        &field,
        false,
        split.splits(),
    );

    // Cube-zero elements of the stable centre have no x-component.
    let b = src.algebra();
    let x_index = src
        .basis_exponents()
        .iter()
        .position(|e| e == &vec![1, 0])
        .ok_or_else(|| StepError("x is not a basis monomial".into()))?;
    let violations = ctx
        .field
        .all_vectors(b.dim())
        .filter(|z| Algebra::is_zero(&b.pow(z, 3)) && z[x_index] != 0)
        .count();
    rec.check_over(
        "cube_zero",
        "[split-surjection] every z with z^3 = 0 has zero coefficient on x",
        &field,
        0,
        violations,
    );
    Ok(())
}
