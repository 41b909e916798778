use crate::algcore::{Algebra, MapClass, RadicalStrategy};
use crate::exactlin::{smith_normal_form, FpVector, IntMatrix, Subspace};

use super::context::{form_from_values, render_dims, render_elements, Ctx, A_BASIS, A_CENTRE_BASIS};
use super::{Recorder, StepResult};

fn span(a: &Algebra, xs: &[FpVector]) -> Result<Subspace, super::StepError> {
    Ok(Subspace::span(a.field(), a.dim(), xs)?)
}

pub(super) fn s1(ctx: &Ctx, rec: &mut Recorder) -> StepResult {
    let pa = ctx.a()?;
    let a = pa.algebra();
    rec.check(
        "validate",
        "A satisfies associativity on all basis triples and the unit laws",
        "ok",
        a.validate().map_or_else(|e| e.to_string(), |_| "ok".into()),
    );
    let nonzero = pa.relation_values().iter().filter(|v| !Algebra::is_zero(v)).count();
    rec.check("relations", "every defining relation vanishes in A", 0, nonzero);
    rec.check("dim_A", "[A-basis] dim A = 9", 9, a.dim());

    let basis = ctx.eval_all(&A_BASIS)?;
    rec.check(
        "basis",
        "[A-basis] i, j, alpha, beta, beta alpha, gamma, gamma^2, delta, delta^2 are linearly independent",
        9,
        span(a, &basis)?.dim(),
    );

    let comm = a.commutator_subspace();
    let comm_listed = span(a, &ctx.eval_all(&["alpha", "beta", "alpha.beta - beta.alpha"])?)?;
    rec.check("comm_dim", "[A-commutators] dim [A,A] = 3", 3, comm.dim());
    rec.check("comm_basis", "[A-commutators] [A,A] = span{alpha, beta, alpha beta - beta alpha}", true, comm == comm_listed);

    let centre = a.center();
    rec.check("centre_dim", "[A-centre] dim Z(A) = 6", 6, centre.dim());
    rec.check(
        "centre_basis",
        "[A-centre] Z(A) = span{1, gamma, gamma^2, delta, delta^2, beta alpha}",
        true,
        centre == span(a, &ctx.eval_all(&A_CENTRE_BASIS)?)?,
    );

    let j = a.radical(&RadicalStrategy::ArrowIdeal(pa.arrow_ideal()))?;
    let soc = a.socle(&j)?;
    rec.check("socle_dim", "[A-socle] dim soc(A) = 2", 2, soc.dim());
    rec.check(
        "socle_basis",
        "[A-socle] soc(A) = span{alpha beta, beta alpha}",
        true,
        soc == span(a, &ctx.eval_all(&["alpha.beta", "beta.alpha"])?)?,
    );
    rec.check("radical_layers", "[A-radical] Loewy layers of A", "2,4,2,1", render_dims(&a.radical_layers(&j)?));
    let powers = a.radical_powers(&j)?;
    rec.check(
        "J3",
        "[A-radical] J(A)^3 = span{delta^2}",
        true,
        powers.get(2) == Some(&span(a, &[ctx.eval_a("delta.delta")?])?),
    );
    Ok(())
}

pub(super) fn s2(ctx: &Ctx, rec: &mut Recorder) -> StepResult {
    let a = ctx.a()?.algebra();
    let s = ctx.a_form()?;
    let check = a.symm_form_check(s);
    rec.check("symmetric", "[A-form] s(xy) = s(yx) for all basis pairs", true, check.symmetric);
    rec.check("nondegenerate", "[A-form] the Gram matrix of s is invertible", true, check.nondegenerate);
    rec.check(
        "values",
        "[A-form] s(alpha beta) = s(beta alpha) = 1",
        "1,1",
        format!("{},{}", s.eval(a, &ctx.eval_a("alpha.beta")?), s.eval(a, &ctx.eval_a("beta.alpha")?)),
    );
    let basis = ctx.eval_all(&A_BASIS)?;
    let expected = ctx.eval_all(&[
        "alpha.beta",
        "beta.alpha",
        "beta",
        "alpha",
        "j",
        "gamma.gamma",
        "gamma",
        "delta",
        "i",
    ])?;
    let dual = a.dual_basis_of(s, &basis)?;
    rec.check(
        "dual_basis",
        "[A-form] dual basis of (i, j, alpha, beta, beta alpha, gamma, gamma^2, delta, delta^2) is (alpha beta, beta alpha, beta, alpha, j, gamma^2, gamma, delta, i)",
        render_elements(a, &expected),
        render_elements(a, &dual),
    );
    Ok(())
}

pub(super) fn s3(ctx: &Ctx, rec: &mut Recorder) -> StepResult {
    let pa = ctx.a()?;
    let a = pa.algebra();
    let idem = ctx.eval_all(&["i", "j"])?;
    let c = a.cartan_matrix(&idem)?;
    rec.check("cartan", "[Cartan] C = [[5,1],[1,2]]", "[[5,1],[1,2]]", &c);
    rec.check("smith", "[Cartan] elementary divisors of C are 1 and 9", "[1, 9]", format!("{:?}", smith_normal_form(&c)));
    let d = IntMatrix::from_rows(&[vec![1, 0], vec![1, 0], vec![1, 0], vec![1, 0], vec![1, 1], vec![0, 1]])?;
    rec.check("decomposition", "[Cartan] D^t D = C for the 6x2 decomposition matrix", &c, d.transpose().mul(&d)?);
    let corner = a.corner(&idem[0])?;
    rec.check("corner_dim", "[Cartan] dim iAi = 5", 5, corner.dim());
    rec.check("corner_commutative", "[Cartan] iAi is commutative", true, corner.is_commutative());
    Ok(())
}

pub(super) fn s4(ctx: &Ctx, rec: &mut Recorder) -> StepResult {
    let a = ctx.a()?.algebra();
    let s = ctx.a_form()?;
    let f = ctx.field;

    let tr_i = a.trace_map(s, &ctx.eval_a("i")?)?;
    let tr_j = a.trace_map(s, &ctx.eval_a("j")?)?;
    rec.check(
        "trace_i",
        "[A-trace] Tr(i) = beta alpha - alpha beta",
        a.format_element(&ctx.eval_a("beta.alpha - alpha.beta")?),
        a.format_element(&tr_i),
    );
    rec.check("trace_j", "[A-trace] Tr(j) = -Tr(i)", a.format_element(&f.scale_vec(f.neg(1), &tr_i)), a.format_element(&tr_j));
    let others = A_BASIS[2..]
        .iter()
        .map(|l| Ok(a.trace_map(s, &ctx.eval_a(l)?)?))
        .collect::<Result<Vec<_>, super::StepError>>()?;
    rec.check(
        "trace_others",
        "[A-trace] Tr vanishes on the seven basis elements other than i, j",
        0,
        others.iter().filter(|v| !Algebra::is_zero(v)).count(),
    );
    let higman = a.higman_ideal(s)?;
    rec.check("Zpr_dim", "[stable-centre-A] dim Z^pr(A) = 1", 1, higman.dim());
    rec.check(
        "Zpr_basis",
        "[stable-centre-A] Z^pr(A) = span{alpha beta - beta alpha}",
        true,
        higman == Subspace::span(f, a.dim(), &[ctx.eval_a("alpha.beta - beta.alpha")?])?,
    );

    let zbar = ctx.a_stable()?.algebra();
    rec.check("Zbar_dim", "[stable-centre-A] dim Z(A)/Z^pr(A) = 5", 5, zbar.dim());

    let pres = ctx.stable_pres()?;
    let x = ctx.a_to_stable(&ctx.eval_a("gamma")?)?;
    let y = ctx.a_to_stable(&ctx.eval_a("delta")?)?;
    let iso = pres
        .hom_from_generator_images(zbar, &[x.clone(), y.clone()])?
        .map_or_else(|| "relations fail".to_string(), |m| m.classify().to_string());
    rec.check(
        "iso",
        "[stable-centre-A] x -> gamma, y -> delta induces k[x,y]/(x^3-y^2, xy, y^3) = Z(A)/Z^pr(A)",
        MapClass::Isomorphism,
        iso,
    );

    // From here on x and y are the images of gamma and delta.
    let b = zbar;
    let (one, x2, y2) = (b.one(), b.mul(&x, &x), b.mul(&y, &y));
    rec.check(
        "basis",
        "[stable-centre-A] {1, x, x^2, y, y^2} is a basis",
        5,
        span(b, &[one.clone(), x.clone(), x2.clone(), y.clone(), y2.clone()])?.dim(),
    );
    let j = b.radical(&RadicalStrategy::SplitLocal)?;
    rec.check(
        "J_basis",
        "[stable-centre-A] J = span{x, x^2, y, y^2}",
        true,
        j == span(b, &[x.clone(), x2.clone(), y.clone(), y2.clone()])?,
    );
    let powers = b.radical_powers(&j)?;
    rec.check("J_powers", "[stable-centre-A] dims of J, J^2, J^3, J^4", "4,2,1,0", render_dims(&b.radical_power_dims(&j)?));
    rec.check("J2_basis", "[stable-centre-A] J^2 = span{x^2, y^2}", true, powers.get(1) == Some(&span(b, &[x2.clone(), y2.clone()])?));
    let soc = b.socle(&j)?;
    rec.check("socle_dim", "[stable-centre-A] dim soc = 1", 1, soc.dim());
    rec.check("socle", "[stable-centre-A] soc = span{y^2}", true, soc == span(b, std::slice::from_ref(&y2))?);
    rec.check("J3_socle", "[stable-centre-A] J^3 = soc", true, powers.get(2) == Some(&soc));
    rec.check(
        "frobenius",
        "[stable-centre-A] Frobenius certificate from the one-dimensional socle",
        "ok",
        b.frobenius_form_split_local().map_or_else(|e| e.to_string(), |_| "ok".into()),
    );
    let basis = [one.clone(), x.clone(), y.clone(), x2.clone(), y2.clone()];
    let sz = form_from_values(ctx.field, &basis, &[0, 0, 0, 0, 1])?;
    let check = b.symm_form_check(&sz);
    rec.check(
        "form",
        "[stable-centre-A] s(y^2) = 1, zero on 1, x, y, x^2, is symmetric and nondegenerate",
        "true,true",
        format!("{},{}", check.symmetric, check.nondegenerate),
    );
    rec.check(
        "dual_basis",
        "[stable-centre-A] dual basis of (1, x, y, x^2, y^2) is (y^2, x^2, y, x, 1)",
        render_elements(b, &[y2, x2, y, x, one]),
        render_elements(b, &b.dual_basis_of(&sz, &basis)?),
    );
    Ok(())
}
