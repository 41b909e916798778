use std::collections::BTreeSet;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algcore::{Algebra, LinearForm, RadicalStrategy};
use crate::exactlin::{FpMatrix, FpVector, PrimeField, Subspace};
use crate::groups::{gl2, group_algebra_form, mat_closure, relative_trace, subgroups_gl2};

use super::context::{render_dims, Ctx};
use super::{Recorder, StepError, StepResult};

/// Seed of the random basis changes; fixed so reports are reproducible.
pub const BASIS_CHANGE_SEED: u64 = 0x5eed_0003;
pub const BASIS_CHANGES: usize = 100;

/// Largest prime for which the cyclic subgroups of GL(2, p) are recounted.
const BURNSIDE_MAX_P: u32 = 7;

/// The invariants of A compared across bases, as one string per invariant.
fn invariants(a: &Algebra, j: &Subspace, s: &LinearForm, idem: &[FpVector]) -> Result<Vec<String>, StepError> {
    Ok(vec![
        a.center().dim().to_string(),
        a.commutator_subspace().dim().to_string(),
        render_dims(&a.radical_layers(j)?),
        a.socle(j)?.dim().to_string(),
        a.higman_ideal(s)?.dim().to_string(),
        a.cartan_matrix(idem)?.to_string(),
    ])
}

fn transport(inv: &FpMatrix, s: &Subspace) -> Result<Subspace, StepError> {
    let rows: Vec<FpVector> = s.basis_vectors().iter().map(|v| inv.apply_row(v)).collect();
    Ok(Subspace::span(s.field(), s.ambient_dim(), &rows)?)
}

pub(super) fn s11(ctx: &Ctx, rec: &mut Recorder) -> StepResult {
    let pa = ctx.a()?;
    let a = pa.algebra();
    let f = ctx.field;
    let s = ctx.a_form()?;
    let j = a.radical(&RadicalStrategy::ArrowIdeal(pa.arrow_ideal()))?;
    let idem = pa.vertex_idempotents();
    let base = invariants(a, &j, s, &idem)?;
    let (centre, comm, higman) = (a.center(), a.commutator_subspace(), a.higman_ideal(s)?);

    let mut rng = ChaCha8Rng::seed_from_u64(BASIS_CHANGE_SEED);
    let mut value_mismatches = 0;
    let mut subspace_mismatches = 0;
    for _ in 0..BASIS_CHANGES {
        let change = FpMatrix::random_invertible(f, a.dim(), &mut rng);
        let inv = change.inverse()?;
        let b = a.change_basis(&change)?;
        b.validate()?;
        let jb = b.radical(&RadicalStrategy::ArrowIdeal(transport(&inv, &j)?))?;
        let sb = LinearForm::new(change.apply_col(&s.coeffs));
        let idem_b: Vec<FpVector> = idem.iter().map(|e| inv.apply_row(e)).collect();
        if invariants(&b, &jb, &sb, &idem_b)? != base {
            value_mismatches += 1;
        }
        if b.center() != transport(&inv, &centre)?
            || b.commutator_subspace() != transport(&inv, &comm)?
            || b.higman_ideal(&sb)? != transport(&inv, &higman)?
        {
            subspace_mismatches += 1;
        }
    }
    rec.check(
        "basis_change_values",
        &format!(
            "[invariance] centre, [A,A], Loewy layers, socle, Higman ideal and Cartan matrix agree across {BASIS_CHANGES} random bases (seed {BASIS_CHANGE_SEED:#x})"
        ),
        0,
        value_mismatches,
    );
    rec.check(
        "basis_change_subspaces",
        "[invariance] centre, [A,A] and Higman ideal of the new basis are the transported subspaces",
        0,
        subspace_mismatches,
    );

    // Twisting s by a central unit z gives the form x -> s(zx); the Higman
    // ideal does not depend on the choice.
    let minus_one = f.neg(1).to_string();
    let units = [
        "1 + gamma".to_string(),
        minus_one.clone(),
        "1 + delta + beta.alpha".to_string(),
        format!("{minus_one} + gamma.gamma"),
    ];
    let mut differing = Vec::new();
    for u in &units {
        let z = ctx.eval_a(u)?;
        let twisted = s.twisted(a, &z);
        if a.higman_ideal(&twisted)? != higman {
            differing.push(u.clone());
        }
    }
    rec.check(
        "higman_twist",
        &format!("[invariance] Higman ideal is unchanged when s is twisted by the central units {}", units.join(", ")),
        "[]",
        format!("{differing:?}"),
    );

    // Negative control: gamma.gamma gains an extra j term.
    let (g, jv) = (
        a.index_of("gamma").ok_or_else(|| StepError("no gamma".into()))?,
        a.index_of("j").ok_or_else(|| StepError("no j".into()))?,
    );
    let mut table = a.raw_table().to_vec();
    let n = a.dim();
    let cell = (g * n + g) * n + jv;
    table[cell] = f.add(table[cell], 1);
    let broken = Algebra::from_raw_unchecked(f, table, a.one(), a.labels().to_vec());
    rec.check(
        "negative_control",
        "[invariance] associativity check rejects the table with gamma.gamma perturbed by j",
        "rejected",
        if broken.validate().is_err() { "rejected" } else { "accepted" },
    );
    Ok(())
}

fn burnside_disagreements<'a>(groups: impl Iterator<Item = &'a crate::groups::MatGroup>) -> (usize, usize) {
    let mut total = 0;
    let mut bad = 0;
    for g in groups {
        total += 1;
        if g.orbit_count() != g.burnside_count() {
            bad += 1;
        }
    }
    (total, bad)
}

fn cyclic_subgroups(field: PrimeField) -> Result<Vec<crate::groups::MatGroup>, StepError> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for m in gl2(field) {
        let g = mat_closure(field, &[m])?;
        if seen.insert(g.element_set()) {
            out.push(g);
        }
    }
    Ok(out)
}

pub(super) fn s12(ctx: &Ctx, rec: &mut Recorder) -> StepResult {
    let fr = ctx.frob();
    let h = &fr.h;
    let kh = ctx.kh()?;
    let s = group_algebra_form(h, ctx.p())?;
    let everything: Vec<usize> = (0..h.order()).collect();
    let identity = [h.identity()];
    let mut failures = 0;
    for u in 0..kh.dim() {
        let x = kh.basis(u);
        let direct = kh.trace_map(&s, &x)?;
        let via_p = relative_trace(h, kh, &fr.p_in_h, &everything, &relative_trace(h, kh, &identity, &fr.p_in_h, &x));
        if direct != via_p {
            failures += 1;
        }
    }
    rec.check(
        "trace_identity",
        "[cross-check] on kH the trace map of the group form equals Tr_P^H after Tr_1^P, on every basis element",
        0,
        failures,
    );

    let gf3 = PrimeField::new(3)?;
    let all = subgroups_gl2(gf3);
    let (total, bad) = burnside_disagreements(all.iter());
    rec.check_over(
        "burnside_gl2_3",
        &format!("[cross-check] union-find and Burnside orbit counts agree on all {total} subgroups of GL(2,3)"),
        "GF(3)",
        0,
        bad,
    );

    let p = ctx.p();
    let claim = format!("[cross-check] union-find and Burnside orbit counts agree on the cyclic subgroups of GL(2,{p})");
    if p <= BURNSIDE_MAX_P {
        let cyclic = cyclic_subgroups(ctx.field)?;
        let (_, bad) = burnside_disagreements(cyclic.iter());
        rec.check("burnside_cyclic", &claim, 0, bad);
    } else {
        rec.skip("burnside_cyclic", &claim, &format!("skipped: recount runs for p <= {BURNSIDE_MAX_P}"));
    }
    Ok(())
}
