use std::collections::{BTreeMap, BTreeSet, HashMap};

use blockalg::exactlin::PrimeField;
use blockalg::groups::{classify_small_group, cyclic, frobenius_c3xc3_c2, subgroups_gl2, GroupTable};

/// Brute-force isomorphism test: tries every image of a generating set and
/// extends it along words in the generators.
fn isomorphic(g: &GroupTable, h: &GroupTable) -> bool {
    if g.order() != h.order() {
        return false;
    }
    let gens = small_generating_set(g);
    let candidates = |x: usize| (0..h.order()).filter(move |&y| h.element_order(y) == g.element_order(x));
    let mut choice = vec![0usize; gens.len()];
    let pools: Vec<Vec<usize>> = gens.iter().map(|&x| candidates(x).collect()).collect();
    if pools.iter().any(Vec::is_empty) {
        return false;
    }
    loop {
        let images: Vec<usize> = choice.iter().zip(&pools).map(|(&c, pool)| pool[c]).collect();
        if extends_to_isomorphism(g, h, &gens, &images) {
            return true;
        }
        let mut k = 0;
        loop {
            if k == choice.len() {
                return false;
            }
            choice[k] += 1;
            if choice[k] < pools[k].len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}

fn small_generating_set(g: &GroupTable) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut span = vec![g.identity()];
    while span.len() < g.order() {
        let next = (0..g.order()).filter(|x| !span.contains(x)).max_by_key(|&x| g.element_order(x)).unwrap();
        gens.push(next);
        span = g.generated(&gens);
    }
    gens
}

fn extends_to_isomorphism(g: &GroupTable, h: &GroupTable, gens: &[usize], images: &[usize]) -> bool {
    let mut map: HashMap<usize, usize> = HashMap::from([(g.identity(), h.identity())]);
    let mut queue = vec![g.identity()];
    while let Some(x) = queue.pop() {
        for (&s, &t) in gens.iter().zip(images) {
            let (gx, hx) = (g.mul(x, s), h.mul(map[&x], t));
            match map.get(&gx) {
                Some(&y) if y != hx => return false,
                Some(_) => {}
                None => {
                    map.insert(gx, hx);
                    queue.push(gx);
                }
            }
        }
    }
    let image: BTreeSet<usize> = map.values().copied().collect();
    image.len() == g.order() && (0..g.order()).all(|a| (0..g.order()).all(|b| map[&g.mul(a, b)] == h.mul(map[&a], map[&b])))
}

#[test]
fn isomorphism_oracle_sanity() {
    let c4 = cyclic(4, "a");
    let v4 = blockalg::groups::direct_product(&cyclic(2, "a"), &cyclic(2, "b"));
    assert!(isomorphic(&c4, &c4));
    assert!(!isomorphic(&c4, &v4));
}

#[test]
fn classification_agrees_with_brute_force_isomorphism() {
    let f = PrimeField::new(3).unwrap();
    let mut by_type: BTreeMap<String, Vec<GroupTable>> = BTreeMap::new();
    let mut other_by_order: BTreeMap<usize, Vec<GroupTable>> = BTreeMap::new();
    for g in subgroups_gl2(f) {
        let table = g.table();
        match classify_small_group(&table) {
            Ok(t) => by_type.entry(t.to_string()).or_default().push(table),
            Err(_) => other_by_order.entry(table.order()).or_default().push(table),
        }
    }
    // Same type: pairwise isomorphic.
    for (t, tables) in &by_type {
        for pair in tables.windows(2) {
            assert!(isomorphic(&pair[0], &pair[1]), "{t}");
        }
    }
    // Different types of the same order: never isomorphic.
    let reps: Vec<(&String, &GroupTable)> = by_type.iter().map(|(t, v)| (t, &v[0])).collect();
    for (i, (s, g)) in reps.iter().enumerate() {
        for (t, h) in &reps[i + 1..] {
            if g.order() == h.order() {
                assert!(!isomorphic(g, h), "{s} vs {t}");
            }
        }
    }
    // Unclassified subgroups are not isomorphic to any classified type.
    for tables in other_by_order.values() {
        for g in tables {
            assert!(reps.iter().all(|(_, h)| !isomorphic(g, h)));
        }
    }
}

#[test]
fn orbit_counts_agree_with_burnside_for_every_subgroup() {
    for p in [2, 3] {
        for g in subgroups_gl2(PrimeField::new(p).unwrap()) {
            assert_eq!(g.orbit_count(), g.burnside_count());
        }
    }
}

#[test]
fn frobenius_group_classes_by_exhaustion() {
    let fr = frobenius_c3xc3_c2();
    let h = &fr.h;
    let mut seen = BTreeSet::new();
    let mut classes = Vec::new();
    for x in 0..h.order() {
        if seen.insert(x) {
            let class: BTreeSet<usize> = (0..h.order()).map(|g| h.mul(h.mul(g, x), h.inv(g))).collect();
            seen.extend(class.iter().copied());
            classes.push(class);
        }
    }
    let mut lib: Vec<BTreeSet<usize>> = h.conjugacy_classes().into_iter().map(|c| c.into_iter().collect()).collect();
    lib.sort();
    classes.sort();
    assert_eq!(lib, classes);
    // t acts on P by inversion.
    for x in 0..fr.p.order() {
        assert_eq!(h.conjugate(fr.t, fr.p_in_h[x]), fr.p_in_h[fr.p.inv(x)]);
    }
}
