use std::collections::BTreeSet;

use super::GroupError;

/// A finite group given by its multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    order: usize,
    /// `mult[g * order + h]` is the index of `gh`.
    mult: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
    labels: Vec<String>,
}

impl GroupTable {
    /// Validates associativity and finds the identity and inverses.
    pub fn new(mult: Vec<usize>, labels: Vec<String>) -> Result<Self, GroupError> {
        let n = labels.len();
        let bad = |m: &str| Err(GroupError::InvalidTable(m.to_string()));
        if n == 0 || mult.len() != n * n || mult.iter().any(|&x| x >= n) {
            return bad("table has the wrong shape");
        }
        let at = |g: usize, h: usize| mult[g * n + h];
        let Some(identity) = (0..n).find(|&e| (0..n).all(|g| at(e, g) == g && at(g, e) == g)) else {
            return bad("no identity");
        };
        let mut inverse = Vec::with_capacity(n);
        for g in 0..n {
            match (0..n).find(|&h| at(g, h) == identity && at(h, g) == identity) {
                Some(h) => inverse.push(h),
                None => return bad("missing inverse"),
            }
        }
        for g in 0..n {
            for h in 0..n {
                for k in 0..n {
                    if at(at(g, h), k) != at(g, at(h, k)) {
                        return bad("not associative");
                    }
                }
            }
        }
        Ok(GroupTable {
            order: n,
            mult,
            identity,
            inverse,
            labels,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, g: usize, h: usize) -> usize {
        self.mult[g * self.order + h]
    }

    pub fn inv(&self, g: usize) -> usize {
        self.inverse[g]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, g: usize) -> &str {
        &self.labels[g]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn pow(&self, g: usize, e: usize) -> usize {
        (0..e).fold(self.identity, |acc, _| self.mul(acc, g))
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|g| (0..g).all(|h| self.mul(g, h) == self.mul(h, g)))
    }

    /// `g h g^-1`
    pub fn conjugate(&self, g: usize, h: usize) -> usize {
        self.mul(self.mul(g, h), self.inv(g))
    }

    /// Conjugacy classes, each sorted, ordered by smallest element.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order];
        let mut classes = Vec::new();
        for h in 0..self.order {
            if seen[h] {
                continue;
            }
            let class: BTreeSet<usize> = (0..self.order).map(|g| self.conjugate(g, h)).collect();
            for &x in &class {
                seen[x] = true;
            }
            classes.push(class.into_iter().collect());
        }
        classes
    }

    /// The subgroup generated by `gens`, sorted.
    pub fn generated(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order];
        seen[self.identity] = true;
        let mut frontier = vec![self.identity];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    frontier.push(y);
                }
            }
        }
        (0..self.order).filter(|&g| seen[g]).collect()
    }

    pub fn is_subgroup(&self, s: &[usize]) -> bool {
        let set: BTreeSet<usize> = s.iter().copied().collect();
        set.contains(&self.identity) && s.iter().all(|&g| s.iter().all(|&h| set.contains(&self.mul(g, self.inv(h)))))
    }

    pub fn is_normal(&self, s: &[usize]) -> bool {
        let set: BTreeSet<usize> = s.iter().copied().collect();
        self.is_subgroup(s) && (0..self.order).all(|g| s.iter().all(|&h| set.contains(&self.conjugate(g, h))))
    }

    /// One representative of each left coset `gS`.
    pub fn left_coset_reps(&self, s: &[usize]) -> Vec<usize> {
        let mut covered = vec![false; self.order];
        let mut reps = Vec::new();
        for g in 0..self.order {
            if !covered[g] {
                reps.push(g);
                for &h in s {
                    covered[self.mul(g, h)] = true;
                }
            }
        }
        reps
    }

    /// Whether `perm` is an automorphism of this group.
    pub fn is_automorphism(&self, perm: &[usize]) -> bool {
        if perm.len() != self.order {
            return false;
        }
        let mut hit = vec![false; self.order];
        for &x in perm {
            if x >= self.order || hit[x] {
                return false;
            }
            hit[x] = true;
        }
        (0..self.order).all(|g| (0..self.order).all(|h| perm[self.mul(g, h)] == self.mul(perm[g], perm[h])))
    }
}

/// Joins two factor labels, dropping identities: `"r" + "s^2" = "rs^2"`.
fn join_labels(a: &str, b: &str) -> String {
    match (a, b) {
        ("1", "1") => "1".into(),
        ("1", _) => b.into(),
        (_, "1") => a.into(),
        _ => format!("{a}{b}"),
    }
}

/// `C_n` with labels `1, g, g^2, ...`.
pub fn cyclic(n: usize, generator: &str) -> GroupTable {
    let mult = (0..n * n).map(|i| (i / n + i % n) % n).collect();
    let labels = (0..n)
        .map(|k| match k {
            0 => "1".to_string(),
            1 => generator.to_string(),
            _ => format!("{generator}^{k}"),
        })
        .collect();
    GroupTable::new(mult, labels).expect("cyclic groups are groups")
}

/// `G x H`, with `(g, h)` at index `g * |H| + h`.
pub fn direct_product(g: &GroupTable, h: &GroupTable) -> GroupTable {
    let (m, n) = (g.order(), h.order());
    let mut mult = Vec::with_capacity(m * n * m * n);
    for x in 0..m * n {
        for y in 0..m * n {
            mult.push(g.mul(x / n, y / n) * n + h.mul(x % n, y % n));
        }
    }
    let labels = (0..m * n).map(|x| join_labels(g.label(x / n), h.label(x % n))).collect();
    GroupTable::new(mult, labels).expect("products of groups are groups")
}

/// A group acting on another by automorphisms: `perms[e]` is the
/// permutation of the target induced by `e`.
#[derive(Clone, Debug)]
pub struct GroupAction {
    group: GroupTable,
    target: GroupTable,
    perms: Vec<Vec<usize>>,
}

impl GroupAction {
    pub fn new(group: GroupTable, target: GroupTable, perms: Vec<Vec<usize>>) -> Result<Self, GroupError> {
        if perms.len() != group.order() {
            return Err(GroupError::InvalidAction("one permutation per element is required".into()));
        }
        if let Some(e) = (0..group.order()).find(|&e| !target.is_automorphism(&perms[e])) {
            return Err(GroupError::InvalidAction(format!(
                "element {} does not act by an automorphism",
                group.label(e)
            )));
        }
        for a in 0..group.order() {
            for b in 0..group.order() {
                let ab = group.mul(a, b);
                if (0..target.order()).any(|x| perms[ab][x] != perms[a][perms[b][x]]) {
                    return Err(GroupError::InvalidAction("not a homomorphism into Aut".into()));
                }
            }
        }
        Ok(GroupAction { group, target, perms })
    }

    pub fn trivial(group: GroupTable, target: GroupTable) -> Self {
        let id: Vec<usize> = (0..target.order()).collect();
        let perms = vec![id; group.order()];
        GroupAction { group, target, perms }
    }

    pub fn group(&self) -> &GroupTable {
        &self.group
    }

    pub fn target(&self) -> &GroupTable {
        &self.target
    }

    pub fn perms(&self) -> &[Vec<usize>] {
        &self.perms
    }

    pub fn act(&self, e: usize, x: usize) -> usize {
        self.perms[e][x]
    }
}

/// `N ⋊ K` for `K` acting on `N`, with `(n, k)` at index `n * |K| + k` and
/// `(n, k)(n', k') = (n k(n'), k k')`.
pub fn semidirect(action: &GroupAction) -> GroupTable {
    let (nn, kk) = (action.target().order(), action.group().order());
    let (ng, kg) = (action.target(), action.group());
    let mut mult = Vec::with_capacity(nn * kk * nn * kk);
    for x in 0..nn * kk {
        let (n1, k1) = (x / kk, x % kk);
        for y in 0..nn * kk {
            let (n2, k2) = (y / kk, y % kk);
            mult.push(ng.mul(n1, action.act(k1, n2)) * kk + kg.mul(k1, k2));
        }
    }
    let labels = (0..nn * kk).map(|x| join_labels(ng.label(x / kk), kg.label(x % kk))).collect();
    GroupTable::new(mult, labels).expect("semidirect products of valid actions are groups")
}
