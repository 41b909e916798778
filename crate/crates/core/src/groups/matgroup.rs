use std::collections::{BTreeSet, HashMap};

use crate::exactlin::{FpMatrix, PrimeField};

use super::{GroupAction, GroupError, GroupTable};

/// A subgroup of GL(2, p) given by generators, with its elements listed in
/// order of discovery from the identity.
#[derive(Clone, Debug)]
pub struct MatGroup {
    field: PrimeField,
    generators: Vec<FpMatrix>,
    elements: Vec<FpMatrix>,
}

/// Closure of `gens` under multiplication.
pub fn mat_closure(field: PrimeField, gens: &[FpMatrix]) -> Result<MatGroup, GroupError> {
    for g in gens {
        if g.rows() != 2 || g.cols() != 2 || g.rank() != 2 {
            return Err(GroupError::SingularGenerator);
        }
    }
    let id = FpMatrix::identity(field, 2);
    let mut elements = vec![id.clone()];
    let mut seen: BTreeSet<Vec<u32>> = BTreeSet::from([id.entries().to_vec()]);
    let mut i = 0;
    while i < elements.len() {
        for g in gens {
            let y = elements[i].mul(g)?;
            if seen.insert(y.entries().to_vec()) {
                elements.push(y);
            }
        }
        i += 1;
    }
    Ok(MatGroup {
        field,
        generators: gens.to_vec(),
        elements,
    })
}

impl MatGroup {
    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[FpMatrix] {
        &self.generators
    }

    pub fn elements(&self) -> &[FpMatrix] {
        &self.elements
    }

    /// Sorted entry lists, for comparing element sets.
    pub fn element_set(&self) -> BTreeSet<Vec<u32>> {
        self.elements.iter().map(|m| m.entries().to_vec()).collect()
    }

    /// Vectors of GF(p)^2, indexed `a * p + b` for `(a, b)`.
    fn vectors(&self) -> Vec<Vec<u32>> {
        self.field.all_vectors(2).collect()
    }

    fn vector_index(&self, v: &[u32]) -> usize {
        (v[0] * self.field.characteristic() + v[1]) as usize
    }

    /// Permutation of vector indices induced by `m` acting on columns.
    fn vector_perm(&self, m: &FpMatrix) -> Vec<usize> {
        self.vectors().iter().map(|v| self.vector_index(&m.apply_col(v))).collect()
    }

    /// Number of orbits on GF(p)^2, by union-find over the generators.
    pub fn orbit_count(&self) -> usize {
        let n = (self.field.characteristic() as usize).pow(2);
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while parent[r] != r {
                r = parent[r];
            }
            parent[x] = r;
            r
        }
        for g in &self.generators {
            for (x, y) in self.vector_perm(g).into_iter().enumerate() {
                let (a, b) = (find(&mut parent, x), find(&mut parent, y));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        (0..n).filter(|&x| find(&mut parent, x) == x).count()
    }

    /// Orbit count by Burnside: the average number of fixed vectors.
    pub fn burnside_count(&self) -> usize {
        let fixed: usize = self
            .elements
            .iter()
            .map(|m| self.vectors().iter().filter(|v| m.apply_col(v) == **v).count())
            .sum();
        fixed / self.order()
    }

    /// Multiplication table, in element order.
    pub fn table(&self) -> GroupTable {
        let index: HashMap<Vec<u32>, usize> = self
            .elements
            .iter()
            .enumerate()
            .map(|(i, m)| (m.entries().to_vec(), i))
            .collect();
        let n = self.order();
        let mut mult = Vec::with_capacity(n * n);
        for a in &self.elements {
            for b in &self.elements {
                mult.push(index[a.mul(b).expect("2x2").entries()]);
            }
        }
        let labels = self.elements.iter().map(|m| format!("{:?}", m.row_vecs())).collect();
        GroupTable::new(mult, labels).expect("matrix groups are groups")
    }

    /// The linear action on `C_p x C_p`, whose element `(a, b)` sits at index
    /// `a * p + b` as in `direct_product(cyclic(p), cyclic(p))`.
    pub fn action_on(&self, target: &GroupTable) -> Result<GroupAction, GroupError> {
        let perms = self.elements.iter().map(|m| self.vector_perm(m)).collect();
        GroupAction::new(self.table(), target.clone(), perms)
    }
}

/// All of GL(2, p).
pub fn gl2(field: PrimeField) -> Vec<FpMatrix> {
    field
        .all_vectors(4)
        .map(|v| FpMatrix::from_rows(field, 2, &[v[..2].to_vec(), v[2..].to_vec()]).expect("2x2"))
        .filter(|m| m.rank() == 2)
        .collect()
}

/// Every subgroup of GL(2, p) generated by at most two elements, deduplicated
/// by element set and sorted by order.
pub fn subgroups_gl2(field: PrimeField) -> Vec<MatGroup> {
    let all = gl2(field);
    let mut found: BTreeSet<BTreeSet<Vec<u32>>> = BTreeSet::new();
    let mut out = Vec::new();
    for (i, a) in all.iter().enumerate() {
        for b in &all[i..] {
            let g = mat_closure(field, &[a.clone(), b.clone()]).expect("invertible");
            if found.insert(g.element_set()) {
                out.push(g);
            }
        }
    }
    out.sort_by_key(|g| g.order());
    out
}

/// Names of the inertial-quotient candidates, with the trivial group first.
pub const INERTIAL_TYPES: [&str; 9] = ["trivial", "C2free", "C2fix", "V4", "C4", "C8", "D8", "Q8", "SD16"];

/// A fixed representative in GL(2, 3) of each inertial-quotient type.
/// `C2free` is `{±I}`, which fixes only zero; `C2fix` is `<diag(1, -1)>`.
pub fn inertial_candidate(name: &str) -> Result<MatGroup, GroupError> {
    let f = PrimeField::new(3)?;
    let m = |rows: [[i64; 2]; 2]| FpMatrix::from_i64_rows(f, &[rows[0].to_vec(), rows[1].to_vec()]).expect("2x2");
    let minus_one = m([[2, 0], [0, 2]]);
    let reflection = m([[1, 0], [0, 2]]);
    let quarter = m([[0, 2], [1, 0]]);
    let singer = m([[0, 1], [1, 2]]);
    let gens = match name {
        "trivial" => vec![],
        "C2free" => vec![minus_one],
        "C2fix" => vec![reflection],
        "V4" => vec![minus_one, reflection],
        "C4" => vec![quarter],
        "C8" => vec![singer],
        "D8" => vec![quarter, reflection],
        "Q8" => vec![quarter, m([[1, 1], [1, 2]])],
        "SD16" => vec![singer, m([[1, 0], [2, 2]])],
        other => return Err(GroupError::UnknownGroup(other.to_string())),
    };
    mat_closure(f, &gens)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gl2_3_has_48_elements() {
        let f = PrimeField::new(3).unwrap();
        assert_eq!(gl2(f).len(), 48);
        assert_eq!(mat_closure(f, &gl2(f)).unwrap().order(), 48);
    }

    #[test]
    fn singular_generators_are_rejected() {
        let f = PrimeField::new(3).unwrap();
        let z = FpMatrix::from_i64_rows(f, &[vec![1, 1], vec![1, 1]]).unwrap();
        assert_eq!(mat_closure(f, &[z]).unwrap_err(), GroupError::SingularGenerator);
    }

    #[test]
    fn candidate_orders() {
        let orders: Vec<usize> = INERTIAL_TYPES
            .iter()
            .map(|n| inertial_candidate(n).unwrap().order())
            .collect();
        assert_eq!(orders, vec![1, 2, 2, 4, 4, 8, 8, 8, 16]);
        assert!(inertial_candidate("C5").is_err());
    }

    #[test]
    fn union_find_matches_burnside_on_candidates() {
        for n in INERTIAL_TYPES {
            let g = inertial_candidate(n).unwrap();
            assert_eq!(g.orbit_count(), g.burnside_count(), "{n}");
        }
    }
}
