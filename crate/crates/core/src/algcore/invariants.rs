use crate::exactlin::{kernel, FpMatrix, FpVector, Subspace};

use super::{Algebra, AlgebraError};

/// How to obtain the Jacobson radical. No general radical algorithm is
/// attempted; each strategy verifies its answer.
#[derive(Clone, Debug)]
pub enum RadicalStrategy {
    /// Commutative split local algebras: every basis element is a scalar
    /// plus a nilpotent.
    SplitLocal,
    /// Quiver algebras, where the span of the non-trivial paths is the radical.
    ArrowIdeal(Subspace),
    /// Group algebras `kG` with a normal p-subgroup `N` such that `G/N` is a
    /// p'-group; the candidate is the augmentation ideal of `kN` times `kG`.
    NormalPSubgroup(Subspace),
}

/// Elements up to which the semisimplicity scan of `A/J` is attempted.
const SCAN_LIMIT: u64 = 1 << 22;

impl Algebra {
    /// `Z(A)`: kernel of the stacked maps `z ↦ z b - b z`.
    pub fn center(&self) -> Subspace {
        let n = self.dim();
        let f = self.field();
        let mut m = FpMatrix::zeros(f, n * n, n);
        for b in 0..n {
            for u in 0..n {
                let ub = self.basis_product(u, b);
                let bu = self.basis_product(b, u);
                for k in 0..n {
                    m.set(b * n + k, u, f.sub(ub[k], bu[k]));
                }
            }
        }
        kernel(&m)
    }

    /// `[A, A]`, the span of all `uv - vu`.
    pub fn commutator_subspace(&self) -> Subspace {
        let n = self.dim();
        let f = self.field();
        let vs: Vec<FpVector> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .map(|(u, v)| f.sub_vec(self.basis_product(u, v), self.basis_product(v, u)))
            .collect();
        Subspace::span(f, n, &vs).expect("products have length dim")
    }

    /// Span of all products `u v` with `u` from a basis of `left` and `v` from a basis of `right`.
    pub fn subspace_product(&self, left: &Subspace, right: &Subspace) -> Result<Subspace, AlgebraError> {
        self.check_ambient(left)?;
        self.check_ambient(right)?;
        let rs = right.basis_vectors();
        let vs: Vec<FpVector> = left
            .basis_vectors()
            .iter()
            .flat_map(|u| rs.iter().map(move |v| (u.clone(), v)))
            .map(|(u, v)| self.mul(&u, v))
            .collect();
        Ok(Subspace::span(self.field(), self.dim(), &vs)?)
    }

    /// Left socle `{v : j v = 0 for all j in J}` with respect to the radical `J`.
    pub fn socle(&self, radical: &Subspace) -> Result<Subspace, AlgebraError> {
        self.check_ambient(radical)?;
        let n = self.dim();
        let js = radical.basis_vectors();
        let mut m = FpMatrix::zeros(self.field(), js.len() * n, n);
        for (r, j) in js.iter().enumerate() {
            for u in 0..n {
                let ju = self.mul(j, &self.basis(u));
                for (k, &c) in ju.iter().enumerate() {
                    m.set(r * n + k, u, c);
                }
            }
        }
        Ok(kernel(&m))
    }

    /// Dimensions of `J, J^2, ...` ending with the first zero power.
    pub fn radical_power_dims(&self, radical: &Subspace) -> Result<Vec<usize>, AlgebraError> {
        Ok(self.radical_powers(radical)?.iter().map(Subspace::dim).collect())
    }

    /// `J, J^2, ...` ending with the first zero power.
    pub fn radical_powers(&self, radical: &Subspace) -> Result<Vec<Subspace>, AlgebraError> {
        self.check_ambient(radical)?;
        let mut out = vec![radical.clone()];
        while out.last().unwrap().dim() > 0 {
            if out.len() > self.dim() + 1 {
                return Err(AlgebraError::CandidateNotNilpotent);
            }
            let next = self.subspace_product(out.last().unwrap(), radical)?;
            if next == *out.last().unwrap() {
                return Err(AlgebraError::CandidateNotNilpotent);
            }
            out.push(next);
        }
        Ok(out)
    }

    /// Loewy layer dimensions `dim A/J, dim J/J^2, ...`, zero layers omitted.
    pub fn radical_layers(&self, radical: &Subspace) -> Result<Vec<usize>, AlgebraError> {
        let dims = self.radical_power_dims(radical)?;
        let mut layers = vec![self.dim() - radical.dim()];
        layers.extend(dims.windows(2).map(|w| w[0] - w[1]));
        Ok(layers.into_iter().filter(|&d| d > 0).collect())
    }

    /// The Jacobson radical, by the given strategy, verified nilpotent,
    /// a two-sided ideal, and maximal.
    pub fn radical(&self, strategy: &RadicalStrategy) -> Result<Subspace, AlgebraError> {
        match strategy {
            RadicalStrategy::SplitLocal => self.split_local_radical(),
            RadicalStrategy::ArrowIdeal(candidate) | RadicalStrategy::NormalPSubgroup(candidate) => {
                self.check_ambient(candidate)?;
                if !self.is_two_sided_ideal(candidate)? {
                    return Err(AlgebraError::CandidateNotIdeal);
                }
                self.radical_powers(candidate)?;
                self.check_quotient_semisimple(candidate)?;
                Ok(candidate.clone())
            }
        }
    }

    fn split_local_radical(&self) -> Result<Subspace, AlgebraError> {
        if !self.is_commutative() {
            return Err(AlgebraError::NotCommutative);
        }
        let f = self.field();
        let mut vs = Vec::with_capacity(self.dim());
        for u in 0..self.dim() {
            let b = self.basis(u);
            let mut found = None;
            for lambda in f.elements() {
                let shifted = self.sub(&b, &self.scalar(lambda));
                if self.is_nilpotent(&shifted) {
                    if found.is_some() {
                        return Err(AlgebraError::NotSplitLocal { basis: u });
                    }
                    found = Some(shifted);
                }
            }
            vs.push(found.ok_or(AlgebraError::NotSplitLocal { basis: u })?);
        }
        let j = Subspace::span(f, self.dim(), &vs)?;
        if j.dim() + 1 != self.dim() {
            return Err(AlgebraError::NotSplitLocal { basis: 0 });
        }
        if !self.is_two_sided_ideal(&j)? {
            return Err(AlgebraError::CandidateNotIdeal);
        }
        self.radical_powers(&j)?;
        Ok(j)
    }

    /// Exhaustive check that `A/J` has zero radical: no nonzero `x` whose
    /// left ideal `(A/J) x` consists of nilpotents.
    fn check_quotient_semisimple(&self, j: &Subspace) -> Result<(), AlgebraError> {
        let q = self.quotient(j)?;
        let qa = q.algebra();
        let p = self.field().characteristic() as u64;
        let size = p.checked_pow(2 * qa.dim() as u32).unwrap_or(u64::MAX);
        if size > SCAN_LIMIT {
            return Err(AlgebraError::ScanTooLarge { dim: qa.dim() });
        }
        let all: Vec<FpVector> = self.field().all_vectors(qa.dim()).collect();
        for x in all.iter().filter(|x| !Algebra::is_zero(x)) {
            if all.iter().all(|y| qa.is_nilpotent(&qa.mul(y, x))) {
                return Err(AlgebraError::RadicalNotMaximal);
            }
        }
        Ok(())
    }

    /// Commutative split local algebras: all Loewy layers have dimension at most one.
    pub fn is_uniserial_local(&self) -> Result<bool, AlgebraError> {
        let j = self.radical(&RadicalStrategy::SplitLocal)?;
        Ok(self.radical_layers(&j)?.iter().all(|&d| d <= 1))
    }

    pub(crate) fn check_ambient(&self, s: &Subspace) -> Result<(), AlgebraError> {
        if s.ambient_dim() != self.dim() {
            return Err(AlgebraError::Lin(crate::exactlin::LinError::DimensionMismatch {
                expected: self.dim(),
                found: s.ambient_dim(),
            }));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::PrimeField;

    fn gf3() -> PrimeField {
        PrimeField::new(3).unwrap()
    }

    fn truncated_poly(n: usize) -> Algebra {
        let labels = (0..n).map(|i| format!("u^{i}")).collect();
        let f = gf3();
        Algebra::from_fn(f, labels, f.unit_vec(n, 0), |a, b| {
            let mut v = vec![0; n];
            if a + b < n {
                v[a + b] = 1;
            }
            v
        })
        .unwrap()
    }

    /// 2x2 matrices over GF(3), basis e11, e12, e21, e22.
    fn matrix_algebra() -> Algebra {
        let f = gf3();
        let labels = ["e11", "e12", "e21", "e22"].iter().map(|s| s.to_string()).collect();
        Algebra::from_fn(f, labels, vec![1, 0, 0, 1], |u, v| {
            let (i, j) = (u / 2, u % 2);
            let (k, l) = (v / 2, v % 2);
            let mut out = vec![0; 4];
            if j == k {
                out[i * 2 + l] = 1;
            }
            out
        })
        .unwrap()
    }

    /// k x k with orthogonal idempotents.
    fn split_semisimple() -> Algebra {
        let f = gf3();
        Algebra::from_fn(f, vec!["e".into(), "f".into()], vec![1, 1], |u, v| {
            let mut out = vec![0, 0];
            if u == v {
                out[u] = 1;
            }
            out
        })
        .unwrap()
    }

    #[test]
    fn commutative_algebra_has_full_center() {
        let a = truncated_poly(4);
        assert_eq!(a.center().dim(), 4);
        assert_eq!(a.commutator_subspace().dim(), 0);
    }

    #[test]
    fn matrix_algebra_center_and_commutators() {
        let m = matrix_algebra();
        assert_eq!(m.center(), Subspace::span(gf3(), 4, &[vec![1, 0, 0, 1]]).unwrap());
        assert_eq!(m.commutator_subspace().dim(), 3);
    }

    #[test]
    fn product_with_zero_subspace() {
        let a = truncated_poly(3);
        let z = Subspace::zero(gf3(), 3);
        let full = Subspace::full(gf3(), 3);
        assert_eq!(a.subspace_product(&full, &z).unwrap().dim(), 0);
    }

    #[test]
    fn split_local_radical_of_truncated_poly() {
        let a = truncated_poly(3);
        let j = a.radical(&RadicalStrategy::SplitLocal).unwrap();
        assert_eq!(j, Subspace::span(gf3(), 3, &[vec![0, 1, 0], vec![0, 0, 1]]).unwrap());
        assert_eq!(a.radical_layers(&j).unwrap(), vec![1, 1, 1]);
        assert!(a.is_uniserial_local().unwrap());
        assert_eq!(a.socle(&j).unwrap(), Subspace::span(gf3(), 3, &[vec![0, 0, 1]]).unwrap());
    }

    #[test]
    fn ground_field_is_uniserial() {
        assert!(truncated_poly(1).is_uniserial_local().unwrap());
    }

    #[test]
    fn semisimple_algebra_socle_is_everything() {
        let a = split_semisimple();
        let zero = Subspace::zero(gf3(), 2);
        assert_eq!(a.socle(&zero).unwrap().dim(), 2);
        assert_eq!(a.radical(&RadicalStrategy::ArrowIdeal(zero.clone())).unwrap(), zero);
        assert!(matches!(
            a.radical(&RadicalStrategy::SplitLocal),
            Err(AlgebraError::NotSplitLocal { .. })
        ));
    }

    #[test]
    fn split_local_needs_commutativity() {
        assert_eq!(
            matrix_algebra().radical(&RadicalStrategy::SplitLocal),
            Err(AlgebraError::NotCommutative)
        );
    }

    #[test]
    fn wrong_radical_hints_fail() {
        let a = truncated_poly(3);
        // u^2 alone is a nilpotent ideal but not maximal.
        let small = Subspace::span(gf3(), 3, &[vec![0, 0, 1]]).unwrap();
        assert_eq!(
            a.radical(&RadicalStrategy::ArrowIdeal(small)),
            Err(AlgebraError::RadicalNotMaximal)
        );
        let not_ideal = Subspace::span(gf3(), 3, &[vec![1, 1, 0]]).unwrap();
        assert_eq!(
            a.radical(&RadicalStrategy::ArrowIdeal(not_ideal)),
            Err(AlgebraError::CandidateNotIdeal)
        );
        let everything = Subspace::full(gf3(), 3);
        assert_eq!(
            a.radical(&RadicalStrategy::ArrowIdeal(everything)),
            Err(AlgebraError::CandidateNotNilpotent)
        );
    }
}
