use crate::exactlin::{FpMatrix, FpVector, IntMatrix, Subspace};

use super::{Algebra, AlgebraError, AlgebraMap};

/// A subalgebra together with its inclusion into the ambient algebra.
#[derive(Clone, Debug)]
pub struct Subalgebra {
    inclusion: AlgebraMap,
}

impl Subalgebra {
    pub fn algebra(&self) -> &Algebra {
        self.inclusion.source()
    }

    pub fn ambient(&self) -> &Algebra {
        self.inclusion.target()
    }

    pub fn inclusion(&self) -> &AlgebraMap {
        &self.inclusion
    }

    /// Image in the ambient algebra.
    pub fn embed(&self, x: &[u32]) -> FpVector {
        self.inclusion.apply(x)
    }

    /// Coordinates of an ambient element in the subalgebra basis.
    pub fn coords(&self, v: &[u32]) -> Option<FpVector> {
        self.inclusion.matrix().solve_left(v)
    }

    /// The subspace of the ambient algebra spanned by the subalgebra.
    pub fn as_subspace(&self) -> Subspace {
        Subspace::row_space(self.inclusion.matrix())
    }
}

/// A quotient `A/I` with the projection `A -> A/I`.
#[derive(Clone, Debug)]
pub struct Quotient {
    projection: AlgebraMap,
    ideal: Subspace,
}

impl Quotient {
    pub fn algebra(&self) -> &Algebra {
        self.projection.target()
    }

    pub fn projection(&self) -> &AlgebraMap {
        &self.projection
    }

    pub fn ideal(&self) -> &Subspace {
        &self.ideal
    }

    pub fn project(&self, x: &[u32]) -> FpVector {
        self.projection.apply(x)
    }
}

impl Algebra {
    /// Algebra structure on the span of `basis`, with `unit` as identity.
    /// The basis must be linearly independent and closed under products.
    fn restrict(&self, basis: &[FpVector], unit: &[u32], labels: Vec<String>) -> Result<(Algebra, FpMatrix), AlgebraError> {
        let b = FpMatrix::from_rows(self.field(), self.dim(), basis)?;
        if b.rank() != basis.len() || labels.len() != basis.len() {
            return Err(AlgebraError::NotSubalgebra);
        }
        let unit_coords = b.solve_left(unit).ok_or(AlgebraError::NotSubalgebra)?;
        let n = basis.len();
        let mut products = Vec::with_capacity(n * n);
        for u in basis {
            for v in basis {
                let c = b.solve_left(&self.mul(u, v)).ok_or(AlgebraError::NotSubalgebra)?;
                products.push(c);
            }
        }
        let sub = Algebra::new(self.field(), products, unit_coords, labels)?;
        Ok((sub, b))
    }

    /// Unital subalgebra with the given basis and labels.
    pub fn subalgebra(&self, basis: &[FpVector], labels: Vec<String>) -> Result<Subalgebra, AlgebraError> {
        let (sub, b) = self.restrict(basis, &self.one(), labels)?;
        Ok(Subalgebra {
            inclusion: AlgebraMap::new(sub, self.clone(), b)?,
        })
    }

    /// Unital subalgebra on the RREF basis of `s`, labelled by its elements.
    pub fn subalgebra_from_subspace(&self, s: &Subspace) -> Result<Subalgebra, AlgebraError> {
        self.check_ambient(s)?;
        let basis = s.basis_vectors();
        let labels = basis.iter().map(|v| self.format_element(v)).collect();
        self.subalgebra(&basis, labels)
    }

    /// `A/I` on the complement spanned by the non-pivot coordinates of the
    /// ideal's RREF basis.
    pub fn quotient(&self, ideal: &Subspace) -> Result<Quotient, AlgebraError> {
        self.check_ambient(ideal)?;
        if !self.is_two_sided_ideal(ideal)? {
            return Err(AlgebraError::NotAnIdeal);
        }
        let keep = ideal.non_pivots();
        let read = |v: &[u32]| -> Result<FpVector, AlgebraError> {
            let r = ideal.reduce(v)?;
            Ok(keep.iter().map(|&k| r[k]).collect())
        };
        let mut products = Vec::with_capacity(keep.len() * keep.len());
        for &u in &keep {
            for &v in &keep {
                products.push(read(self.basis_product(u, v))?);
            }
        }
        let labels = keep.iter().map(|&k| format!("[{}]", self.label(k))).collect();
        let q = Algebra::new(self.field(), products, read(&self.one())?, labels)?;
        let images = (0..self.dim())
            .map(|u| read(&self.basis(u)))
            .collect::<Result<Vec<_>, _>>()?;
        let projection = AlgebraMap::from_images(self.clone(), q, &images)?;
        Ok(Quotient {
            projection,
            ideal: ideal.clone(),
        })
    }

    fn require_idempotent(&self, e: &[u32]) -> Result<(), AlgebraError> {
        if self.mul(e, e) != e {
            return Err(AlgebraError::NotIdempotent);
        }
        Ok(())
    }

    /// `eAe`, with unit `e`.
    pub fn corner(&self, e: &[u32]) -> Result<Algebra, AlgebraError> {
        self.require_idempotent(e)?;
        let vs: Vec<FpVector> = (0..self.dim())
            .map(|u| self.mul(&self.mul(e, &self.basis(u)), e))
            .collect();
        let s = Subspace::span(self.field(), self.dim(), &vs)?;
        let basis = s.basis_vectors();
        let labels = basis.iter().map(|v| self.format_element(v)).collect();
        Ok(self.restrict(&basis, e, labels)?.0)
    }

    /// Entry `(u, v)` is `dim e_u A e_v`.
    pub fn cartan_matrix(&self, idempotents: &[FpVector]) -> Result<IntMatrix, AlgebraError> {
        let mut total = self.zero();
        for (u, e) in idempotents.iter().enumerate() {
            self.require_idempotent(e)?;
            for (v, f) in idempotents.iter().enumerate() {
                if u != v && !Algebra::is_zero(&self.mul(e, f)) {
                    return Err(AlgebraError::NotOrthogonal { u, v });
                }
            }
            total = self.add(&total, e);
        }
        if total != self.one() {
            return Err(AlgebraError::NotUnitSum);
        }
        let k = idempotents.len();
        let mut c = IntMatrix::zeros(k, k);
        for (u, e) in idempotents.iter().enumerate() {
            for (v, f) in idempotents.iter().enumerate() {
                let vs: Vec<FpVector> = (0..self.dim())
                    .map(|w| self.mul(&self.mul(e, &self.basis(w)), f))
                    .collect();
                c.set(u, v, Subspace::span(self.field(), self.dim(), &vs)?.dim() as i64);
            }
        }
        Ok(c)
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
        let f = gf3();
        let labels = (0..n).map(|i| format!("u^{i}")).collect();
        Algebra::from_fn(f, labels, f.unit_vec(n, 0), |a, b| {
            let mut v = vec![0; n];
            if a + b < n {
                v[a + b] = 1;
            }
            v
        })
        .unwrap()
    }

    /// Upper triangular 2x2 matrices: e11, e12, e22.
    fn upper_triangular() -> Algebra {
        let f = gf3();
        let idx = [(0, 0), (0, 1), (1, 1)];
        let labels = ["e11", "e12", "e22"].iter().map(|s| s.to_string()).collect();
        Algebra::from_fn(f, labels, vec![1, 0, 1], |u, v| {
            let (i, j) = idx[u];
            let (k, l) = idx[v];
            let mut out = vec![0; 3];
            if j == k {
                out[idx.iter().position(|&x| x == (i, l)).unwrap()] = 1;
            }
            out
        })
        .unwrap()
    }

    #[test]
    fn quotient_by_zero_is_a_copy() {
        let a = truncated_poly(3);
        let q = a.quotient(&Subspace::zero(gf3(), 3)).unwrap();
        assert_eq!(q.algebra().dim(), 3);
        assert_eq!(q.projection().classify(), super::super::MapClass::Isomorphism);
    }

    #[test]
    fn quotient_rejects_non_ideals() {
        let a = truncated_poly(3);
        let s = Subspace::span(gf3(), 3, &[vec![0, 1, 0]]).unwrap();
        assert_eq!(a.quotient(&s).unwrap_err(), AlgebraError::NotAnIdeal);
    }

    #[test]
    fn quotient_by_top_power() {
        let a = truncated_poly(3);
        let s = Subspace::span(gf3(), 3, &[vec![0, 0, 1]]).unwrap();
        let q = a.quotient(&s).unwrap();
        assert_eq!(q.algebra().labels(), &["[u^0]".to_string(), "[u^1]".to_string()]);
        assert!(q.algebra().is_uniserial_local().unwrap());
    }

    #[test]
    fn corner_at_unit_is_whole_algebra() {
        let a = upper_triangular();
        assert_eq!(a.corner(&a.one()).unwrap().dim(), 3);
        assert_eq!(a.corner(&[1, 0, 0]).unwrap().dim(), 1);
        assert_eq!(a.corner(&[2, 0, 0]).unwrap_err(), AlgebraError::NotIdempotent);
    }

    #[test]
    fn cartan_of_upper_triangular() {
        let a = upper_triangular();
        let c = a.cartan_matrix(&[vec![1, 0, 0], vec![0, 0, 1]]).unwrap();
        assert_eq!(c, IntMatrix::from_rows(&[vec![1, 1], vec![0, 1]]).unwrap());
        let whole = a.cartan_matrix(&[a.one()]).unwrap();
        assert_eq!(whole.get(0, 0), 3);
        assert_eq!(a.cartan_matrix(&[vec![1, 0, 0]]).unwrap_err(), AlgebraError::NotUnitSum);
    }

    #[test]
    fn subalgebra_closure_is_checked() {
        let a = truncated_poly(3);
        assert_eq!(
            a.subalgebra(&[a.one(), a.basis(1)], vec!["1".into(), "u".into()]).unwrap_err(),
            AlgebraError::NotSubalgebra
        );
        let s = a.subalgebra(&[a.one(), a.basis(2)], vec!["1".into(), "u2".into()]).unwrap();
        assert_eq!(s.coords(&[2, 0, 1]), Some(vec![2, 1]));
        assert_eq!(s.inclusion().classify(), super::super::MapClass::Injective);
    }
}
