use crate::exactlin::{FpMatrix, FpVector, Subspace};

use super::{Algebra, AlgebraError, RadicalStrategy};

/// A linear functional on an algebra, stored by its values on the basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearForm {
    pub coeffs: FpVector,
}

impl LinearForm {
    pub fn new(coeffs: FpVector) -> Self {
        LinearForm { coeffs }
    }

    pub fn eval(&self, a: &Algebra, x: &[u32]) -> u32 {
        a.field().dot(&self.coeffs, x)
    }

    /// `x ↦ s(z x)`
    pub fn twisted(&self, a: &Algebra, z: &[u32]) -> LinearForm {
        LinearForm::new((0..a.dim()).map(|u| self.eval(a, &a.mul(z, &a.basis(u)))).collect())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormCheck {
    pub symmetric: bool,
    pub nondegenerate: bool,
    /// `gram[u][v] = s(b_u b_v)`
    pub gram: FpMatrix,
}

impl Algebra {
    pub fn gram_matrix(&self, s: &LinearForm) -> FpMatrix {
        let n = self.dim();
        let mut g = FpMatrix::zeros(self.field(), n, n);
        for u in 0..n {
            for v in 0..n {
                g.set(u, v, self.field().dot(&s.coeffs, self.basis_product(u, v)));
            }
        }
        g
    }

    pub fn symm_form_check(&self, s: &LinearForm) -> FormCheck {
        let gram = self.gram_matrix(s);
        FormCheck {
            symmetric: gram == gram.transpose(),
            nondegenerate: gram.rank() == self.dim(),
            gram,
        }
    }

    fn require_symmetrising(&self, s: &LinearForm) -> Result<FormCheck, AlgebraError> {
        let check = self.symm_form_check(s);
        if !check.nondegenerate {
            return Err(AlgebraError::DegenerateForm);
        }
        if !check.symmetric {
            return Err(AlgebraError::AsymmetricForm);
        }
        Ok(check)
    }

    /// Dual basis of the algebra's own basis: `s(b_u b_v^∨) = δ_uv`.
    pub fn dual_basis(&self, s: &LinearForm) -> Result<Vec<FpVector>, AlgebraError> {
        let identity = FpMatrix::identity(self.field(), self.dim()).row_vecs();
        self.dual_basis_of(s, &identity)
    }

    /// Dual basis of an arbitrary basis `w_1, ..., w_n` of the algebra.
    pub fn dual_basis_of(&self, s: &LinearForm, basis: &[FpVector]) -> Result<Vec<FpVector>, AlgebraError> {
        let check = self.require_symmetrising(s)?;
        let w = FpMatrix::from_rows(self.field(), self.dim(), basis)?;
        if w.rows() != self.dim() {
            return Err(AlgebraError::Shape {
                dim: self.dim(),
                products: w.rows(),
            });
        }
        // s(w_u b_k) = (W G)_{uk}; the dual coordinates X satisfy (W G) X^T = I.
        let wg = w.mul(&check.gram)?;
        let x = wg.inverse()?.transpose();
        Ok(x.row_vecs())
    }

    /// Relative trace `Tr(u) = Σ_w b_w u b_w^∨`.
    pub fn trace_map(&self, s: &LinearForm, u: &[u32]) -> Result<FpVector, AlgebraError> {
        let dual = self.dual_basis(s)?;
        Ok(self.trace_with_dual(&dual, u))
    }

    fn trace_with_dual(&self, dual: &[FpVector], u: &[u32]) -> FpVector {
        let mut acc = self.zero();
        for (w, d) in dual.iter().enumerate() {
            let t = self.mul(&self.mul(&self.basis(w), u), d);
            acc = self.add(&acc, &t);
        }
        acc
    }

    /// Higman ideal `Z^pr(A)`: the image of the relative trace.
    pub fn higman_ideal(&self, s: &LinearForm) -> Result<Subspace, AlgebraError> {
        let dual = self.dual_basis(s)?;
        let images: Vec<FpVector> = (0..self.dim())
            .map(|u| self.trace_with_dual(&dual, &self.basis(u)))
            .collect();
        Ok(Subspace::span(self.field(), self.dim(), &images)?)
    }

    /// For a commutative split local algebra with one-dimensional socle,
    /// the form that is 1 on the RREF socle generator and 0 on the other
    /// standard basis vectors; re-verified symmetric and nondegenerate.
    pub fn frobenius_form_split_local(&self) -> Result<LinearForm, AlgebraError> {
        let j = self.radical(&RadicalStrategy::SplitLocal)?;
        let soc = self.socle(&j)?;
        if soc.dim() != 1 {
            return Err(AlgebraError::NotFrobenius { socle_dim: soc.dim() });
        }
        let pivot = soc.pivots()[0];
        let s = LinearForm::new(self.field().unit_vec(self.dim(), pivot));
        let check = self.symm_form_check(&s);
        if !(check.symmetric && check.nondegenerate) {
            return Err(AlgebraError::NotFrobenius { socle_dim: 1 });
        }
        Ok(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::PrimeField;

    fn gf3() -> PrimeField {
        PrimeField::new(3).unwrap()
    }

    /// Commutative monomial algebra on monomials `x^a y^b` with the given
    /// exponent list; products outside the list vanish.
    fn monomial_algebra(monos: &[(usize, usize)]) -> Algebra {
        let f = gf3();
        let labels = monos.iter().map(|(a, b)| format!("x^{a}y^{b}")).collect();
        let n = monos.len();
        Algebra::from_fn(f, labels, f.unit_vec(n, 0), |u, v| {
            let (a, b) = (monos[u].0 + monos[v].0, monos[u].1 + monos[v].1);
            let mut out = vec![0; n];
            if let Some(k) = monos.iter().position(|&m| m == (a, b)) {
                out[k] = 1;
            }
            out
        })
        .unwrap()
    }

    #[test]
    fn zero_form_is_degenerate() {
        let a = monomial_algebra(&[(0, 0), (1, 0), (2, 0)]);
        let check = a.symm_form_check(&LinearForm::new(vec![0, 0, 0]));
        assert!(check.symmetric);
        assert!(!check.nondegenerate);
        assert_eq!(a.dual_basis(&LinearForm::new(vec![0, 0, 0])), Err(AlgebraError::DegenerateForm));
    }

    #[test]
    fn identity_gram_gives_basis_as_dual() {
        let f = gf3();
        let a = Algebra::from_fn(f, vec!["e".into(), "f".into()], vec![1, 1], |u, v| {
            let mut out = vec![0, 0];
            if u == v {
                out[u] = 1;
            }
            out
        })
        .unwrap();
        let s = LinearForm::new(vec![1, 1]);
        assert_eq!(a.symm_form_check(&s).gram, FpMatrix::identity(f, 2));
        assert_eq!(a.dual_basis(&s).unwrap(), vec![vec![1, 0], vec![0, 1]]);
        // Separable: the Higman ideal is the whole centre.
        assert_eq!(a.higman_ideal(&s).unwrap(), a.center());
    }

    #[test]
    fn non_gorenstein_algebra_is_not_frobenius() {
        let a = monomial_algebra(&[(0, 0), (1, 0), (0, 1)]);
        assert_eq!(
            a.frobenius_form_split_local(),
            Err(AlgebraError::NotFrobenius { socle_dim: 2 })
        );
    }

    #[test]
    fn truncated_poly_certificate() {
        let a = monomial_algebra(&[(0, 0), (1, 0), (2, 0)]);
        let s = a.frobenius_form_split_local().unwrap();
        assert_eq!(s.coeffs, vec![0, 0, 1]);
        let dual = a.dual_basis(&s).unwrap();
        assert_eq!(dual, vec![vec![0, 0, 1], vec![0, 1, 0], vec![1, 0, 0]]);
    }

    #[test]
    fn trace_images_are_central() {
        let a = monomial_algebra(&[(0, 0), (1, 0), (0, 1), (1, 1)]);
        let s = a.frobenius_form_split_local().unwrap();
        let z = a.center();
        for u in 0..a.dim() {
            assert!(z.contains(&a.trace_map(&s, &a.basis(u)).unwrap()).unwrap());
        }
    }
}
