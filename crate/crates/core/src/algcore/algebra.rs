use crate::exactlin::{FpMatrix, FpVector, PrimeField, Subspace};

use super::AlgebraError;

/// A finite-dimensional associative unital algebra over GF(p), given by
/// structure constants with respect to a labelled basis.
///
/// Construction validates associativity on every basis triple and the two
/// unit laws, so every `Algebra` value is a genuine algebra.
#[derive(Clone, PartialEq, Eq)]
pub struct Algebra {
    field: PrimeField,
    dim: usize,
    /// `table[(u * dim + v) * dim + k]` is the coefficient of `b_k` in `b_u b_v`.
    table: Vec<u32>,
    unit: FpVector,
    labels: Vec<String>,
}

impl Algebra {
    /// `products[u * dim + v]` expands `b_u b_v` in the basis.
    pub fn new(
        field: PrimeField,
        products: Vec<FpVector>,
        unit: FpVector,
        labels: Vec<String>,
    ) -> Result<Self, AlgebraError> {
        let dim = labels.len();
        if products.len() != dim * dim || unit.len() != dim {
            return Err(AlgebraError::Shape {
                dim,
                products: products.len(),
            });
        }
        let mut table = Vec::with_capacity(dim * dim * dim);
        for v in &products {
            if v.len() != dim {
                return Err(AlgebraError::Shape {
                    dim,
                    products: products.len(),
                });
            }
            table.extend(v.iter().map(|&x| x % field.characteristic()));
        }
        let a = Algebra {
            field,
            dim,
            table,
            unit,
            labels,
        };
        a.validate()?;
        Ok(a)
    }

    pub fn from_fn<F>(field: PrimeField, labels: Vec<String>, unit: FpVector, mut product: F) -> Result<Self, AlgebraError>
    where
        F: FnMut(usize, usize) -> FpVector,
    {
        let dim = labels.len();
        let products = (0..dim * dim).map(|i| product(i / dim, i % dim)).collect();
        Self::new(field, products, unit, labels)
    }

    /// Exhaustive check of `(b_u b_v) b_w = b_u (b_v b_w)` and of the unit laws.
    pub fn validate(&self) -> Result<(), AlgebraError> {
        let n = self.dim;
        for u in 0..n {
            let bu = self.basis(u);
            if self.mul(&self.unit, &bu) != bu || self.mul(&bu, &self.unit) != bu {
                return Err(AlgebraError::BadUnit);
            }
        }
        for u in 0..n {
            for v in 0..n {
                let uv = self.basis_product(u, v);
                for w in 0..n {
                    let left = self.mul_basis_right(uv, w);
                    let right = self.mul_basis_left(u, self.basis_product(v, w));
                    if left != right {
                        return Err(AlgebraError::NonAssociative { u, v, w });
                    }
                }
            }
        }
        Ok(())
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, u: usize) -> &str {
        &self.labels[u]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn one(&self) -> FpVector {
        self.unit.clone()
    }

    pub fn zero(&self) -> FpVector {
        vec![0; self.dim]
    }

    pub fn basis(&self, u: usize) -> FpVector {
        self.field.unit_vec(self.dim, u)
    }

    #[inline]
    pub fn basis_product(&self, u: usize, v: usize) -> &[u32] {
        let start = (u * self.dim + v) * self.dim;
        &self.table[start..start + self.dim]
    }

    /// `x * b_w`
    fn mul_basis_right(&self, x: &[u32], w: usize) -> FpVector {
        let mut out = vec![0u32; self.dim];
        for (k, &c) in x.iter().enumerate() {
            self.field.axpy(&mut out, c, self.basis_product(k, w));
        }
        out
    }

    /// `b_u * x`
    fn mul_basis_left(&self, u: usize, x: &[u32]) -> FpVector {
        let mut out = vec![0u32; self.dim];
        for (k, &c) in x.iter().enumerate() {
            self.field.axpy(&mut out, c, self.basis_product(u, k));
        }
        out
    }

    pub fn mul(&self, x: &[u32], y: &[u32]) -> FpVector {
        let n = self.dim;
        let p = self.field.characteristic() as u64;
        let mut acc = vec![0u64; n];
        for (u, &xu) in x.iter().enumerate() {
            if xu == 0 {
                continue;
            }
            for (v, &yv) in y.iter().enumerate() {
                if yv == 0 {
                    continue;
                }
                let c = (xu * yv % self.field.characteristic()) as u64;
                for (slot, &t) in acc.iter_mut().zip(self.basis_product(u, v)) {
                    *slot += c * t as u64;
                }
            }
        }
        acc.into_iter().map(|s| (s % p) as u32).collect()
    }

    pub fn add(&self, x: &[u32], y: &[u32]) -> FpVector {
        self.field.add_vec(x, y)
    }

    pub fn sub(&self, x: &[u32], y: &[u32]) -> FpVector {
        self.field.sub_vec(x, y)
    }

    pub fn scale(&self, c: u32, x: &[u32]) -> FpVector {
        self.field.scale_vec(c, x)
    }

    pub fn scalar(&self, c: u32) -> FpVector {
        self.field.scale_vec(c, &self.unit)
    }

    pub fn pow(&self, x: &[u32], e: usize) -> FpVector {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, x);
        }
        acc
    }

    pub fn commutator(&self, x: &[u32], y: &[u32]) -> FpVector {
        self.sub(&self.mul(x, y), &self.mul(y, x))
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|u| (u + 1..self.dim).all(|v| self.basis_product(u, v) == self.basis_product(v, u)))
    }

    pub fn is_zero(x: &[u32]) -> bool {
        x.iter().all(|&c| c == 0)
    }

    pub fn is_nilpotent(&self, x: &[u32]) -> bool {
        Self::is_zero(&self.pow(x, self.dim.max(1)))
    }

    /// Matrix of `y ↦ x y` acting on row vectors: row `u` is `x b_u`.
    pub fn left_mul_matrix(&self, x: &[u32]) -> FpMatrix {
        let rows: Vec<FpVector> = (0..self.dim).map(|u| self.mul(x, &self.basis(u))).collect();
        FpMatrix::from_rows(self.field, self.dim, &rows).unwrap()
    }

    pub fn is_two_sided_ideal(&self, s: &Subspace) -> Result<bool, AlgebraError> {
        for v in s.basis_vectors() {
            for u in 0..self.dim {
                let bu = self.basis(u);
                if !s.contains(&self.mul(&bu, &v))? || !s.contains(&self.mul(&v, &bu))? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Same algebra expressed in a new basis; row `u` of `change` holds the
    /// old coordinates of the new basis vector `u`.
    pub fn change_basis(&self, change: &FpMatrix) -> Result<Algebra, AlgebraError> {
        let inv = change.inverse()?;
        let rows = change.row_vecs();
        let labels = (0..self.dim).map(|u| format!("e{u}")).collect();
        let unit = inv.apply_row(&self.unit);
        Algebra::from_fn(self.field, labels, unit, |u, v| inv.apply_row(&self.mul(&rows[u], &rows[v])))
    }

    /// Renders an element as a signed combination of basis labels.
    pub fn format_element(&self, x: &[u32]) -> String {
        let mut out = String::new();
        for (u, &c) in x.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let s = self.field.signed(c);
            let mag = s.unsigned_abs();
            if out.is_empty() {
                if s < 0 {
                    out.push('-');
                }
            } else {
                out.push_str(if s < 0 { " - " } else { " + " });
            }
            if mag != 1 {
                out.push_str(&format!("{mag}*"));
            }
            out.push_str(&self.labels[u]);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    /// Replaces the basis labels.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, AlgebraError> {
        if labels.len() != self.dim {
            return Err(AlgebraError::Shape {
                dim: self.dim,
                products: labels.len(),
            });
        }
        self.labels = labels;
        Ok(self)
    }

    /// Constructor for tests that need to bypass validation.
    #[doc(hidden)]
    pub fn from_raw_unchecked(field: PrimeField, table: Vec<u32>, unit: FpVector, labels: Vec<String>) -> Self {
        Algebra {
            field,
            dim: labels.len(),
            table,
            unit,
            labels,
        }
    }

    #[doc(hidden)]
    pub fn raw_table(&self) -> &[u32] {
        &self.table
    }
}

impl std::fmt::Debug for Algebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Algebra(dim {} over GF({}), basis {:?})",
            self.dim,
            self.field.characteristic(),
            self.labels
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf3() -> PrimeField {
        PrimeField::new(3).unwrap()
    }

    /// k[u]/(u^n) on the monomial basis.
    pub(crate) fn truncated_poly(n: usize) -> Algebra {
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

    #[test]
    fn truncated_polynomial_ring_is_valid() {
        let a = truncated_poly(3);
        assert!(a.is_commutative());
        let u = a.basis(1);
        assert_eq!(a.pow(&u, 2), a.basis(2));
        assert!(a.is_nilpotent(&u));
        assert!(!a.is_nilpotent(&a.one()));
    }

    #[test]
    fn perturbed_table_is_not_associative() {
        let a = truncated_poly(3);
        let mut table = a.raw_table().to_vec();
        // u * u^2 = 0 becomes u * u^2 = u
        table[(3 + 2) * 3 + 1] = 1;
        let bad = Algebra::from_raw_unchecked(a.field(), table, a.one(), a.labels().to_vec());
        assert!(matches!(bad.validate(), Err(AlgebraError::NonAssociative { .. })));
    }

    #[test]
    fn bad_unit_is_rejected() {
        let f = gf3();
        let labels = vec!["a".to_string(), "b".to_string()];
        let r = Algebra::from_fn(f, labels, vec![1, 0], |u, v| {
            let mut out = vec![0, 0];
            if u == v {
                out[u] = 1;
            }
            out
        });
        assert_eq!(r.unwrap_err(), AlgebraError::BadUnit);
    }

    #[test]
    fn format_signed_terms() {
        let a = truncated_poly(3);
        assert_eq!(a.format_element(&[0, 2, 1]), "-u^1 + u^2");
        assert_eq!(a.format_element(&[0, 0, 0]), "0");
    }

    #[test]
    fn change_basis_preserves_products() {
        let a = truncated_poly(3);
        let f = a.field();
        let p = FpMatrix::from_i64_rows(f, &[vec![1, 1, 0], vec![0, 1, 2], vec![0, 0, 1]]).unwrap();
        let b = a.change_basis(&p).unwrap();
        let x = [1, 2, 0];
        let y = [0, 1, 1];
        let to_old = |v: &[u32]| p.apply_row(v);
        assert_eq!(to_old(&b.mul(&x, &y)), a.mul(&to_old(&x), &to_old(&y)));
    }
}
