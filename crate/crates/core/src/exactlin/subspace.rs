use super::matrix::{kernel, rref};
use super::{FpMatrix, LinError, PrimeField};

/// A subspace of GF(p)^n stored by its canonical reduced row-echelon basis.
///
/// Two spanning sets of the same subspace always produce equal values, so
/// `==` is subspace equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: FpMatrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: PrimeField, ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: FpMatrix::zeros(field, 0, ambient_dim),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: PrimeField, ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: FpMatrix::identity(field, ambient_dim),
            pivots: (0..ambient_dim).collect(),
        }
    }

    pub fn span(field: PrimeField, ambient_dim: usize, vectors: &[Vec<u32>]) -> Result<Self, LinError> {
        let m = FpMatrix::from_rows(field, ambient_dim, vectors)?;
        Ok(Self::row_space(&m))
    }

    pub fn row_space(m: &FpMatrix) -> Self {
        let (red, rank) = rref(m);
        let rows: Vec<Vec<u32>> = (0..rank).map(|r| red.row(r).to_vec()).collect();
        let pivots = rows
            .iter()
            .map(|r| r.iter().position(|&x| x != 0).unwrap())
            .collect();
        Subspace {
            ambient_dim: m.cols(),
            basis: FpMatrix::from_rows(m.field(), m.cols(), &rows).unwrap(),
            pivots,
        }
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.basis.field()
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    #[inline]
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// The RREF basis, one row per basis vector.
    pub fn basis(&self) -> &FpMatrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<u32>> {
        self.basis.row_vecs()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates not used as pivots; the standard basis vectors at these
    /// positions span a complement.
    pub fn non_pivots(&self) -> Vec<usize> {
        (0..self.ambient_dim).filter(|c| !self.pivots.contains(c)).collect()
    }

    fn check_len(&self, n: usize) -> Result<(), LinError> {
        if n != self.ambient_dim {
            return Err(LinError::DimensionMismatch {
                expected: self.ambient_dim,
                found: n,
            });
        }
        Ok(())
    }

    /// Normal form of `v` modulo this subspace: the representative that
    /// vanishes on every pivot coordinate.
    pub fn reduce(&self, v: &[u32]) -> Result<Vec<u32>, LinError> {
        self.check_len(v.len())?;
        let f = self.field();
        let mut out = v.to_vec();
        for (r, &pc) in self.pivots.iter().enumerate() {
            let c = out[pc];
            if c != 0 {
                f.axpy(&mut out, f.neg(c), self.basis.row(r));
            }
        }
        Ok(out)
    }

    pub fn contains(&self, v: &[u32]) -> Result<bool, LinError> {
        Ok(self.reduce(v)?.iter().all(|&x| x == 0))
    }

    /// Coordinates of `v` in the RREF basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[u32]) -> Result<Option<Vec<u32>>, LinError> {
        if !self.contains(v)? {
            return Ok(None);
        }
        Ok(Some(self.pivots.iter().map(|&pc| v[pc]).collect()))
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool, LinError> {
        other.check_len(self.ambient_dim)?;
        for r in 0..self.dim() {
            if !other.contains(self.basis.row(r))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinError> {
        self.check_len(other.ambient_dim)?;
        Ok(Self::row_space(&self.basis.vstack(&other.basis)?))
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, LinError> {
        self.check_len(other.ambient_dim)?;
        let f = self.field();
        let du = self.dim();
        // Solve a*U + b*V = 0; the a*U part of each solution lies in U ∩ V.
        let stacked = self.basis.vstack(&other.basis)?.transpose();
        let sols = kernel(&stacked);
        let vectors: Vec<Vec<u32>> = sols
            .basis_vectors()
            .iter()
            .map(|s| {
                let mut v = vec![0u32; self.ambient_dim];
                for (r, &c) in s[..du].iter().enumerate() {
                    f.axpy(&mut v, c, self.basis.row(r));
                }
                v
            })
            .collect();
        Subspace::span(f, self.ambient_dim, &vectors)
    }

    /// `dim(self / sub)`; fails unless `sub ⊆ self`.
    pub fn quotient_dim(&self, sub: &Subspace) -> Result<usize, LinError> {
        if !sub.is_subspace_of(self)? {
            return Err(LinError::NotContained);
        }
        Ok(self.dim() - sub.dim())
    }
}

impl std::fmt::Debug for Subspace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subspace(dim {} in {}): {:?}", self.dim(), self.ambient_dim, self.basis_vectors())
    }
}

/// Incrementally maintained RREF basis, for spanning sets too large to stack.
pub struct EchelonBuilder {
    field: PrimeField,
    ambient_dim: usize,
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl EchelonBuilder {
    pub fn new(field: PrimeField, ambient_dim: usize) -> Self {
        EchelonBuilder {
            field,
            ambient_dim,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    fn reduce_in_place(&self, v: &mut [u32]) {
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let c = v[pc];
            if c != 0 {
                self.field.axpy(v, self.field.neg(c), row);
            }
        }
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, mut v: Vec<u32>) -> bool {
        assert_eq!(v.len(), self.ambient_dim);
        self.reduce_in_place(&mut v);
        let Some(pc) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = self.field.inv(v[pc]);
        for x in v.iter_mut() {
            *x = self.field.mul(*x, inv);
        }
        for row in self.rows.iter_mut() {
            let c = row[pc];
            if c != 0 {
                self.field.axpy(row, self.field.neg(c), &v);
            }
        }
        self.rows.push(v);
        self.pivots.push(pc);
        true
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        let mut w = v.to_vec();
        self.reduce_in_place(&mut w);
        w.iter().all(|&x| x == 0)
    }

    pub fn finish(self) -> Subspace {
        Subspace::span(self.field, self.ambient_dim, &self.rows).expect("rows have ambient length")
    }
}
