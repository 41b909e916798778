use std::fmt;

use rand::Rng;

use super::{LinError, PrimeField, Subspace};

/// Dense row-major matrix over GF(p).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FpMatrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl FpMatrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        FpMatrix {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Builds a matrix from rows of integers, reducing each entry mod p.
    pub fn from_i64_rows(field: PrimeField, rows: &[Vec<i64>]) -> Result<Self, LinError> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(LinError::DimensionMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
            data.extend(r.iter().map(|&x| field.from_i64(x)));
        }
        Ok(FpMatrix {
            field,
            rows: rows.len(),
            cols,
            data,
        })
    }

    /// Builds a matrix from reduced rows; `cols` is needed when `rows` is empty.
    pub fn from_rows(field: PrimeField, cols: usize, rows: &[Vec<u32>]) -> Result<Self, LinError> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(LinError::DimensionMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
            data.extend(r.iter().map(|&x| x % field.characteristic()));
        }
        Ok(FpMatrix {
            field,
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn random<R: Rng>(field: PrimeField, rows: usize, cols: usize, rng: &mut R) -> Self {
        let p = field.characteristic();
        let data = (0..rows * cols).map(|_| rng.gen_range(0..p)).collect();
        FpMatrix {
            field,
            rows,
            cols,
            data,
        }
    }

    /// Rejection-samples an invertible `n x n` matrix.
    pub fn random_invertible<R: Rng>(field: PrimeField, n: usize, rng: &mut R) -> Self {
        loop {
            let m = Self::random(field, n, n, rng);
            if m.rank() == n {
                return m;
            }
        }
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, value: u32) {
        self.data[r * self.cols + c] = value % self.field.characteristic();
    }

    #[inline]
    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn entries(&self) -> &[u32] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c);
            }
        }
        t
    }

    pub fn mul(&self, other: &FpMatrix) -> Result<FpMatrix, LinError> {
        if self.cols != other.rows {
            return Err(LinError::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let p = self.field.characteristic() as u64;
        let mut out = Self::zeros(self.field, self.rows, other.cols);
        for r in 0..self.rows {
            let mut acc = vec![0u64; other.cols];
            for k in 0..self.cols {
                let a = self.get(r, k) as u64;
                if a == 0 {
                    continue;
                }
                for (c, slot) in acc.iter_mut().enumerate() {
                    *slot += a * other.get(k, c) as u64;
                }
            }
            for (c, v) in acc.into_iter().enumerate() {
                out.data[r * other.cols + c] = (v % p) as u32;
            }
        }
        Ok(out)
    }

    /// Row vector times matrix: `v * self`.
    pub fn apply_row(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.rows, "vector length must match row count");
        let mut out = vec![0u32; self.cols];
        for (r, &c) in v.iter().enumerate() {
            self.field.axpy(&mut out, c, self.row(r));
        }
        out
    }

    /// Matrix times column vector: `self * v`.
    pub fn apply_col(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.cols, "vector length must match column count");
        (0..self.rows).map(|r| self.field.dot(self.row(r), v)).collect()
    }

    pub fn rank(&self) -> usize {
        rref(self).1
    }

    pub fn inverse(&self) -> Result<FpMatrix, LinError> {
        if self.rows != self.cols {
            return Err(LinError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut aug = Self::zeros(self.field, n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.data[r * 2 * n + c] = self.get(r, c);
            }
            aug.data[r * 2 * n + n + r] = 1;
        }
        let (red, _) = rref(&aug);
        for i in 0..n {
            if red.get(i, i) != 1 {
                return Err(LinError::Singular);
            }
        }
        let mut inv = Self::zeros(self.field, n, n);
        for r in 0..n {
            for c in 0..n {
                inv.data[r * n + c] = red.get(r, n + c);
            }
        }
        Ok(inv)
    }

    /// Stacks `self` above `other`.
    pub fn vstack(&self, other: &FpMatrix) -> Result<FpMatrix, LinError> {
        if self.cols != other.cols {
            return Err(LinError::DimensionMismatch {
                expected: self.cols,
                found: other.cols,
            });
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(FpMatrix {
            field: self.field,
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    /// Solves `x * self = v` for a row vector `x`, if a solution exists.
    pub fn solve_left(&self, v: &[u32]) -> Option<Vec<u32>> {
        if v.len() != self.cols {
            return None;
        }
        // Columns of the augmented system are the rows of `self`.
        let mut aug = Self::zeros(self.field, self.cols, self.rows + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.data[c * (self.rows + 1) + r] = self.get(r, c);
            }
        }
        for (c, &x) in v.iter().enumerate() {
            aug.data[c * (self.rows + 1) + self.rows] = x;
        }
        let (red, rank) = rref(&aug);
        let mut x = vec![0u32; self.rows];
        for i in 0..rank {
            let pivot = (0..=self.rows).find(|&c| red.get(i, c) != 0).unwrap();
            if pivot == self.rows {
                return None;
            }
            x[pivot] = red.get(i, self.rows);
        }
        Some(x)
    }
}

impl fmt::Debug for FpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "FpMatrix over GF({}) {}x{}", self.field.characteristic(), self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

/// Canonical reduced row-echelon form (zero rows kept at the bottom) and rank.
pub fn rref(m: &FpMatrix) -> (FpMatrix, usize) {
    let field = m.field;
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pr) = (rank..rows).find(|&r| a.get(r, c) != 0) else {
            continue;
        };
        if pr != rank {
            for k in 0..cols {
                a.data.swap(pr * cols + k, rank * cols + k);
            }
        }
        let inv = field.inv(a.get(rank, c));
        for k in c..cols {
            a.data[rank * cols + k] = field.mul(a.data[rank * cols + k], inv);
        }
        let pivot_row: Vec<u32> = a.row(rank).to_vec();
        for r in 0..rows {
            if r == rank {
                continue;
            }
            let factor = a.get(r, c);
            if factor != 0 {
                let neg = field.neg(factor);
                field.axpy(&mut a.data[r * cols..(r + 1) * cols], neg, &pivot_row);
            }
        }
        rank += 1;
    }
    (a, rank)
}

/// Right kernel `{v : m * v = 0}`.
pub fn kernel(m: &FpMatrix) -> Subspace {
    let field = m.field;
    let (red, rank) = rref(m);
    let cols = m.cols;
    let mut pivots = Vec::with_capacity(rank);
    for r in 0..rank {
        pivots.push((0..cols).find(|&c| red.get(r, c) != 0).unwrap());
    }
    let mut basis = Vec::with_capacity(cols - rank);
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![0u32; cols];
        v[free] = 1;
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = field.neg(red.get(r, free));
        }
        basis.push(v);
    }
    Subspace::span(field, cols, &basis).expect("kernel vectors have ambient length")
}
