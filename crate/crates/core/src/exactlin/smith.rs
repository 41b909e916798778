use std::fmt;

use super::LinError;

/// Dense integer matrix. Holds Cartan and decomposition matrices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self, LinError> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(LinError::DimensionMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
            data.extend_from_slice(r);
        }
        Ok(IntMatrix {
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: i64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows)
            .map(|r| self.data[r * self.cols..(r + 1) * self.cols].to_vec())
            .collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix, LinError> {
        if self.cols != other.rows {
            return Err(LinError::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let s = (0..self.cols).map(|k| self.get(r, k) * other.get(k, c)).sum();
                out.set(r, c, s);
            }
        }
        Ok(out)
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.to_rows())
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .to_rows()
            .iter()
            .map(|r| format!("[{}]", r.iter().map(i64::to_string).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

/// Elementary divisors `d1 | d2 | ...` of an integer matrix, all non-negative.
///
/// The list has `min(rows, cols)` entries; trailing zeros record rank
/// deficiency.
pub fn smith_normal_form(m: &IntMatrix) -> Vec<i64> {
    let (rows, cols) = (m.rows, m.cols);
    let mut a: Vec<Vec<i128>> = m
        .to_rows()
        .into_iter()
        .map(|r| r.into_iter().map(i128::from).collect())
        .collect();
    let n = rows.min(cols);

    for t in 0..n {
        // Move the smallest nonzero entry of the trailing block to (t, t).
        loop {
            let mut best: Option<(usize, usize)> = None;
            for (i, row) in a.iter().enumerate().skip(t) {
                for (j, &x) in row.iter().enumerate().skip(t) {
                    if x != 0 && best.is_none_or(|(bi, bj)| x.abs() < a[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                // Trailing block is zero.
                return finish(&a, n);
            };
            a.swap(t, pi);
            for row in a.iter_mut() {
                row.swap(t, pj);
            }

            let pivot = a[t][t];
            let mut clean = true;
            for i in t + 1..rows {
                let q = a[i][t].div_euclid(pivot);
                if q != 0 {
                    for j in t..cols {
                        a[i][j] -= q * a[t][j];
                    }
                }
                clean &= a[i][t] == 0;
            }
            for j in t + 1..cols {
                let q = a[t][j].div_euclid(pivot);
                if q != 0 {
                    for row in a.iter_mut().skip(t) {
                        row[j] -= q * row[t];
                    }
                }
                clean &= a[t][j] == 0;
            }
            if !clean {
                continue;
            }
            // Enforce divisibility against the rest of the block.
            let bad = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| a[i][j] % pivot != 0);
            match bad {
                Some((i, _)) => {
                    for j in t..cols {
                        let x = a[i][j];
                        a[t][j] += x;
                    }
                }
                None => break,
            }
        }
    }
    finish(&a, n)
}

fn finish(a: &[Vec<i128>], n: usize) -> Vec<i64> {
    (0..n).map(|i| a[i][i].abs() as i64).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cartan_divisors() {
        let c = IntMatrix::from_rows(&[vec![5, 1], vec![1, 2]]).unwrap();
        assert_eq!(smith_normal_form(&c), vec![1, 9]);
    }

    #[test]
    fn identity_gives_ones() {
        assert_eq!(smith_normal_form(&IntMatrix::identity(4)), vec![1; 4]);
    }

    #[test]
    fn diagonal_with_divisibility_is_fixed() {
        let m = IntMatrix::from_rows(&[vec![2, 0], vec![0, 4]]).unwrap();
        assert_eq!(smith_normal_form(&m), vec![2, 4]);
    }

    #[test]
    fn non_divisible_diagonal_is_repaired() {
        let m = IntMatrix::from_rows(&[vec![2, 0], vec![0, 3]]).unwrap();
        assert_eq!(smith_normal_form(&m), vec![1, 6]);
    }

    #[test]
    fn rectangular_and_singular() {
        let m = IntMatrix::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]).unwrap();
        assert_eq!(smith_normal_form(&m), vec![2, 6, 12]);
        let z = IntMatrix::from_rows(&[vec![1, 2], vec![2, 4], vec![3, 6]]).unwrap();
        assert_eq!(smith_normal_form(&z), vec![1, 0]);
    }
}
