use crate::algcore::Algebra;
use crate::exactlin::{EchelonBuilder, FpVector, PrimeField, Subspace};

use super::QuiverError;

/// Quotient of a finite monomial space by an ideal, with the surviving
/// monomials as basis.
#[derive(Clone, Debug)]
pub(crate) struct Truncation {
    pub algebra: Algebra,
    /// The ideal inside the monomial space.
    pub ideal: Subspace,
    /// Monomial index of each basis element.
    pub keep: Vec<usize>,
}

fn read(ideal: &Subspace, keep: &[usize], v: &[u32]) -> FpVector {
    let r = ideal.reduce(v).expect("monomial-space vector");
    keep.iter().map(|&k| r[k]).collect()
}

impl Truncation {
    /// Image of a vector of monomial coefficients.
    pub fn read(&self, v: &[u32]) -> FpVector {
        read(&self.ideal, &self.keep, v)
    }

    pub fn monomial_in_ideal(&self, m: usize) -> bool {
        let e = self.ideal.field().unit_vec(self.ideal.ambient_dim(), m);
        self.ideal.contains(&e).expect("monomial-space vector")
    }
}

pub(crate) struct MonomialSpace<'a, K: Ord> {
    pub field: PrimeField,
    /// Monomials in elimination order: earlier ones become pivots.
    pub count: usize,
    pub label: &'a dyn Fn(usize) -> String,
    /// Product of two monomials, `None` when zero or truncated.
    pub product: &'a dyn Fn(usize, usize) -> Option<usize>,
    pub unit: Vec<usize>,
    /// Order of the basis in the result.
    pub basis_key: &'a dyn Fn(usize) -> K,
}

impl<K: Ord> MonomialSpace<'_, K> {
    pub fn quotient(&self, generators: &[Vec<(u32, usize)>]) -> Result<Truncation, QuiverError> {
        let f = self.field;
        let mut builder = EchelonBuilder::new(f, self.count);
        for g in generators {
            let mut v = vec![0; self.count];
            for &(c, m) in g {
                v[m] = f.add(v[m], c);
            }
            builder.insert(v);
        }
        let ideal = builder.finish();
        let mut keep = ideal.non_pivots();
        keep.sort_by_key(|&m| (self.basis_key)(m));

        let n = keep.len();
        let mut products = Vec::with_capacity(n * n);
        for &u in &keep {
            for &v in &keep {
                products.push(match (self.product)(u, v) {
                    Some(m) => read(&ideal, &keep, &f.unit_vec(self.count, m)),
                    None => vec![0; n],
                });
            }
        }
        let mut unit = vec![0; self.count];
        for &m in &self.unit {
            unit[m] = 1;
        }
        let labels = keep.iter().map(|&m| (self.label)(m)).collect();
        let algebra = Algebra::new(f, products, read(&ideal, &keep, &unit), labels)?;
        Ok(Truncation { algebra, ideal, keep })
    }
}
