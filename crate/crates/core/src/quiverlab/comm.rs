use std::cmp::Reverse;
use std::collections::HashMap;

use crate::algcore::{Algebra, AlgebraError, AlgebraMap};
use crate::exactlin::{FpVector, PrimeField};

use super::dsl::{Exponents, PresentedCommSpec};
use super::truncated::{MonomialSpace, Truncation};
use super::QuiverError;

/// `k[x_1..x_n]/I` together with its monomial data.
#[derive(Clone, Debug)]
pub struct PresentedAlgebra {
    spec: PresentedCommSpec,
    monomials: Vec<Exponents>,
    index: HashMap<Exponents, usize>,
    quotient: Truncation,
}

struct Level {
    monomials: Vec<Exponents>,
    index: HashMap<Exponents, usize>,
    quotient: Truncation,
}

fn degree(e: &[u32]) -> u32 {
    e.iter().sum()
}

/// Presentation order: by degree, then `x` before `y`.
fn basis_key(e: &[u32]) -> (u32, Reverse<Exponents>) {
    (degree(e), Reverse(e.to_vec()))
}

fn build_level(spec: &PresentedCommSpec, field: PrimeField, bound: u32) -> Level {
    let g = spec.generators.len();
    let mut monomials: Vec<Exponents> = vec![Vec::new()];
    for _ in 0..g {
        monomials = monomials
            .into_iter()
            .flat_map(|m| {
                (0..=bound).map(move |k| {
                    let mut e = m.clone();
                    e.push(k);
                    e
                })
            })
            .collect();
    }
    monomials.sort_by_key(|e| Reverse(basis_key(e)));
    let index: HashMap<Exponents, usize> = monomials.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
    let times = |a: &[u32], b: &[u32]| -> Option<usize> {
        let e: Exponents = a.iter().zip(b).map(|(x, y)| x + y).collect();
        index.get(&e).copied()
    };

    let mut generators = Vec::new();
    for rel in &spec.relations {
        for m in &monomials {
            let gen: Vec<(u32, usize)> = rel
                .iter()
                .filter_map(|(c, e)| times(m, e).map(|k| (field.from_i64(*c), k)))
                .collect();
            if !gen.is_empty() {
                generators.push(gen);
            }
        }
    }

    let space = MonomialSpace {
        field,
        count: monomials.len(),
        label: &|k| spec.monomial_label(&monomials[k]),
        product: &|u, v| times(&monomials[u], &monomials[v]),
        unit: vec![index[&vec![0; g]]],
        basis_key: &|k| basis_key(&monomials[k]),
    };
    let quotient = space.quotient(&generators).expect("commutative truncations are associative");
    Level {
        monomials,
        index,
        quotient,
    }
}

/// Builds `k[x_1..x_n]/I`, checking that the exponent bound is stable.
pub fn build_comm_presented(spec: &PresentedCommSpec) -> Result<PresentedAlgebra, QuiverError> {
    let field = PrimeField::new(spec.field)?;
    if spec.generators.len() > super::MAX_GENERATORS {
        return Err(QuiverError::TooManyGenerators(spec.generators.len()));
    }
    let level = build_level(spec, field, spec.bound);
    let next = build_level(spec, field, spec.bound + 1);
    let unstable = next.quotient.algebra.dim() != level.quotient.algebra.dim()
        || next
            .monomials
            .iter()
            .enumerate()
            .any(|(k, e)| e.contains(&(spec.bound + 1)) && !next.quotient.monomial_in_ideal(k));
    if unstable {
        return Err(QuiverError::TruncationUnstable {
            bound: spec.bound as usize,
        });
    }
    Ok(PresentedAlgebra {
        spec: spec.clone(),
        monomials: level.monomials,
        index: level.index,
        quotient: level.quotient,
    })
}

impl PresentedAlgebra {
    pub fn algebra(&self) -> &Algebra {
        &self.quotient.algebra
    }

    pub fn spec(&self) -> &PresentedCommSpec {
        &self.spec
    }

    pub fn field(&self) -> PrimeField {
        self.algebra().field()
    }

    pub fn generator_count(&self) -> usize {
        self.spec.generators.len()
    }

    /// Exponent vectors of the basis monomials, in basis order.
    pub fn basis_exponents(&self) -> Vec<Exponents> {
        self.quotient.keep.iter().map(|&k| self.monomials[k].clone()).collect()
    }

    /// Image of a monomial; exponents beyond the bound give zero.
    pub fn monomial(&self, e: &[u32]) -> FpVector {
        match self.index.get(e) {
            Some(&k) => self.quotient.read(&self.field().unit_vec(self.monomials.len(), k)),
            None => self.algebra().zero(),
        }
    }

    pub fn generator(&self, i: usize) -> FpVector {
        let mut e = vec![0; self.generator_count()];
        e[i] = 1;
        self.monomial(&e)
    }

    pub fn eval_poly(&self, terms: &[(i64, Exponents)]) -> FpVector {
        let f = self.field();
        let mut out = self.algebra().zero();
        for (c, e) in terms {
            f.axpy(&mut out, f.from_i64(*c), &self.monomial(e));
        }
        out
    }

    /// The homomorphism sending generator `i` to `images[i]`, if those images
    /// commute and satisfy every relation.
    pub fn hom_from_generator_images(
        &self,
        target: &Algebra,
        images: &[FpVector],
    ) -> Result<Option<AlgebraMap>, AlgebraError> {
        let f = self.field();
        for (i, x) in images.iter().enumerate() {
            for y in &images[i + 1..] {
                if !Algebra::is_zero(&target.commutator(x, y)) {
                    return Ok(None);
                }
            }
        }
        let eval = |e: &[u32]| -> FpVector {
            e.iter()
                .zip(images)
                .fold(target.one(), |acc, (&k, z)| target.mul(&acc, &target.pow(z, k as usize)))
        };
        for rel in &self.spec.relations {
            let mut v = target.zero();
            for (c, e) in rel {
                f.axpy(&mut v, f.from_i64(*c), &eval(e));
            }
            if !Algebra::is_zero(&v) {
                return Ok(None);
            }
        }
        let rows: Vec<FpVector> = self.basis_exponents().iter().map(|e| eval(e)).collect();
        AlgebraMap::from_images(self.algebra().clone(), target.clone(), &rows).map(Some)
    }
}
