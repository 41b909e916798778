use std::cmp::Reverse;
use std::collections::HashMap;

use crate::algcore::Algebra;
use crate::exactlin::{FpVector, PrimeField, Subspace};

use super::dsl::{signed_words, split_coefficient, Path, QuiverSpec};
use super::truncated::{MonomialSpace, Truncation};
use super::QuiverError;

/// `kQ/I` together with the path data needed to evaluate elements.
#[derive(Clone, Debug)]
pub struct PathAlgebra {
    spec: QuiverSpec,
    paths: Vec<Path>,
    index: HashMap<Path, usize>,
    zero_paths: Vec<Vec<usize>>,
    quotient: Truncation,
}

struct Level {
    paths: Vec<Path>,
    index: HashMap<Path, usize>,
    quotient: Truncation,
}

fn has_zero_subpath(p: &Path, zeros: &[Vec<usize>]) -> bool {
    zeros.iter().any(|z| p.contains_subpath(z))
}

/// Paths of length at most `maxlen` avoiding the zero paths, in elimination
/// order: longest first, then lexicographic in arrow indices.
fn enumerate_paths(spec: &QuiverSpec, maxlen: usize, zeros: &[Vec<usize>]) -> Vec<Path> {
    let mut all: Vec<Path> = (0..spec.vertices.len()).map(Path::trivial).collect();
    let mut frontier = all.clone();
    for _ in 0..maxlen {
        let mut next = Vec::new();
        for p in &frontier {
            for (a, arrow) in spec.arrows.iter().enumerate() {
                if arrow.source != p.target {
                    continue;
                }
                let mut arrows = p.arrows.clone();
                arrows.push(a);
                let q = Path {
                    source: p.source,
                    target: arrow.target,
                    arrows,
                };
                if !zeros.iter().any(|z| q.arrows.ends_with(z)) {
                    next.push(q);
                }
            }
        }
        all.extend(next.iter().cloned());
        frontier = next;
    }
    all.sort_by(|x, y| (Reverse(x.len()), &x.arrows, x.source).cmp(&(Reverse(y.len()), &y.arrows, y.source)));
    all
}

fn build_level(spec: &QuiverSpec, field: PrimeField, maxlen: usize) -> Result<Level, QuiverError> {
    let zeros = spec.zero_paths();
    let paths = enumerate_paths(spec, maxlen, &zeros);
    let index: HashMap<Path, usize> = paths.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let lookup = |p: &Path| -> Option<usize> {
        if p.len() > maxlen || has_zero_subpath(p, &zeros) {
            None
        } else {
            index.get(p).copied()
        }
    };

    let mut generators = Vec::new();
    for rel in &spec.relations {
        if rel.terms.len() == 1 {
            // Zero paths are already excluded from the monomial space.
            continue;
        }
        let shortest = rel.terms.iter().map(|t| t.1.len()).min().unwrap_or(0);
        for left in &paths {
            if left.len() + shortest > maxlen {
                continue;
            }
            for right in &paths {
                if left.len() + shortest + right.len() > maxlen {
                    continue;
                }
                let mut g = Vec::new();
                for (c, w) in &rel.terms {
                    let full = left.concat(w).and_then(|lw| lw.concat(right));
                    if let Some(m) = full.as_ref().and_then(lookup) {
                        g.push((field.from_i64(*c), m));
                    }
                }
                if !g.is_empty() {
                    generators.push(g);
                }
            }
        }
    }

    let space = MonomialSpace {
        field,
        count: paths.len(),
        label: &|m| spec.path_label(&paths[m]),
        product: &|u, v| paths[u].concat(&paths[v]).as_ref().and_then(lookup),
        unit: (0..spec.vertices.len()).map(|v| index[&Path::trivial(v)]).collect(),
        basis_key: &|m| (paths[m].len(), paths[m].arrows.clone(), paths[m].source),
    };
    let quotient = space.quotient(&generators)?;
    Ok(Level { paths, index, quotient })
}

/// Builds `kQ/I`, checking that the truncation at `spec.maxlen` is stable.
pub fn build_path_algebra(spec: &QuiverSpec) -> Result<PathAlgebra, QuiverError> {
    let field = PrimeField::new(spec.field)?;
    let level = build_level(spec, field, spec.maxlen)?;
    let next = build_level(spec, field, spec.maxlen + 1)?;
    let unstable = next.quotient.algebra.dim() != level.quotient.algebra.dim()
        || next
            .paths
            .iter()
            .enumerate()
            .any(|(m, p)| p.len() == spec.maxlen + 1 && !next.quotient.monomial_in_ideal(m));
    if unstable {
        return Err(QuiverError::TruncationUnstable { bound: spec.maxlen });
    }
    Ok(PathAlgebra {
        spec: spec.clone(),
        paths: level.paths,
        index: level.index,
        zero_paths: spec.zero_paths(),
        quotient: level.quotient,
    })
}

impl PathAlgebra {
    pub fn algebra(&self) -> &Algebra {
        &self.quotient.algebra
    }

    pub fn spec(&self) -> &QuiverSpec {
        &self.spec
    }

    pub fn field(&self) -> PrimeField {
        self.algebra().field()
    }

    /// Paths giving the basis, in basis order.
    pub fn basis_paths(&self) -> Vec<Path> {
        self.quotient.keep.iter().map(|&m| self.paths[m].clone()).collect()
    }

    /// Image of a path in `kQ/I`. Paths beyond the length bound are zero,
    /// which stability guarantees.
    pub fn path_element(&self, p: &Path) -> FpVector {
        let n = self.paths.len();
        if p.len() > self.spec.maxlen || has_zero_subpath(p, &self.zero_paths) {
            return vec![0; self.algebra().dim()];
        }
        match self.index.get(p) {
            Some(&m) => self.quotient.read(&self.field().unit_vec(n, m)),
            None => vec![0; self.algebra().dim()],
        }
    }

    /// Evaluates a linear combination such as `1 + 2*gamma - alpha.beta`;
    /// a bare coefficient stands for a multiple of the unit.
    pub fn eval(&self, text: &str) -> Result<FpVector, QuiverError> {
        let a = self.algebra();
        let f = self.field();
        let mut out = a.zero();
        for (sign, word) in signed_words(text, 0)? {
            let (c, path_text) = split_coefficient(&word, 0)?;
            let c = f.from_i64(sign * c);
            let v = if path_text.is_empty() {
                a.one()
            } else {
                self.path_element(&self.spec.parse_path(&path_text, 0)?)
            };
            f.axpy(&mut out, c, &v);
        }
        Ok(out)
    }

    pub fn vertex_idempotents(&self) -> Vec<FpVector> {
        (0..self.spec.vertices.len())
            .map(|v| self.path_element(&Path::trivial(v)))
            .collect()
    }

    /// The ideal generated by the arrows.
    pub fn arrow_ideal(&self) -> Subspace {
        let vs: Vec<FpVector> = self
            .paths
            .iter()
            .filter(|p| !p.is_trivial())
            .map(|p| self.path_element(p))
            .collect();
        Subspace::span(self.field(), self.algebra().dim(), &vs).expect("vectors have algebra dimension")
    }

    /// Each relation evaluated in `kQ/I`; all zero by construction.
    pub fn relation_values(&self) -> Vec<FpVector> {
        let f = self.field();
        self.spec
            .relations
            .iter()
            .map(|r| {
                let mut out = self.algebra().zero();
                for (c, p) in &r.terms {
                    f.axpy(&mut out, f.from_i64(*c), &self.path_element(p));
                }
                out
            })
            .collect()
    }
}
