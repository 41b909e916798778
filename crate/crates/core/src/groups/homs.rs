//! Exhaustive searches over generator images. A homomorphism out of
//! `k[x, y]/I` is determined by the images of `x` and `y`, so trying every
//! pair of target elements finds every homomorphism.

use crate::algcore::{Algebra, AlgebraError, AlgebraMap, MapClass};
use crate::exactlin::FpVector;
use crate::quiverlab::PresentedAlgebra;

use super::GroupError;

/// Every unital homomorphism `source -> target`, in enumeration order of
/// the generator images.
pub fn enumerate_homs(source: &PresentedAlgebra, target: &Algebra) -> Result<Vec<AlgebraMap>, GroupError> {
    let g = source.generator_count();
    if g > 2 {
        return Err(GroupError::SourceNotTwoGenerated(g));
    }
    if !target.is_commutative() {
        return Err(AlgebraError::NotCommutative.into());
    }
    let elements: Vec<FpVector> = target.field().all_vectors(target.dim()).collect();
    let total = elements.len().pow(g as u32);
    let mut out = Vec::new();
    for code in 0..total {
        let mut rest = code;
        let images: Vec<FpVector> = (0..g)
            .map(|_| {
                let e = elements[rest % elements.len()].clone();
                rest /= elements.len();
                e
            })
            .collect();
        if let Some(m) = source.hom_from_generator_images(target, &images)? {
            out.push(m);
        }
    }
    Ok(out)
}

pub fn surjections(source: &PresentedAlgebra, target: &Algebra) -> Result<Vec<AlgebraMap>, GroupError> {
    Ok(enumerate_homs(source, target)?
        .into_iter()
        .filter(|m| matches!(m.classify(), MapClass::Surjective | MapClass::Isomorphism))
        .collect())
}

/// First isomorphism `source -> target` found, if any.
pub fn find_isomorphism(source: &PresentedAlgebra, target: &Algebra) -> Result<Option<AlgebraMap>, GroupError> {
    if source.algebra().dim() != target.dim() {
        return Ok(None);
    }
    Ok(enumerate_homs(source, target)?
        .into_iter()
        .find(|m| m.classify() == MapClass::Isomorphism))
}

/// Outcome of [`has_split_surjection`].
#[derive(Clone, Debug)]
pub struct SplitSearch {
    pub surjections: usize,
    pub sections_tried: usize,
    /// A surjection `pi` and a section `sigma` with `pi ∘ sigma = id`.
    pub witness: Option<(AlgebraMap, AlgebraMap)>,
}

impl SplitSearch {
    pub fn splits(&self) -> bool {
        self.witness.is_some()
    }
}

/// Searches for a surjection `source -> target` with a homomorphic section,
/// by testing every surjection against every homomorphism back.
pub fn has_split_surjection(source: &PresentedAlgebra, target: &PresentedAlgebra) -> Result<SplitSearch, GroupError> {
    let pis = surjections(source, target.algebra())?;
    let sigmas = enumerate_homs(target, source.algebra())?;
    let id = AlgebraMap::identity(target.algebra());
    let mut tried = 0;
    for pi in &pis {
        for sigma in &sigmas {
            tried += 1;
            if sigma.then(pi)?.matrix() == id.matrix() {
                return Ok(SplitSearch {
                    surjections: pis.len(),
                    sections_tried: tried,
                    witness: Some((pi.clone(), sigma.clone())),
                });
            }
        }
    }
    Ok(SplitSearch {
        surjections: pis.len(),
        sections_tried: tried,
        witness: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiverlab::{build_comm_presented, parse_comm};

    fn build(text: &str) -> PresentedAlgebra {
        build_comm_presented(&parse_comm(text).unwrap()).unwrap()
    }

    #[test]
    fn truncated_line_to_the_field() {
        let u3 = build("field 3\ngenerators u\nrelation u^3\n");
        let k = build("field 3\ngenerators u\nrelation u\n");
        let homs = enumerate_homs(&u3, k.algebra()).unwrap();
        assert_eq!(homs.len(), 1);
        assert_eq!(homs[0].matrix().row_vecs(), vec![vec![1], vec![0], vec![0]]);
    }

    #[test]
    fn endomorphisms_of_truncated_line() {
        // u -> a u + b u^2, any a, b.
        let u3 = build("field 3\ngenerators u\nrelation u^3\n");
        let homs = enumerate_homs(&u3, u3.algebra()).unwrap();
        assert_eq!(homs.len(), 9);
        assert_eq!(homs.iter().filter(|m| m.classify() == MapClass::Isomorphism).count(), 6);
    }

    #[test]
    fn split_quotient_splits() {
        // k[x, y]/(x^2, y^2) -> k[u]/(u^2) via x -> u, y -> 0 splits by u -> x.
        let src = build("field 3\ngenerators x y\nrelation x^2\nrelation y^2\n");
        let tgt = build("field 3\ngenerators u\nrelation u^2\n");
        let s = has_split_surjection(&src, &tgt).unwrap();
        assert!(s.splits());
        let (pi, sigma) = s.witness.unwrap();
        assert_eq!(sigma.then(&pi).unwrap().classify(), MapClass::Isomorphism);
    }

    #[test]
    fn three_generators_are_refused() {
        let src = build("field 3\ngenerators x y z\nrelation x^2\nrelation y^2\nrelation z^2\n");
        let tgt = build("field 3\ngenerators u\nrelation u^2\n");
        assert_eq!(
            enumerate_homs(&src, tgt.algebra()).unwrap_err(),
            GroupError::SourceNotTwoGenerated(3)
        );
    }
}
