use crate::exactlin::{FpMatrix, FpVector};

use super::{Algebra, AlgebraError};

/// A linear map between algebras. Row `u` of `matrix` holds the target
/// coordinates of the image of source basis element `u`, so elements map
/// as row vectors: `x ↦ x * matrix`.
#[derive(Clone, Debug)]
pub struct AlgebraMap {
    source: Algebra,
    target: Algebra,
    matrix: FpMatrix,
}

/// Outcome of [`AlgebraMap::classify`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MapClass {
    Isomorphism,
    Surjective,
    Injective,
    Homomorphism,
    NotUnital,
    NotMultiplicative { u: usize, v: usize },
}

impl MapClass {
    pub fn is_hom(&self) -> bool {
        matches!(
            self,
            MapClass::Isomorphism | MapClass::Surjective | MapClass::Injective | MapClass::Homomorphism
        )
    }
}

impl std::fmt::Display for MapClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            MapClass::Isomorphism => write!(f, "isomorphism"),
            MapClass::Surjective => write!(f, "surjective homomorphism"),
            MapClass::Injective => write!(f, "injective homomorphism"),
            MapClass::Homomorphism => write!(f, "homomorphism"),
            MapClass::NotUnital => write!(f, "not unital"),
            MapClass::NotMultiplicative { u, v } => write!(f, "not multiplicative on basis pair ({u}, {v})"),
        }
    }
}

impl AlgebraMap {
    pub fn new(source: Algebra, target: Algebra, matrix: FpMatrix) -> Result<Self, AlgebraError> {
        if matrix.rows() != source.dim() || matrix.cols() != target.dim() {
            return Err(AlgebraError::Shape {
                dim: source.dim(),
                products: matrix.rows(),
            });
        }
        Ok(AlgebraMap { source, target, matrix })
    }

    /// Map given by the images of the source basis elements.
    pub fn from_images(source: Algebra, target: Algebra, images: &[FpVector]) -> Result<Self, AlgebraError> {
        let m = FpMatrix::from_rows(source.field(), target.dim(), images)?;
        Self::new(source, target, m)
    }

    pub fn identity(a: &Algebra) -> Self {
        AlgebraMap {
            source: a.clone(),
            target: a.clone(),
            matrix: FpMatrix::identity(a.field(), a.dim()),
        }
    }

    pub fn source(&self) -> &Algebra {
        &self.source
    }

    pub fn target(&self) -> &Algebra {
        &self.target
    }

    pub fn matrix(&self) -> &FpMatrix {
        &self.matrix
    }

    pub fn apply(&self, x: &[u32]) -> FpVector {
        self.matrix.apply_row(x)
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    /// `other ∘ self`
    pub fn then(&self, other: &AlgebraMap) -> Result<AlgebraMap, AlgebraError> {
        let m = self.matrix.mul(&other.matrix)?;
        AlgebraMap::new(self.source.clone(), other.target.clone(), m)
    }

    /// Inverse of a bijective map.
    pub fn inverse(&self) -> Result<AlgebraMap, AlgebraError> {
        let m = self.matrix.inverse()?;
        AlgebraMap::new(self.target.clone(), self.source.clone(), m)
    }

    /// Checks unit preservation and multiplicativity on all basis pairs,
    /// then classifies by rank.
    pub fn classify(&self) -> MapClass {
        if self.apply(&self.source.one()) != self.target.one() {
            return MapClass::NotUnital;
        }
        let images: Vec<FpVector> = self.matrix.row_vecs();
        let n = self.source.dim();
        for u in 0..n {
            for v in 0..n {
                let lhs = self.apply(self.source.basis_product(u, v));
                let rhs = self.target.mul(&images[u], &images[v]);
                if lhs != rhs {
                    return MapClass::NotMultiplicative { u, v };
                }
            }
        }
        let rank = self.rank();
        let (sd, td) = (self.source.dim(), self.target.dim());
        match (rank == sd, rank == td) {
            (true, true) => MapClass::Isomorphism,
            (false, true) => MapClass::Surjective,
            (true, false) => MapClass::Injective,
            (false, false) => MapClass::Homomorphism,
        }
    }
}

/// Free-function form of [`AlgebraMap::classify`].
pub fn check_map(m: &AlgebraMap) -> MapClass {
    m.classify()
}
