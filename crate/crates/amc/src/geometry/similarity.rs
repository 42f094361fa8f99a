//! Positive similarities `x -> c + lambda * R * x` with exact data.

use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::geometry::matrix::RatMatrix;
use crate::geometry::point::{PatternPair, Point};
use crate::rational::Rat;

/// A positive similarity: scale `lambda > 0`, exactly orthogonal rotation
/// part with determinant +1, and a translation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimilarityMap {
    scale: Rat,
    rotation: RatMatrix,
    translation: Point,
}

impl SimilarityMap {
    pub fn new(scale: Rat, rotation: RatMatrix, translation: Point) -> Result<Self> {
        if !scale.is_positive() {
            return Err(Error::InvalidParameter("scale must be positive".into()));
        }
        if rotation.dim() != translation.dim() {
            return Err(Error::DimensionMismatch {
                expected: rotation.dim(),
                got: translation.dim(),
            });
        }
        if !rotation.is_orthogonal() {
            return Err(Error::InvalidParameter(
                "rotation part must satisfy R^T R = I exactly".into(),
            ));
        }
        if rotation.det() != Rat::one() {
            return Err(Error::InvalidParameter(
                "rotation part must have determinant +1".into(),
            ));
        }
        Ok(SimilarityMap {
            scale,
            rotation,
            translation,
        })
    }

    /// Pure homothety `x -> c + lambda x`.
    pub fn homothety(scale: Rat, translation: Point) -> Result<Self> {
        let dim = translation.dim();
        SimilarityMap::new(scale, RatMatrix::identity(dim), translation)
    }

    pub fn identity(dim: usize) -> Result<Self> {
        SimilarityMap::new(Rat::one(), RatMatrix::identity(dim), Point::origin(dim)?)
    }

    pub fn scale(&self) -> &Rat {
        &self.scale
    }

    pub fn rotation(&self) -> &RatMatrix {
        &self.rotation
    }

    pub fn translation(&self) -> &Point {
        &self.translation
    }

    pub fn dim(&self) -> usize {
        self.translation.dim()
    }

    pub fn apply_point(&self, p: &Point) -> Result<Point> {
        let rotated = self.rotation.apply(p)?;
        self.translation.add(&rotated.scale(&self.scale))
    }

    /// Maps every pattern point; the distinguished index is preserved.
    pub fn apply(&self, pair: &PatternPair) -> Result<PatternPair> {
        if pair.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: pair.dim(),
            });
        }
        let points = pair
            .points()
            .iter()
            .map(|p| self.apply_point(p))
            .collect::<Result<Vec<_>>>()?;
        PatternPair::new(points, pair.origin_index())
    }
}

/// Applies a similarity to a pattern pair. Thin wrapper kept for symmetry
/// with the rest of the operation set.
pub fn apply_similarity(map: &SimilarityMap, pair: &PatternPair) -> Result<PatternPair> {
    map.apply(pair)
}
