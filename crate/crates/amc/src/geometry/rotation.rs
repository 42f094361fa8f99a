//! Rational rotations of the plane from Pythagorean parametrisation.
//!
//! For coprime `0 < b < a` the matrix
//! `((a^2-b^2, -2ab), (2ab, a^2-b^2)) / (a^2+b^2)` is exactly orthogonal
//! with determinant one; these rotations are dense in SO(2).

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::geometry::matrix::RatMatrix;
use crate::rational::{ratio, Rat};

/// One emitted rotation with its generating parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalRotation {
    /// `None` marks the identity rotation.
    pub params: Option<(u64, u64)>,
    pub matrix: RatMatrix,
}

impl RationalRotation {
    pub fn identity() -> Self {
        RationalRotation {
            params: None,
            matrix: RatMatrix::identity(2),
        }
    }

    fn from_params(a: u64, b: u64) -> Self {
        let den = (a * a + b * b) as i64;
        let cos = ratio((a * a - b * b) as i64, den);
        let sin = ratio((2 * a * b) as i64, den);
        let matrix = RatMatrix::new(vec![
            vec![cos.clone(), -sin.clone()],
            vec![sin, cos],
        ])
        .expect("2x2");
        RationalRotation {
            params: Some((a, b)),
            matrix,
        }
    }

    /// Exact cosine of the rotation angle.
    pub fn cos(&self) -> Rat {
        self.matrix.entry(0, 0).clone()
    }

    /// Exact sine of the rotation angle.
    pub fn sin(&self) -> Rat {
        self.matrix.entry(1, 0).clone()
    }

    /// Rotation angle in radians (reporting only; decisions use cos/sin).
    pub fn angle(&self) -> f64 {
        crate::rational::rat_to_f64(&self.sin()).atan2(crate::rational::rat_to_f64(&self.cos()))
    }
}

/// Enumerates the identity followed by all rotations with coprime
/// parameters `0 < b < a <= max_param`, ordered by `(a, b)`.
pub fn rational_rotations_2d(max_param: u64) -> Result<Vec<RationalRotation>> {
    if max_param < 1 {
        return Err(Error::InvalidParameter("max_param must be >= 1".into()));
    }
    let mut out = vec![RationalRotation::identity()];
    for a in 2..=max_param {
        for b in 1..a {
            if a.gcd(&b) == 1 {
                out.push(RationalRotation::from_params(a, b));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn param_2_1_is_the_3_4_5_rotation() {
        let rots = rational_rotations_2d(2).unwrap();
        assert_eq!(rots.len(), 2);
        let r = &rots[1];
        assert_eq!(r.params, Some((2, 1)));
        assert_eq!(r.cos(), ratio(3, 5));
        assert_eq!(r.sin(), ratio(4, 5));
        assert_eq!(*r.matrix.entry(0, 1), ratio(-4, 5));
    }

    #[test]
    fn all_emitted_rotations_are_exactly_orthogonal() {
        for r in rational_rotations_2d(9).unwrap() {
            assert!(r.matrix.is_orthogonal());
            assert_eq!(r.matrix.det(), rat(1));
        }
    }

    #[test]
    fn nonidentity_count_for_param_3() {
        // Coprime pairs (2,1), (3,1), (3,2).
        let rots = rational_rotations_2d(3).unwrap();
        assert_eq!(rots.len() - 1, 3);
        let params: Vec<_> = rots.iter().filter_map(|r| r.params).collect();
        assert_eq!(params, vec![(2, 1), (3, 1), (3, 2)]);
    }
}
