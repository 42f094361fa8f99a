//! Placing a small similar copy of a pattern from an anchor into a disc.
//!
//! The distinguished point stays at the anchor; the remaining points must
//! land strictly inside the disc. The searches try a fixed scale ladder
//! against all rational rotations up to a parameter bound, so the explored
//! space is explicit and reported; absence is exhaustion, not a proof.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::geometry::extreme::is_extreme_point;
use crate::geometry::point::{PatternPair, Point};
use crate::geometry::rotation::{rational_rotations_2d, RationalRotation};
use crate::rational::{rat, ratio, Rat};

/// Result of a successful placement.
#[derive(Clone, Debug)]
pub struct BallExtension {
    pub copy: PatternPair,
    pub scale: Rat,
    pub rotation: RationalRotation,
}

/// Searches scales `1/2, 1/4, ..., 2^-10` and rational rotations up to
/// `max_rot_param` for a similar copy with the distinguished point at
/// `anchor`, the other points strictly inside the disc, and all coordinates
/// within the denominator bound. Exact containment checks throughout.
pub fn extend_from_ball(
    pattern: &PatternPair,
    anchor: &Point,
    disc_center: &Point,
    disc_radius: &Rat,
    denominator_bound: u64,
    max_rot_param: u64,
) -> Result<Option<BallExtension>> {
    if !is_extreme_point(pattern) {
        return Err(Error::OriginNotExtreme);
    }
    let scales: Vec<Rat> = (1..=10).map(|k| ratio(1, 1 << k)).collect();
    extend_with_scales(
        pattern,
        anchor,
        disc_center,
        disc_radius,
        Some(denominator_bound),
        max_rot_param,
        &scales,
    )
}

/// Integer-lattice variant used by grid expansion: scales are positive
/// integers (multiples large enough to clear the rotation denominators land
/// in the lattice) and copies must have integer coordinates.
pub fn extend_from_ball_z(
    pattern: &PatternPair,
    anchor: &Point,
    disc_center: &Point,
    disc_radius: &Rat,
    max_rot_param: u64,
    max_scale: u64,
) -> Result<Option<BallExtension>> {
    if !is_extreme_point(pattern) {
        return Err(Error::OriginNotExtreme);
    }
    let scales: Vec<Rat> = (1..=max_scale as i64).map(rat).collect();
    extend_with_scales(
        pattern,
        anchor,
        disc_center,
        disc_radius,
        None,
        max_rot_param,
        &scales,
    )
}

fn extend_with_scales(
    pattern: &PatternPair,
    anchor: &Point,
    disc_center: &Point,
    disc_radius: &Rat,
    denominator_bound: Option<u64>,
    max_rot_param: u64,
    scales: &[Rat],
) -> Result<Option<BallExtension>> {
    let d = pattern.dim();
    if anchor.dim() != d || disc_center.dim() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            got: anchor.dim().max(disc_center.dim()),
        });
    }
    let rotations: Vec<RationalRotation> = if d == 2 {
        rational_rotations_2d(max_rot_param)?
    } else {
        vec![RationalRotation {
            params: None,
            matrix: crate::geometry::matrix::RatMatrix::identity(d),
        }]
    };
    let radius_sq = disc_radius * disc_radius;
    let origin = pattern.origin();
    for scale in scales {
        for rotation in &rotations {
            let mut points = Vec::with_capacity(pattern.len());
            let mut ok = true;
            for (i, s) in pattern.points().iter().enumerate() {
                let offset = rotation.matrix.apply(&s.sub(origin)?)?.scale(scale);
                let p = anchor.add(&offset)?;
                if i != pattern.origin_index() {
                    // Strictly inside the disc.
                    if p.dist_sq(disc_center)? >= radius_sq {
                        ok = false;
                        break;
                    }
                }
                if let Some(bound) = denominator_bound {
                    if p.max_denominator() > BigInt::from(bound) {
                        ok = false;
                        break;
                    }
                } else if !p.is_integral() {
                    ok = false;
                    break;
                }
                points.push(p);
            }
            if ok {
                let copy = PatternPair::new(points, pattern.origin_index())?;
                return Ok(Some(BallExtension {
                    copy,
                    scale: scale.clone(),
                    rotation: rotation.clone(),
                }));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn embedded_line_pattern() -> PatternPair {
        // {0,1,2} on the x-axis with the distinguished point at 2.
        PatternPair::new(
            vec![
                Point::from_ints(&[0, 0]).unwrap(),
                Point::from_ints(&[1, 0]).unwrap(),
                Point::from_ints(&[2, 0]).unwrap(),
            ],
            2,
        )
        .unwrap()
    }

    #[test]
    fn anchor_near_unit_disc_extends_inward() {
        // Anchor just outside the unit disc; the copy points back toward
        // the centre with the identity rotation at scale 1/2.
        let pattern = embedded_line_pattern();
        let anchor = Point::new(vec![ratio(101, 100), rat(0)]).unwrap();
        let got = extend_from_ball(
            &pattern,
            &anchor,
            &Point::origin(2).unwrap(),
            &rat(1),
            200,
            3,
        )
        .unwrap()
        .expect("extension exists");
        assert_eq!(got.scale, ratio(1, 2));
        assert_eq!(got.copy.origin(), &anchor);
        for (i, p) in got.copy.points().iter().enumerate() {
            if i != got.copy.origin_index() {
                assert!(p.dist_sq(&Point::origin(2).unwrap()).unwrap() < rat(1));
            }
        }
    }

    #[test]
    fn anchor_far_from_disc_fails() {
        let pattern = embedded_line_pattern();
        let anchor = Point::from_ints(&[3, 0]).unwrap();
        let got = extend_from_ball(
            &pattern,
            &anchor,
            &Point::origin(2).unwrap(),
            &rat(1),
            100,
            3,
        )
        .unwrap();
        assert!(got.is_none());
    }

    #[test]
    fn anchor_inside_disc_succeeds_with_identity() {
        let pattern = embedded_line_pattern();
        let anchor = Point::new(vec![ratio(1, 4), rat(0)]).unwrap();
        let got = extend_from_ball(
            &pattern,
            &anchor,
            &Point::origin(2).unwrap(),
            &rat(1),
            64,
            2,
        )
        .unwrap()
        .expect("extension exists");
        assert!(got.rotation.params.is_none());
    }

    #[test]
    fn non_extreme_origin_is_rejected() {
        let pattern = PatternPair::new(
            vec![
                Point::from_ints(&[0, 0]).unwrap(),
                Point::from_ints(&[1, 0]).unwrap(),
                Point::from_ints(&[2, 0]).unwrap(),
            ],
            1,
        )
        .unwrap();
        assert!(matches!(
            extend_from_ball(
                &pattern,
                &Point::origin(2).unwrap(),
                &Point::origin(2).unwrap(),
                &rat(1),
                10,
                2,
            ),
            Err(Error::OriginNotExtreme)
        ));
    }
}
