//! Rational lattices: membership and rotatability witnesses.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::geometry::matrix::RatMatrix;
use crate::geometry::point::Point;
use crate::geometry::rotation::{rational_rotations_2d, RationalRotation};
use crate::geometry::similarity::SimilarityMap;
use crate::rational::{rat_from_f64, Rat};

/// A full-rank lattice with rational basis vectors. Irrational bases are
/// unrepresentable by construction; quadratic-field coordinates are a
/// non-goal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice {
    basis: Vec<Point>,
    gram: RatMatrix,
}

impl Lattice {
    pub fn new(basis: Vec<Point>) -> Result<Self> {
        let d = basis.len();
        if d == 0 || d > crate::geometry::point::MAX_DIM {
            return Err(Error::DimensionOutOfRange(d));
        }
        for v in &basis {
            if v.dim() != d {
                return Err(Error::DimensionMismatch {
                    expected: d,
                    got: v.dim(),
                });
            }
        }
        let cols = RatMatrix::new(
            (0..d)
                .map(|i| (0..d).map(|j| basis[j].coord(i).clone()).collect())
                .collect(),
        )?;
        if cols.det().is_zero() {
            return Err(Error::InvalidParameter(
                "basis vectors must be linearly independent".into(),
            ));
        }
        let gram = RatMatrix::new(
            (0..d)
                .map(|i| {
                    (0..d)
                        .map(|j| basis[i].dot(&basis[j]).expect("dims checked"))
                        .collect()
                })
                .collect(),
        )?;
        Ok(Lattice { basis, gram })
    }

    /// The integer lattice Z^d.
    pub fn standard(dim: usize) -> Result<Self> {
        let basis = (0..dim)
            .map(|i| {
                let mut coords = vec![Rat::zero(); dim];
                coords[i] = Rat::one();
                Point::new(coords)
            })
            .collect::<Result<_>>()?;
        Lattice::new(basis)
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Point] {
        &self.basis
    }

    pub fn gram(&self) -> &RatMatrix {
        &self.gram
    }

    /// Basis vectors as the columns of a matrix.
    fn basis_matrix(&self) -> RatMatrix {
        let d = self.dim();
        RatMatrix::new(
            (0..d)
                .map(|i| (0..d).map(|j| self.basis[j].coord(i).clone()).collect())
                .collect(),
        )
        .expect("checked at construction")
    }

    /// Exact membership: `p` is in the lattice iff its basis coordinates are
    /// integers.
    pub fn contains(&self, p: &Point) -> Result<bool> {
        if p.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: p.dim(),
            });
        }
        let coords = self
            .basis_matrix()
            .solve(p)?
            .expect("basis is invertible");
        Ok(coords.is_integral())
    }
}

/// A rotatability witness: a rational rotation with angle strictly inside
/// the requested interval and the minimal positive rational scale mapping
/// the rotated lattice into itself.
#[derive(Clone, Debug)]
pub struct RotatabilityWitness {
    pub rotation: RationalRotation,
    pub scale: Rat,
    pub map: SimilarityMap,
}

/// Searches rational rotations with parameters up to `max_param` for one
/// whose angle lies strictly inside `(angle_lo, angle_hi)` and which maps a
/// scaled copy of the lattice into itself. Returns the first hit in
/// parameter order; `None` on exhaustion (which proves nothing).
///
/// Interval membership is decided conservatively: the exact rational cosine
/// is compared against outward-rounded rational enclosures of
/// `cos(angle_hi)` and `cos(angle_lo)`, so a returned witness is always
/// genuinely interior.
pub fn find_rotatability_witness(
    lattice: &Lattice,
    angle_lo: f64,
    angle_hi: f64,
    max_param: u64,
) -> Result<Option<RotatabilityWitness>> {
    if lattice.dim() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            got: lattice.dim(),
        });
    }
    if !(0.0..std::f64::consts::PI).contains(&angle_lo)
        || angle_hi <= angle_lo
        || angle_hi > std::f64::consts::PI
    {
        return Err(Error::InvalidParameter(format!(
            "invalid angle interval ({angle_lo}, {angle_hi})"
        )));
    }
    // cos is strictly decreasing on [0, pi]: angle in (lo, hi) iff
    // cos(hi) < cos(angle) < cos(lo). Nudge the float endpoints outward so
    // the exact comparison can only reject borderline cases, never accept
    // them.
    let margin = 1e-12;
    let cos_hi = rat_from_f64(angle_hi.cos() + margin)?;
    let cos_lo = rat_from_f64(angle_lo.cos() - margin)?;
    for rot in rational_rotations_2d(max_param)? {
        let c = rot.cos();
        if !(c > cos_hi && c < cos_lo) {
            continue;
        }
        if let Some(scale) = minimal_integral_scale(lattice, &rot)? {
            let map = SimilarityMap::new(
                scale.clone(),
                rot.matrix.clone(),
                Point::origin(2)?,
            )?;
            // Exact verification on every basis vector.
            for v in lattice.basis() {
                let image = map.apply_point(v)?;
                if !lattice.contains(&image)? {
                    return Err(Error::InvalidParameter(
                        "internal: scale failed exact verification".into(),
                    ));
                }
            }
            return Ok(Some(RotatabilityWitness {
                rotation: rot,
                scale,
                map,
            }));
        }
    }
    Ok(None)
}

/// Minimal positive rational `lambda` with `lambda * R * v` in the lattice
/// for every basis vector `v`, if one exists: the lcm/gcd closure of the
/// denominators and numerators of the rotated basis coordinates.
fn minimal_integral_scale(lattice: &Lattice, rot: &RationalRotation) -> Result<Option<Rat>> {
    let basis_m = lattice.basis_matrix();
    let mut den_lcm = BigInt::one();
    let mut num_gcd = BigInt::zero();
    for v in lattice.basis() {
        let rotated = rot.matrix.apply(v)?;
        let coords = basis_m.solve(&rotated)?.expect("basis invertible");
        for c in coords.coords() {
            if c.is_zero() {
                continue;
            }
            den_lcm = den_lcm.lcm(c.denom());
            num_gcd = num_gcd.gcd(&c.numer().abs());
        }
    }
    if num_gcd.is_zero() {
        // Rotated basis collapsed to zero; cannot happen for an orthogonal map.
        return Ok(None);
    }
    Ok(Some(Rat::new(den_lcm, num_gcd)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};

    #[test]
    fn standard_lattice_membership() {
        let z2 = Lattice::standard(2).unwrap();
        assert!(z2.contains(&Point::from_ints(&[3, -7]).unwrap()).unwrap());
        let half = Point::new(vec![ratio(1, 2), rat(0)]).unwrap();
        assert!(!z2.contains(&half).unwrap());
    }

    #[test]
    fn rotatability_345_in_interval() {
        // atan(3/4) ~ 0.6435 lies in (0.6, 0.7); parameters (3,1) give
        // cos = 4/5, sin = 3/5 and minimal scale 5.
        let z2 = Lattice::standard(2).unwrap();
        let w = find_rotatability_witness(&z2, 0.6, 0.7, 3)
            .unwrap()
            .expect("witness exists");
        assert_eq!(w.rotation.params, Some((3, 1)));
        assert_eq!(w.scale, rat(5));
        let e1 = Point::from_ints(&[1, 0]).unwrap();
        assert_eq!(
            w.map.apply_point(&e1).unwrap(),
            Point::from_ints(&[4, 3]).unwrap()
        );
    }

    #[test]
    fn no_nonidentity_rotation_with_param_1() {
        let z2 = Lattice::standard(2).unwrap();
        // Identity has angle 0, not interior to (0, pi).
        assert!(find_rotatability_witness(&z2, 0.0, std::f64::consts::PI, 1)
            .unwrap()
            .is_none());
    }

    #[test]
    fn larger_triple_witness_in_tight_interval() {
        // atan(4/3) ~ 0.9273 lies in (0.92, 0.93).
        let z2 = Lattice::standard(2).unwrap();
        let w = find_rotatability_witness(&z2, 0.92, 0.93, 12)
            .unwrap()
            .expect("witness exists");
        let angle = w.rotation.angle();
        assert!(angle > 0.92 && angle < 0.93);
        for v in z2.basis() {
            let img = w.map.apply_point(v).unwrap();
            assert!(z2.contains(&img).unwrap());
        }
    }

    #[test]
    fn rejects_degenerate_basis() {
        let basis = vec![
            Point::from_ints(&[1, 2]).unwrap(),
            Point::from_ints(&[2, 4]).unwrap(),
        ];
        assert!(Lattice::new(basis).is_err());
    }

    #[test]
    fn scaled_sublattice_rotation() {
        // L((2,0),(0,2)): same rotatability as Z^2, scale also 5.
        let l = Lattice::new(vec![
            Point::from_ints(&[2, 0]).unwrap(),
            Point::from_ints(&[0, 2]).unwrap(),
        ])
        .unwrap();
        let w = find_rotatability_witness(&l, 0.6, 0.7, 3)
            .unwrap()
            .expect("witness");
        assert_eq!(w.scale, rat(5));
    }
}
