//! Bouquets of unit circles, pencils of lines, smiling witnesses, and the
//! bridge from smiling copies to bichromatic graph colourings.

pub mod place;
pub mod planar;
pub mod smiling;

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::geometry::point::Point;
use crate::rational::{rat, Rat};

pub use place::{place_scaled_copy, PlacedCopy};
pub use planar::{inscribed_points, pencil_reach, place_pencil, PencilReach};
pub use smiling::{
    check_smiling, compose_bichromatic_colouring, validate_lattice_like, LatticeLikeReport,
    SmilingTarget, SmilingWitness,
};

/// A union of unit circles sharing a common point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bouquet {
    common_point: Point,
    centers: Vec<Point>,
}

impl Bouquet {
    /// Exact rational bouquet: every centre at squared distance one from
    /// the common point.
    pub fn new(common_point: Point, centers: Vec<Point>) -> Result<Self> {
        if common_point.dim() != 2 {
            return Err(Error::DimensionMismatch {
                expected: 2,
                got: common_point.dim(),
            });
        }
        if centers.is_empty() {
            return Err(Error::InvalidParameter("bouquet needs a circle".into()));
        }
        for c in &centers {
            if c.dim() != 2 {
                return Err(Error::DimensionMismatch {
                    expected: 2,
                    got: c.dim(),
                });
            }
            if c.dist_sq(&common_point)? != rat(1) {
                return Err(Error::InvalidParameter(format!(
                    "centre {c:?} is not at unit distance from the common point"
                )));
            }
        }
        for i in 0..centers.len() {
            for j in i + 1..centers.len() {
                if centers[i] == centers[j] {
                    return Err(Error::InvalidParameter("duplicate circle centres".into()));
                }
            }
        }
        Ok(Bouquet {
            common_point,
            centers,
        })
    }

    pub fn common_point(&self) -> &Point {
        &self.common_point
    }

    pub fn centers(&self) -> &[Point] {
        &self.centers
    }

    pub fn len(&self) -> usize {
        self.centers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// A union of concurrent lines with pairwise distinct directions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pencil {
    common_point: Point,
    directions: Vec<Point>,
}

impl Pencil {
    pub fn new(common_point: Point, directions: Vec<Point>) -> Result<Self> {
        if common_point.dim() != 2 {
            return Err(Error::DimensionMismatch {
                expected: 2,
                got: common_point.dim(),
            });
        }
        if directions.is_empty() {
            return Err(Error::InvalidParameter("pencil needs a line".into()));
        }
        for d in &directions {
            if d.dim() != 2 {
                return Err(Error::DimensionMismatch {
                    expected: 2,
                    got: d.dim(),
                });
            }
            if d.coords().iter().all(|c| c.abs() == Rat::from_integer(0.into())) {
                return Err(Error::InvalidParameter("zero direction".into()));
            }
        }
        for i in 0..directions.len() {
            for j in i + 1..directions.len() {
                if cross_2d(&directions[i], &directions[j]) == rat(0) {
                    return Err(Error::InvalidParameter(format!(
                        "directions {i} and {j} are parallel"
                    )));
                }
            }
        }
        Ok(Pencil {
            common_point,
            directions,
        })
    }

    pub fn common_point(&self) -> &Point {
        &self.common_point
    }

    pub fn directions(&self) -> &[Point] {
        &self.directions
    }

    pub fn len(&self) -> usize {
        self.directions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

pub(crate) fn cross_2d(a: &Point, b: &Point) -> Rat {
    a.coord(0) * b.coord(1) - a.coord(1) * b.coord(0)
}
