//! Points with exact rational coordinates, and patterns with a
//! distinguished point.

use num_traits::{Signed, Zero};
use std::fmt;

use crate::error::{Error, Result};
use crate::rational::{format_rat, parse_rat, Rat};

/// Dimensions are capped so matrix code paths stay desk-scale.
pub const MAX_DIM: usize = 8;

/// A point of Q^d with exact coordinates.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    coords: Vec<Rat>,
}

impl Point {
    pub fn new(coords: Vec<Rat>) -> Result<Self> {
        if coords.is_empty() || coords.len() > MAX_DIM {
            return Err(Error::DimensionOutOfRange(coords.len()));
        }
        Ok(Point { coords })
    }

    /// 1-dimensional point.
    pub fn scalar(x: Rat) -> Self {
        Point { coords: vec![x] }
    }

    /// Point from integer coordinates.
    pub fn from_ints(coords: &[i64]) -> Result<Self> {
        Point::new(coords.iter().map(|&c| crate::rational::rat(c)).collect())
    }

    /// Origin of Q^d.
    pub fn origin(dim: usize) -> Result<Self> {
        Point::new(vec![Rat::zero(); dim])
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> &Rat {
        &self.coords[i]
    }

    /// First coordinate; convenient for 1-D domains.
    pub fn x(&self) -> &Rat {
        &self.coords[0]
    }

    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(crate::rational::is_integer)
    }

    /// Largest reduced denominator over the coordinates.
    pub fn max_denominator(&self) -> num_bigint::BigInt {
        self.coords
            .iter()
            .map(|c| c.denom().clone())
            .max()
            .expect("nonempty")
    }

    pub fn add(&self, other: &Point) -> Result<Point> {
        self.check_dim(other.dim())?;
        Ok(Point {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Point) -> Result<Point> {
        self.check_dim(other.dim())?;
        Ok(Point {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn scale(&self, k: &Rat) -> Point {
        Point {
            coords: self.coords.iter().map(|c| c * k).collect(),
        }
    }

    pub fn dot(&self, other: &Point) -> Result<Rat> {
        self.check_dim(other.dim())?;
        Ok(self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a * b)
            .sum())
    }

    /// Exact squared Euclidean distance.
    pub fn dist_sq(&self, other: &Point) -> Result<Rat> {
        self.check_dim(other.dim())?;
        Ok(self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| {
                let d = a - b;
                &d * &d
            })
            .sum())
    }

    /// Exact l1 norm.
    pub fn norm_l1(&self) -> Rat {
        self.coords.iter().map(|c| c.abs()).sum()
    }

    /// Exact squared l2 norm.
    pub fn norm_sq(&self) -> Rat {
        self.coords.iter().map(|c| c * c).sum()
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.coords.iter().map(crate::rational::rat_to_f64).collect()
    }

    fn check_dim(&self, other: usize) -> Result<()> {
        if self.dim() != other {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: other,
            });
        }
        Ok(())
    }

    /// Serialization form: each coordinate as "a/b".
    pub fn to_strings(&self) -> Vec<String> {
        self.coords.iter().map(format_rat).collect()
    }

    pub fn from_strings(parts: &[String]) -> Result<Point> {
        Point::new(parts.iter().map(|s| parse_rat(s)).collect::<Result<_>>()?)
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_strings().join(", "))
    }
}

/// A finite pattern `S` with a distinguished point `s0`, stored by index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternPair {
    points: Vec<Point>,
    origin_index: usize,
}

impl PatternPair {
    pub fn new(points: Vec<Point>, origin_index: usize) -> Result<Self> {
        if points.len() < 3 {
            return Err(Error::InvalidParameter(format!(
                "pattern needs at least 3 points, got {}",
                points.len()
            )));
        }
        if origin_index >= points.len() {
            return Err(Error::InvalidParameter(format!(
                "origin index {} out of range",
                origin_index
            )));
        }
        let dim = points[0].dim();
        for p in &points {
            if p.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: p.dim(),
                });
            }
        }
        for i in 0..points.len() {
            for j in i + 1..points.len() {
                if points[i] == points[j] {
                    return Err(Error::InvalidParameter(
                        "pattern points must be distinct".into(),
                    ));
                }
            }
        }
        Ok(PatternPair {
            points,
            origin_index,
        })
    }

    /// 1-D pattern from integers with the distinguished point given by value.
    pub fn from_ints_1d(values: &[i64], origin_value: i64) -> Result<Self> {
        let points: Vec<Point> = values
            .iter()
            .map(|&v| Point::from_ints(&[v]))
            .collect::<Result<_>>()?;
        let origin_index = values
            .iter()
            .position(|&v| v == origin_value)
            .ok_or_else(|| {
                Error::InvalidParameter(format!("origin value {origin_value} not in pattern"))
            })?;
        PatternPair::new(points, origin_index)
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn origin_index(&self) -> usize {
        self.origin_index
    }

    pub fn origin(&self) -> &Point {
        &self.points[self.origin_index]
    }

    pub fn dim(&self) -> usize {
        self.points[0].dim()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Points other than the distinguished one, in stored order.
    pub fn rest(&self) -> impl Iterator<Item = &Point> {
        self.points
            .iter()
            .enumerate()
            .filter(move |(i, _)| *i != self.origin_index)
            .map(|(_, p)| p)
    }

    pub fn is_integral(&self) -> bool {
        self.points.iter().all(Point::is_integral)
    }

    /// Componentwise bounding box of the pattern.
    pub fn bounding_box(&self) -> (Point, Point) {
        let d = self.dim();
        let mut lo = self.points[0].coords().to_vec();
        let mut hi = lo.clone();
        for p in &self.points[1..] {
            for i in 0..d {
                if p.coord(i) < &lo[i] {
                    lo[i] = p.coord(i).clone();
                }
                if p.coord(i) > &hi[i] {
                    hi[i] = p.coord(i).clone();
                }
            }
        }
        (Point { coords: lo }, Point { coords: hi })
    }
}
