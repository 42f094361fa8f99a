//! The four-colour nested-square colouring of the plane.
//!
//! For `i >= 1` let `Q_i` be the square `[-4^i, 4^(i-1)]^2`. The class of a
//! point is determined by the parity of the least `i` with `p` in `Q_i`
//! together with the half-plane split `x < y` vs `x >= y`. Classes are
//! named 0..=3; the construction avoids almost-monochromatic positive
//! homothets of the corner pattern `({(0,1),(1,1),(1,0)}, (1,1))`.

use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::geometry::point::Point;
use crate::rational::{rat, rat_pow, Rat};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MondrianColouring {
    extension_dim: usize,
}

impl MondrianColouring {
    pub fn new() -> Self {
        MondrianColouring { extension_dim: 2 }
    }

    /// Fibre extension to dimension `d > 2`: the two planar palettes are
    /// selected by an AP-free two-colouring of the orthogonal complement.
    pub fn extended(dim: usize) -> Result<Self> {
        if !(2..=crate::geometry::point::MAX_DIM).contains(&dim) {
            return Err(Error::DimensionOutOfRange(dim));
        }
        Ok(MondrianColouring { extension_dim: dim })
    }

    pub fn dim(&self) -> usize {
        self.extension_dim
    }

    pub fn palette(&self) -> u32 {
        if self.extension_dim == 2 {
            4
        } else {
            8
        }
    }

    /// Least `i >= 1` with both coordinates in `[-4^i, 4^(i-1)]`, plus the
    /// half-plane bit.
    fn planar_class(x: &Rat, y: &Rat) -> u32 {
        let four = rat(4);
        let mut i: i64 = 1;
        loop {
            let hi = rat_pow(&four, i - 1);
            let lo = -rat_pow(&four, i);
            if x >= &lo && x <= &hi && y >= &lo && y <= &hi {
                break;
            }
            i += 1;
        }
        let parity = (i % 2) as u32;
        let half = if x < y { 0 } else { 1 };
        2 * parity + half
    }

    pub fn colour(&self, p: &Point) -> Result<u32> {
        if p.dim() != self.extension_dim {
            return Err(Error::DimensionMismatch {
                expected: self.extension_dim,
                got: p.dim(),
            });
        }
        let planar = Self::planar_class(p.coord(0), p.coord(1));
        if self.extension_dim == 2 {
            return Ok(planar);
        }
        let region = fibre_region(&p.coords()[2..]);
        Ok(region * 4 + planar)
    }
}

impl Default for MondrianColouring {
    fn default() -> Self {
        MondrianColouring::new()
    }
}

/// AP-free two-colouring of the orthogonal complement: parity of the
/// geometric shell of the l1 norm (base 2), with the unit ball in class 0.
fn fibre_region(t: &[Rat]) -> u32 {
    let norm: Rat = t.iter().map(|c| c.abs()).sum();
    if norm < Rat::one() {
        return 0;
    }
    let mut lo = Rat::one();
    let mut i = 0u32;
    loop {
        let hi = &lo * rat(2);
        if norm < hi {
            return i % 2;
        }
        lo = hi;
        i += 1;
    }
}
