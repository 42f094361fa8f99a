//! Simple colouring kinds: constants, residues, half-spaces, strips,
//! blocks, the dyadic parity colouring, and explicit tables.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::geometry::point::Point;
use crate::rational::{rat_floor, two_adic_valuation, Rat};

/// Residue colouring of Z^d: colour = (sum of coordinates) mod m.
/// The plain `n mod 3` colouring of N and the checkerboard parity of Z^2
/// are both instances.
pub fn residue_colour(p: &Point, modulus: u32) -> Result<u32> {
    if !p.is_integral() {
        return Err(Error::OutOfDomain(format!(
            "residue colouring needs integer coordinates, got {p:?}"
        )));
    }
    let sum: BigInt = p.coords().iter().map(|c| c.numer().clone()).sum();
    let m = BigInt::from(modulus);
    let r = sum.mod_floor(&m);
    Ok(r.to_u32().expect("residue below u32 modulus"))
}

/// Two-colour half-space rule: colour 0 where `<normal, p>` is strictly
/// positive, colour 1 elsewhere.
pub fn half_space_colour(p: &Point, normal: &Point) -> Result<u32> {
    let v = p.dot(normal)?;
    Ok(if v.is_positive() { 0 } else { 1 })
}

/// Dyadic parity colouring of Q: write a nonzero rational as `2^t p/q` with
/// `p`, `q` odd; colour 0 (red) when `t` is even, 1 (blue) when odd. Zero is
/// assigned red; any fixed choice works for the searches.
pub fn dyadic_colour(p: &Point) -> Result<u32> {
    if p.dim() != 1 {
        return Err(Error::DimensionMismatch {
            expected: 1,
            got: p.dim(),
        });
    }
    let x = p.x();
    if x.is_zero() {
        return Ok(0);
    }
    Ok(if two_adic_valuation(x) % 2 == 0 { 0 } else { 1 })
}

/// Block colouring with block width `d`: colour 0 (red) iff
/// `floor(x / d)` is even. Defined on Z in the source construction; the
/// floor extends it to rational samples.
pub fn block_colour(p: &Point, block: &BigInt) -> Result<u32> {
    if p.dim() != 1 {
        return Err(Error::DimensionMismatch {
            expected: 1,
            got: p.dim(),
        });
    }
    let q = rat_floor(&(p.x() / Rat::from_integer(block.clone())));
    Ok(if q.mod_floor(&BigInt::from(2)).is_zero() {
        0
    } else {
        1
    })
}

/// Axis-aligned strips: colour = floor(p[axis] / width) mod colours.
pub fn strip_colour(p: &Point, axis: usize, width: &Rat, colours: u32) -> Result<u32> {
    if axis >= p.dim() {
        return Err(Error::InvalidParameter(format!(
            "strip axis {axis} out of range for dimension {}",
            p.dim()
        )));
    }
    let q = rat_floor(&(p.coord(axis) / width));
    let r = q.mod_floor(&BigInt::from(colours));
    Ok(r.to_u32().expect("residue below u32 modulus"))
}

/// Finite lookup table over exact points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExplicitTable {
    table: BTreeMap<Point, u32>,
    palette: u32,
}

impl ExplicitTable {
    pub fn new(table: BTreeMap<Point, u32>, palette: u32) -> Result<Self> {
        if palette == 0 {
            return Err(Error::InvalidParameter("palette must be nonempty".into()));
        }
        if let Some((p, c)) = table.iter().find(|(_, &c)| c >= palette) {
            return Err(Error::InvalidParameter(format!(
                "colour {c} at {p:?} outside palette of size {palette}"
            )));
        }
        Ok(ExplicitTable { table, palette })
    }

    /// 1-D table over a contiguous integer range.
    pub fn from_slice_1d(start: i64, colours: &[u32]) -> Result<Self> {
        let palette = colours.iter().copied().max().unwrap_or(0) + 1;
        let table = colours
            .iter()
            .enumerate()
            .map(|(i, &c)| Ok((Point::from_ints(&[start + i as i64])?, c)))
            .collect::<Result<_>>()?;
        ExplicitTable::new(table, palette)
    }

    pub fn colour(&self, p: &Point) -> Result<u32> {
        self.table
            .get(p)
            .copied()
            .ok_or_else(|| Error::OutOfDomain(format!("{p:?} not in explicit table")))
    }

    pub fn palette(&self) -> u32 {
        self.palette
    }
}

/// Pure point-to-colour rule behind a custom oracle.
pub type ColourRule = Arc<dyn Fn(&Point) -> Result<u32> + Send + Sync>;

/// Arbitrary pure rule, for fixtures and composition tests.
#[derive(Clone)]
pub struct CustomColouring {
    pub label: String,
    pub palette: u32,
    pub rule: ColourRule,
}

impl std::fmt::Debug for CustomColouring {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CustomColouring")
            .field("label", &self.label)
            .field("palette", &self.palette)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};

    #[test]
    fn residue_mod_3() {
        let p = Point::from_ints(&[7]).unwrap();
        assert_eq!(residue_colour(&p, 3).unwrap(), 1);
        let q = Point::new(vec![ratio(1, 2)]).unwrap();
        assert!(residue_colour(&q, 3).is_err());
        // checkerboard on Z^2
        let c = Point::from_ints(&[2, 3]).unwrap();
        assert_eq!(residue_colour(&c, 2).unwrap(), 1);
    }

    #[test]
    fn dyadic_examples() {
        for (x, want) in [(rat(2), 1), (rat(3), 0), (rat(4), 0), (ratio(3, 2), 1)] {
            assert_eq!(dyadic_colour(&Point::scalar(x)).unwrap(), want);
        }
        assert_eq!(dyadic_colour(&Point::scalar(rat(0))).unwrap(), 0);
    }

    #[test]
    fn block_floor_division() {
        let d = BigInt::from(10);
        assert_eq!(block_colour(&Point::scalar(rat(0)), &d).unwrap(), 0);
        assert_eq!(block_colour(&Point::scalar(rat(9)), &d).unwrap(), 0);
        assert_eq!(block_colour(&Point::scalar(rat(10)), &d).unwrap(), 1);
        assert_eq!(block_colour(&Point::scalar(rat(-1)), &d).unwrap(), 1);
    }

    #[test]
    fn explicit_table_lookup() {
        let t = ExplicitTable::from_slice_1d(1, &[0, 1, 2, 0]).unwrap();
        assert_eq!(t.colour(&Point::from_ints(&[3]).unwrap()).unwrap(), 2);
        assert!(t.colour(&Point::from_ints(&[9]).unwrap()).is_err());
        assert_eq!(t.palette(), 3);
    }
}
