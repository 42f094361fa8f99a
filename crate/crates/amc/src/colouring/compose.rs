//! Disjoint-palette composition of colourings over a region split.

use num_traits::Signed;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::geometry::point::Point;

use super::Colouring;

/// Assigns each point to the index of the part colouring it.
#[derive(Clone)]
pub enum Region {
    /// 1-D sign split: region 0 is the positive half-line, region 1 the
    /// rest; `zero_in_first` moves the origin into region 0.
    SignSplit1D { zero_in_first: bool },
    /// Region = colour of a selector oracle evaluated on the coordinates
    /// from `from_coord` onward (fibre constructions).
    BySelector {
        selector: Box<Colouring>,
        from_coord: usize,
    },
    /// Arbitrary pure rule.
    Custom(Arc<dyn Fn(&Point) -> Result<usize> + Send + Sync>),
}

impl std::fmt::Debug for Region {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Region::SignSplit1D { zero_in_first } => f
                .debug_struct("SignSplit1D")
                .field("zero_in_first", zero_in_first)
                .finish(),
            Region::BySelector { from_coord, .. } => f
                .debug_struct("BySelector")
                .field("from_coord", from_coord)
                .finish(),
            Region::Custom(_) => f.write_str("Custom"),
        }
    }
}

impl Region {
    pub fn index(&self, p: &Point) -> Result<usize> {
        match self {
            Region::SignSplit1D { zero_in_first } => {
                let x = p.coord(0);
                let first = if *zero_in_first {
                    !x.is_negative()
                } else {
                    x.is_positive()
                };
                Ok(if first { 0 } else { 1 })
            }
            Region::BySelector {
                selector,
                from_coord,
            } => {
                if *from_coord >= p.dim() {
                    return Err(Error::InvalidParameter(format!(
                        "selector coordinate {from_coord} out of range"
                    )));
                }
                let tail = Point::new(p.coords()[*from_coord..].to_vec())?;
                Ok(selector.colour(&tail)? as usize)
            }
            Region::Custom(rule) => rule(p),
        }
    }
}

/// The union colouring: region `r` uses part `r` shifted past the palettes
/// of the earlier parts, so distinct parts never share a colour.
#[derive(Clone, Debug)]
pub struct Composite {
    parts: Vec<Colouring>,
    region: Region,
    offsets: Vec<u32>,
    palette: u32,
}

impl Composite {
    pub fn new(parts: Vec<Colouring>, region: Region) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidParameter(
                "composition needs at least one part".into(),
            ));
        }
        let mut offsets = Vec::with_capacity(parts.len());
        let mut acc = 0u32;
        for p in &parts {
            offsets.push(acc);
            acc += p.palette_size();
        }
        Ok(Composite {
            parts,
            region,
            offsets,
            palette: acc,
        })
    }

    pub fn parts(&self) -> &[Colouring] {
        &self.parts
    }

    pub fn palette(&self) -> u32 {
        self.palette
    }

    pub fn colour(&self, p: &Point) -> Result<u32> {
        let r = self.region.index(p)?;
        let part = self.parts.get(r).ok_or_else(|| {
            Error::InvalidParameter(format!("region index {r} has no part colouring"))
        })?;
        Ok(self.offsets[r] + part.colour(p)?)
    }

    pub fn offset(&self, region: usize) -> u32 {
        self.offsets[region]
    }
}

/// Builds the disjoint union of colourings over a region rule.
pub fn compose_disjoint(parts: Vec<Colouring>, region: Region) -> Result<Colouring> {
    Ok(Colouring::composite(Composite::new(parts, region)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colouring::Colouring;
    use crate::rational::rat;

    #[test]
    fn two_two_colour_parts_make_four_colours() {
        let a = Colouring::residue(2);
        let b = Colouring::block(3);
        let c = compose_disjoint(
            vec![a, b],
            Region::SignSplit1D {
                zero_in_first: true,
            },
        )
        .unwrap();
        assert_eq!(c.palette_size(), 4);
        // x = 1: region 0, residue parity 1.
        assert_eq!(c.colour(&Point::scalar(rat(1))).unwrap(), 1);
        // x = -4: region 1, block floor(-4/3) = -2 even -> 0, offset 2.
        assert_eq!(c.colour(&Point::scalar(rat(-4))).unwrap(), 2);
    }
}
