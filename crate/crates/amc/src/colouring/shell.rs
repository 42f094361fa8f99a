//! Geometric shell colourings of the half-line.
//!
//! `phi1` colours `(0,1)` with a reserved colour and the shell
//! `[K^i, K^{i+1})` with `i mod 2`. `phi2` splits each shell
//! `[L K^i, L K^{i+1})` into `L` equal half-closed cells, coloured
//! `1..=L` for odd `i` and `L+1..=2L` for even `i`, with `[0, L)`
//! coloured `0`. Both kill infinite monochromatic progressions while
//! avoiding almost-monochromatic homothets of their target pattern.

use num_traits::{Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::geometry::point::PatternPair;
use crate::rational::{rat, rat_floor, Rat};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ShellVariant {
    Phi1,
    Phi2,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShellColouring1D {
    variant: ShellVariant,
    k: u64,
    /// Cell count per shell; `phi2` only.
    l: Option<u64>,
}

impl ShellColouring1D {
    pub fn phi1(k: u64) -> Result<Self> {
        if k < 2 {
            return Err(Error::InvalidParameter("shell base K must be >= 2".into()));
        }
        Ok(ShellColouring1D {
            variant: ShellVariant::Phi1,
            k,
            l: None,
        })
    }

    pub fn phi2(k: u64, l: u64) -> Result<Self> {
        if k < 2 || l < 1 {
            return Err(Error::InvalidParameter(
                "phi2 needs K >= 2 and L >= 1".into(),
            ));
        }
        Ok(ShellColouring1D {
            variant: ShellVariant::Phi2,
            k,
            l: Some(l),
        })
    }

    /// Builds the construction matching a four-point integer pattern with a
    /// non-extreme distinguished point: `phi1` when `s0` is the third point,
    /// `phi2` when it is the second. `K` is the least integer exceeding
    /// `(p4-p2)/(p2-p1) + 1` and `L = K * ceil((p3-p1)/(p4-p3))`.
    pub fn for_pattern(pattern: &PatternPair) -> Result<Self> {
        let (ps, origin_pos) = sorted_1d(pattern)?;
        if ps.len() != 4 {
            return Err(Error::InvalidParameter(format!(
                "shell construction expects 4 points, got {}",
                ps.len()
            )));
        }
        let k = minimal_k(&ps)?;
        match origin_pos {
            2 => ShellColouring1D::phi1(k),
            1 => {
                let ratio = (&ps[2] - &ps[0]) / (&ps[3] - &ps[2]);
                let l = ratio_ceil(&ratio)?;
                ShellColouring1D::phi2(k, k * l)
            }
            _ => Err(Error::InvalidParameter(
                "distinguished point must be the second or third in order".into(),
            )),
        }
    }

    pub fn variant(&self) -> ShellVariant {
        self.variant
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn l(&self) -> Option<u64> {
        self.l
    }

    pub fn palette(&self) -> u32 {
        match self.variant {
            ShellVariant::Phi1 => 3,
            ShellVariant::Phi2 => 2 * self.l.expect("phi2 has L") as u32 + 1,
        }
    }

    /// Shell index of `x` relative to base point `base`: the unique `i >= 0`
    /// with `base * K^i <= x < base * K^(i+1)`.
    fn shell_index(&self, x: &Rat, base: &Rat) -> (u64, Rat) {
        let k = rat(self.k as i64);
        let mut lo = base.clone();
        let mut i = 0u64;
        loop {
            let hi = &lo * &k;
            if *x < hi {
                return (i, lo);
            }
            lo = hi;
            i += 1;
        }
    }

    pub fn colour(&self, x: &Rat) -> Result<u32> {
        match self.variant {
            ShellVariant::Phi1 => {
                if !x.is_positive() {
                    return Err(Error::OutOfDomain(format!(
                        "phi1 is a colouring of the positive reals, got {x}"
                    )));
                }
                let one = rat(1);
                if *x < one {
                    return Ok(2);
                }
                let (i, _) = self.shell_index(x, &one);
                Ok((i % 2) as u32)
            }
            ShellVariant::Phi2 => {
                if x.is_negative() {
                    return Err(Error::OutOfDomain(format!(
                        "phi2 is a colouring of the nonnegative reals, got {x}"
                    )));
                }
                let l = self.l.expect("phi2 has L");
                let l_rat = rat(l as i64);
                if *x < l_rat {
                    return Ok(0);
                }
                let (i, shell_lo) = self.shell_index(x, &l_rat);
                // Cell width (K^(i+1) - K^i) = shell width / L.
                let width = (&shell_lo * rat(self.k as i64) - &shell_lo) / &l_rat;
                let j = rat_floor(&((x - &shell_lo) / &width))
                    .to_u64()
                    .expect("cell index fits")
                    + 1;
                debug_assert!(1 <= j && j <= l);
                Ok(if i % 2 == 1 {
                    j as u32
                } else {
                    l as u32 + j as u32
                })
            }
        }
    }
}

fn sorted_1d(pattern: &PatternPair) -> Result<(Vec<Rat>, usize)> {
    if pattern.dim() != 1 {
        return Err(Error::DimensionMismatch {
            expected: 1,
            got: pattern.dim(),
        });
    }
    let mut xs: Vec<(Rat, bool)> = pattern
        .points()
        .iter()
        .enumerate()
        .map(|(i, p)| (p.x().clone(), i == pattern.origin_index()))
        .collect();
    xs.sort_by(|a, b| a.0.cmp(&b.0));
    let pos = xs.iter().position(|(_, is_origin)| *is_origin).unwrap();
    Ok((xs.into_iter().map(|(x, _)| x).collect(), pos))
}

/// Least integer `K` with `K > (p4-p2)/(p2-p1) + 1`.
fn minimal_k(ps: &[Rat]) -> Result<u64> {
    let ratio = (&ps[3] - &ps[1]) / (&ps[1] - &ps[0]);
    let bound = ratio + rat(1);
    let k = rat_floor(&bound).to_u64().ok_or_else(|| {
        Error::InvalidParameter("pattern spread too large for shell base".into())
    })? + 1;
    Ok(k.max(2))
}

fn ratio_ceil(r: &Rat) -> Result<u64> {
    r.ceil()
        .to_integer()
        .to_u64()
        .ok_or_else(|| Error::InvalidParameter("nonpositive cell ratio".into()))
}
