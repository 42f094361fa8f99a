//! Finite search windows over Z^d boxes and bounded-denominator rational
//! boxes.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::geometry::point::Point;
use crate::rational::{format_rat, Rat};

/// A finite box window. `ZBox` enumerates integer points; `QBox` enumerates
/// the rationals with reduced denominator at most `N` in each coordinate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Window {
    ZBox { lower: Point, upper: Point },
    QBox { lower: Point, upper: Point, denominator_bound: u64 },
}

impl Window {
    pub fn z_box(lower: Point, upper: Point) -> Result<Window> {
        check_box(&lower, &upper)?;
        if !lower.is_integral() || !upper.is_integral() {
            return Err(Error::InvalidParameter(
                "integer window needs integer bounds".into(),
            ));
        }
        Ok(Window::ZBox { lower, upper })
    }

    /// 1-D integer window `[lo, hi]`.
    pub fn z_interval(lo: i64, hi: i64) -> Result<Window> {
        Window::z_box(Point::from_ints(&[lo])?, Point::from_ints(&[hi])?)
    }

    pub fn q_box(lower: Point, upper: Point, denominator_bound: u64) -> Result<Window> {
        check_box(&lower, &upper)?;
        if denominator_bound < 1 {
            return Err(Error::InvalidParameter(
                "denominator bound must be at least 1".into(),
            ));
        }
        Ok(Window::QBox {
            lower,
            upper,
            denominator_bound,
        })
    }

    /// 1-D rational window.
    pub fn q_interval(lo: i64, hi: i64, denominator_bound: u64) -> Result<Window> {
        Window::q_box(
            Point::from_ints(&[lo])?,
            Point::from_ints(&[hi])?,
            denominator_bound,
        )
    }

    pub fn dim(&self) -> usize {
        match self {
            Window::ZBox { lower, .. } | Window::QBox { lower, .. } => lower.dim(),
        }
    }

    pub fn lower(&self) -> &Point {
        match self {
            Window::ZBox { lower, .. } | Window::QBox { lower, .. } => lower,
        }
    }

    pub fn upper(&self) -> &Point {
        match self {
            Window::ZBox { upper, .. } | Window::QBox { upper, .. } => upper,
        }
    }

    pub fn denominator_bound(&self) -> Option<u64> {
        match self {
            Window::ZBox { .. } => None,
            Window::QBox {
                denominator_bound, ..
            } => Some(*denominator_bound),
        }
    }

    /// Exact membership: inside the box, and (for `QBox`) every reduced
    /// denominator within the bound; (for `ZBox`) integral.
    pub fn contains(&self, p: &Point) -> Result<bool> {
        if p.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: p.dim(),
            });
        }
        let inside = p
            .coords()
            .iter()
            .zip(self.lower().coords())
            .zip(self.upper().coords())
            .all(|((x, lo), hi)| x >= lo && x <= hi);
        if !inside {
            return Ok(false);
        }
        Ok(match self {
            Window::ZBox { .. } => p.is_integral(),
            Window::QBox {
                denominator_bound, ..
            } => p
                .coords()
                .iter()
                .all(|c| c.denom() <= &BigInt::from(*denominator_bound)),
        })
    }

    /// The sorted coordinate grid along one axis.
    pub fn axis_grid(&self, axis: usize) -> Vec<Rat> {
        let lo = self.lower().coord(axis);
        let hi = self.upper().coord(axis);
        match self {
            Window::ZBox { .. } => {
                let mut v = Vec::new();
                let mut x = lo.ceil();
                while &x <= hi {
                    v.push(x.clone());
                    x += Rat::one();
                }
                v
            }
            Window::QBox {
                denominator_bound, ..
            } => rational_grid(lo, hi, *denominator_bound),
        }
    }

    /// Row-major enumeration of all window points (last axis fastest).
    pub fn points(&self) -> Vec<Point> {
        let grids: Vec<Vec<Rat>> = (0..self.dim()).map(|a| self.axis_grid(a)).collect();
        let mut out = Vec::new();
        let mut idx = vec![0usize; grids.len()];
        if grids.iter().any(|g| g.is_empty()) {
            return out;
        }
        loop {
            out.push(
                Point::new(
                    idx.iter()
                        .enumerate()
                        .map(|(a, &i)| grids[a][i].clone())
                        .collect(),
                )
                .expect("window dims valid"),
            );
            // increment, last axis fastest
            let mut a = grids.len();
            loop {
                if a == 0 {
                    return out;
                }
                a -= 1;
                idx[a] += 1;
                if idx[a] < grids[a].len() {
                    break;
                }
                idx[a] = 0;
                if a == 0 {
                    return out;
                }
            }
        }
    }

    /// Total number of grid points.
    pub fn point_count(&self) -> u64 {
        (0..self.dim())
            .map(|a| self.axis_grid(a).len() as u64)
            .product()
    }

    /// Scale grid for homothety searches: positive integers up to
    /// `lambda_max` for `ZBox`; positive rationals with denominator at most
    /// the window bound for `QBox`. Ascending.
    pub fn lambda_grid(&self, lambda_max: &Rat) -> Vec<Rat> {
        match self {
            Window::ZBox { .. } => {
                let mut v = Vec::new();
                let mut x = Rat::one();
                while &x <= lambda_max {
                    v.push(x.clone());
                    x += Rat::one();
                }
                v
            }
            Window::QBox {
                denominator_bound, ..
            } => {
                let zero = Rat::from_integer(BigInt::from(0));
                rational_grid(&zero, lambda_max, *denominator_bound)
                    .into_iter()
                    .filter(|x| x.is_positive())
                    .collect()
            }
        }
    }

    /// Stable description used in search-space digests.
    pub fn describe(&self) -> String {
        match self {
            Window::ZBox { lower, upper } => format!(
                "Z[{}..{}]",
                lower.to_strings().join(","),
                upper.to_strings().join(",")
            ),
            Window::QBox {
                lower,
                upper,
                denominator_bound,
            } => format!(
                "Q{}[{}..{}]",
                denominator_bound,
                lower.to_strings().join(","),
                upper.to_strings().join(",")
            ),
        }
    }
}

/// Sorted, deduplicated rationals with reduced denominator at most `bound`
/// in `[lo, hi]`.
pub fn rational_grid(lo: &Rat, hi: &Rat, bound: u64) -> Vec<Rat> {
    let mut out: Vec<Rat> = Vec::new();
    for b in 1..=bound {
        let den = BigInt::from(b);
        let start = (lo * Rat::from_integer(den.clone())).ceil().to_integer();
        let stop = (hi * Rat::from_integer(den.clone())).floor().to_integer();
        let mut a = start;
        while a <= stop {
            if b == 1 || a.gcd(&den).is_one() {
                out.push(Rat::new(a.clone(), den.clone()));
            }
            a += BigInt::one();
        }
    }
    out.sort();
    out
}

fn check_box(lower: &Point, upper: &Point) -> Result<()> {
    if lower.dim() != upper.dim() {
        return Err(Error::DimensionMismatch {
            expected: lower.dim(),
            got: upper.dim(),
        });
    }
    for (lo, hi) in lower.coords().iter().zip(upper.coords()) {
        if lo > hi {
            return Err(Error::InvalidParameter(format!(
                "window lower bound {} exceeds upper bound {}",
                format_rat(lo),
                format_rat(hi)
            )));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};

    #[test]
    fn z_interval_grid() {
        let w = Window::z_interval(-2, 3).unwrap();
        assert_eq!(w.point_count(), 6);
        assert!(w.contains(&Point::from_ints(&[0]).unwrap()).unwrap());
        assert!(!w.contains(&Point::scalar(ratio(1, 2))).unwrap());
    }

    #[test]
    fn rational_grid_is_reduced_and_sorted() {
        let g = rational_grid(&rat(0), &rat(1), 3);
        let expect: Vec<Rat> = vec![
            rat(0),
            ratio(1, 3),
            ratio(1, 2),
            ratio(2, 3),
            rat(1),
        ];
        assert_eq!(g, expect);
    }

    #[test]
    fn q_window_membership_checks_denominators() {
        let w = Window::q_interval(0, 2, 4).unwrap();
        assert!(w.contains(&Point::scalar(ratio(3, 4))).unwrap());
        assert!(!w.contains(&Point::scalar(ratio(1, 5))).unwrap());
        assert!(!w.contains(&Point::scalar(ratio(7, 2))).unwrap());
    }

    #[test]
    fn lambda_grids() {
        let wz = Window::z_interval(0, 10).unwrap();
        assert_eq!(wz.lambda_grid(&rat(3)), vec![rat(1), rat(2), rat(3)]);
        let wq = Window::q_interval(0, 10, 2).unwrap();
        assert_eq!(
            wq.lambda_grid(&rat(2)),
            vec![ratio(1, 2), rat(1), ratio(3, 2), rat(2)]
        );
    }

    #[test]
    fn row_major_point_order() {
        let w = Window::z_box(
            Point::from_ints(&[0, 0]).unwrap(),
            Point::from_ints(&[1, 1]).unwrap(),
        )
        .unwrap();
        let pts = w.points();
        let expect: Vec<Point> = vec![
            Point::from_ints(&[0, 0]).unwrap(),
            Point::from_ints(&[0, 1]).unwrap(),
            Point::from_ints(&[1, 0]).unwrap(),
            Point::from_ints(&[1, 1]).unwrap(),
        ];
        assert_eq!(pts, expect);
    }
}
