//! Exact extreme-point test via rational linear feasibility.
//!
//! `s0` is an extreme point of `S` iff no convex combination of the other
//! points equals it. That is a phase-one simplex feasibility question over
//! exact rationals; Bland's rule keeps it finite.

use num_traits::{One, Signed, Zero};

use crate::error::Result;
use crate::geometry::point::{PatternPair, Point};
use crate::rational::Rat;

/// True iff the distinguished point lies outside the convex hull of the
/// remaining points. Decided exactly.
pub fn is_extreme_point(pair: &PatternPair) -> bool {
    let others: Vec<&Point> = pair.rest().collect();
    !in_convex_hull(pair.origin(), &others)
}

/// Exact membership of `target` in the convex hull of `points`.
pub fn in_convex_hull(target: &Point, points: &[&Point]) -> bool {
    if points.is_empty() {
        return false;
    }
    let d = target.dim();
    let m = points.len();
    // Feasibility of: sum mu_j p_j = target, sum mu_j = 1, mu >= 0.
    let mut rows: Vec<Vec<Rat>> = Vec::with_capacity(d + 1);
    for i in 0..d {
        let mut row: Vec<Rat> = points.iter().map(|p| p.coord(i).clone()).collect();
        row.push(target.coord(i).clone());
        rows.push(row);
    }
    let mut last: Vec<Rat> = vec![Rat::one(); m];
    last.push(Rat::one());
    rows.push(last);
    simplex_feasible(rows, m)
}

/// Phase-one simplex over rationals. `rows` holds `[A | b]`; decides whether
/// `A x = b` admits `x >= 0`. Bland's rule, dense tableau.
fn simplex_feasible(mut rows: Vec<Vec<Rat>>, nvars: usize) -> bool {
    let ncons = rows.len();
    // Make b >= 0.
    for row in rows.iter_mut() {
        if row[nvars].is_negative() {
            for v in row.iter_mut() {
                *v = -v.clone();
            }
        }
    }
    // Tableau columns: nvars originals + ncons artificials + rhs.
    let width = nvars + ncons + 1;
    let mut t: Vec<Vec<Rat>> = Vec::with_capacity(ncons + 1);
    for (i, row) in rows.iter().enumerate() {
        let mut r = vec![Rat::zero(); width];
        r[..nvars].clone_from_slice(&row[..nvars]);
        r[nvars + i] = Rat::one();
        r[width - 1] = row[nvars].clone();
        t.push(r);
    }
    // Objective: minimise sum of artificials; reduced costs after pricing out
    // the artificial basis are -(column sums of A), rhs -(sum b).
    let mut obj = vec![Rat::zero(); width];
    for j in 0..nvars {
        obj[j] = -(0..ncons).map(|i| t[i][j].clone()).sum::<Rat>();
    }
    obj[width - 1] = -(0..ncons).map(|i| t[i][width - 1].clone()).sum::<Rat>();
    let mut basis: Vec<usize> = (nvars..nvars + ncons).collect();

    loop {
        // Bland: entering = lowest-index column with negative reduced cost.
        let Some(enter) = (0..width - 1).find(|&j| obj[j].is_negative()) else {
            break;
        };
        // Ratio test; Bland tie-break on basis variable index.
        let mut leave: Option<(usize, Rat)> = None;
        for i in 0..ncons {
            if t[i][enter].is_positive() {
                let ratio = &t[i][width - 1] / &t[i][enter];
                match &leave {
                    Some((li, lr)) => {
                        if ratio < *lr || (ratio == *lr && basis[i] < basis[*li]) {
                            leave = Some((i, ratio));
                        }
                    }
                    None => leave = Some((i, ratio)),
                }
            }
        }
        let Some((pivot_row, _)) = leave else {
            // Unbounded phase-one cannot happen (objective bounded below by 0);
            // treat defensively as infeasible.
            return false;
        };
        // Pivot.
        let inv = t[pivot_row][enter].clone();
        for v in t[pivot_row].iter_mut() {
            *v = &*v / &inv;
        }
        for i in 0..ncons {
            if i != pivot_row && !t[i][enter].is_zero() {
                let f = t[i][enter].clone();
                for j in 0..width {
                    let delta = &f * &t[pivot_row][j];
                    t[i][j] -= delta;
                }
            }
        }
        if !obj[enter].is_zero() {
            let f = obj[enter].clone();
            for j in 0..width {
                let delta = &f * &t[pivot_row][j];
                obj[j] -= delta;
            }
        }
        basis[pivot_row] = enter;
    }
    // Feasible iff the artificial objective reaches zero.
    obj[width - 1].is_zero()
}

/// Brute-force hull membership over convex combinations with bounded
/// denominator. Test oracle for the simplex path; exponential, keep the
/// inputs tiny.
pub fn in_hull_bounded_denominators(
    target: &Point,
    points: &[&Point],
    max_denominator: u64,
) -> Result<bool> {
    let m = points.len();
    for den in 1..=max_denominator {
        let mut weights = vec![0u64; m];
        if search_weights(target, points, den, 0, den, &mut weights)? {
            return Ok(true);
        }
    }
    Ok(false)
}

fn search_weights(
    target: &Point,
    points: &[&Point],
    den: u64,
    idx: usize,
    remaining: u64,
    weights: &mut Vec<u64>,
) -> Result<bool> {
    if idx == points.len() - 1 {
        weights[idx] = remaining;
        let mut acc = Point::origin(target.dim())?;
        for (w, p) in weights.iter().zip(points) {
            acc = acc.add(&p.scale(&crate::rational::ratio(*w as i64, den as i64)))?;
        }
        return Ok(&acc == target);
    }
    for w in 0..=remaining {
        weights[idx] = w;
        if search_weights(target, points, den, idx + 1, remaining - w, weights)? {
            return Ok(true);
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn endpoint_of_collinear_set_is_extreme() {
        let pair = PatternPair::from_ints_1d(&[0, 1, 2], 0).unwrap();
        assert!(is_extreme_point(&pair));
    }

    #[test]
    fn midpoint_is_not_extreme() {
        let pair = PatternPair::from_ints_1d(&[0, 1, 2], 1).unwrap();
        assert!(!is_extreme_point(&pair));
    }

    #[test]
    fn corner_pattern_origin_is_extreme() {
        let pair = PatternPair::new(
            vec![
                Point::from_ints(&[0, 1]).unwrap(),
                Point::from_ints(&[1, 1]).unwrap(),
                Point::from_ints(&[1, 0]).unwrap(),
            ],
            1,
        )
        .unwrap();
        assert!(is_extreme_point(&pair));
    }

    #[test]
    fn interior_of_triangle_is_not_extreme() {
        let pair = PatternPair::new(
            vec![
                Point::from_ints(&[0, 0]).unwrap(),
                Point::from_ints(&[3, 0]).unwrap(),
                Point::from_ints(&[0, 3]).unwrap(),
                Point::from_ints(&[1, 1]).unwrap(),
            ],
            3,
        )
        .unwrap();
        assert!(!is_extreme_point(&pair));
        // Degenerate scale: the same point barely on an edge.
        let edge = PatternPair::new(
            vec![
                Point::from_ints(&[0, 0]).unwrap(),
                Point::from_ints(&[2, 2]).unwrap(),
                Point::from_ints(&[1, 1]).unwrap(),
                Point::from_ints(&[5, 0]).unwrap(),
            ],
            2,
        )
        .unwrap();
        assert!(!is_extreme_point(&edge));
    }

    #[test]
    fn hull_membership_handles_rational_targets() {
        let a = Point::from_ints(&[0, 0]).unwrap();
        let b = Point::from_ints(&[1, 0]).unwrap();
        let c = Point::from_ints(&[0, 1]).unwrap();
        let inside = Point::new(vec![crate::rational::ratio(1, 3), crate::rational::ratio(1, 3)])
            .unwrap();
        assert!(in_convex_hull(&inside, &[&a, &b, &c]));
        let outside = Point::new(vec![rat(1), rat(1)]).unwrap();
        assert!(!in_convex_hull(&outside, &[&a, &b, &c]));
    }
}
