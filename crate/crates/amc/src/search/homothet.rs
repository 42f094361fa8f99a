//! Brute-force monochromatic positive homothets with integer scale: the
//! independent ground truth the Hales-Jewett route is checked against.


use crate::colouring::Colouring;
use crate::error::{Error, Result};
use crate::geometry::point::Point;
use crate::geometry::similarity::SimilarityMap;
use crate::rational::{rat, Rat};

use super::exec::{Executor, SearchOptions};
use super::window::Window;
use super::witness::{EnumerationBounds, Evidence, Witness, WitnessKind};

/// First monochromatic positive homothet `c + lambda S` with integer
/// `1 <= lambda <= lambda_max` and image inside the window, in
/// `(lambda, c)` order; `Exhausted` otherwise.
pub fn search_mono_homothet(
    oracle: &Colouring,
    points: &[Point],
    window: &Window,
    lambda_max: u64,
    opts: SearchOptions,
) -> Result<Witness> {
    if points.is_empty() {
        return Err(Error::InvalidParameter("empty point set".into()));
    }
    let d = window.dim();
    for p in points {
        if p.dim() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                got: p.dim(),
            });
        }
        if !p.is_integral() {
            return Err(Error::InvalidParameter(
                "homothet base set needs integer coordinates".into(),
            ));
        }
    }
    let anchor_idx = points
        .iter()
        .enumerate()
        .min_by(|(_, a), (_, b)| a.cmp(b))
        .map(|(i, _)| i)
        .unwrap();
    let offsets: Vec<Point> = points
        .iter()
        .map(|p| p.sub(&points[anchor_idx]))
        .collect::<Result<_>>()?;
    let exec = Executor::new(opts);
    let space = format!(
        "mono_homothet|oracle={}|window={}|set={}|lambda_max={lambda_max}",
        oracle.name(),
        window.describe(),
        points
            .iter()
            .map(|p| p.to_strings().join(","))
            .collect::<Vec<_>>()
            .join(";")
    );
    let mut candidates: u64 = 0;
    for lambda in 1..=lambda_max {
        let lam = rat(lambda as i64);
        let scaled: Vec<Point> = offsets.iter().map(|o| o.scale(&lam)).collect();
        let grids = anchor_grids(window, &scaled);
        let total: u64 = grids.iter().map(|g| g.len() as u64).product();
        candidates += total;
        if total == 0 {
            continue;
        }
        let hit = exec.find_first(total as usize, |idx| {
            let anchor = grid_point(&grids, idx);
            mono_at(oracle, window, &scaled, &anchor)
        });
        if let Some(evidence) = hit {
            let translation = evidence[anchor_idx].0.sub(&points[anchor_idx].scale(&lam))?;
            let map = SimilarityMap::homothety(lam, translation)?;
            return Ok(Witness::new(
                WitnessKind::MonoHomothet,
                oracle,
                EnumerationBounds {
                    window: window.describe(),
                    lambda_grid: Some("positive integers".into()),
                    lambda_count: Some(lambda_max),
                    ..Default::default()
                },
                &space,
            )
            .with_transform(&map)
            .with_evidence(
                evidence.iter().map(|(p, c)| Evidence::new(p, *c)).collect(),
                None,
            ));
        }
    }
    Ok(Witness::new(
        WitnessKind::Exhausted,
        oracle,
        EnumerationBounds {
            window: window.describe(),
            lambda_grid: Some("positive integers".into()),
            lambda_count: Some(lambda_max),
            candidates_checked: Some(candidates),
            ..Default::default()
        },
        &space,
    ))
}

fn anchor_grids(window: &Window, scaled_offsets: &[Point]) -> Vec<Vec<Rat>> {
    let d = window.dim();
    (0..d)
        .map(|axis| {
            let mut lo_off = scaled_offsets[0].coord(axis).clone();
            let mut hi_off = lo_off.clone();
            for o in scaled_offsets {
                let v = o.coord(axis);
                if v < &lo_off {
                    lo_off = v.clone();
                }
                if v > &hi_off {
                    hi_off = v.clone();
                }
            }
            let lo = window.lower().coord(axis) - &lo_off;
            let hi = window.upper().coord(axis) - &hi_off;
            window
                .axis_grid(axis)
                .into_iter()
                .filter(|x| *x >= lo && *x <= hi)
                .collect()
        })
        .collect()
}

fn grid_point(grids: &[Vec<Rat>], mut idx: usize) -> Point {
    let mut rev = Vec::with_capacity(grids.len());
    for g in grids.iter().rev() {
        rev.push(g[idx % g.len()].clone());
        idx /= g.len();
    }
    rev.reverse();
    Point::new(rev).expect("grid dims valid")
}

fn mono_at(
    oracle: &Colouring,
    window: &Window,
    scaled_offsets: &[Point],
    anchor: &Point,
) -> Option<Vec<(Point, u32)>> {
    let mut out = Vec::with_capacity(scaled_offsets.len());
    let mut colour: Option<u32> = None;
    for o in scaled_offsets {
        let p = anchor.add(o).ok()?;
        if !window.contains(&p).ok()? {
            return None;
        }
        let c = oracle.colour(&p).ok()?;
        match colour {
            None => colour = Some(c),
            Some(c0) if c0 != c => return None,
            _ => {}
        }
        out.push((p, c));
    }
    Some(out)
}

/// Number of integer lattice points of the closed ball of radius `r`
/// centred at the origin, as a pattern for grid expansion.
pub fn ball_pattern(dim: usize, radius: u64) -> Result<Vec<Point>> {
    let r2 = rat((radius * radius) as i64);
    let mut out = Vec::new();
    let side: Vec<i64> = (-(radius as i64)..=radius as i64).collect();
    let mut idx = vec![0usize; dim];
    loop {
        let coords: Vec<i64> = idx.iter().map(|&i| side[i]).collect();
        let p = Point::from_ints(&coords)?;
        if p.norm_sq() <= r2 {
            out.push(p);
        }
        let mut axis = dim;
        loop {
            if axis == 0 {
                out.sort();
                return Ok(out);
            }
            axis -= 1;
            idx[axis] += 1;
            if idx[axis] < side.len() {
                break;
            }
            idx[axis] = 0;
            if axis == 0 {
                out.sort();
                return Ok(out);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_colouring_hits_at_lambda_one() {
        let oracle = Colouring::constant(1);
        let s = vec![
            Point::from_ints(&[0]).unwrap(),
            Point::from_ints(&[1]).unwrap(),
            Point::from_ints(&[2]).unwrap(),
        ];
        let w = Window::z_interval(1, 9).unwrap();
        let witness =
            search_mono_homothet(&oracle, &s, &w, 4, SearchOptions::default()).unwrap();
        assert_eq!(witness.kind, WitnessKind::MonoHomothet);
        assert_eq!(witness.transform.as_ref().unwrap().scale, "1");
        let pts: Vec<String> = witness.evidence.iter().map(|e| e.point[0].clone()).collect();
        assert_eq!(pts, vec!["1", "2", "3"]);
    }

    #[test]
    fn checkerboard_needs_even_scale() {
        let oracle = Colouring::residue(2);
        let s = vec![
            Point::from_ints(&[0, 0]).unwrap(),
            Point::from_ints(&[1, 0]).unwrap(),
            Point::from_ints(&[0, 1]).unwrap(),
        ];
        let w = Window::z_box(
            Point::from_ints(&[0, 0]).unwrap(),
            Point::from_ints(&[10, 10]).unwrap(),
        )
        .unwrap();
        let witness =
            search_mono_homothet(&oracle, &s, &w, 4, SearchOptions::default()).unwrap();
        assert_eq!(witness.kind, WitnessKind::MonoHomothet);
        assert_eq!(witness.transform.as_ref().unwrap().scale, "2");
        witness.revalidate(&oracle).unwrap();
    }

    #[test]
    fn ball_pattern_counts() {
        // Closed disc of radius 2 in Z^2 has 13 points.
        assert_eq!(ball_pattern(2, 2).unwrap().len(), 13);
        assert_eq!(ball_pattern(1, 3).unwrap().len(), 7);
    }
}
