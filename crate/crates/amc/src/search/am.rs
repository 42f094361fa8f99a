//! Exhaustive searches for almost-monochromatic copies.
//!
//! Homothets `c + lambda S` are enumerated with `lambda` ascending over the
//! window's scale grid and the translation in row-major order, so the
//! returned witness is the lexicographic minimum of the enumeration and
//! does not depend on the worker count. Similar copies compose the
//! homothets with rational rotations.


use crate::colouring::Colouring;
use crate::error::{Error, Result};
use crate::geometry::point::{PatternPair, Point};
use crate::geometry::rotation::{rational_rotations_2d, RationalRotation};
use crate::geometry::similarity::SimilarityMap;
use crate::rational::{format_rat, Rat};

use super::exec::{Executor, SearchOptions};
use super::window::Window;
use super::witness::{EnumerationBounds, Evidence, Witness, WitnessKind};

/// Searches all positive homothets of the pattern inside the window with
/// `0 < lambda <= lambda_max`. Returns the first almost-monochromatic copy
/// in `(lambda, c)` order, else `Exhausted` with exact bounds.
pub fn search_am_homothet(
    oracle: &Colouring,
    pattern: &PatternPair,
    window: &Window,
    lambda_max: &Rat,
    opts: SearchOptions,
) -> Result<Witness> {
    let transforms = vec![RationalRotation {
        params: None,
        matrix: crate::geometry::matrix::RatMatrix::identity(pattern.dim()),
    }];
    scan_am(
        oracle,
        pattern,
        window,
        lambda_max,
        &transforms,
        opts,
        "am_homothet",
    )
}

/// As `search_am_homothet`, but the transform additionally ranges over the
/// rational rotations of the plane with parameters up to `max_rot_param`
/// (identity first). Rotation is the outermost enumeration coordinate.
pub fn search_am_similar_2d(
    oracle: &Colouring,
    pattern: &PatternPair,
    window: &Window,
    lambda_max: &Rat,
    max_rot_param: u64,
    opts: SearchOptions,
) -> Result<Witness> {
    if pattern.dim() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            got: pattern.dim(),
        });
    }
    let rotations = rational_rotations_2d(max_rot_param)?;
    scan_am(
        oracle,
        pattern,
        window,
        lambda_max,
        &rotations,
        opts,
        "am_similar_2d",
    )
}

fn scan_am(
    oracle: &Colouring,
    pattern: &PatternPair,
    window: &Window,
    lambda_max: &Rat,
    rotations: &[RationalRotation],
    opts: SearchOptions,
    tag: &str,
) -> Result<Witness> {
    if pattern.dim() != window.dim() {
        return Err(Error::DimensionMismatch {
            expected: window.dim(),
            got: pattern.dim(),
        });
    }
    if matches!(window, Window::ZBox { .. }) && !pattern.is_integral() {
        return Err(Error::EmptyEnumeration(
            "integer window cannot host a non-integer pattern under integer scales".into(),
        ));
    }
    let lambdas = window.lambda_grid(lambda_max);
    if lambdas.is_empty() {
        return Err(Error::EmptyEnumeration(format!(
            "no admissible scales up to {}",
            format_rat(lambda_max)
        )));
    }
    let exec = Executor::new(opts);
    let anchor_index = anchor_index(pattern);
    let anchor_point = &pattern.points()[anchor_index];
    let mut candidates_total: u64 = 0;

    for rotation in rotations {
        // Exact rotated offsets s - anchor for every pattern point.
        let offsets: Vec<Point> = pattern
            .points()
            .iter()
            .map(|s| rotation.matrix.apply(&s.sub(anchor_point)?))
            .collect::<Result<_>>()?;
        for lambda in &lambdas {
            let scaled: Vec<Point> = offsets.iter().map(|o| o.scale(lambda)).collect();
            let grids = restricted_anchor_grids(window, &scaled);
            let total: u64 = grids.iter().map(|g| g.len() as u64).product();
            candidates_total += total;
            if total == 0 {
                continue;
            }
            let hit = exec.find_first(total as usize, |idx| {
                let anchor = grid_point(&grids, idx);
                am_at(oracle, window, pattern, &scaled, &anchor)
            });
            if let Some(evidence) = hit {
                let translation = evidence[anchor_index]
                    .0
                    .sub(&rotation.matrix.apply(anchor_point)?.scale(lambda))?;
                let map = SimilarityMap::new(
                    lambda.clone(),
                    rotation.matrix.clone(),
                    translation,
                )?;
                let bounds = EnumerationBounds {
                    window: window.describe(),
                    lambda_grid: Some(lambda_grid_name(window)),
                    lambda_count: Some(lambdas.len() as u64),
                    rotation_count: Some(rotations.len() as u64),
                    candidates_checked: None,
                    stage: None,
                };
                let w = Witness::new(
                    WitnessKind::AmCopy,
                    oracle,
                    bounds,
                    &space_description(tag, oracle, pattern, window, lambda_max, rotations.len()),
                )
                .with_transform(&map)
                .with_evidence(
                    evidence
                        .iter()
                        .map(|(p, c)| Evidence::new(p, *c))
                        .collect(),
                    Some(pattern.origin_index()),
                );
                return Ok(w);
            }
        }
    }

    Ok(Witness::new(
        WitnessKind::Exhausted,
        oracle,
        EnumerationBounds {
            window: window.describe(),
            lambda_grid: Some(lambda_grid_name(window)),
            lambda_count: Some(lambdas.len() as u64),
            rotation_count: Some(rotations.len() as u64),
            candidates_checked: Some(candidates_total),
            stage: None,
        },
        &space_description(tag, oracle, pattern, window, lambda_max, rotations.len()),
    ))
}

/// Index of the lexicographically smallest pattern point; its image is the
/// enumerated anchor, so translations appear in row-major order.
fn anchor_index(pattern: &PatternPair) -> usize {
    pattern
        .points()
        .iter()
        .enumerate()
        .min_by(|(_, a), (_, b)| a.cmp(b))
        .map(|(i, _)| i)
        .expect("patterns are nonempty")
}

/// Per-axis anchor grids restricted so that `anchor + offset` can stay in
/// the window for the componentwise extremes of the scaled offsets.
fn restricted_anchor_grids(window: &Window, scaled_offsets: &[Point]) -> Vec<Vec<Rat>> {
    let d = window.dim();
    (0..d)
        .map(|axis| {
            let mut min_off: Option<Rat> = None;
            let mut max_off: Option<Rat> = None;
            for o in scaled_offsets {
                let v = o.coord(axis);
                if min_off.as_ref().is_none_or(|m| v < m) {
                    min_off = Some(v.clone());
                }
                if max_off.as_ref().is_none_or(|m| v > m) {
                    max_off = Some(v.clone());
                }
            }
            let (min_off, max_off) = (min_off.unwrap(), max_off.unwrap());
            let lo = window.lower().coord(axis) - &min_off;
            let hi = window.upper().coord(axis) - &max_off;
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

/// Evaluates one candidate: all images must lie in the window, the points
/// other than the distinguished one must share a colour, and the
/// distinguished image must differ.
fn am_at(
    oracle: &Colouring,
    window: &Window,
    pattern: &PatternPair,
    scaled_offsets: &[Point],
    anchor: &Point,
) -> Option<Vec<(Point, u32)>> {
    let n = scaled_offsets.len();
    let oi = pattern.origin_index();
    let mut out: Vec<Option<(Point, u32)>> = vec![None; n];
    let mut rest_colour: Option<u32> = None;
    for i in 0..n {
        if i == oi {
            continue;
        }
        let p = anchor.add(&scaled_offsets[i]).ok()?;
        if !window.contains(&p).ok()? {
            return None;
        }
        let c = oracle.colour(&p).ok()?;
        match rest_colour {
            None => rest_colour = Some(c),
            Some(rc) if rc != c => return None,
            _ => {}
        }
        out[i] = Some((p, c));
    }
    let rest_colour = rest_colour?;
    let origin_pt = anchor.add(&scaled_offsets[oi]).ok()?;
    if !window.contains(&origin_pt).ok()? {
        return None;
    }
    let origin_colour = oracle.colour(&origin_pt).ok()?;
    if origin_colour == rest_colour {
        return None;
    }
    out[oi] = Some((origin_pt, origin_colour));
    Some(out.into_iter().map(|e| e.expect("filled")).collect())
}

fn lambda_grid_name(window: &Window) -> String {
    match window {
        Window::ZBox { .. } => "positive integers".into(),
        Window::QBox {
            denominator_bound, ..
        } => format!("positive rationals with denominator <= {denominator_bound}"),
    }
}

fn space_description(
    tag: &str,
    oracle: &Colouring,
    pattern: &PatternPair,
    window: &Window,
    lambda_max: &Rat,
    rotation_count: usize,
) -> String {
    let pts: Vec<String> = pattern
        .points()
        .iter()
        .map(|p| p.to_strings().join(","))
        .collect();
    format!(
        "{tag}|oracle={}|window={}|pattern=({})@{}|lambda_max={}|rotations={rotation_count}",
        oracle.name(),
        window.describe(),
        pts.join(";"),
        pattern.origin_index(),
        format_rat(lambda_max),
    )
}

/// Convenience check used by fixtures: is the explicit point list an AM
/// copy under the oracle?
pub fn is_am_under(oracle: &Colouring, points: &[Point], origin_index: usize) -> Result<bool> {
    let mut rest: Option<u32> = None;
    for (i, p) in points.iter().enumerate() {
        let c = oracle.colour(p)?;
        if i == origin_index {
            continue;
        }
        match rest {
            None => rest = Some(c),
            Some(rc) if rc != c => return Ok(false),
            _ => {}
        }
    }
    let rest = rest.ok_or_else(|| Error::InvalidParameter("need at least 2 points".into()))?;
    Ok(oracle.colour(&points[origin_index])? != rest)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};

    #[test]
    fn mod3_on_n_is_exhausted() {
        // Colouring n mod 3 never contains an AM homothet of ({1,2,3}, 2).
        let oracle = Colouring::residue(3);
        let pattern = PatternPair::from_ints_1d(&[1, 2, 3], 2).unwrap();
        let w = Window::z_interval(1, 300).unwrap();
        let witness =
            search_am_homothet(&oracle, &pattern, &w, &rat(20), SearchOptions::default()).unwrap();
        assert_eq!(witness.kind, WitnessKind::Exhausted);
        assert!(witness.enumeration.candidates_checked.unwrap() > 0);
    }

    #[test]
    fn dyadic_q_window_finds_am_copy() {
        let oracle = Colouring::dyadic();
        let pattern = PatternPair::from_ints_1d(&[0, 1, 2], 0).unwrap();
        let w = Window::q_interval(1, 10, 4).unwrap();
        let witness =
            search_am_homothet(&oracle, &pattern, &w, &rat(4), SearchOptions::default()).unwrap();
        assert_eq!(witness.kind, WitnessKind::AmCopy);
        witness.revalidate(&oracle).unwrap();
        // {2,3,4} itself is a valid AM copy: 2 is blue, 3 and 4 red.
        let pts: Vec<Point> = [2i64, 3, 4]
            .iter()
            .map(|&v| Point::from_ints(&[v]).unwrap())
            .collect();
        assert!(is_am_under(&oracle, &pts, 0).unwrap());
    }

    #[test]
    fn half_line_colouring_is_exhausted_for_middle_origin() {
        let oracle = Colouring::half_line();
        let pattern = PatternPair::from_ints_1d(&[1, 2, 3], 2).unwrap();
        let w = Window::q_interval(-10, 10, 3).unwrap();
        let witness =
            search_am_homothet(&oracle, &pattern, &w, &rat(5), SearchOptions::default()).unwrap();
        assert_eq!(witness.kind, WitnessKind::Exhausted);
    }

    #[test]
    fn single_colour_oracle_is_exhausted() {
        let oracle = Colouring::constant(1);
        let pattern = PatternPair::from_ints_1d(&[0, 1, 2], 0).unwrap();
        let w = Window::z_interval(0, 40).unwrap();
        let witness =
            search_am_homothet(&oracle, &pattern, &w, &rat(3), SearchOptions::default()).unwrap();
        assert_eq!(witness.kind, WitnessKind::Exhausted);
    }

    #[test]
    fn first_witness_is_lexicographic_and_jobs_invariant() {
        let oracle = Colouring::dyadic();
        let pattern = PatternPair::from_ints_1d(&[0, 1, 2], 0).unwrap();
        let w = Window::q_interval(-64, 64, 8).unwrap();
        let w1 =
            search_am_homothet(&oracle, &pattern, &w, &rat(16), SearchOptions::default()).unwrap();
        let w4 = search_am_homothet(
            &oracle,
            &pattern,
            &w,
            &rat(16),
            SearchOptions::with_jobs(4),
        )
        .unwrap();
        assert_eq!(w1, w4);
        assert_eq!(w1.kind, WitnessKind::AmCopy);
        // Computed independently: lambda = 1/8 anchored at -255/4.
        let evidence: Vec<String> = w1.evidence.iter().map(|e| e.point[0].clone()).collect();
        assert_eq!(evidence, vec!["-255/4", "-509/8", "-127/2"]);
        assert_eq!(w1.transform.as_ref().unwrap().scale, "1/8");
    }

    #[test]
    fn similar_search_reports_rotation_count() {
        let oracle = Colouring::half_plane_2d();
        let pattern = PatternPair::new(
            vec![
                Point::from_ints(&[0, 0]).unwrap(),
                Point::from_ints(&[1, 1]).unwrap(),
                Point::from_ints(&[2, 2]).unwrap(),
            ],
            1,
        )
        .unwrap();
        let w = Window::z_box(
            Point::from_ints(&[-8, -8]).unwrap(),
            Point::from_ints(&[8, 8]).unwrap(),
        )
        .unwrap();
        let witness = search_am_similar_2d(
            &oracle,
            &pattern,
            &w,
            &rat(3),
            3,
            SearchOptions::default(),
        )
        .unwrap();
        // Collinear pattern with middle origin on the half-plane rule can
        // never be almost monochromatic.
        assert_eq!(witness.kind, WitnessKind::Exhausted);
        assert_eq!(witness.enumeration.rotation_count, Some(4));
    }

    #[test]
    fn empty_scale_grid_is_an_error() {
        let oracle = Colouring::constant(1);
        let pattern = PatternPair::from_ints_1d(&[0, 1, 2], 0).unwrap();
        let w = Window::z_interval(0, 5).unwrap();
        assert!(matches!(
            search_am_homothet(&oracle, &pattern, &w, &ratio(1, 2), SearchOptions::default()),
            Err(Error::EmptyEnumeration(_))
        ));
    }
}
