//! Monochromatic arithmetic-progression probes over finite windows.

use num_traits::{Signed, ToPrimitive, Zero};

use crate::colouring::Colouring;
use crate::error::{Error, Result};
use crate::geometry::point::Point;
use crate::rational::{format_rat, rat, Rat};

use super::window::{rational_grid, Window};
use super::witness::{EnumerationBounds, Evidence, Witness, WitnessKind};

/// Finds a monochromatic `n_terms`-progression with difference bounded by
/// `t_max` inside the window, or exhausts. In dimension one the difference
/// ranges over the window's positive steps; in Z^d it ranges over canonical
/// integer direction vectors with entries bounded by `t_max`.
pub fn probe_mono_ap(
    oracle: &Colouring,
    window: &Window,
    n_terms: u32,
    t_max: &Rat,
    ) -> Result<Witness> {
    if n_terms < 3 {
        return Err(Error::InvalidParameter(
            "progressions need at least 3 terms".into(),
        ));
    }
    let directions = direction_grid(window, t_max)?;
    let starts = window.points();
    let space = format!(
        "mono_ap|oracle={}|window={}|n={}|t_max={}|directions={}",
        oracle.name(),
        window.describe(),
        n_terms,
        format_rat(t_max),
        directions.len()
    );
    for dir in &directions {
        'starts: for a in &starts {
            let mut pts = Vec::with_capacity(n_terms as usize);
            let mut colour: Option<u32> = None;
            for k in 0..n_terms {
                let p = a.add(&dir.scale(&rat(k as i64)))?;
                if !window.contains(&p)? {
                    continue 'starts;
                }
                let c = oracle.colour(&p)?;
                match colour {
                    None => colour = Some(c),
                    Some(c0) if c0 != c => continue 'starts,
                    _ => {}
                }
                pts.push((p, c));
            }
            let bounds = EnumerationBounds {
                window: window.describe(),
                candidates_checked: None,
                stage: None,
                ..Default::default()
            };
            return Ok(Witness::new(WitnessKind::MonoAp, oracle, bounds, &space)
                .with_evidence(
                    pts.iter().map(|(p, c)| Evidence::new(p, *c)).collect(),
                    None,
                ));
        }
    }
    Ok(Witness::new(
        WitnessKind::Exhausted,
        oracle,
        EnumerationBounds {
            window: window.describe(),
            candidates_checked: Some(directions.len() as u64 * starts.len() as u64),
            ..Default::default()
        },
        &space,
    ))
}

/// Ordered difference grid. 1-D: positive steps of the window grid up to
/// `t_max`. Z^d: nonzero integer vectors with sup-norm at most `t_max`,
/// first nonzero entry positive, in row-major order.
fn direction_grid(window: &Window, t_max: &Rat) -> Result<Vec<Point>> {
    if !t_max.is_positive() {
        return Err(Error::InvalidParameter(
            "difference bound must be positive".into(),
        ));
    }
    let d = window.dim();
    if d == 1 {
        let steps = match window {
            Window::ZBox { .. } => {
                let top = t_max.floor().to_integer().to_i64().unwrap_or(0);
                (1..=top).map(rat).collect::<Vec<_>>()
            }
            Window::QBox {
                denominator_bound, ..
            } => rational_grid(&Rat::zero(), t_max, *denominator_bound)
                .into_iter()
                .filter(|x| x.is_positive())
                .collect(),
        };
        return Ok(steps.into_iter().map(Point::scalar).collect());
    }
    match window {
        Window::ZBox { .. } => {
            let top = t_max.floor().to_integer().to_i64().unwrap_or(0);
            let mut out = Vec::new();
            let mut cur = vec![-top; d];
            loop {
                let first_nonzero = cur.iter().find(|&&v| v != 0);
                if let Some(&f) = first_nonzero {
                    if f > 0 {
                        out.push(Point::from_ints(&cur)?);
                    }
                }
                let mut axis = d;
                loop {
                    if axis == 0 {
                        out.sort_by(|a, b| a.coords().cmp(b.coords()));
                        return Ok(out);
                    }
                    axis -= 1;
                    cur[axis] += 1;
                    if cur[axis] <= top {
                        break;
                    }
                    cur[axis] = -top;
                    if axis == 0 {
                        out.sort_by(|a, b| a.coords().cmp(b.coords()));
                        return Ok(out);
                    }
                }
            }
        }
        Window::QBox { .. } => Err(Error::InvalidParameter(
            "multi-dimensional progression probes run on integer windows".into(),
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colouring::ExplicitTable;

    #[test]
    fn alternating_colouring_has_mono_3ap() {
        // R B R B R B R B R on [1,9]: first hit is {1,3,5} at difference 2.
        let oracle = Colouring::explicit(
            ExplicitTable::from_slice_1d(1, &[0, 1, 0, 1, 0, 1, 0, 1, 0]).unwrap(),
        );
        let w = Window::z_interval(1, 9).unwrap();
        let witness = probe_mono_ap(&oracle, &w, 3, &rat(4)).unwrap();
        assert_eq!(witness.kind, WitnessKind::MonoAp);
        let pts: Vec<String> = witness.evidence.iter().map(|e| e.point[0].clone()).collect();
        assert_eq!(pts, vec!["1", "3", "5"]);
        assert_eq!(witness.evidence[0].colour, 0);
    }

    #[test]
    fn constant_colouring_immediate() {
        let oracle = Colouring::constant(1);
        let w = Window::z_interval(1, 20).unwrap();
        let witness = probe_mono_ap(&oracle, &w, 5, &rat(3)).unwrap();
        assert_eq!(witness.kind, WitnessKind::MonoAp);
        assert_eq!(witness.evidence.len(), 5);
    }

    #[test]
    fn shell_colouring_has_mono_ap_inside_a_shell() {
        // Shells are single-coloured, so short progressions fitting inside
        // one shell are monochromatic: the first 6-term run at difference 1
        // starts at 5 (the shell [5,25) of phi1 with K = 5).
        let oracle = Colouring::phi1(5).unwrap();
        let w = Window::z_interval(1, 3000).unwrap();
        let witness = probe_mono_ap(&oracle, &w, 6, &rat(10)).unwrap();
        assert_eq!(witness.kind, WitnessKind::MonoAp);
        let pts: Vec<String> = witness.evidence.iter().map(|e| e.point[0].clone()).collect();
        assert_eq!(pts, vec!["5", "6", "7", "8", "9", "10"]);
        witness.revalidate(&oracle).unwrap();
    }

    #[test]
    fn planar_directions_are_canonical() {
        let w = Window::z_box(
            Point::from_ints(&[0, 0]).unwrap(),
            Point::from_ints(&[5, 5]).unwrap(),
        )
        .unwrap();
        let dirs = direction_grid(&w, &rat(1)).unwrap();
        // (0,1), (1,-1), (1,0), (1,1): first nonzero entry positive.
        assert_eq!(dirs.len(), 4);
        let oracle = Colouring::residue(2);
        let witness = probe_mono_ap(&oracle, &w, 3, &rat(1)).unwrap();
        assert_eq!(witness.kind, WitnessKind::MonoAp);
        witness.revalidate(&oracle).unwrap();
    }

    #[test]
    fn exhausted_when_no_ap_fits() {
        // 3 colours cycling kills every 3-AP with difference not divisible
        // by 3; differences 1 and 2 on a short window exhaust.
        let oracle = Colouring::residue(3);
        let w = Window::z_interval(1, 8).unwrap();
        let witness = probe_mono_ap(&oracle, &w, 3, &rat(2)).unwrap();
        assert_eq!(witness.kind, WitnessKind::Exhausted);
    }
}
