//! Grid expansion: either an almost-monochromatic copy appears, or a
//! monochromatic scaled sublattice fills the window.
//!
//! Stage one finds a monochromatic homothet of the integer ball pattern.
//! Stage two repeatedly inspects the scaled-lattice points within one step
//! of the verified monochromatic ball: an off-colour point yields an AM
//! copy through it (placing the pattern back into the verified region); if
//! none appears the ball grows, clamped to the window, until the window is
//! exhausted.

use num_traits::ToPrimitive;

use crate::colouring::Colouring;
use crate::error::{Error, Result};
use crate::geometry::point::{PatternPair, Point};
use crate::rational::{format_rat, rat, Rat};

use super::exec::SearchOptions;
use super::extend::extend_from_ball_z;
use super::homothet::{ball_pattern, search_mono_homothet};
use super::window::Window;
use super::witness::{EnumerationBounds, Evidence, Witness, WitnessKind};

pub struct GridExpandParams {
    pub ball_radius: u64,
    pub lambda_max: u64,
    pub max_rot_param: u64,
}

impl Default for GridExpandParams {
    fn default() -> Self {
        GridExpandParams {
            ball_radius: 2,
            lambda_max: 4,
            max_rot_param: 3,
        }
    }
}

pub fn grid_expand(
    oracle: &Colouring,
    pattern: &PatternPair,
    window: &Window,
    params: &GridExpandParams,
    opts: SearchOptions,
) -> Result<Witness> {
    if !crate::geometry::extreme::is_extreme_point(pattern) {
        return Err(Error::OriginNotExtreme);
    }
    if !matches!(window, Window::ZBox { .. }) {
        return Err(Error::InvalidParameter(
            "grid expansion runs on integer windows".into(),
        ));
    }
    let d = window.dim();
    if pattern.dim() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            got: pattern.dim(),
        });
    }
    let space = format!(
        "grid_expand|oracle={}|window={}|R={}|lambda_max={}|rot={}",
        oracle.name(),
        window.describe(),
        params.ball_radius,
        params.lambda_max,
        params.max_rot_param
    );

    // Stage 1: monochromatic ball homothet.
    let ball = ball_pattern(d, params.ball_radius)?;
    let ball_hit = search_mono_homothet(oracle, &ball, window, params.lambda_max, opts)?;
    if ball_hit.kind != WitnessKind::MonoHomothet {
        return Ok(Witness::new(
            WitnessKind::Exhausted,
            oracle,
            EnumerationBounds {
                window: window.describe(),
                stage: Some("no monochromatic ball homothet within bounds".into()),
                lambda_count: Some(params.lambda_max),
                ..Default::default()
            },
            &space,
        ));
    }
    let transform = ball_hit.transform.as_ref().expect("homothet has transform");
    let map = transform.to_map()?;
    let lambda = map.scale().clone();
    let centre = map.translation().clone();
    let blue = ball_hit.evidence[0].colour;

    // Expansion stops once the shells have swept past every window corner.
    let max_dist_sq = window
        .lower()
        .coords()
        .iter()
        .zip(window.upper().coords())
        .zip(centre.coords())
        .map(|((lo, hi), c)| {
            let a = (lo - c) * (lo - c);
            let b = (hi - c) * (hi - c);
            if a > b {
                a
            } else {
                b
            }
        })
        .sum::<Rat>();

    // Stage 2: grow the verified radius shell by shell, clamped to the
    // window.
    let mut verified_radius = &lambda * rat(params.ball_radius as i64);
    let mut audited: Vec<Point> = ball_hit
        .evidence
        .iter()
        .map(|e| e.point())
        .collect::<Result<_>>()?;
    loop {
        if &verified_radius * &verified_radius > max_dist_sq {
            let bounds = EnumerationBounds {
                window: window.describe(),
                lambda_grid: Some(format!("lattice step {}", format_rat(&lambda))),
                stage: Some(format!(
                    "window exhausted at verified radius {}",
                    format_rat(&verified_radius)
                )),
                candidates_checked: Some(audited.len() as u64),
                ..Default::default()
            };
            let w = Witness::new(WitnessKind::MonoSublattice, oracle, bounds, &space)
                .with_transform(&map)
                .with_evidence(
                    audited.iter().map(|p| Evidence::new(p, blue)).collect(),
                    None,
                );
            return Ok(w);
        }
        let next_radius = &verified_radius + &lambda;
        let shell: Vec<Point> = lattice_shell(&centre, &lambda, &verified_radius, &next_radius, d)?
            .into_iter()
            .filter(|p| window.contains(p).unwrap_or(false))
            .collect();
        let mut off_colour: Option<Point> = None;
        for p in &shell {
            if oracle.colour(p)? != blue {
                off_colour = Some(p.clone());
                break;
            }
        }
        match off_colour {
            None => {
                audited.extend(shell);
                verified_radius = next_radius;
            }
            Some(bad) => {
                // Rescale to lattice coordinates: the verified region is the
                // ball of radius `verified_radius / lambda` in the lattice
                // frame centred at `centre`.
                let anchor = bad.sub(&centre)?.scale(&(rat(1) / &lambda));
                let disc_radius = &verified_radius / &lambda;
                let extension = extend_from_ball_z(
                    pattern,
                    &anchor,
                    &Point::origin(d)?,
                    &disc_radius,
                    params.max_rot_param,
                    params.ball_radius.max(4),
                )?;
                let Some(extension) = extension else {
                    return Ok(Witness::new(
                        WitnessKind::Exhausted,
                        oracle,
                        EnumerationBounds {
                            window: window.describe(),
                            stage: Some(format!(
                                "off-colour point at {:?} but no pattern copy fits the \
                                 verified ball (radius {})",
                                bad,
                                format_rat(&verified_radius)
                            )),
                            ..Default::default()
                        },
                        &space,
                    ));
                };
                // Map the lattice-frame copy back to window coordinates.
                let points: Vec<Point> = extension
                    .copy
                    .points()
                    .iter()
                    .map(|p| centre.add(&p.scale(&lambda)))
                    .collect::<Result<_>>()?;
                let evidence: Vec<Evidence> = points
                    .iter()
                    .map(|p| Ok(Evidence::new(p, oracle.colour(p)?)))
                    .collect::<Result<_>>()?;
                let w = Witness::new(
                    WitnessKind::AmCopy,
                    oracle,
                    EnumerationBounds {
                        window: window.describe(),
                        stage: Some(format!(
                            "off-colour point in shell at radius {}",
                            format_rat(&next_radius)
                        )),
                        ..Default::default()
                    },
                    &space,
                )
                .with_evidence(evidence, Some(pattern.origin_index()));
                w.revalidate(oracle)?;
                return Ok(w);
            }
        }
    }
}

/// Lattice points `centre + lambda Z^d` with distance in `(inner, outer]`
/// from the centre, in row-major order.
fn lattice_shell(
    centre: &Point,
    lambda: &Rat,
    inner: &Rat,
    outer: &Rat,
    d: usize,
) -> Result<Vec<Point>> {
    let inner_sq = inner * inner;
    let outer_sq = outer * outer;
    let reach = (outer / lambda)
        .ceil()
        .to_integer()
        .to_i64()
        .ok_or_else(|| Error::InvalidParameter("shell reach exceeds i64".into()))?;
    let mut out = Vec::new();
    let mut idx = vec![-reach; d];
    loop {
        let offset = Point::new(idx.iter().map(|&k| rat(k) * lambda).collect())?;
        let n = offset.norm_sq();
        if n > inner_sq && n <= outer_sq {
            out.push(centre.add(&offset)?);
        }
        let mut axis = d;
        loop {
            if axis == 0 {
                return Ok(out);
            }
            axis -= 1;
            idx[axis] += 1;
            if idx[axis] <= reach {
                break;
            }
            idx[axis] = -reach;
            if axis == 0 {
                return Ok(out);
            }
        }
    }
}

/// Full rescan audit: true iff every audited lattice point matches the
/// witness colour. Holds `MonoSublattice` results to their claim.
pub fn audit_mono_sublattice(oracle: &Colouring, witness: &Witness) -> Result<bool> {
    if witness.kind != WitnessKind::MonoSublattice {
        return Err(Error::InvalidParameter("not a sublattice witness".into()));
    }
    let blue = witness.evidence[0].colour;
    for e in &witness.evidence {
        if oracle.colour(&e.point()?)? != blue {
            return Ok(false);
        }
    }
    Ok(true)
}
