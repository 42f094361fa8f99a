//! Pencil reach bounds and inscribed-angle placements. Numeric layer:
//! these quantities are genuinely real-valued; verification tolerances are
//! stated at the call sites.

use crate::error::{Error, Result};

use super::Pencil;

/// The reach certificate: any point within `epsilon * R` of a circle of
/// radius `R` admits a rotation of the pencil through it meeting the
/// circle on every line.
#[derive(Clone, Debug)]
pub struct PencilReach {
    pub epsilon: f64,
    /// Width of the minimal arc of directions (mod pi) spanned by the
    /// pencil.
    pub spread: f64,
}

/// Computes a valid reach from the largest spanned angle: a point at
/// distance `d` from the centre of a unit circle sees it under the
/// direction cone of width `2 asin(1/d)`; the pencil fits whenever that
/// exceeds the spread, giving `epsilon < 1/sin(spread/2) - 1`.
pub fn pencil_reach(pencil: &Pencil) -> Result<PencilReach> {
    if pencil.len() < 2 {
        return Err(Error::InvalidParameter(
            "reach needs at least two lines".into(),
        ));
    }
    let spread = direction_spread(pencil);
    let bound = 1.0 / (spread / 2.0).sin() - 1.0;
    Ok(PencilReach {
        epsilon: bound * (1.0 - 1e-9),
        spread,
    })
}

/// Width of the minimal covering arc of the line directions mod pi.
fn direction_spread(pencil: &Pencil) -> f64 {
    let pi = std::f64::consts::PI;
    let mut angles: Vec<f64> = pencil
        .directions()
        .iter()
        .map(|d| {
            let v = d.to_f64();
            
            v[1].atan2(v[0]).rem_euclid(pi)
        })
        .collect();
    angles.sort_by(f64::total_cmp);
    // Max gap between consecutive directions (cyclically, period pi).
    let mut max_gap = 0.0f64;
    for i in 0..angles.len() {
        let next = if i + 1 == angles.len() {
            angles[0] + pi
        } else {
            angles[i + 1]
        };
        max_gap = max_gap.max(next - angles[i]);
    }
    pi - max_gap
}

/// Rotates the pencil around `through` so that every line meets the circle
/// `(center, radius)`; returns the rotated direction angles, or `None` when
/// the point is too far. Verified by the line-to-centre distance check.
pub fn place_pencil(
    pencil: &Pencil,
    center: (f64, f64),
    radius: f64,
    through: (f64, f64),
) -> Option<Vec<f64>> {
    let pi = std::f64::consts::PI;
    let angles: Vec<f64> = pencil
        .directions()
        .iter()
        .map(|d| {
            let v = d.to_f64();
            v[1].atan2(v[0]).rem_euclid(pi)
        })
        .collect();
    let dx = center.0 - through.0;
    let dy = center.1 - through.1;
    let dist = (dx * dx + dy * dy).sqrt();
    let rotation = if dist <= radius {
        0.0
    } else {
        // Aim the midpoint of the covering arc at the centre direction.
        let spread = direction_spread(pencil);
        let mut sorted = angles.clone();
        sorted.sort_by(f64::total_cmp);
        let mut gap_at = 0usize;
        let mut max_gap = 0.0f64;
        for i in 0..sorted.len() {
            let next = if i + 1 == sorted.len() {
                sorted[0] + pi
            } else {
                sorted[i + 1]
            };
            if next - sorted[i] > max_gap {
                max_gap = next - sorted[i];
                gap_at = i;
            }
        }
        // Covering arc starts after the largest gap.
        let arc_start = if gap_at + 1 == sorted.len() {
            sorted[0]
        } else {
            sorted[gap_at + 1]
        };
        let midpoint = arc_start + spread / 2.0;
        let target = dy.atan2(dx).rem_euclid(pi);
        target - midpoint
    };
    let rotated: Vec<f64> = angles.iter().map(|a| (a + rotation).rem_euclid(pi)).collect();
    // Verify: signed distance from the centre to each rotated line must be
    // at most the radius.
    for a in &rotated {
        let (s, c) = a.sin_cos();
        let d = (c * dy - s * dx).abs();
        if d > radius + 1e-12 {
            return None;
        }
    }
    Some(rotated)
}

/// Places `a_1, ..., a_n` on a circle with consecutive arcs `2 alpha_i`, so
/// that by the inscribed-angle theorem every point on the remaining arc
/// sees `a_i, a_{i+1}` under angle `alpha_i`.
pub fn inscribed_points(
    center: (f64, f64),
    radius: f64,
    angles: &[f64],
) -> Result<Vec<(f64, f64)>> {
    if angles.is_empty() {
        return Err(Error::InvalidParameter("no angles given".into()));
    }
    let total: f64 = angles.iter().map(|a| 2.0 * a).sum();
    if total >= std::f64::consts::TAU {
        return Err(Error::InvalidParameter(format!(
            "arcs sum to {total}, the circle has nothing left"
        )));
    }
    if angles.iter().any(|&a| a <= 0.0) {
        return Err(Error::InvalidParameter("angles must be positive".into()));
    }
    let mut phi = 0.0f64;
    let mut out = vec![point_at(center, radius, phi)];
    for &a in angles {
        phi += 2.0 * a;
        out.push(point_at(center, radius, phi));
    }
    Ok(out)
}

fn point_at(center: (f64, f64), radius: f64, phi: f64) -> (f64, f64) {
    (center.0 + radius * phi.cos(), center.1 + radius * phi.sin())
}

/// Measured angle at `c` subtended by `a` and `b`.
pub fn subtended_angle(c: (f64, f64), a: (f64, f64), b: (f64, f64)) -> f64 {
    let u = (a.0 - c.0, a.1 - c.1);
    let v = (b.0 - c.0, b.1 - c.1);
    let dot = u.0 * v.0 + u.1 * v.1;
    let cross = u.0 * v.1 - u.1 * v.0;
    cross.abs().atan2(dot)
}
