//! Smiling copies: a colour present on every circle (or line) of a placed
//! bouquet or pencil while the common point wears a different colour, and
//! the step from such a witness to a bichromatic-origin graph colouring.

use num_traits::{One, Zero};

use crate::colouring::Colouring;
use crate::error::{Error, Result};
use crate::geometry::extreme::is_extreme_point;
use crate::geometry::lattice::{find_rotatability_witness, Lattice};
use crate::geometry::point::{PatternPair, Point};
use crate::geometry::similarity::SimilarityMap;
use crate::rational::{rat, Rat};
use crate::search::window::rational_grid;
use crate::udg::{Coord, OriginColouring, UnitDistanceGraph};

use super::{cross_2d, Bouquet, Pencil};

/// What is being placed and probed.
#[derive(Clone, Debug)]
pub enum SmilingTarget {
    Bouquet(Bouquet),
    Pencil(Pencil),
}

/// A verified smiling copy: every component carries a point of the witness
/// colour, the common point does not.
#[derive(Clone, Debug)]
pub struct SmilingWitness {
    pub placement: SimilarityMap,
    pub placed_common: Point,
    pub placed_centers: Vec<Point>,
    pub witness_points: Vec<Point>,
    pub colour: u32,
    pub origin_colour: u32,
}

impl SmilingWitness {
    /// Construction re-checks the defining invariants against the oracle.
    pub fn new(
        target: &SmilingTarget,
        placement: SimilarityMap,
        witness_points: Vec<Point>,
        colour: u32,
        oracle: &Colouring,
    ) -> Result<Self> {
        if placement.scale() != &Rat::one() {
            return Err(Error::InvalidParameter(
                "smiling placements are rigid: scale must be 1".into(),
            ));
        }
        let (common, centers) = match target {
            SmilingTarget::Bouquet(b) => (b.common_point().clone(), b.centers().to_vec()),
            SmilingTarget::Pencil(p) => (p.common_point().clone(), p.directions().to_vec()),
        };
        let placed_common = placement.apply_point(&common)?;
        let origin_colour = oracle.colour(&placed_common)?;
        if origin_colour == colour {
            return Err(Error::InvalidParameter(
                "witness colour equals the colour of the common point".into(),
            ));
        }
        if witness_points.len() != centers.len() {
            return Err(Error::Mismatch(format!(
                "{} witness points for {} components",
                witness_points.len(),
                centers.len()
            )));
        }
        let placed_centers: Vec<Point> = match target {
            SmilingTarget::Bouquet(b) => b
                .centers()
                .iter()
                .map(|c| placement.apply_point(c))
                .collect::<Result<_>>()?,
            SmilingTarget::Pencil(p) => {
                // Directions rotate without translating.
                let rot = placement.rotation();
                p.directions()
                    .iter()
                    .map(|d| rot.apply(d))
                    .collect::<Result<_>>()?
            }
        };
        for (i, w) in witness_points.iter().enumerate() {
            if oracle.colour(w)? != colour {
                return Err(Error::Mismatch(format!(
                    "witness point {i} does not have the witness colour"
                )));
            }
            match target {
                SmilingTarget::Bouquet(_) => {
                    if w.dist_sq(&placed_centers[i])? != rat(1) {
                        return Err(Error::Mismatch(format!(
                            "witness point {i} is not on its circle"
                        )));
                    }
                }
                SmilingTarget::Pencil(_) => {
                    let along = w.sub(&placed_common)?;
                    if cross_2d(&along, &placed_centers[i]) != rat(0) {
                        return Err(Error::Mismatch(format!(
                            "witness point {i} is not on its line"
                        )));
                    }
                }
            }
        }
        Ok(SmilingWitness {
            placement,
            placed_common,
            placed_centers,
            witness_points,
            colour,
            origin_colour,
        })
    }
}

/// Rational probe points of the unit circle around a rational centre:
/// the tangent half-angle parametrisation
/// `t -> ((1-t^2)/(1+t^2), 2t/(1+t^2))` over `t` with denominator at most
/// the density, plus the point `(-1, 0)` the parametrisation misses.
pub fn circle_probes(center: &Point, density: u64) -> Result<Vec<Point>> {
    let lo = -rat(density as i64);
    let hi = rat(density as i64);
    let mut out = Vec::new();
    for t in rational_grid(&lo, &hi, density) {
        let t2 = &t * &t;
        let den = rat(1) + &t2;
        let x = (rat(1) - &t2) / &den;
        let y = (rat(2) * &t) / &den;
        out.push(center.add(&Point::new(vec![x, y])?)?);
    }
    out.push(center.add(&Point::from_ints(&[-1, 0])?)?);
    Ok(out)
}

/// Searches for a smiling copy of the target under a rigid rational
/// placement, probing rational points on every component. Returns the
/// first witness colour (in palette order) present on all components and
/// different from the common point's colour; `None` is relative to the
/// probe density, never a nonexistence claim.
pub fn check_smiling(
    oracle: &Colouring,
    target: &SmilingTarget,
    placement: &SimilarityMap,
    probe_density: u64,
) -> Result<Option<SmilingWitness>> {
    if probe_density < 1 {
        return Err(Error::InvalidParameter("probe density must be >= 1".into()));
    }
    let (common, n) = match target {
        SmilingTarget::Bouquet(b) => (b.common_point().clone(), b.len()),
        SmilingTarget::Pencil(p) => (p.common_point().clone(), p.len()),
    };
    let placed_common = placement.apply_point(&common)?;
    let origin_colour = oracle.colour(&placed_common)?;
    // Colour classes found on each placed component.
    let mut per_component: Vec<Vec<(Point, u32)>> = Vec::with_capacity(n);
    match target {
        SmilingTarget::Bouquet(b) => {
            for c in b.centers() {
                let placed = placement.apply_point(c)?;
                let probes = circle_probes(&placed, probe_density)?;
                let coloured = probes
                    .into_iter()
                    .map(|p| {
                        let col = oracle.colour(&p)?;
                        Ok((p, col))
                    })
                    .collect::<Result<Vec<_>>>()?;
                per_component.push(coloured);
            }
        }
        SmilingTarget::Pencil(p) => {
            let rot = placement.rotation();
            for d in p.directions() {
                let dir = rot.apply(d)?;
                let lo = -rat(probe_density as i64);
                let hi = rat(probe_density as i64);
                let coloured = rational_grid(&lo, &hi, probe_density)
                    .into_iter()
                    .filter(|s| !s.is_zero())
                    .map(|s| {
                        let p = placed_common.add(&dir.scale(&s))?;
                        let col = oracle.colour(&p)?;
                        Ok((p, col))
                    })
                    .collect::<Result<Vec<_>>>()?;
                per_component.push(coloured);
            }
        }
    }
    'colours: for ell in 0..oracle.palette_size() {
        if ell == origin_colour {
            continue;
        }
        let mut picks = Vec::with_capacity(n);
        for coloured in &per_component {
            match coloured.iter().find(|(_, c)| *c == ell) {
                Some((p, _)) => picks.push(p.clone()),
                None => continue 'colours,
            }
        }
        return Ok(Some(SmilingWitness::new(
            target,
            placement.clone(),
            picks,
            ell,
            oracle,
        )?));
    }
    Ok(None)
}

/// Lattice-like validation of a bouquet: all of the common point and the
/// centres in the lattice, with the common point extreme among them.
/// Rotatability is probed over a standard grid of angle intervals and
/// reported separately; a missing witness there is exhaustion, not a
/// disproof.
#[derive(Clone, Debug)]
pub struct LatticeLikeReport {
    pub all_in_lattice: bool,
    pub origin_extreme: bool,
    pub lattice_like: bool,
    /// `(interval lo, interval hi, witness found)` over the probe grid.
    pub rotatability_probes: Vec<(f64, f64, bool)>,
}

pub fn validate_lattice_like(bouquet: &Bouquet, lattice: &Lattice) -> Result<LatticeLikeReport> {
    let mut all_in = lattice.contains(bouquet.common_point())?;
    for c in bouquet.centers() {
        if !lattice.contains(c)? {
            all_in = false;
        }
    }
    let origin_extreme = if bouquet.len() == 1 {
        // Two distinct points: the common point is trivially extreme.
        true
    } else {
        let mut pts = vec![bouquet.common_point().clone()];
        pts.extend(bouquet.centers().iter().cloned());
        is_extreme_point(&PatternPair::new(pts, 0)?)
    };
    // The Pythagorean rotation family reaches angles in (0, pi/2) only, so
    // the probe grid subdivides that range; wider intervals would report
    // exhaustion by construction.
    let half_pi = std::f64::consts::FRAC_PI_2;
    let mut probes = Vec::new();
    for j in 0..8 {
        let lo = j as f64 * half_pi / 8.0;
        let hi = (j + 1) as f64 * half_pi / 8.0;
        let lo = if j == 0 { 1e-6 } else { lo };
        let hi = if j == 7 { half_pi - 1e-6 } else { hi };
        let found = find_rotatability_witness(lattice, lo, hi, 12)?.is_some();
        probes.push((lo, hi, found));
    }
    Ok(LatticeLikeReport {
        all_in_lattice: all_in,
        origin_extreme,
        lattice_like: all_in && origin_extreme,
        rotatability_probes: probes,
    })
}

/// Builds the bouquet of unit circles centred at the origin's neighbours,
/// passing through the origin. Needs exact coordinates.
pub fn bouquet_of_graph(graph: &UnitDistanceGraph) -> Result<Bouquet> {
    let v0 = graph
        .origin()
        .ok_or_else(|| Error::InvalidParameter("graph has no origin".into()))?;
    let common = exact_coord(graph, v0)?;
    let centers = graph
        .neighbours(v0)
        .iter()
        .map(|&u| exact_coord(graph, u))
        .collect::<Result<Vec<_>>>()?;
    Bouquet::new(common, centers)
}

fn exact_coord(graph: &UnitDistanceGraph, v: usize) -> Result<Point> {
    match graph.coord(v) {
        Some(Coord::Exact(x, y)) => Point::new(vec![x.clone(), y.clone()]),
        Some(Coord::Approx(..)) => Err(Error::InvalidParameter(format!(
            "vertex {} has numeric coordinates; exact rationals are needed here",
            graph.id(v)
        ))),
        None => Err(Error::InvalidParameter(format!(
            "vertex {} has no coordinates",
            graph.id(v)
        ))),
    }
}

/// The contradiction step: from a smiling witness for the bouquet of
/// `(G, v0)` and a colouring that is proper on the probed points, build the
/// vertex colouring with bichromatic origin
/// `phi'(v0) = {phi(v0'), ell}`, `phi'(v_i) = phi(v_i')`, and verify it.
pub fn compose_bichromatic_colouring(
    graph: &UnitDistanceGraph,
    witness: &SmilingWitness,
    oracle: &Colouring,
) -> Result<OriginColouring> {
    let v0 = graph
        .origin()
        .ok_or_else(|| Error::InvalidParameter("graph has no origin".into()))?;
    // The witness must be about this graph's bouquet: placed centres agree
    // with the placed neighbour coordinates as sets.
    let placed_common = witness.placement.apply_point(&exact_coord(graph, v0)?)?;
    if placed_common != witness.placed_common {
        return Err(Error::Mismatch(
            "witness common point is not the placed origin".into(),
        ));
    }
    let mut placed_neighbours: Vec<(usize, Point)> = Vec::new();
    for &u in graph.neighbours(v0) {
        placed_neighbours.push((u, witness.placement.apply_point(&exact_coord(graph, u)?)?));
    }
    let mut want: Vec<&Point> = witness.placed_centers.iter().collect();
    let mut got: Vec<&Point> = placed_neighbours.iter().map(|(_, p)| p).collect();
    want.sort();
    got.sort();
    if want != got {
        return Err(Error::Mismatch(
            "witness bouquet does not match the origin's neighbourhood".into(),
        ));
    }
    // phi' assignments.
    let n = graph.vertex_count();
    let mut colours = vec![0u32; n];
    for v in 0..n {
        if v == v0 {
            continue;
        }
        let placed = witness.placement.apply_point(&exact_coord(graph, v)?)?;
        colours[v] = oracle.colour(&placed)?;
    }
    let origin_pair = (
        witness.origin_colour.min(witness.colour),
        witness.origin_colour.max(witness.colour),
    );
    // Verify properness with the bichromatic origin.
    for &(i, j) in graph.edges() {
        if i == v0 || j == v0 {
            let other = if i == v0 { j } else { i };
            if colours[other] == origin_pair.0 || colours[other] == origin_pair.1 {
                return Err(Error::ImproperColouring(format!(
                    "edge ({}, {}) meets the origin pair",
                    graph.id(i),
                    graph.id(j)
                )));
            }
        } else if colours[i] == colours[j] {
            return Err(Error::ImproperColouring(format!(
                "edge ({}, {}) is monochromatic",
                graph.id(i),
                graph.id(j)
            )));
        }
    }
    Ok(OriginColouring {
        origin_pair,
        colours,
    })
}
