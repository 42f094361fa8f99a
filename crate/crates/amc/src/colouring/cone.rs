//! Cone-shell colouring of R^d.
//!
//! The space is split into finitely many convex cones of small angle, each
//! coloured with its own palette of shell colours keyed by the l1 norm in a
//! reference frame. Frame application is the single numeric step (frames of
//! the reference cone are exact identities); the shell lookup itself runs
//! over exact rationals.

use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::geometry::point::{PatternPair, Point};
use crate::rational::{rat, rat_floor, rat_from_f64, sqrt_lower_bound, Rat};

/// One cone of the partition with its isometry into the reference cone.
#[derive(Clone, Debug)]
pub struct ConeFrame {
    /// Extreme rays (unit vectors, numeric).
    pub generators: Vec<Vec<f64>>,
    /// Unit axis direction.
    pub axis: Vec<f64>,
    /// Rotation matrix (rows) mapping the cone into the reference cone
    /// around the all-ones diagonal. Identity for the reference cone itself.
    pub frame: Vec<Vec<f64>>,
    /// Marks the frame that is exactly the identity.
    pub is_identity: bool,
}

impl ConeFrame {
    fn apply(&self, p: &[f64]) -> Vec<f64> {
        self.frame
            .iter()
            .map(|row| row.iter().zip(p).map(|(a, b)| a * b).sum())
            .collect()
    }
}

/// Builds a partition of R^d into simplicial cones, each contained in a
/// circular cone of half-angle at most `alpha` around its axis, paired with
/// an isometry into the reference cone.
///
/// d = 1 yields the two half-lines; d = 2 a uniform sector fan aligned so
/// that one sector is centred on the diagonal; d >= 3 subdivides the cube
/// faces (Kuhn simplices) until the angular radius is small enough.
pub fn build_cone_partition(dim: usize, alpha: f64) -> Result<Vec<ConeFrame>> {
    if !(alpha > 0.0 && alpha < std::f64::consts::FRAC_PI_2) {
        return Err(Error::InvalidParameter(format!(
            "cone angle must lie in (0, pi/2), got {alpha}"
        )));
    }
    match dim {
        0 => Err(Error::DimensionOutOfRange(0)),
        1 => Ok(vec![
            ConeFrame {
                generators: vec![vec![1.0]],
                axis: vec![1.0],
                frame: vec![vec![1.0]],
                is_identity: true,
            },
            ConeFrame {
                generators: vec![vec![-1.0]],
                axis: vec![-1.0],
                frame: vec![vec![-1.0]],
                is_identity: false,
            },
        ]),
        2 => sector_fan(alpha),
        d if d <= crate::geometry::point::MAX_DIM => cube_face_partition(d, alpha),
        d => Err(Error::DimensionOutOfRange(d)),
    }
}

fn sector_fan(alpha: f64) -> Result<Vec<ConeFrame>> {
    let tau = std::f64::consts::TAU;
    let m = (tau / alpha).ceil() as usize;
    if m > 1 << 20 {
        return Err(Error::InvalidParameter(format!(
            "alpha {alpha} needs {m} sectors, beyond the configured depth"
        )));
    }
    let width = tau / m as f64;
    // Sector 0 centred on the diagonal direction pi/4.
    let theta0 = std::f64::consts::FRAC_PI_4 - width / 2.0;
    Ok((0..m)
        .map(|i| {
            let lo = theta0 + i as f64 * width;
            let hi = lo + width;
            let mid = lo + width / 2.0;
            let rot = -(i as f64) * width;
            let (s, c) = rot.sin_cos();
            ConeFrame {
                generators: vec![vec![lo.cos(), lo.sin()], vec![hi.cos(), hi.sin()]],
                axis: vec![mid.cos(), mid.sin()],
                frame: vec![vec![c, -s], vec![s, c]],
                is_identity: i == 0,
            }
        })
        .collect())
}

fn cube_face_partition(dim: usize, alpha: f64) -> Result<Vec<ConeFrame>> {
    let diag: Vec<f64> = vec![1.0 / (dim as f64).sqrt(); dim];
    for n in 1..=64usize {
        let mut cones = Vec::new();
        let mut ok = true;
        'faces: for face_axis in 0..dim {
            for face_sign in [1.0f64, -1.0] {
                for cell in cube_cells(dim - 1, n) {
                    for simplex in kuhn_simplices(&cell, dim - 1, n) {
                        let gens: Vec<Vec<f64>> = simplex
                            .iter()
                            .map(|v| embed_face_point(v, face_axis, face_sign, dim))
                            .map(|v| normalize(&v))
                            .collect();
                        let axis = normalize(&mean(&gens));
                        let radius = gens
                            .iter()
                            .map(|g| angle_between(g, &axis))
                            .fold(0.0f64, f64::max);
                        if radius > alpha {
                            ok = false;
                            break 'faces;
                        }
                        let frame = rotation_taking(&axis, &diag);
                        cones.push(ConeFrame {
                            generators: gens,
                            axis,
                            frame,
                            is_identity: false,
                        });
                    }
                }
            }
        }
        if ok {
            return Ok(cones);
        }
    }
    Err(Error::InvalidParameter(format!(
        "alpha {alpha} too small to realize with the configured subdivision depth"
    )))
}

/// Lower corners of the n^k grid cells of [-1,1]^k.
fn cube_cells(k: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|c| {
                (0..n).map(move |i| {
                    let mut c2 = c.clone();
                    c2.push(i);
                    c2
                })
            })
            .collect();
    }
    out
}

/// Kuhn triangulation of one grid cell: one simplex per coordinate
/// permutation, each with k+1 vertices.
fn kuhn_simplices(cell: &[usize], k: usize, n: usize) -> Vec<Vec<Vec<f64>>> {
    if k == 0 {
        return vec![vec![vec![]]];
    }
    let step = 2.0 / n as f64;
    let corner: Vec<f64> = cell.iter().map(|&i| -1.0 + i as f64 * step).collect();
    permutations(k)
        .into_iter()
        .map(|perm| {
            let mut verts = vec![corner.clone()];
            let mut cur = corner.clone();
            for &axis in &perm {
                cur[axis] += step;
                verts.push(cur.clone());
            }
            verts
        })
        .collect()
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 1 {
        return vec![vec![0]];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, k - 1);
            out.push(q);
        }
    }
    out
}

fn embed_face_point(v: &[f64], face_axis: usize, face_sign: f64, dim: usize) -> Vec<f64> {
    let mut out = Vec::with_capacity(dim);
    let mut it = v.iter();
    for i in 0..dim {
        if i == face_axis {
            out.push(face_sign);
        } else {
            out.push(*it.next().expect("face point has dim-1 coords"));
        }
    }
    out
}

fn normalize(v: &[f64]) -> Vec<f64> {
    let n = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    v.iter().map(|x| x / n).collect()
}

fn mean(vs: &[Vec<f64>]) -> Vec<f64> {
    let d = vs[0].len();
    (0..d)
        .map(|i| vs.iter().map(|v| v[i]).sum::<f64>() / vs.len() as f64)
        .collect()
}

fn angle_between(a: &[f64], b: &[f64]) -> f64 {
    let dot: f64 = a.iter().zip(b).map(|(x, y)| x * y).sum();
    dot.clamp(-1.0, 1.0).acos()
}

/// Orthogonal matrix (rows) with determinant +1 taking unit vector `a` to
/// unit vector `b`: rotation in the plane spanned by the two.
fn rotation_taking(a: &[f64], b: &[f64]) -> Vec<Vec<f64>> {
    let d = a.len();
    let dot: f64 = a.iter().zip(b).map(|(x, y)| x * y).sum();
    // u = a, v = normalized component of b orthogonal to a.
    let mut v: Vec<f64> = b.iter().zip(a).map(|(bi, ai)| bi - dot * ai).collect();
    let vn = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    if vn < 1e-14 {
        // Parallel (or antiparallel with d >= 2 handled by the fan path).
        return (0..d)
            .map(|i| (0..d).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
            .collect();
    }
    for x in v.iter_mut() {
        *x /= vn;
    }
    let cos = dot;
    let sin = vn;
    // R = I + (cos-1)(aa^T + vv^T) + sin(va^T - av^T)
    (0..d)
        .map(|i| {
            (0..d)
                .map(|j| {
                    let id = if i == j { 1.0 } else { 0.0 };
                    id + (cos - 1.0) * (a[i] * a[j] + v[i] * v[j]) + sin * (v[i] * a[j] - a[i] * v[j])
                })
                .collect()
        })
        .collect()
}

/// The cone-shell colouring for a fixed pattern.
#[derive(Clone, Debug)]
pub struct ConeShellColouring {
    dim: usize,
    alpha: f64,
    k: u64,
    l: Rat,
    cones: Vec<ConeFrame>,
}

impl ConeShellColouring {
    /// `K` is the least integer with `(K-1)^2 > 4 d max/min` over the squared
    /// pairwise distances of the pattern (the exact form of
    /// `K > 1 + 2 sqrt(d) * max-distance-ratio`), and `L` a rational upper
    /// bound for `K^2 / sqrt(d)`.
    pub fn new(pattern: &PatternPair, alpha: f64) -> Result<Self> {
        let dim = pattern.dim();
        let (min_sq, max_sq) = distance_range(pattern)?;
        let k = minimal_cone_k(dim, &min_sq, &max_sq)?;
        // sqrt_lower <= sqrt(d) so K^2 / sqrt_lower >= K^2 / sqrt(d).
        let sqrt_lower = sqrt_lower_bound(dim as u64, 1_000_000);
        let l = rat((k * k) as i64) / sqrt_lower;
        let cones = build_cone_partition(dim, alpha)?;
        Ok(ConeShellColouring {
            dim,
            alpha,
            k,
            l,
            cones,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn l(&self) -> &Rat {
        &self.l
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn cones(&self) -> &[ConeFrame] {
        &self.cones
    }

    /// Colours per cone: `0..=2L'` where `L'` is the cell count.
    pub fn cells_per_shell(&self) -> u64 {
        rat_floor(&self.l).to_u64().map(|v| v.max(1)).unwrap_or(1)
    }

    pub fn palette(&self) -> u32 {
        self.cones.len() as u32 * (2 * self.cells_per_shell() as u32 + 1)
    }

    fn cone_index(&self, p: &[f64]) -> usize {
        let mut best = 0usize;
        let mut best_dot = f64::NEG_INFINITY;
        let norm = p.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm == 0.0 {
            return 0;
        }
        for (i, cone) in self.cones.iter().enumerate() {
            let dot: f64 = cone.axis.iter().zip(p).map(|(a, x)| a * x).sum::<f64>() / norm;
            if dot > best_dot {
                best_dot = dot;
                best = i;
            }
        }
        best
    }

    /// Shell value: the exact l1 norm of the framed point. Identity frames
    /// keep the input rationals; other frames go through one deterministic
    /// numeric rotation whose result is converted back exactly.
    fn framed_l1(&self, cone: &ConeFrame, p: &Point) -> Result<Rat> {
        if cone.is_identity {
            return Ok(p.norm_l1());
        }
        let image = cone.apply(&p.to_f64());
        let mut acc = Rat::zero();
        for c in image {
            acc += rat_from_f64(c.abs())?;
        }
        Ok(acc)
    }

    pub fn colour(&self, p: &Point) -> Result<u32> {
        if p.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: p.dim(),
            });
        }
        let ci = self.cone_index(&p.to_f64());
        let value = self.framed_l1(&self.cones[ci], p)?;
        let cells = self.cells_per_shell();
        let local = shell_cell_colour(&value, self.k, &self.l, cells);
        Ok(ci as u32 * (2 * cells as u32 + 1) + local)
    }

    /// Shell index of an l1 value (used by the two-consecutive-shells
    /// property): the unique `i >= 0` with `L K^i <= value < L K^(i+1)`,
    /// or `None` below `L`.
    pub fn shell_index(&self, value: &Rat) -> Option<u64> {
        if value < &self.l {
            return None;
        }
        let k = rat(self.k as i64);
        let mut lo = self.l.clone();
        let mut i = 0u64;
        loop {
            let hi = &lo * &k;
            if value < &hi {
                return Some(i);
            }
            lo = hi;
            i += 1;
        }
    }
}

/// Cell colour within the shell structure: 0 below `L`; otherwise cell `j`
/// of shell `i` gets `j` for even `i` and `cells + j` for odd `i`.
fn shell_cell_colour(value: &Rat, k: u64, l: &Rat, cells: u64) -> u32 {
    if value < l {
        return 0;
    }
    let kr = rat(k as i64);
    let mut lo = l.clone();
    let mut i = 0u64;
    loop {
        let hi = &lo * &kr;
        if value < &hi {
            let width = (&hi - &lo) / rat(cells as i64);
            let j = rat_floor(&((value - &lo) / &width))
                .to_u64()
                .expect("cell index fits")
                .min(cells - 1)
                + 1;
            return if i.is_multiple_of(2) {
                j as u32
            } else {
                cells as u32 + j as u32
            };
        }
        lo = hi;
        i += 1;
    }
}

fn distance_range(pattern: &PatternPair) -> Result<(Rat, Rat)> {
    let pts = pattern.points();
    let mut min_sq: Option<Rat> = None;
    let mut max_sq: Option<Rat> = None;
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            let d = pts[i].dist_sq(&pts[j])?;
            if min_sq.as_ref().is_none_or(|m| &d < m) {
                min_sq = Some(d.clone());
            }
            if max_sq.as_ref().is_none_or(|m| &d > m) {
                max_sq = Some(d);
            }
        }
    }
    Ok((min_sq.expect("pattern has pairs"), max_sq.expect("pattern has pairs")))
}

/// Least integer `K >= 2` with `(K-1)^2 min_sq > 4 d max_sq`, the squared
/// form of `K > 1 + 2 sqrt(d) max||p_k - p_l|| / ||p_i - p_j||`.
fn minimal_cone_k(dim: usize, min_sq: &Rat, max_sq: &Rat) -> Result<u64> {
    let target = rat(4 * dim as i64) * max_sq;
    let mut k = 2u64;
    loop {
        let km1 = rat((k - 1) as i64);
        if &km1 * &km1 * min_sq > target {
            return Ok(k);
        }
        k += 1;
        if k > 1 << 20 {
            return Err(Error::InvalidParameter(
                "pattern distance ratio too large for a cone base".into(),
            ));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_dimension_has_two_half_lines() {
        let cones = build_cone_partition(1, 0.5).unwrap();
        assert_eq!(cones.len(), 2);
    }

    #[test]
    fn sixteen_sectors_at_pi_over_eight() {
        let cones = build_cone_partition(2, std::f64::consts::PI / 8.0).unwrap();
        assert_eq!(cones.len(), 16);
        assert!(cones[0].is_identity);
    }

    #[test]
    fn generator_angles_within_twice_alpha() {
        for (d, alpha) in [(2usize, std::f64::consts::PI / 8.0), (3, 0.5), (4, 0.7)] {
            for cone in build_cone_partition(d, alpha).unwrap() {
                for a in &cone.generators {
                    for b in &cone.generators {
                        assert!(angle_between(a, b) <= 2.0 * alpha + 1e-12);
                    }
                    assert!(angle_between(a, &cone.axis) <= alpha + 1e-12);
                }
                // Frame maps the axis onto the diagonal.
                let mapped = cone.apply(&cone.axis);
                let diag: Vec<f64> = vec![1.0 / (d as f64).sqrt(); d];
                assert!(angle_between(&normalize(&mapped), &diag) <= 1e-7);
            }
        }
    }

    #[test]
    fn three_dimensional_colouring_evaluates() {
        let pattern = PatternPair::new(
            vec![
                Point::from_ints(&[0, 0, 0]).unwrap(),
                Point::from_ints(&[1, 0, 0]).unwrap(),
                Point::from_ints(&[0, 1, 0]).unwrap(),
            ],
            0,
        )
        .unwrap();
        let col = ConeShellColouring::new(&pattern, 0.6).unwrap();
        assert!(col.cones().len() > 6);
        let block = 2 * col.cells_per_shell() as u32 + 1;
        let mut seen_cones = std::collections::BTreeSet::new();
        for p in [[9i64, 2, 1], [-7, 5, 3], [1, -8, 2], [4, 4, 4], [-3, -3, -9]] {
            let c = col.colour(&Point::from_ints(&p).unwrap()).unwrap();
            assert!(c < col.palette());
            seen_cones.insert(c / block);
        }
        assert!(seen_cones.len() >= 4, "samples should fall in distinct cones");
    }

    #[test]
    fn cone_palettes_are_disjoint() {
        let pattern = PatternPair::new(
            vec![
                Point::from_ints(&[0, 0]).unwrap(),
                Point::from_ints(&[1, 0]).unwrap(),
                Point::from_ints(&[0, 1]).unwrap(),
            ],
            0,
        )
        .unwrap();
        let col = ConeShellColouring::new(&pattern, 0.3).unwrap();
        // K: (K-1)^2 * 1 > 4*2*2 = 16 -> K-1 > 4 -> K = 6.
        assert_eq!(col.k(), 6);
        let block = 2 * col.cells_per_shell() as u32 + 1;
        let mut per_cone: std::collections::BTreeMap<u32, std::collections::BTreeSet<u32>> =
            Default::default();
        for x in -40..=40i64 {
            for y in -40..=40i64 {
                if x == 0 && y == 0 {
                    continue;
                }
                let c = col.colour(&Point::from_ints(&[x, y]).unwrap()).unwrap();
                per_cone.entry(c / block).or_default().insert(c);
            }
        }
        let mut seen = std::collections::BTreeSet::new();
        for (_, colours) in per_cone {
            for c in colours {
                assert!(seen.insert(c), "colour {c} reused across cones");
            }
        }
    }
}
