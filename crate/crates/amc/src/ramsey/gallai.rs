//! The constructive route from combinatorial lines to monochromatic
//! homothets.
//!
//! The cube `[n]^N` embeds into Z^d by `Psi(x) = sum_i lambda_i s_{x_i}`
//! with the weights chosen greedily so that `Psi` stays injective; every
//! combinatorial line then maps onto a positive homothet of `S` with
//! integer ratio `sum_{i in moving} lambda_i`, at most `N n^N`.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::colouring::Colouring;
use crate::error::{Error, Result};
use crate::geometry::point::Point;
use crate::geometry::similarity::SimilarityMap;
use crate::rational::rat;
use crate::search::witness::{EnumerationBounds, Evidence, Witness, WitnessKind};

use super::hj::{hj_find_line, line_count, HJCube, Word};

/// The embedding data: base points, weights, and the injectivity bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GallaiEmbedding {
    points: Vec<Point>,
    lambdas: Vec<u64>,
}

impl GallaiEmbedding {
    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn lambdas(&self) -> &[u64] {
        &self.lambdas
    }

    pub fn n(&self) -> usize {
        self.points.len()
    }

    pub fn big_n(&self) -> usize {
        self.lambdas.len()
    }

    /// `Psi(word) = sum_i lambda_i * s_{word_i}` (letters are 1-based).
    pub fn image(&self, word: &Word) -> Result<Point> {
        let d = self.points[0].dim();
        let mut acc = Point::origin(d)?;
        for (i, &letter) in word.iter().enumerate() {
            let s = &self.points[(letter - 1) as usize];
            acc = acc.add(&s.scale(&rat(self.lambdas[i] as i64)))?;
        }
        Ok(acc)
    }

    /// Sum of all weights; the homothet ratio never exceeds it.
    pub fn weight_sum(&self) -> u64 {
        self.lambdas.iter().sum()
    }
}

/// Chooses the weights greedily: each `lambda_i` is the least positive
/// integer such that no two distinct length-`i` prefixes share an image.
/// The appendix bound caps every weight by `n^N`; exceeding it is an
/// internal error. Final injectivity is verified by hashing all `n^N`
/// images.
pub fn build_gallai_embedding(points: &[Point], big_n: u32) -> Result<GallaiEmbedding> {
    let n = points.len();
    if n < 2 {
        return Err(Error::InvalidParameter(
            "the embedding needs at least two base points".into(),
        ));
    }
    if big_n < 1 {
        return Err(Error::InvalidParameter("dimension must be positive".into()));
    }
    let d = points[0].dim();
    for p in points {
        if p.dim() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                got: p.dim(),
            });
        }
        if !p.is_integral() {
            return Err(Error::InvalidParameter(
                "base points need integer coordinates".into(),
            ));
        }
    }
    let cap = (n as u64).checked_pow(big_n).ok_or_else(|| {
        Error::InvalidParameter("n^N overflows the weight cap".into())
    })?;
    // Pairwise differences s_a - s_b, a != b, plus zero.
    let mut diffs: Vec<Point> = Vec::new();
    for a in points {
        for b in points {
            diffs.push(a.sub(b)?);
        }
    }
    // Difference sums over pairs of equal-length prefixes; starts at {0}.
    let mut sums: BTreeSet<Point> = BTreeSet::new();
    sums.insert(Point::origin(d)?);
    let mut lambdas: Vec<u64> = Vec::with_capacity(big_n as usize);
    for _ in 0..big_n {
        let mut forbidden: BTreeSet<u64> = BTreeSet::new();
        for v in &sums {
            for delta in &diffs {
                if delta.coords().iter().all(num_traits::Zero::is_zero) {
                    continue;
                }
                // lambda * delta + v = 0 forces lambda = -v/delta when the
                // vectors are parallel with an exact integer ratio.
                if let Some(lam) = exact_negative_ratio(v, delta) {
                    forbidden.insert(lam);
                }
            }
        }
        let mut lam = 1u64;
        while forbidden.contains(&lam) {
            lam += 1;
        }
        assert!(
            lam <= cap,
            "greedy weight {lam} exceeded the n^N bound {cap}"
        );
        lambdas.push(lam);
        let mut next: BTreeSet<Point> = BTreeSet::new();
        for v in &sums {
            for delta in &diffs {
                next.insert(v.add(&delta.scale(&rat(lam as i64)))?);
            }
        }
        sums = next;
    }
    let embedding = GallaiEmbedding {
        points: points.to_vec(),
        lambdas,
    };
    verify_injectivity(&embedding)?;
    Ok(embedding)
}

/// If `v + lambda * delta = 0` for a positive integer `lambda`, returns it.
fn exact_negative_ratio(v: &Point, delta: &Point) -> Option<u64> {
    use num_traits::{Signed, Zero};
    let mut ratio: Option<crate::rational::Rat> = None;
    for (vi, di) in v.coords().iter().zip(delta.coords()) {
        match (vi.is_zero(), di.is_zero()) {
            (true, true) => continue,
            (_, true) => return None,
            _ => {}
        }
        let r = -(vi / di);
        match &ratio {
            None => ratio = Some(r),
            Some(r0) if *r0 != r => return None,
            _ => {}
        }
    }
    let r = ratio?;
    if r.is_positive() && r.denom() == &num_bigint::BigInt::from(1) {
        use num_traits::ToPrimitive;
        r.numer().to_u64()
    } else {
        None
    }
}

fn verify_injectivity(embedding: &GallaiEmbedding) -> Result<()> {
    let n = embedding.n() as u8;
    let big_n = embedding.big_n();
    let mut seen: BTreeSet<Point> = BTreeSet::new();
    let mut word: Word = vec![1; big_n];
    loop {
        let img = embedding.image(&word)?;
        if !seen.insert(img) {
            return Err(Error::InvalidParameter(
                "internal: embedding is not injective".into(),
            ));
        }
        let mut axis = big_n;
        loop {
            if axis == 0 {
                return Ok(());
            }
            axis -= 1;
            word[axis] += 1;
            if word[axis] <= n {
                break;
            }
            word[axis] = 1;
            if axis == 0 {
                return Ok(());
            }
        }
    }
}

/// Pulls the colouring back to the cube, scans for a monochromatic line,
/// and maps it to a monochromatic positive homothet of `S`. A missing line
/// (dimension below the Hales-Jewett threshold) exhausts rather than
/// failing.
pub fn gallai_via_hj(oracle: &Colouring, points: &[Point], big_n: u32) -> Result<Witness> {
    let embedding = build_gallai_embedding(points, big_n)?;
    let emb = embedding.clone();
    let oracle_for_rule = oracle.clone();
    let cube = HJCube::new(
        points.len() as u8,
        big_n,
        Arc::new(move |w: &Word| {
            let p = emb.image(w)?;
            oracle_for_rule.colour(&p)
        }),
    )?;
    let space = format!(
        "gallai_hj|oracle={}|set={}|N={}|lines={}",
        oracle.name(),
        points
            .iter()
            .map(|p| p.to_strings().join(","))
            .collect::<Vec<_>>()
            .join(";"),
        big_n,
        line_count(points.len() as u8, big_n)
    );
    let Some(line) = hj_find_line(&cube)? else {
        return Ok(Witness::new(
            WitnessKind::Exhausted,
            oracle,
            EnumerationBounds {
                window: format!("[{}]^{}", points.len(), big_n),
                candidates_checked: Some(line_count(points.len() as u8, big_n)),
                stage: Some("no monochromatic combinatorial line at this dimension".into()),
                ..Default::default()
            },
            &space,
        ));
    };
    // Ratio = sum of moving weights; translation = fixed part.
    let lambda: u64 = line
        .moving_set()
        .iter()
        .map(|&i| embedding.lambdas()[i])
        .sum();
    let d = points[0].dim();
    let mut translation = Point::origin(d)?;
    for (i, t) in line.template.iter().enumerate() {
        if let Some(letter) = t {
            let s = &points[(*letter - 1) as usize];
            translation = translation.add(&s.scale(&rat(embedding.lambdas()[i] as i64)))?;
        }
    }
    let map = SimilarityMap::homothety(rat(lambda as i64), translation.clone())?;
    // The line's points map to translation + lambda * s_j; check the affine
    // relation exactly and collect evidence.
    let mut evidence = Vec::with_capacity(points.len());
    for (j, word) in line.points(points.len() as u8).into_iter().enumerate() {
        let img = embedding.image(&word)?;
        let expected = translation.add(&points[j].scale(&rat(lambda as i64)))?;
        if img != expected {
            return Err(Error::Mismatch(
                "line image is not the expected homothet".into(),
            ));
        }
        let colour = oracle.colour(&img)?;
        evidence.push(Evidence::new(&img, colour));
    }
    let w = Witness::new(
        WitnessKind::MonoHomothet,
        oracle,
        EnumerationBounds {
            window: format!("[{}]^{}", points.len(), big_n),
            candidates_checked: Some(line_count(points.len() as u8, big_n)),
            ..Default::default()
        },
        &space,
    )
    .with_transform(&map)
    .with_evidence(evidence, None);
    w.revalidate(oracle)?;
    Ok(w)
}
