//! Self-validating witness certificates.
//!
//! A witness carries the evidence points with their recorded colours, the
//! transform that produced them, and a digest of the enumerated search
//! space. Re-running the oracle over the evidence must reproduce the
//! recorded colours; almost-monochromatic evidence must satisfy the
//! defining property literally.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::colouring::Colouring;
use crate::error::{Error, Result};
use crate::geometry::matrix::RatMatrix;
use crate::geometry::point::Point;
use crate::geometry::similarity::SimilarityMap;
use crate::rational::{format_rat, parse_rat};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessKind {
    AmCopy,
    MonoAp,
    MonoHomothet,
    MonoSublattice,
    Exhausted,
}

/// One evidence point with its recorded colour.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Evidence {
    pub point: Vec<String>,
    pub colour: u32,
}

impl Evidence {
    pub fn new(point: &Point, colour: u32) -> Self {
        Evidence {
            point: point.to_strings(),
            colour,
        }
    }

    pub fn point(&self) -> Result<Point> {
        Point::from_strings(&self.point)
    }
}

/// Transform in serialized form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransformJson {
    pub scale: String,
    pub rotation: Vec<Vec<String>>,
    pub translation: Vec<String>,
}

impl TransformJson {
    pub fn from_map(map: &SimilarityMap) -> Self {
        TransformJson {
            scale: format_rat(map.scale()),
            rotation: map.rotation().to_strings(),
            translation: map.translation().to_strings(),
        }
    }

    pub fn to_map(&self) -> Result<SimilarityMap> {
        let scale = parse_rat(&self.scale)?;
        let rotation = RatMatrix::new(
            self.rotation
                .iter()
                .map(|row| row.iter().map(|s| parse_rat(s)).collect())
                .collect::<Result<_>>()?,
        )?;
        let translation = Point::from_strings(&self.translation)?;
        SimilarityMap::new(scale, rotation, translation)
    }
}

/// Exact bounds of an exhausted enumeration.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationBounds {
    pub window: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda_grid: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda_count: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rotation_count: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub candidates_checked: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stage: Option<String>,
}

/// A search outcome certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub schema: String,
    pub kind: WitnessKind,
    pub colouring: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub transform: Option<TransformJson>,
    /// Evidence points with recorded colours; for AM copies the
    /// distinguished point is `evidence[origin_index]`.
    pub evidence: Vec<Evidence>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub origin_index: Option<usize>,
    pub enumeration: EnumerationBounds,
    pub search_space_hash: String,
}

impl Witness {
    pub fn new(
        kind: WitnessKind,
        colouring: &Colouring,
        enumeration: EnumerationBounds,
        space_digest_input: &str,
    ) -> Self {
        Witness {
            schema: "amc.witness/1".into(),
            kind,
            colouring: colouring.name(),
            transform: None,
            evidence: Vec::new(),
            origin_index: None,
            enumeration,
            search_space_hash: digest(space_digest_input),
        }
    }

    pub fn with_transform(mut self, map: &SimilarityMap) -> Self {
        self.transform = Some(TransformJson::from_map(map));
        self
    }

    pub fn with_evidence(mut self, evidence: Vec<Evidence>, origin_index: Option<usize>) -> Self {
        self.evidence = evidence;
        self.origin_index = origin_index;
        self
    }

    pub fn found(&self) -> bool {
        self.kind != WitnessKind::Exhausted
    }

    pub fn evidence_points(&self) -> Result<Vec<(Point, u32)>> {
        self.evidence
            .iter()
            .map(|e| Ok((e.point()?, e.colour)))
            .collect()
    }

    /// Replays the evidence against an oracle: recorded colours must match
    /// exactly, and the kind's defining property must hold.
    pub fn revalidate(&self, oracle: &Colouring) -> Result<()> {
        let pts = self.evidence_points()?;
        for (p, recorded) in &pts {
            let got = oracle.colour(p)?;
            if got != *recorded {
                return Err(Error::Mismatch(format!(
                    "evidence colour mismatch at {p:?}: recorded {recorded}, oracle says {got}"
                )));
            }
        }
        match self.kind {
            WitnessKind::AmCopy => {
                let oi = self.origin_index.ok_or_else(|| {
                    Error::Mismatch("AM witness missing distinguished index".into())
                })?;
                if oi >= pts.len() {
                    return Err(Error::Mismatch("distinguished index out of range".into()));
                }
                let rest: Vec<u32> = pts
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| *i != oi)
                    .map(|(_, (_, c))| *c)
                    .collect();
                if rest.is_empty() || rest.iter().any(|c| *c != rest[0]) {
                    return Err(Error::Mismatch(
                        "AM witness: remaining points are not monochromatic".into(),
                    ));
                }
                if pts[oi].1 == rest[0] {
                    return Err(Error::Mismatch(
                        "AM witness: the whole set is monochromatic".into(),
                    ));
                }
            }
            WitnessKind::MonoAp | WitnessKind::MonoHomothet | WitnessKind::MonoSublattice => {
                if pts.is_empty() || pts.iter().any(|(_, c)| *c != pts[0].1) {
                    return Err(Error::Mismatch(
                        "monochromatic witness has mixed colours".into(),
                    ));
                }
            }
            WitnessKind::Exhausted => {}
        }
        Ok(())
    }

    /// Canonical JSON bytes (stable field order, trailing newline).
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("witness serializes");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> Result<Witness> {
        serde_json::from_str(s).map_err(|e| Error::Parse(format!("bad witness JSON: {e}")))
    }
}

/// SHA-256 digest of a canonical search-space description.
pub fn digest(input: &str) -> String {
    let mut h = Sha256::new();
    h.update(input.as_bytes());
    format!("sha256:{:x}", h.finalize())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn am_witness_revalidates_against_oracle() {
        let oracle = Colouring::dyadic();
        let pts = [rat(2), rat(3), rat(4)];
        let evidence: Vec<Evidence> = pts
            .iter()
            .map(|x| {
                let p = Point::scalar(x.clone());
                let c = oracle.colour(&p).unwrap();
                Evidence::new(&p, c)
            })
            .collect();
        let w = Witness::new(
            WitnessKind::AmCopy,
            &oracle,
            EnumerationBounds::default(),
            "test",
        )
        .with_evidence(evidence, Some(0));
        w.revalidate(&oracle).unwrap();
        // Tampered colour fails.
        let mut bad = w.clone();
        bad.evidence[1].colour = 9;
        assert!(bad.revalidate(&oracle).is_err());
        // Wrong origin makes the copy non-AM.
        let mut wrong = w.clone();
        wrong.origin_index = Some(1);
        assert!(wrong.revalidate(&oracle).is_err());
    }

    #[test]
    fn json_round_trip_is_stable() {
        let oracle = Colouring::constant(1);
        let w = Witness::new(
            WitnessKind::Exhausted,
            &oracle,
            EnumerationBounds {
                window: "Z[1..9]".into(),
                lambda_count: Some(4),
                ..Default::default()
            },
            "space",
        );
        let j = w.to_json();
        let back = Witness::from_json(&j).unwrap();
        assert_eq!(w, back);
        assert_eq!(j, back.to_json());
    }
}
