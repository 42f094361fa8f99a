//! JSON loaders for bouquets, pencils, and lattices.

use std::path::Path;

use amc::error::{Error, Result};
use amc::geometry::point::Point;
use amc::geometry::Lattice;
use amc::incidence::{Bouquet, Pencil};

#[derive(serde::Deserialize)]
struct BouquetJson {
    common: Vec<String>,
    centers: Vec<Vec<String>>,
}

#[derive(serde::Deserialize)]
struct PencilJson {
    common: Vec<String>,
    directions: Vec<Vec<String>>,
}

pub fn load_bouquet(path: &Path) -> Result<Bouquet> {
    let data = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
    let parsed: BouquetJson =
        serde_json::from_str(&data).map_err(|e| Error::Parse(format!("bad bouquet JSON: {e}")))?;
    Bouquet::new(
        Point::from_strings(&parsed.common)?,
        parsed
            .centers
            .iter()
            .map(|c| Point::from_strings(c))
            .collect::<Result<_>>()?,
    )
}

pub fn load_pencil(path: &Path) -> Result<Pencil> {
    let data = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
    let parsed: PencilJson =
        serde_json::from_str(&data).map_err(|e| Error::Parse(format!("bad pencil JSON: {e}")))?;
    Pencil::new(
        Point::from_strings(&parsed.common)?,
        parsed
            .directions
            .iter()
            .map(|c| Point::from_strings(c))
            .collect::<Result<_>>()?,
    )
}

/// Lattice grammar: basis vectors as point tuples joined by semicolons,
/// e.g. `(1,0);(0,1)` or the shorthand `z2`.
pub fn parse_lattice(s: &str) -> Result<Lattice> {
    if s == "z2" {
        return Lattice::standard(2);
    }
    let basis = s
        .split(';')
        .map(|part| {
            let part = part.trim().trim_start_matches('(').trim_end_matches(')');
            let coords = part
                .split(',')
                .map(amc::rational::parse_rat)
                .collect::<Result<Vec<_>>>()?;
            Point::new(coords)
        })
        .collect::<Result<Vec<_>>>()?;
    Lattice::new(basis)
}
