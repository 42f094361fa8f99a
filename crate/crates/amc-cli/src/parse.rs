//! Argument grammars: windows, patterns, point lists, colouring specs with
//! file-backed extensions.

use std::collections::BTreeMap;
use std::path::Path;

use amc::colouring::ExplicitTable;
use amc::error::{Error, Result};
use amc::geometry::point::{PatternPair, Point};
use amc::rational::parse_rat;
use amc::search::Window;
use amc::Colouring;

/// Window grammar: per-axis `lo:hi` ranges joined by commas, with an
/// optional `@qN` suffix selecting the rational window with denominator
/// bound `N`. Examples: `1:300`, `-256:64,-256:64`, `-64:64@q8`.
pub fn parse_window(s: &str) -> Result<Window> {
    let (body, qden) = match s.split_once('@') {
        Some((b, q)) => {
            let q = q
                .strip_prefix('q')
                .ok_or_else(|| Error::Parse(format!("bad window suffix in {s:?}")))?;
            let n: u64 = q
                .parse()
                .map_err(|_| Error::Parse(format!("bad denominator bound in {s:?}")))?;
            (b, Some(n))
        }
        None => (s, None),
    };
    let mut lo = Vec::new();
    let mut hi = Vec::new();
    for axis in body.split(',') {
        let (a, b) = axis
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("window axis {axis:?} needs lo:hi")))?;
        lo.push(parse_rat(a)?);
        hi.push(parse_rat(b)?);
    }
    let lower = Point::new(lo)?;
    let upper = Point::new(hi)?;
    match qden {
        Some(n) => Window::q_box(lower, upper, n),
        None => Window::z_box(lower, upper),
    }
}

/// Point-list grammar: `1,2,3` on the line or `(0,1),(1,1),(1,0)` in the
/// plane.
pub fn parse_points(s: &str) -> Result<Vec<Point>> {
    let s = s.trim();
    if s.starts_with('(') {
        let mut out = Vec::new();
        for part in s.split("),") {
            let part = part.trim().trim_start_matches('(').trim_end_matches(')');
            let coords = part
                .split(',')
                .map(parse_rat)
                .collect::<Result<Vec<_>>>()?;
            out.push(Point::new(coords)?);
        }
        Ok(out)
    } else {
        s.split(',')
            .map(|x| Ok(Point::scalar(parse_rat(x)?)))
            .collect()
    }
}

/// Pattern grammar: a point list, `@`, then the distinguished point.
/// Examples: `1,2,3@2` or `(0,1),(1,1),(1,0)@(1,1)`.
pub fn parse_pattern(s: &str) -> Result<PatternPair> {
    let (pts, origin) = s
        .rsplit_once('@')
        .ok_or_else(|| Error::Parse(format!("pattern {s:?} needs points@origin")))?;
    let points = parse_points(pts)?;
    let origin_pt = parse_points(origin)?
        .into_iter()
        .next()
        .ok_or_else(|| Error::Parse("empty origin".into()))?;
    let idx = points
        .iter()
        .position(|p| *p == origin_pt)
        .ok_or_else(|| Error::Parse("origin is not one of the pattern points".into()))?;
    PatternPair::new(points, idx)
}

/// Colouring specs: everything the library grammar accepts, plus
/// `explicit:<path>` loading a JSON table
/// `{"palette": k, "entries": [{"point": ["a/b", ...], "colour": c}]}`
/// and `cone:<alpha>:<pattern>` building the cone-shell colouring.
pub fn parse_colouring(spec: &str) -> Result<Colouring> {
    if let Some(path) = spec.strip_prefix("explicit:") {
        return load_explicit(Path::new(path));
    }
    if let Some(rest) = spec.strip_prefix("cone:") {
        let (alpha, pattern) = rest
            .split_once(':')
            .ok_or_else(|| Error::Parse("cone expects cone:<alpha>:<pattern>".into()))?;
        let alpha: f64 = alpha
            .parse()
            .map_err(|_| Error::Parse(format!("bad cone angle {alpha:?}")))?;
        let pattern = parse_pattern(pattern)?;
        return Colouring::cone_shell(&pattern, alpha);
    }
    Colouring::parse_spec(spec)
}

#[derive(serde::Deserialize)]
struct ExplicitJson {
    palette: u32,
    entries: Vec<ExplicitEntry>,
}

#[derive(serde::Deserialize)]
struct ExplicitEntry {
    point: Vec<String>,
    colour: u32,
}

fn load_explicit(path: &Path) -> Result<Colouring> {
    let data = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
    let parsed: ExplicitJson =
        serde_json::from_str(&data).map_err(|e| Error::Parse(format!("bad table JSON: {e}")))?;
    let mut table = BTreeMap::new();
    for e in &parsed.entries {
        table.insert(Point::from_strings(&e.point)?, e.colour);
    }
    Ok(Colouring::explicit(ExplicitTable::new(table, parsed.palette)?)
        .with_name(format!("explicit:{}", path.display())))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn windows() {
        assert_eq!(parse_window("1:300").unwrap().dim(), 1);
        let q = parse_window("-64:64@q8").unwrap();
        assert_eq!(q.denominator_bound(), Some(8));
        let b = parse_window("-256:64,-256:64").unwrap();
        assert_eq!(b.dim(), 2);
        assert!(parse_window("5").is_err());
    }

    #[test]
    fn patterns() {
        let p = parse_pattern("1,2,3@2").unwrap();
        assert_eq!(p.len(), 3);
        assert_eq!(p.origin_index(), 1);
        let q = parse_pattern("(0,1),(1,1),(1,0)@(1,1)").unwrap();
        assert_eq!(q.dim(), 2);
        assert_eq!(q.origin_index(), 1);
        assert!(parse_pattern("1,2,3@9").is_err());
    }
}
