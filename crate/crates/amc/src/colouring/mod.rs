//! Colouring constructions and a uniform oracle over them.
//!
//! Every oracle is a pure, total map from exact points of its domain to a
//! colour index below its palette size. Evaluation is deterministic and
//! reentrant; oracles are cheap to clone and safe to share across threads.

pub mod basic;
pub mod certify;
pub mod compose;
pub mod cone;
pub mod mondrian;
pub mod shell;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::geometry::point::{PatternPair, Point};
use crate::rational::{format_rat, parse_rat, Rat};

pub use basic::{ColourRule, CustomColouring, ExplicitTable};
pub use certify::{certify_shell_ap_free, ApFreeCertificate, Crossover};
pub use compose::{compose_disjoint, Composite, Region};
pub use cone::{build_cone_partition, ConeFrame, ConeShellColouring};
pub use mondrian::MondrianColouring;
pub use shell::{ShellColouring1D, ShellVariant};

/// The closed set of colouring kinds.
#[derive(Clone, Debug)]
pub enum Kind {
    /// Single colour 0 out of a declared palette.
    Constant { colours: u32 },
    /// `(sum of integer coordinates) mod m`.
    Residue { modulus: u32 },
    /// Colour 0 strictly on one side of a hyperplane.
    HalfSpace { normal: Point },
    /// Parity of the 2-adic valuation on Q.
    Dyadic,
    /// `floor(x / block) mod 2` on the line.
    Block { block: BigInt },
    /// `floor(x_axis / width) mod colours`.
    Strip { axis: usize, width: Rat, colours: u32 },
    Shell1D(ShellColouring1D),
    ConeShell(ConeShellColouring),
    Mondrian(MondrianColouring),
    Explicit(ExplicitTable),
    /// `colour(p) = inner(-p)`.
    Reflected(Box<Colouring>),
    Composite(Composite),
    Custom(CustomColouring),
}

/// A colouring oracle.
#[derive(Clone, Debug)]
pub struct Colouring {
    kind: Kind,
    name: String,
}

impl Colouring {
    pub fn constant(colours: u32) -> Self {
        Colouring {
            name: format!("constant:{colours}"),
            kind: Kind::Constant {
                colours: colours.max(1),
            },
        }
    }

    pub fn residue(modulus: u32) -> Self {
        assert!(modulus >= 1);
        Colouring {
            name: format!("mod:{modulus}"),
            kind: Kind::Residue { modulus },
        }
    }

    /// 1-D half-line rule: colour 0 on x > 0, colour 1 on x <= 0.
    pub fn half_line() -> Self {
        Colouring {
            name: "halfplane".into(),
            kind: Kind::HalfSpace {
                normal: Point::from_ints(&[1]).expect("1-d"),
            },
        }
    }

    /// Planar half-plane rule: colour 0 where y > 0.
    pub fn half_plane_2d() -> Self {
        Colouring {
            name: "halfplane2d".into(),
            kind: Kind::HalfSpace {
                normal: Point::from_ints(&[0, 1]).expect("2-d"),
            },
        }
    }

    pub fn half_space(normal: Point) -> Self {
        Colouring {
            name: format!(
                "halfspace:{}",
                normal
                    .to_strings()
                    .join(",")
            ),
            kind: Kind::HalfSpace { normal },
        }
    }

    pub fn dyadic() -> Self {
        Colouring {
            name: "dyadic".into(),
            kind: Kind::Dyadic,
        }
    }

    pub fn block(width: i64) -> Self {
        assert!(width >= 1);
        Colouring {
            name: format!("block:{width}"),
            kind: Kind::Block {
                block: BigInt::from(width),
            },
        }
    }

    pub fn strip(axis: usize, width: Rat, colours: u32) -> Self {
        Colouring {
            name: format!("strip:{}:{}:{}", axis, format_rat(&width), colours),
            kind: Kind::Strip {
                axis,
                width,
                colours,
            },
        }
    }

    pub fn phi1(k: u64) -> Result<Self> {
        Ok(Colouring {
            name: format!("phi1:K={k}"),
            kind: Kind::Shell1D(ShellColouring1D::phi1(k)?),
        })
    }

    pub fn phi2(k: u64, l: u64) -> Result<Self> {
        Ok(Colouring {
            name: format!("phi2:K={k},L={l}"),
            kind: Kind::Shell1D(ShellColouring1D::phi2(k, l)?),
        })
    }

    /// The shell colouring matching a 4-point pattern (phi1 or phi2 by the
    /// position of the distinguished point), on its own half-line domain.
    pub fn shell_for_pattern(pattern: &PatternPair) -> Result<Self> {
        let shell = ShellColouring1D::for_pattern(pattern)?;
        let name = match shell.variant() {
            ShellVariant::Phi1 => format!("phi1:K={}", shell.k()),
            ShellVariant::Phi2 => format!("phi2:K={},L={}", shell.k(), shell.l().unwrap()),
        };
        Ok(Colouring {
            name,
            kind: Kind::Shell1D(shell),
        })
    }

    /// Full-line extension: the matching shell colouring on its half-line
    /// joined with the reflected partner on the other side, over disjoint
    /// palettes.
    pub fn lemma_extension_for_pattern(pattern: &PatternPair) -> Result<Self> {
        let shell = ShellColouring1D::for_pattern(pattern)?;
        let k = shell.k();
        let composite = match shell.variant() {
            ShellVariant::Phi1 => {
                // phi1 on x > 0, reflected phi2 on x <= 0.
                let l = shell_l_for(pattern)?;
                Composite::new(
                    vec![
                        Colouring::phi1(k)?,
                        Colouring::reflect(Colouring::phi2(k, l)?),
                    ],
                    Region::SignSplit1D {
                        zero_in_first: false,
                    },
                )?
            }
            ShellVariant::Phi2 => {
                // phi2 on x >= 0, reflected phi1 on x < 0.
                Composite::new(
                    vec![
                        Colouring::phi2(k, shell.l().unwrap())?,
                        Colouring::reflect(Colouring::phi1(k)?),
                    ],
                    Region::SignSplit1D {
                        zero_in_first: true,
                    },
                )?
            }
        };
        let pts: Vec<String> = pattern.points().iter().map(|p| format_rat(p.x())).collect();
        Ok(Colouring {
            name: format!(
                "lemma24:{}@{}",
                pts.join(","),
                format_rat(pattern.origin().x())
            ),
            kind: Kind::Composite(composite),
        })
    }

    pub fn cone_shell(pattern: &PatternPair, alpha: f64) -> Result<Self> {
        let pts: Vec<String> = pattern
            .points()
            .iter()
            .map(|p| format!("({})", p.to_strings().join(",")))
            .collect();
        let origin = format!("({})", pattern.origin().to_strings().join(","));
        Ok(Colouring {
            name: format!("cone:{alpha}:{}@{origin}", pts.join(",")),
            kind: Kind::ConeShell(ConeShellColouring::new(pattern, alpha)?),
        })
    }

    pub fn mondrian() -> Self {
        Colouring {
            name: "mondrian".into(),
            kind: Kind::Mondrian(MondrianColouring::new()),
        }
    }

    pub fn mondrian_extended(dim: usize) -> Result<Self> {
        Ok(Colouring {
            name: format!("mondrian:{dim}"),
            kind: Kind::Mondrian(MondrianColouring::extended(dim)?),
        })
    }

    pub fn explicit(table: ExplicitTable) -> Self {
        Colouring {
            name: "explicit".into(),
            kind: Kind::Explicit(table),
        }
    }

    pub fn custom(custom: CustomColouring) -> Self {
        Colouring {
            name: format!("custom:{}", custom.label),
            kind: Kind::Custom(custom),
        }
    }

    pub fn reflect(inner: Colouring) -> Self {
        Colouring {
            name: format!("reflect({})", inner.name),
            kind: Kind::Reflected(Box::new(inner)),
        }
    }

    pub(crate) fn composite(c: Composite) -> Self {
        Colouring {
            name: format!(
                "compose({})",
                c.parts()
                    .iter()
                    .map(|p| p.name())
                    .collect::<Vec<_>>()
                    .join("|")
            ),
            kind: Kind::Composite(c),
        }
    }

    pub fn kind(&self) -> &Kind {
        &self.kind
    }

    /// Stable name used in witness certificates.
    pub fn name(&self) -> String {
        self.name.clone()
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// Where the oracle is total: a dimension requirement (`None` accepts
    /// any) and a short domain description.
    pub fn domain(&self) -> (Option<usize>, &'static str) {
        match &self.kind {
            Kind::Constant { .. } => (None, "all exact points"),
            Kind::Residue { .. } => (None, "integer points"),
            Kind::HalfSpace { normal } => (Some(normal.dim()), "rational samples"),
            Kind::Dyadic => (Some(1), "rationals"),
            Kind::Block { .. } => (Some(1), "rational samples of the line"),
            Kind::Strip { .. } => (None, "rational samples"),
            Kind::Shell1D(s) => match s.variant() {
                ShellVariant::Phi1 => (Some(1), "positive rational samples"),
                ShellVariant::Phi2 => (Some(1), "nonnegative rational samples"),
            },
            Kind::ConeShell(c) => (Some(c.dim()), "rational samples"),
            Kind::Mondrian(m) => (Some(m.dim()), "rational samples"),
            Kind::Explicit(_) => (None, "the table's finite support"),
            Kind::Reflected(inner) => inner.domain(),
            Kind::Composite(_) => (None, "union of the parts' domains"),
            Kind::Custom(_) => (None, "rule-defined"),
        }
    }

    /// Number of colours the oracle may emit.
    pub fn palette_size(&self) -> u32 {
        match &self.kind {
            Kind::Constant { colours } => *colours,
            Kind::Residue { modulus } => *modulus,
            Kind::HalfSpace { .. } => 2,
            Kind::Dyadic => 2,
            Kind::Block { .. } => 2,
            Kind::Strip { colours, .. } => *colours,
            Kind::Shell1D(s) => s.palette(),
            Kind::ConeShell(c) => c.palette(),
            Kind::Mondrian(m) => m.palette(),
            Kind::Explicit(t) => t.palette(),
            Kind::Reflected(inner) => inner.palette_size(),
            Kind::Composite(c) => c.palette(),
            Kind::Custom(c) => c.palette,
        }
    }

    /// Evaluates the oracle. Errors signal points outside the domain, never
    /// nondeterminism.
    pub fn colour(&self, p: &Point) -> Result<u32> {
        match &self.kind {
            Kind::Constant { .. } => Ok(0),
            Kind::Residue { modulus } => basic::residue_colour(p, *modulus),
            Kind::HalfSpace { normal } => basic::half_space_colour(p, normal),
            Kind::Dyadic => basic::dyadic_colour(p),
            Kind::Block { block } => basic::block_colour(p, block),
            Kind::Strip {
                axis,
                width,
                colours,
            } => basic::strip_colour(p, *axis, width, *colours),
            Kind::Shell1D(s) => {
                if p.dim() != 1 {
                    return Err(Error::DimensionMismatch {
                        expected: 1,
                        got: p.dim(),
                    });
                }
                s.colour(p.x())
            }
            Kind::ConeShell(c) => c.colour(p),
            Kind::Mondrian(m) => m.colour(p),
            Kind::Explicit(t) => t.colour(p),
            Kind::Reflected(inner) => {
                let negated = Point::new(p.coords().iter().map(|c| -c.clone()).collect())?;
                inner.colour(&negated)
            }
            Kind::Composite(c) => c.colour(p),
            Kind::Custom(c) => (c.rule)(p),
        }
    }

    /// Parses the stable spec-string grammar used by witness files and the
    /// command line. Pure kinds only; file-backed tables are layered on by
    /// the caller.
    pub fn parse_spec(spec: &str) -> Result<Colouring> {
        let spec = spec.trim();
        let (head, rest) = match spec.split_once(':') {
            Some((h, r)) => (h, Some(r)),
            None => (spec, None),
        };
        match (head, rest) {
            ("constant", None) => Ok(Colouring::constant(1)),
            ("constant", Some(k)) => Ok(Colouring::constant(parse_u32(k)?)),
            ("parity", None) => Ok(Colouring::residue(2)),
            ("mod", Some(m)) => Ok(Colouring::residue(parse_u32(m)?)),
            ("dyadic", None) => Ok(Colouring::dyadic()),
            ("block", Some(d)) => {
                let d: i64 = d
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad block width {d:?}")))?;
                if d < 1 {
                    return Err(Error::Parse("block width must be positive".into()));
                }
                Ok(Colouring::block(d))
            }
            ("halfplane", None) => Ok(Colouring::half_line()),
            ("halfplane2d", None) => Ok(Colouring::half_plane_2d()),
            ("halfspace", Some(normal)) => {
                let coords = normal
                    .split(',')
                    .map(parse_rat)
                    .collect::<Result<Vec<_>>>()?;
                Ok(Colouring::half_space(Point::new(coords)?))
            }
            ("strip", Some(args)) => {
                let parts: Vec<&str> = args.split(':').collect();
                if parts.len() != 3 {
                    return Err(Error::Parse(
                        "strip expects strip:<axis>:<width>:<colours>".into(),
                    ));
                }
                Ok(Colouring::strip(
                    parts[0]
                        .parse()
                        .map_err(|_| Error::Parse("bad strip axis".into()))?,
                    parse_rat(parts[1])?,
                    parse_u32(parts[2])?,
                ))
            }
            ("mondrian", None) => Ok(Colouring::mondrian()),
            ("mondrian", Some(d)) => Colouring::mondrian_extended(
                d.parse().map_err(|_| Error::Parse("bad dimension".into()))?,
            ),
            ("phi1", Some(args)) => match args.strip_prefix("K=") {
                Some(k) => Colouring::phi1(parse_u64(k)?),
                None => Colouring::shell_for_pattern(&parse_pattern_1d(args, 2)?),
            },
            ("phi2", Some(args)) => match args.split_once(",L=") {
                Some((k, l)) => {
                    let k = k
                        .strip_prefix("K=")
                        .ok_or_else(|| Error::Parse("phi2 expects K=..,L=..".into()))?;
                    Colouring::phi2(parse_u64(k)?, parse_u64(l)?)
                }
                None => Colouring::shell_for_pattern(&parse_pattern_1d(args, 1)?),
            },
            ("lemma24", Some(args)) => {
                let (pts, origin) = args
                    .split_once('@')
                    .ok_or_else(|| Error::Parse("lemma24 expects p1,..,p4@s0".into()))?;
                let pattern = pattern_1d_from_strs(pts, origin)?;
                Colouring::lemma_extension_for_pattern(&pattern)
            }
            _ => {
                // Bare aliases such as "mod3".
                if let Some(m) = spec.strip_prefix("mod") {
                    if let Ok(m) = m.parse::<u32>() {
                        return Ok(Colouring::residue(m));
                    }
                }
                Err(Error::Parse(format!("unknown colouring spec {spec:?}")))
            }
        }
    }
}

fn parse_u32(s: &str) -> Result<u32> {
    s.parse()
        .map_err(|_| Error::Parse(format!("bad number {s:?}")))
}

fn parse_u64(s: &str) -> Result<u64> {
    s.parse()
        .map_err(|_| Error::Parse(format!("bad number {s:?}")))
}

/// "p1,p2,p3,p4" with the origin at sorted position `origin_pos`.
fn parse_pattern_1d(s: &str, origin_pos: usize) -> Result<PatternPair> {
    let values: Vec<Rat> = s
        .split(',')
        .map(parse_rat)
        .collect::<Result<_>>()?;
    let mut sorted = values.clone();
    sorted.sort();
    let origin = sorted
        .get(origin_pos)
        .ok_or_else(|| Error::Parse("pattern too short".into()))?;
    let origin_index = values.iter().position(|v| v == origin).unwrap();
    PatternPair::new(
        values.into_iter().map(Point::scalar).collect(),
        origin_index,
    )
}

fn pattern_1d_from_strs(pts: &str, origin: &str) -> Result<PatternPair> {
    let values: Vec<Rat> = pts.split(',').map(parse_rat).collect::<Result<_>>()?;
    let origin = parse_rat(origin)?;
    let origin_index = values
        .iter()
        .position(|v| *v == origin)
        .ok_or_else(|| Error::Parse("origin not among pattern points".into()))?;
    PatternPair::new(
        values.into_iter().map(Point::scalar).collect(),
        origin_index,
    )
}

/// Builds the shell-pattern helper L for the reflected partner of phi1.
fn shell_l_for(pattern: &PatternPair) -> Result<u64> {
    // Reuse phi2's parameter rule on the same point set with the origin
    // moved to the second position.
    let mut xs: Vec<Rat> = pattern.points().iter().map(|p| p.x().clone()).collect();
    xs.sort();
    let moved = PatternPair::new(xs.clone().into_iter().map(Point::scalar).collect(), 1)?;
    let shell = ShellColouring1D::for_pattern(&moved)?;
    Ok(shell.l().expect("phi2 variant"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};

    #[test]
    fn parse_round_trips_names() {
        for spec in [
            "constant:1",
            "mod:3",
            "dyadic",
            "block:10",
            "halfplane",
            "halfplane2d",
            "mondrian",
            "phi1:K=5",
            "phi2:K=5,L=5",
            "strip:0:3/5:4",
            "lemma24:1,2,3,5@3",
        ] {
            let c = Colouring::parse_spec(spec).unwrap();
            let again = Colouring::parse_spec(&c.name()).unwrap();
            assert_eq!(c.name(), again.name(), "{spec}");
        }
        assert_eq!(Colouring::parse_spec("mod3").unwrap().palette_size(), 3);
        assert!(Colouring::parse_spec("nope").is_err());
        let hs = Colouring::half_space(Point::from_ints(&[0, 1]).unwrap());
        let again = Colouring::parse_spec(&hs.name()).unwrap();
        assert_eq!(hs.name(), again.name());
    }

    #[test]
    fn oracles_are_shareable() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<Colouring>();
    }

    #[test]
    fn mod3_example_value() {
        let c = Colouring::parse_spec("mod3").unwrap();
        assert_eq!(c.colour(&Point::from_ints(&[7]).unwrap()).unwrap(), 1);
    }

    #[test]
    fn lemma24_extension_covers_the_line() {
        let pattern = PatternPair::from_ints_1d(&[1, 2, 3, 5], 3).unwrap();
        let c = Colouring::lemma_extension_for_pattern(&pattern).unwrap();
        // phi1 palette 3 + phi2 palette 11.
        assert_eq!(c.palette_size(), 14);
        // Positive side is plain phi1.
        assert_eq!(c.colour(&Point::scalar(rat(30))).unwrap(), 0);
        assert_eq!(c.colour(&Point::scalar(ratio(1, 2))).unwrap(), 2);
        // Negative side (and zero) uses reflected phi2, offset by 3.
        let at_zero = c.colour(&Point::scalar(rat(0))).unwrap();
        assert_eq!(at_zero, 3); // phi2(0) = 0, offset 3
        let neg = c.colour(&Point::scalar(rat(-6))).unwrap();
        assert_eq!(neg, 3 + 6); // phi2(6) = 6
    }

    #[test]
    fn oracle_evaluation_is_pure() {
        let c = Colouring::dyadic();
        let p = Point::scalar(ratio(13, 6));
        let first = c.colour(&p).unwrap();
        for _ in 0..10 {
            assert_eq!(c.colour(&p).unwrap(), first);
        }
    }
}
