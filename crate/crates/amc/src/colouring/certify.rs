//! Structural AP-freeness certificates for shell-type colourings.
//!
//! A shell construction defeats infinite monochromatic progressions by
//! alternation: once the cell width at scale `i` exceeds the progression's
//! difference `t`, consecutive cells of different colours are both hit. The
//! certificate records that inequality together with the concrete crossover
//! index, so it can be replayed against any difference.


use crate::error::{Error, Result};
use crate::rational::{format_rat, rat, rat_pow, ratio, Rat};

use super::{Colouring, Kind};

/// How the certificate's crossover is computed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Crossover {
    /// Cells `[base^i, base^(i+1))` style: width `base^i (base - 1)`
    /// (scaled geometric shells; `phi2` and the cone shells have the same
    /// cell width with an extra rational scale).
    Geometric { base: u64, scale: Rat },
    /// Block colouring: fixed width `block`; only differences `t <= block`
    /// are forced to alternate, within at most `2 * block` terms.
    Blocks { block: u64 },
}

/// Structural certificate that a colouring contains no infinite
/// monochromatic AP (for `Blocks`, none with difference below the bound).
#[derive(Clone, Debug)]
pub struct ApFreeCertificate {
    pub construction: String,
    pub crossover: Crossover,
    /// `None`: all differences; `Some(b)`: differences up to `b` only.
    pub difference_bound: Option<Rat>,
    pub statement: String,
}

impl ApFreeCertificate {
    /// Smallest shell index whose cell width strictly exceeds `t`
    /// (`Geometric` only).
    pub fn crossover_index(&self, t: &Rat) -> Option<u64> {
        match &self.crossover {
            Crossover::Geometric { base, scale } => {
                let b = rat(*base as i64);
                let factor = &b - rat(1);
                let mut i = 0u64;
                loop {
                    let width = scale * &rat_pow(&b, i as i64) * &factor;
                    if &width > t {
                        return Some(i);
                    }
                    i += 1;
                }
            }
            Crossover::Blocks { .. } => None,
        }
    }

    /// For block certificates: number of consecutive AP terms within which
    /// a colour change is forced, for differences `1 <= t <= block`.
    pub fn block_term_bound(&self) -> Option<u64> {
        match &self.crossover {
            Crossover::Blocks { block } => Some(2 * block),
            _ => None,
        }
    }
}

/// Emits the parity-alternation certificate for shell-type constructions.
/// Explicit tables and residue-style rules are not certifiable this way.
pub fn certify_shell_ap_free(oracle: &Colouring) -> Result<ApFreeCertificate> {
    match oracle.kind() {
        Kind::Shell1D(shell) => {
            let base = shell.k();
            let scale = match shell.variant() {
                super::shell::ShellVariant::Phi1 => rat(1),
                super::shell::ShellVariant::Phi2 => rat(1),
            };
            Ok(ApFreeCertificate {
                construction: oracle.name(),
                statement: format!(
                    "cells [{b}^i, {b}^(i+1)) have width {b}^i({b}-1); once \
                     {b}^i({b}-1) > t every progression with difference t meets \
                     consecutive cells, whose colours differ",
                    b = base
                ),
                crossover: Crossover::Geometric { base, scale },
                difference_bound: None,
            })
        }
        Kind::ConeShell(cone) => Ok(ApFreeCertificate {
            construction: oracle.name(),
            statement: format!(
                "within one cone the l1 shell value of an unbounded progression \
                 grows linearly; cells of width {l}*{k}^i({k}-1)/cells eventually \
                 exceed the per-step growth and alternate",
                l = format_rat(cone.l()),
                k = cone.k()
            ),
            crossover: Crossover::Geometric {
                base: cone.k(),
                scale: cone.l() / rat(cone.cells_per_shell() as i64),
            },
            difference_bound: None,
        }),
        Kind::Mondrian(_) => Ok(ApFreeCertificate {
            construction: oracle.name(),
            statement: "square rings Q_i \\ Q_(i-1) have width 3*4^(i-1); once \
                        that exceeds t the ring parity alternates along any \
                        progression while the half-plane side is eventually fixed"
                .into(),
            crossover: Crossover::Geometric {
                base: 4,
                scale: ratio(1, 4),
            },
            difference_bound: None,
        }),
        Kind::Block { block } => {
            let b = block.clone();
            let bu: u64 = b.to_string().parse().map_err(|_| {
                Error::InvalidParameter("block width too large for certificate".into())
            })?;
            Ok(ApFreeCertificate {
                construction: oracle.name(),
                statement: format!(
                    "blocks have fixed width {bu}; a progression with difference \
                     t <= {bu} crosses a block boundary within 2*{bu} terms and \
                     the block parity flips (differences above {bu} can stay \
                     monochromatic)"
                ),
                crossover: Crossover::Blocks { block: bu },
                difference_bound: Some(rat(bu as i64)),
            })
        }
        _ => Err(Error::NotCertifiable(oracle.name())),
    }
}
