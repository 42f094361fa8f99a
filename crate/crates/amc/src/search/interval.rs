//! The middle-interval construction for three-point homothets.
//!
//! Given a three-point pattern with ratio `r = (p3-p2)/(p3-p1)` and the
//! least `M` with `M r` integral, an interval `I1` of length `2M` and an
//! interval `I3` of length `M` beyond it admit a middle interval `I2` of
//! length `M` such that every `q2` in `I2` extends to a positive homothet
//! `{q1, q2, q3}` with `q1` in `I1` and `q3` in `I3`.

use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};
use crate::geometry::point::PatternPair;
use crate::rational::{is_integer, rat, Rat};

/// A closed integer interval `[lo, hi]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntInterval {
    pub lo: i64,
    pub hi: i64,
}

impl IntInterval {
    pub fn new(lo: i64, hi: i64) -> Result<Self> {
        if lo > hi {
            return Err(Error::InvalidParameter(format!(
                "empty interval [{lo}, {hi}]"
            )));
        }
        Ok(IntInterval { lo, hi })
    }

    pub fn len(&self) -> u64 {
        (self.hi - self.lo + 1) as u64
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn contains(&self, x: i64) -> bool {
        self.lo <= x && x <= self.hi
    }
}

/// The outcome: the middle interval plus, for each of its members, the
/// concrete homothet endpoints.
#[derive(Clone, Debug)]
pub struct MiddleInterval {
    pub interval: IntInterval,
    /// For `q2 = interval.lo + i`, the pair `(q1, q3)`.
    pub homothets: Vec<(i64, i64)>,
    pub ratio: Rat,
    pub modulus: u64,
}

/// Pattern ratio `r = (p3 - p2)/(p3 - p1)` and the least `M >= 1` with
/// `M r` integral (the reduced denominator of `r`).
pub fn pattern_ratio(pattern: &PatternPair) -> Result<(Rat, u64)> {
    if pattern.dim() != 1 || pattern.len() != 3 {
        return Err(Error::InvalidParameter(
            "the construction needs a three-point pattern on the line".into(),
        ));
    }
    let mut xs: Vec<Rat> = pattern.points().iter().map(|p| p.x().clone()).collect();
    xs.sort();
    let r = (&xs[2] - &xs[1]) / (&xs[2] - &xs[0]);
    let m = r
        .denom()
        .to_u64()
        .ok_or_else(|| Error::InvalidParameter("ratio denominator too large".into()))?;
    Ok((r, m))
}

/// Builds the middle interval. Preconditions follow the construction:
/// `|I1| = 2M`, `|I3| = M`, and `I1` lies fully below `I3`.
pub fn interval_i2(
    i1: &IntInterval,
    i3: &IntInterval,
    pattern: &PatternPair,
) -> Result<MiddleInterval> {
    let (r, m) = pattern_ratio(pattern)?;
    if i1.len() != 2 * m {
        return Err(Error::InvalidParameter(format!(
            "I1 must have length 2M = {}, got {}",
            2 * m,
            i1.len()
        )));
    }
    if i3.len() != m {
        return Err(Error::InvalidParameter(format!(
            "I3 must have length M = {}, got {}",
            m,
            i3.len()
        )));
    }
    if i1.hi >= i3.lo {
        return Err(Error::InvalidParameter(
            "I1 must lie strictly below I3".into(),
        ));
    }
    // q3 = min I3; q1 = the unique element of the lower half of I1 with
    // r q1 + (1-r) q3 integral, i.e. q1 = q3 (mod M).
    let q3 = i3.lo;
    let lower_half_hi = i1.lo + m as i64 - 1;
    let q1 = (i1.lo..=lower_half_hi)
        .find(|&q1| {
            let val = &r * rat(q1) + (Rat::one() - &r) * rat(q3);
            is_integer(&val)
        })
        .ok_or_else(|| {
            Error::InvalidParameter("no admissible q1 in the lower half of I1".into())
        })?;
    let base = &r * rat(q1) + (Rat::one() - &r) * rat(q3);
    debug_assert!(is_integer(&base));
    let q2_lo = base.to_integer().to_i64().ok_or_else(|| {
        Error::InvalidParameter("middle interval out of i64 range".into())
    })?;
    let homothets: Vec<(i64, i64)> = (0..m as i64).map(|i| (q1 + i, q3 + i)).collect();
    let interval = IntInterval::new(q2_lo, q2_lo + m as i64 - 1)?;
    // Postcondition max I1 < max I2 < max I3. The forced choice of q1 and
    // q3 cannot satisfy it when I3 starts too close to I1; report that as a
    // precondition failure rather than returning a colliding interval.
    if !(i1.hi < interval.hi && interval.hi < i3.hi) {
        return Err(Error::InvalidParameter(format!(
            "middle interval [{}, {}] collides with I1/I3; widen the gap between them",
            interval.lo, interval.hi
        )));
    }
    Ok(MiddleInterval {
        interval,
        homothets,
        ratio: r,
        modulus: m,
    })
}

impl MiddleInterval {
    /// Checks that `{q1, q2, q3}` is an exact positive homothet of the
    /// pattern for the `i`-th member of the interval.
    pub fn verify_member(&self, i: usize) -> bool {
        let q2 = self.interval.lo + i as i64;
        let (q1, q3) = self.homothets[i];
        // q2 = r q1 + (1-r) q3 pins the middle point of the homothet.
        let want = &self.ratio * rat(q1) + (Rat::one() - &self.ratio) * rat(q3);
        want == rat(q2) && q1 < q2 && q2 < q3
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pattern_1_2_4() {
        // r = 2/3, M = 3; I1 = [10,15], I3 = [20,22] gives I2 = [14,16]
        // with q3 = 20, q1 = 11, and (2*11 + 20)/3 = 14.
        let pattern = PatternPair::from_ints_1d(&[1, 2, 4], 2).unwrap();
        let mid = interval_i2(
            &IntInterval::new(10, 15).unwrap(),
            &IntInterval::new(20, 22).unwrap(),
            &pattern,
        )
        .unwrap();
        assert_eq!(mid.interval, IntInterval::new(14, 16).unwrap());
        assert_eq!(mid.homothets, vec![(11, 20), (12, 21), (13, 22)]);
        for i in 0..3 {
            assert!(mid.verify_member(i));
        }
    }

    #[test]
    fn pattern_1_2_3() {
        // r = 1/2, M = 2; each q2 is the midpoint of a parity-matching pair.
        let pattern = PatternPair::from_ints_1d(&[1, 2, 3], 2).unwrap();
        let mid = interval_i2(
            &IntInterval::new(1, 4).unwrap(),
            &IntInterval::new(11, 12).unwrap(),
            &pattern,
        )
        .unwrap();
        assert!(mid.interval.lo > 4 && mid.interval.hi < 12);
        for i in 0..2 {
            assert!(mid.verify_member(i));
        }
    }

    #[test]
    fn length_mismatch_is_rejected() {
        let pattern = PatternPair::from_ints_1d(&[1, 2, 4], 2).unwrap();
        assert!(interval_i2(
            &IntInterval::new(10, 14).unwrap(),
            &IntInterval::new(20, 22).unwrap(),
            &pattern,
        )
        .is_err());
    }
}
