//! Exact rational scalars.
//!
//! All coordinate arithmetic in this crate runs over arbitrary-precision
//! rationals. `BigRational` already keeps values reduced with a positive
//! denominator, which is exactly the invariant we need, so we use it
//! directly and add the handful of helpers the rest of the crate leans on.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar: reduced, denominator > 0.
pub type Rat = BigRational;

/// Integer as a rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `n/d` as a reduced rational. Panics on `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Parses "a/b" or "a" into a rational.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let n: BigInt = num
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational {s:?}")))?;
    let d: BigInt = match den {
        Some(d) => d
            .parse()
            .map_err(|_| Error::Parse(format!("bad rational {s:?}")))?,
        None => BigInt::one(),
    };
    if d.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rat::new(n, d))
}

/// Renders a rational as "a" or "a/b".
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Exact conversion of a finite `f64` (every finite float is a rational).
pub fn rat_from_f64(x: f64) -> Result<Rat> {
    Rat::from_float(x).ok_or_else(|| Error::Parse(format!("non-finite float {x}")))
}

/// Nearest `f64` (used only at reporting boundaries, never in decisions).
pub fn rat_to_f64(r: &Rat) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// `r^k` for integer `k` (negative exponents allowed on nonzero `r`).
pub fn rat_pow(r: &Rat, k: i64) -> Rat {
    r.pow(k as i32)
}

/// 2-adic valuation of a nonzero rational: `x = 2^t * p/q` with `p`, `q` odd.
pub fn two_adic_valuation(x: &Rat) -> i64 {
    assert!(!x.is_zero(), "valuation of zero is undefined");
    fn v2(n: &BigInt) -> i64 {
        n.trailing_zeros().map(|z| z as i64).unwrap_or(0)
    }
    v2(x.numer()) - v2(x.denom())
}

/// Exact square root when the argument is a perfect rational square.
pub fn rat_sqrt(r: &Rat) -> Option<Rat> {
    if r.is_negative() {
        return None;
    }
    let ns = r.numer().sqrt();
    let ds = r.denom().sqrt();
    if &(&ns * &ns) == r.numer() && &(&ds * &ds) == r.denom() {
        Some(Rat::new(ns, ds))
    } else {
        None
    }
}

/// Largest rational `p/q` with `q <= scale` and `p/q <= sqrt(n)`; a certified
/// lower bound used where a comparison against an integer square root is
/// needed without leaving exact arithmetic.
pub fn sqrt_lower_bound(n: u64, scale: u64) -> Rat {
    let s = BigInt::from(scale);
    let p = (BigInt::from(n) * &s * &s).sqrt();
    Rat::new(p, s)
}

/// Smallest convenient rational upper bound for `sqrt(n)` at the given scale.
pub fn sqrt_upper_bound(n: u64, scale: u64) -> Rat {
    let s = BigInt::from(scale);
    let p = (BigInt::from(n) * &s * &s).sqrt() + 1;
    Rat::new(p, s)
}

/// Floor of a rational as a `BigInt`.
pub fn rat_floor(r: &Rat) -> BigInt {
    r.floor().to_integer()
}

/// Integer value of an integral rational, when it fits.
pub fn rat_to_i64(r: &Rat) -> Option<i64> {
    if !is_integer(r) {
        return None;
    }
    r.to_integer().to_i64()
}

/// True iff `r` is an integer.
pub fn is_integer(r: &Rat) -> bool {
    r.denom().is_one()
}

/// `lcm` of two positive integers.
pub fn lcm_big(a: &BigInt, b: &BigInt) -> BigInt {
    a.lcm(b)
}

/// `gcd` of two integers.
pub fn gcd_big(a: &BigInt, b: &BigInt) -> BigInt {
    a.gcd(b)
}

/// Sign of a rational as -1/0/+1.
pub fn sign(r: &Rat) -> i32 {
    match r.numer().sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["3", "-7", "3/5", "8/10", "-255/4"] {
            let r = parse_rat(s).unwrap();
            let back = parse_rat(&format_rat(&r)).unwrap();
            assert_eq!(r, back);
        }
        assert_eq!(format_rat(&parse_rat("8/10").unwrap()), "4/5");
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
    }

    #[test]
    fn two_adic_valuations() {
        assert_eq!(two_adic_valuation(&rat(2)), 1);
        assert_eq!(two_adic_valuation(&rat(3)), 0);
        assert_eq!(two_adic_valuation(&rat(4)), 2);
        assert_eq!(two_adic_valuation(&ratio(3, 2)), -1);
        assert_eq!(two_adic_valuation(&ratio(-12, 5)), 2);
    }

    #[test]
    fn sqrt_helpers() {
        assert_eq!(rat_sqrt(&ratio(9, 25)), Some(ratio(3, 5)));
        assert_eq!(rat_sqrt(&rat(2)), None);
        let lo = sqrt_lower_bound(2, 1_000_000);
        let hi = sqrt_upper_bound(2, 1_000_000);
        assert!(&lo * &lo <= rat(2) && rat(2) <= &hi * &hi);
    }
}
