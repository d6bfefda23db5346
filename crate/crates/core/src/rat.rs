//! Exact rational scalars used throughout the library.
//!
//! All coefficients, gamble values and solver pivots are arbitrary-precision
//! rationals; no floating point participates in any decision.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rat = BigRational;

/// Builds `n/d`. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Builds the integer rational `n`.
pub fn rint(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rzero() -> Rat {
    Rat::zero()
}

pub fn rone() -> Rat {
    Rat::one()
}

pub fn is_zero(r: &Rat) -> bool {
    r.is_zero()
}

pub fn is_pos(r: &Rat) -> bool {
    r.is_positive()
}

pub fn is_neg(r: &Rat) -> bool {
    r.is_negative()
}

/// Parses `"p/q"` or `"p"` (optionally signed) into a rational.
pub fn parse_rat(s: &str) -> Result<Rat, String> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = num
        .parse()
        .map_err(|_| format!("invalid rational numerator: {s:?}"))?;
    let d: BigInt = den
        .parse()
        .map_err(|_| format!("invalid rational denominator: {s:?}"))?;
    if d.is_zero() {
        return Err(format!("zero denominator in rational: {s:?}"));
    }
    Ok(Rat::new(n, d))
}

/// Formats a rational as `"p"` for integers and `"p/q"` otherwise.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
