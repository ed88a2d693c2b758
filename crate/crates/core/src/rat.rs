//! Exact rational scalars.
//!
//! `Rat` is a reduced fraction with a positive denominator; `num-rational`
//! maintains that invariant, so every value has a unique representation.
//! Text form is `p/q` or just `p` for integers, with no whitespace.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;

pub type Rat = num_rational::BigRational;

/// Shorthand for an integer rational.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Shorthand for `num/den`. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseRatError {
    pub input: String,
}

impl fmt::Display for ParseRatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid rational `{}` (expected `p` or `p/q`)", self.input)
    }
}

impl std::error::Error for ParseRatError {}

/// Parses `p` or `p/q` with optional leading sign. The denominator must be
/// a positive integer literal.
pub fn parse_rat(s: &str) -> Result<Rat, ParseRatError> {
    let err = || ParseRatError { input: s.to_string() };
    let s = s.trim();
    let (num_str, den_str) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let num: BigInt = num_str.parse().map_err(|_| err())?;
    let den: BigInt = match den_str {
        Some(d) => d.parse().map_err(|_| err())?,
        None => BigInt::one(),
    };
    if !den.is_positive() {
        return Err(err());
    }
    Ok(Rat::new(num, den))
}

/// Canonical text form: `p/q`, or `p` when the value is an integer.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Least common multiple of two positive integers.
pub(crate) fn lcm_big(a: &BigInt, b: &BigInt) -> BigInt {
    num_integer::Integer::lcm(a, b)
}

/// Strict sign of a rational: -1, 0, or +1.
pub fn sign_of(r: &Rat) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}
