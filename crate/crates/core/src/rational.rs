//! Exact rational scalars.
//!
//! `Rat` is an arbitrary-precision rational kept in lowest terms with a
//! positive denominator; all arithmetic in this crate is closed over it.
//! Rationals serialize as `p/q`, or as a bare integer when `q = 1`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Rat = num_rational::BigRational;

/// Rational from an integer.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Rational `p/q`. Panics on `q = 0`.
pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// True when the rational is an integer.
pub fn is_integer(r: &Rat) -> bool {
    r.denom().is_one()
}

/// Exact integer value, or `None` for a proper fraction.
pub fn to_integer(r: &Rat) -> Option<BigInt> {
    is_integer(r).then(|| r.numer().clone())
}

/// Largest integer `<= r`.
pub fn floor_int(r: &Rat) -> BigInt {
    r.floor().numer().clone()
}

/// Smallest integer `>= r`.
pub fn ceil_int(r: &Rat) -> BigInt {
    r.ceil().numer().clone()
}

/// Parse `p/q` or a bare integer literal.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let bad = || Error::BadRational(s.to_string());
    let mut parts = s.splitn(2, '/');
    let numer: BigInt = parts.next().ok_or_else(bad)?.trim().parse().map_err(|_| bad())?;
    match parts.next() {
        None => Ok(Rat::from_integer(numer)),
        Some(den) => {
            let denom: BigInt = den.trim().parse().map_err(|_| bad())?;
            if denom.is_zero() {
                return Err(bad());
            }
            Ok(Rat::new(numer, denom))
        }
    }
}

/// Lowest-terms display, `p/q` with `q > 0`, or `p` when integral.
pub fn format_rat(r: &Rat) -> String {
    if is_integer(r) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Exact binomial coefficient `C(n, k)` for integer `n` (possibly negative).
pub fn binomial(n: &BigInt, k: usize) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for j in 0..k {
        num *= n - BigInt::from(j);
        den *= BigInt::from(j + 1);
    }
    debug_assert!((&num % &den).is_zero() || num.is_zero());
    num / den
}

/// `n!` as a big integer.
pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, j| acc * BigInt::from(j))
}
