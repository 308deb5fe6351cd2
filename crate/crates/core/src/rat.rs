//! Exact rational scalars. Every coordinate and coefficient in this crate is a
//! `Rat`; there is no floating point anywhere on a computation path.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::Error;

/// Arbitrary-precision rational, stored reduced with positive denominator.
pub type Rat = BigRational;

/// Shorthand for an integer-valued `Rat`.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Rational from an integer pair, `d != 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Parses the interchange syntax for rationals: an optionally signed decimal
/// integer or a `p/q` fraction of two such integers. Decimal points are
/// rejected so that floats can never sneak in through a document.
pub fn parse_rat(text: &str) -> Result<Rat, Error> {
    let s = text.trim();
    if s.is_empty() {
        return Err(Error::BadRational {
            text: text.to_owned(),
            reason: "empty string".into(),
        });
    }
    if s.contains(['.', 'e', 'E']) {
        return Err(Error::BadRational {
            text: text.to_owned(),
            reason: "floating point forbidden".into(),
        });
    }
    let (num_s, den_s) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let num: BigInt = num_s
        .parse()
        .map_err(|_| Error::BadRational {
            text: text.to_owned(),
            reason: "invalid integer numerator".into(),
        })?;
    let den: BigInt = match den_s {
        Some(d) => d.parse().map_err(|_| Error::BadRational {
            text: text.to_owned(),
            reason: "invalid integer denominator".into(),
        })?,
        None => BigInt::from(1),
    };
    if den.is_zero() {
        return Err(Error::BadRational {
            text: text.to_owned(),
            reason: "zero denominator".into(),
        });
    }
    Ok(Rat::new(num, den))
}

/// Canonical text form: `p/q` when the denominator is nontrivial, plain
/// integer otherwise. `parse_rat(format_rat(x)) == x` for all `x`.
pub fn format_rat(x: &Rat) -> String {
    if x.denom() == &BigInt::from(1) {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Largest integer `n` with `n <= x`.
pub fn rat_floor(x: &Rat) -> BigInt {
    x.floor().to_integer()
}

/// Exact conversion to `f64` for rendering only; not used in any predicate.
pub fn rat_to_f64(x: &Rat) -> f64 {
    let num = x.numer();
    let den = x.denom();
    // Good enough for coordinates at drawing scale.
    let nf = num.to_string().parse::<f64>().unwrap_or(0.0);
    let df = den.to_string().parse::<f64>().unwrap_or(1.0);
    nf / df
}

/// True if `x` is a (possibly negative) integer.
pub fn rat_is_integer(x: &Rat) -> bool {
    x.denom() == &BigInt::from(1)
}

/// Sign as -1, 0, 1.
pub fn rat_sign(x: &Rat) -> i32 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}
