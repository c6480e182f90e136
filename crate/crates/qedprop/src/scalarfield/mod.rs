//! Exact scalar arithmetic: arbitrary-precision rationals, polynomials in
//! `s = k^2`, and the rational-function field built from them.
//!
//! Everything that is an identity in the propagator construction is checked
//! over this field, so "equal" always means equal as functions, not equal to
//! within a tolerance. All values are immutable; operations are pure
//! functions and safe to share across threads.

mod polynomial;
mod ratfn;

pub use polynomial::Polynomial;
pub use ratfn::RationalFn;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar: arbitrary-precision numerator over a positive
/// arbitrary-precision denominator, always fully reduced.
pub type Rational = num_rational::BigRational;

/// Shorthand constructor: `rat(p, q) = p/q`. Panics when `q = 0`.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(p.into(), q.into())
}

/// Exact square root when the argument is a perfect square of a rational.
pub fn rational_sqrt(x: &Rational) -> Option<Rational> {
    if x.is_negative() {
        return None;
    }
    let sqrt_int = |n: &BigInt| -> Option<BigInt> {
        let r = n.sqrt();
        (&r * &r == *n).then_some(r)
    };
    let num = sqrt_int(x.numer())?;
    let den = sqrt_int(x.denom())?;
    Some(Rational::new(num, den))
}

/// Parses an exact rational token: `p/q`, a plain integer, or a plain
/// decimal such as `0.5` (read exactly in base 10).
pub fn parse_rational(token: &str) -> Result<Rational> {
    let token = token.trim();
    if token.is_empty() {
        return Err(Error::Parse("empty rational token".into()));
    }
    if let Some((p, q)) = token.split_once('/') {
        let numer: BigInt = p
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad numerator in `{token}`")))?;
        let denom: BigInt = q
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad denominator in `{token}`")))?;
        if denom.is_zero() {
            return Err(Error::Parse(format!("zero denominator in `{token}`")));
        }
        return Ok(Rational::new(numer, denom));
    }
    if let Some((int_part, frac_part)) = token.split_once('.') {
        let sign = if int_part.trim_start().starts_with('-') { -1 } else { 1 };
        let int: BigInt = if int_part.is_empty() || int_part == "-" {
            BigInt::ZERO
        } else {
            int_part
                .parse()
                .map_err(|_| Error::Parse(format!("bad decimal `{token}`")))?
        };
        if frac_part.is_empty() {
            return Ok(Rational::from_integer(int));
        }
        let frac: BigInt = frac_part
            .parse()
            .map_err(|_| Error::Parse(format!("bad decimal `{token}`")))?;
        if frac.is_negative() {
            return Err(Error::Parse(format!("bad decimal `{token}`")));
        }
        let scale = BigInt::from(10).pow(frac_part.len() as u32);
        let unsigned = int.abs() * &scale + frac;
        return Ok(Rational::new(unsigned * BigInt::from(sign), scale));
    }
    let int: BigInt = token
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational token `{token}`")))?;
    Ok(Rational::from_integer(int))
}

/// Exact conversion from a finite float (every finite f64 is rational).
pub fn rational_from_f64(x: f64) -> Result<Rational> {
    Rational::from_float(x)
        .ok_or_else(|| Error::InvalidInput(format!("non-finite value {x} has no rational form")))
}

/// Nearest-f64 conversion of an exact rational (used on numeric paths).
pub fn to_f64(x: &Rational) -> f64 {
    polynomial::rational_to_f64(x)
}
