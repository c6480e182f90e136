//! Exact rational functions of the scalar `s = k^2`.
//!
//! Every scalar coefficient function in the propagator algebra — the symbol
//! pair (u1, u2), the propagator pair (d1, d2), the polarization pair
//! (a1, a2), the self-energy model f — lives in this field. Canonical form
//! (coprime numerator/denominator, monic denominator) makes structural
//! equality decide function equality, so identities can be asserted exactly.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::Zero;

use super::polynomial::Polynomial;
use super::{parse_rational, Rational};
use crate::error::{Error, Result};

/// A ratio of polynomials in `s`, kept in canonical form:
/// `gcd(num, den) = 1`, `den` monic and nonzero. The zero function is `0/1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFn {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFn {
    /// Builds `num/den`, normalizing to canonical form.
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZeroFn);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: Polynomial, den: Polynomial) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return RationalFn {
                num: Polynomial::zero(),
                den: Polynomial::one(),
            };
        }
        let g = Polynomial::gcd(&num, &den);
        let (mut num, r) = num.div_rem(&g).expect("gcd is nonzero");
        debug_assert!(r.is_zero());
        let (mut den, r) = den.div_rem(&g).expect("gcd is nonzero");
        debug_assert!(r.is_zero());
        let lead = den.leading().expect("den is nonzero").clone();
        num = num.scale(&lead.recip());
        den = den.scale(&lead.recip());
        RationalFn { num, den }
    }

    pub fn from_polynomial(p: Polynomial) -> Self {
        RationalFn {
            num: p,
            den: Polynomial::one(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_polynomial(Polynomial::constant(c))
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(Rational::from_integer(n.into()))
    }

    /// The variable `s = k^2`.
    pub fn var() -> Self {
        Self::from_polynomial(Polynomial::variable())
    }

    pub fn zero() -> Self {
        Self::from_polynomial(Polynomial::zero())
    }

    pub fn one() -> Self {
        Self::from_polynomial(Polynomial::one())
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == Polynomial::one() && self.den == Polynomial::one()
    }

    /// The constant value when the function has no `s` dependence.
    pub fn as_constant(&self) -> Option<Rational> {
        if self.den == Polynomial::one() && self.num.degree().is_none_or(|d| d == 0) {
            Some(self.num.coeff(0))
        } else {
            None
        }
    }

    pub fn checked_div(&self, rhs: &RationalFn) -> Result<RationalFn> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZeroFn);
        }
        Ok(RationalFn::normalized(
            &self.num * &rhs.den,
            &self.den * &rhs.num,
        ))
    }

    pub fn recip(&self) -> Result<RationalFn> {
        RationalFn::one().checked_div(self)
    }

    /// Integer power; negative exponents require a nonzero function.
    pub fn pow(&self, n: i32) -> Result<RationalFn> {
        let base = if n < 0 { self.recip()? } else { self.clone() };
        let mut acc = RationalFn::one();
        for _ in 0..n.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// Exact evaluation; a vanishing denominator is a pole.
    pub fn eval(&self, s: &Rational) -> Result<Rational> {
        let d = self.den.eval(s);
        if d.is_zero() {
            return Err(Error::PoleAtPoint { at: s.to_string() });
        }
        Ok(self.num.eval(s) / d)
    }

    /// Floating evaluation for numeric paths (quadrature, regression).
    /// Returns non-finite values at or near poles; callers guard the domain.
    pub fn eval_f64(&self, s: f64) -> f64 {
        self.num.eval_f64(s) / self.den.eval_f64(s)
    }

    /// `deg num - deg den`: the exact large-`s` power law. `None` for zero.
    pub fn degree_diff(&self) -> Option<i64> {
        let n = self.num.degree()? as i64;
        let d = self.den.degree().expect("den is nonzero") as i64;
        Some(n - d)
    }
}

impl Add for &RationalFn {
    type Output = RationalFn;
    fn add(self, rhs: &RationalFn) -> RationalFn {
        RationalFn::normalized(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RationalFn {
    type Output = RationalFn;
    fn sub(self, rhs: &RationalFn) -> RationalFn {
        RationalFn::normalized(
            &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Mul for &RationalFn {
    type Output = RationalFn;
    fn mul(self, rhs: &RationalFn) -> RationalFn {
        RationalFn::normalized(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &RationalFn {
    type Output = RationalFn;
    fn neg(self) -> RationalFn {
        RationalFn {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

fn write_coeff_list(f: &mut fmt::Formatter<'_>, p: &Polynomial) -> fmt::Result {
    write!(f, "[")?;
    let coeffs = p.coeffs();
    if coeffs.is_empty() {
        write!(f, "0")?;
    }
    for (i, c) in coeffs.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{c}")?;
    }
    write!(f, "]")
}

impl fmt::Display for RationalFn {
    /// Textual serialization used by config files and the CLI:
    /// `num_coeffs=[c0,c1,...] / den_coeffs=[d0,d1,...]` with exact
    /// integer-fraction tokens.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "num_coeffs=")?;
        write_coeff_list(f, &self.num)?;
        write!(f, " / den_coeffs=")?;
        write_coeff_list(f, &self.den)
    }
}

/// Parses a bracketed, comma-separated list of rational tokens.
pub(crate) fn parse_coeff_list(text: &str) -> Result<Vec<Rational>> {
    let inner = text
        .trim()
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| Error::Parse(format!("expected bracketed coefficient list, got `{text}`")))?;
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner.split(',').map(|tok| parse_rational(tok.trim())).collect()
}

impl FromStr for RationalFn {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        let rest = text
            .strip_prefix("num_coeffs=")
            .ok_or_else(|| Error::Parse(format!("expected `num_coeffs=[...]`, got `{text}`")))?;
        let (num_part, den_part) = rest
            .split_once("/ den_coeffs=")
            .ok_or_else(|| Error::Parse("missing ` / den_coeffs=[...]` part".into()))?;
        let num = Polynomial::from_coeffs(parse_coeff_list(num_part.trim())?);
        let den = Polynomial::from_coeffs(parse_coeff_list(den_part.trim())?);
        RationalFn::new(num, den)
    }
}
