//! Dense univariate polynomials over exact rationals.
//!
//! The single variable is the momentum-square scalar `s = k^2`. Coefficients
//! are arbitrary-precision rationals, so every identity in the crate that is
//! supposed to hold exactly can be checked exactly: there is no coefficient
//! overflow and no rounding.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Rational;

/// A polynomial in `s` with exact rational coefficients.
///
/// `coeffs[i]` is the coefficient of `s^i`. The highest-degree coefficient is
/// nonzero unless the polynomial is the zero polynomial, which is stored as
/// an empty coefficient list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    /// Builds a polynomial from `c0 + c1*s + c2*s^2 + ...`, trimming trailing
    /// zero coefficients.
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Polynomial::from_coeffs(vec![c])
    }

    /// The variable `s` itself.
    pub fn variable() -> Self {
        Polynomial::from_coeffs(vec![Rational::zero(), Rational::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `s^i` (zero beyond the stored degree).
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Horner evaluation at an exact rational point.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Horner evaluation in floating point; used only on numeric paths.
    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + rational_to_f64(c);
        }
        acc
    }

    pub fn to_f64_coeffs(&self) -> Vec<f64> {
        self.coeffs.iter().map(rational_to_f64).collect()
    }

    pub fn derivative(&self) -> Polynomial {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * Rational::from_integer(i.into()))
            .collect();
        Polynomial::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        Polynomial::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Rescales so the leading coefficient is 1. The zero polynomial is
    /// returned unchanged.
    pub fn monic(&self) -> Polynomial {
        match self.leading() {
            Some(lead) => self.scale(&lead.recip()),
            None => Polynomial::zero(),
        }
    }

    pub fn pow(&self, n: usize) -> Polynomial {
        let mut acc = Polynomial::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Euclidean division: `self = q * divisor + r` with
    /// `deg r < deg divisor`. Returns `None` when the divisor is zero.
    pub fn div_rem(&self, divisor: &Polynomial) -> Option<(Polynomial, Polynomial)> {
        let dlead = divisor.leading()?;
        let ddeg = divisor.degree().expect("nonzero divisor has a degree");
        if self.coeffs.len() <= ddeg {
            return Some((Polynomial::zero(), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); rem.len() - ddeg];
        while rem.len() > ddeg {
            let shift = rem.len() - 1 - ddeg;
            let factor = rem.last().expect("nonempty") / dlead;
            for (i, dc) in divisor.coeffs.iter().enumerate().take(ddeg) {
                let t = dc * &factor;
                rem[shift + i] -= t;
            }
            // the top entry cancels exactly against dlead * factor
            rem.pop();
            quot[shift] = factor;
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        Some((Polynomial::from_coeffs(quot), Polynomial::from_coeffs(rem)))
    }

    /// Monic greatest common divisor. `gcd(0, 0) = 0`.
    ///
    /// Runs a primitive pseudo-remainder sequence over the integers — the
    /// rational Euclidean algorithm explodes coefficient sizes even at these
    /// degrees, while content-stripped integer remainders stay small.
    pub fn gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
        if a.is_zero() {
            return b.monic();
        }
        if b.is_zero() {
            return a.monic();
        }
        let mut u = to_primitive_integer(a);
        let mut v = to_primitive_integer(b);
        if u.len() < v.len() {
            std::mem::swap(&mut u, &mut v);
        }
        while !v.is_empty() {
            let r = pseudo_rem(&u, &v);
            u = v;
            v = strip_content(r);
        }
        Polynomial::from_coeffs(
            u.iter().map(|c| Rational::from_integer(c.clone())).collect(),
        )
        .monic()
    }

    /// Divides out the largest power of `s`, returning the reduced polynomial
    /// and the multiplicity of the root at the origin.
    pub fn strip_root_at_origin(&self) -> (Polynomial, usize) {
        if self.is_zero() {
            return (Polynomial::zero(), 0);
        }
        let mult = self
            .coeffs
            .iter()
            .take_while(|c| c.is_zero())
            .count();
        (Polynomial::from_coeffs(self.coeffs[mult..].to_vec()), mult)
    }

    /// `self / gcd(self, self')`: same roots, all simple.
    pub fn squarefree_part(&self) -> Polynomial {
        if self.is_zero() {
            return Polynomial::zero();
        }
        let g = Polynomial::gcd(self, &self.derivative());
        let (q, r) = self.div_rem(&g).expect("gcd of a nonzero polynomial is nonzero");
        debug_assert!(r.is_zero());
        q.monic()
    }

    /// Number of distinct real roots in the open interval `(0, +inf)`,
    /// counted by Sturm's theorem. Roots at the origin are ignored.
    pub fn count_positive_real_roots(&self) -> usize {
        let (reduced, _) = self.strip_root_at_origin();
        if reduced.degree().is_none_or(|d| d == 0) {
            return 0;
        }
        let p0 = reduced.squarefree_part();
        if p0.degree().is_none_or(|d| d == 0) {
            return 0;
        }

        // Sturm chain: p0, p0', then negated remainders.
        let mut chain = vec![p0.clone(), p0.derivative()];
        loop {
            let n = chain.len();
            let (_, r) = chain[n - 2]
                .div_rem(&chain[n - 1])
                .expect("chain entries are nonzero");
            if r.is_zero() {
                break;
            }
            chain.push(-&r);
        }

        let sign_at_zero: Vec<i8> = chain.iter().map(|p| rational_sign(&p.coeff(0))).collect();
        let sign_at_inf: Vec<i8> = chain
            .iter()
            .map(|p| p.leading().map_or(0, rational_sign))
            .collect();
        let v0 = sign_variations(&sign_at_zero);
        let vinf = sign_variations(&sign_at_inf);
        v0.saturating_sub(vinf)
    }
}

/// Clears denominators and strips the integer content; coefficient list has
/// the same trailing-nonzero convention as `Polynomial`.
fn to_primitive_integer(p: &Polynomial) -> Vec<BigInt> {
    let mut lcm_den = BigInt::one();
    for c in p.coeffs() {
        lcm_den = lcm_den.lcm(c.denom());
    }
    let ints: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&lcm_den / c.denom()))
        .collect();
    strip_content(ints)
}

/// Divides out the gcd of all coefficients.
fn strip_content(coeffs: Vec<BigInt>) -> Vec<BigInt> {
    let mut content = BigInt::ZERO;
    for c in &coeffs {
        content = content.gcd(c);
    }
    if content.is_zero() || content.is_one() {
        return coeffs;
    }
    coeffs.into_iter().map(|c| c / &content).collect()
}

/// Pseudo-remainder of integer polynomials: `lead(v)^(deg u - deg v + 1) u
/// mod v`, entirely over the integers. Trailing zeros trimmed.
fn pseudo_rem(u: &[BigInt], v: &[BigInt]) -> Vec<BigInt> {
    let dv = v.len() - 1;
    let lead_v = v.last().expect("v nonzero").clone();
    let mut rem = u.to_vec();
    while rem.len() > dv {
        let shift = rem.len() - 1 - dv;
        let lead_r = rem.last().expect("nonempty").clone();
        for c in rem.iter_mut() {
            *c *= &lead_v;
        }
        for (i, vc) in v.iter().enumerate().take(dv) {
            rem[shift + i] -= vc * &lead_r;
        }
        rem.pop();
        while rem.last().is_some_and(Zero::is_zero) {
            rem.pop();
        }
    }
    rem
}

fn rational_sign(x: &Rational) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

/// Sign changes in a sequence, zeros skipped.
fn sign_variations(signs: &[i8]) -> usize {
    let mut count = 0;
    let mut last = 0i8;
    for &s in signs {
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

pub(crate) fn rational_to_f64(x: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    x.to_f64().unwrap_or(f64::NAN)
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        Polynomial::from_coeffs(coeffs)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        Polynomial::from_coeffs(coeffs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial::from_coeffs(coeffs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if i == 1 {
                        write!(f, "s")?;
                    } else {
                        write!(f, "s^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalarfield::rat;

    fn poly(coeffs: &[i64]) -> Polynomial {
        Polynomial::from_coeffs(coeffs.iter().map(|&c| rat(c, 1)).collect())
    }

    #[test]
    fn trailing_zeros_are_trimmed() {
        let p = Polynomial::from_coeffs(vec![rat(1, 1), rat(0, 1), rat(0, 1)]);
        assert_eq!(p.degree(), Some(0));
        assert_eq!(Polynomial::from_coeffs(vec![rat(0, 1)]).degree(), None);
    }

    #[test]
    fn arithmetic_and_eval() {
        let p = poly(&[1, 2]); // 1 + 2s
        let q = poly(&[-1, 0, 3]); // -1 + 3s^2
        assert_eq!(&p + &q, poly(&[0, 2, 3]));
        assert_eq!(&p - &q, poly(&[2, 2, -3]));
        assert_eq!(&p * &q, poly(&[-1, -2, 3, 6]));
        assert_eq!((&p * &q).eval(&rat(2, 1)), rat(55, 1));
        assert_eq!(p.eval(&rat(1, 2)), rat(2, 1));
    }

    #[test]
    fn division_with_remainder() {
        // s^3 - 1 = (s - 1)(s^2 + s + 1)
        let num = poly(&[-1, 0, 0, 1]);
        let den = poly(&[-1, 1]);
        let (q, r) = num.div_rem(&den).unwrap();
        assert_eq!(q, poly(&[1, 1, 1]));
        assert!(r.is_zero());

        let (q, r) = poly(&[1, 0, 1]).div_rem(&poly(&[0, 1])).unwrap();
        assert_eq!(q, poly(&[0, 1]));
        assert_eq!(r, poly(&[1]));

        assert!(poly(&[1]).div_rem(&Polynomial::zero()).is_none());
    }

    #[test]
    fn gcd_is_monic() {
        // gcd((s-1)(s+2), (s-1)(s+3)) = s - 1
        let a = &poly(&[-1, 1]) * &poly(&[2, 1]);
        let b = &poly(&[-1, 1]) * &poly(&[3, 1]);
        assert_eq!(Polynomial::gcd(&a, &b), poly(&[-1, 1]));
        // scaling does not change the monic gcd
        assert_eq!(Polynomial::gcd(&a.scale(&rat(7, 3)), &b), poly(&[-1, 1]));
        assert!(Polynomial::gcd(&Polynomial::zero(), &Polynomial::zero()).is_zero());
    }

    #[test]
    fn derivative_and_squarefree() {
        let p = poly(&[1, 2, 3]); // 1 + 2s + 3s^2
        assert_eq!(p.derivative(), poly(&[2, 6]));
        // (s-1)^2 (s+2) -> squarefree part (s-1)(s+2)
        let sq = &(&poly(&[-1, 1]) * &poly(&[-1, 1])) * &poly(&[2, 1]);
        let sf = sq.squarefree_part();
        assert_eq!(sf, (&poly(&[-1, 1]) * &poly(&[2, 1])).monic());
    }

    #[test]
    fn positive_root_counting() {
        // (s-1)(s-2)(s+3): two positive roots
        let p = &(&poly(&[-1, 1]) * &poly(&[-2, 1])) * &poly(&[3, 1]);
        assert_eq!(p.count_positive_real_roots(), 2);
        // s^2 + 1: none
        assert_eq!(poly(&[1, 0, 1]).count_positive_real_roots(), 0);
        // (s-1)^2: one distinct positive root
        let sq = &poly(&[-1, 1]) * &poly(&[-1, 1]);
        assert_eq!(sq.count_positive_real_roots(), 1);
        // s * (s+1): root at origin ignored, none positive
        assert_eq!(poly(&[0, 1, 1]).count_positive_real_roots(), 0);
        // s - 1/2
        let p = Polynomial::from_coeffs(vec![rat(-1, 2), rat(1, 1)]);
        assert_eq!(p.count_positive_real_roots(), 1);
    }

    #[test]
    fn strip_origin_root() {
        let p = poly(&[0, 0, 3, 1]); // s^2 (3 + s)
        let (reduced, mult) = p.strip_root_at_origin();
        assert_eq!(mult, 2);
        assert_eq!(reduced, poly(&[3, 1]));
    }

    #[test]
    fn display_is_readable() {
        assert_eq!(poly(&[-1, 0, 1]).to_string(), "-1 + s^2");
        assert_eq!(
            Polynomial::from_coeffs(vec![rat(1, 2), rat(-3, 4)]).to_string(),
            "1/2 - 3/4*s"
        );
        assert_eq!(Polynomial::zero().to_string(), "0");
    }
}
