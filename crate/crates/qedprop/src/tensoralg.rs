//! Rank-two momentum-space symbols spanned by the metric and `k (x) k`.
//!
//! Every operator and propagator in the construction has a symbol of the form
//! `u1(k^2) g_{mu nu} + u2(k^2) k_mu k_nu` with the coefficients rational
//! functions of `s = k^2`. Contraction closes on this span, so inversion
//! reduces to scalar algebra:
//!
//! - in the (u1, u2) basis, `a.b` has `u1 = a1*b1` and
//!   `u2 = a1*b2 + a2*b1 + s*a2*b2`;
//! - in the transverse/longitudinal projector basis
//!   `P_T = g - kk/k^2`, `P_L = kk/k^2`, contraction is componentwise, with
//!   eigen-coefficients `t = u1` and `l = u1 + s*u2`.
//!
//! The factor `kk/k^2` is representable exactly because `u2` may carry a
//! `1/s` inside its rational function; nothing here divides by `s`
//! implicitly.

use std::fmt;
use std::ops::Index;

use num_traits::Zero;

use crate::clifford::Metric;
use crate::error::{Error, Result};
use crate::scalarfield::{to_f64, Rational, RationalFn};

/// Contravariant four-vector with exact rational components. Inner products
/// always go through an explicit [`Metric`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FourVector {
    components: [Rational; 4],
}

impl FourVector {
    pub fn new(components: [Rational; 4]) -> FourVector {
        FourVector { components }
    }

    pub fn from_ints(components: [i64; 4]) -> FourVector {
        FourVector::new(components.map(|c| Rational::from_integer(c.into())))
    }

    pub fn zero() -> FourVector {
        FourVector::from_ints([0, 0, 0, 0])
    }

    pub fn component(&self, mu: usize) -> &Rational {
        &self.components[mu]
    }

    pub fn components(&self) -> &[Rational; 4] {
        &self.components
    }

    pub fn to_f64(&self) -> [f64; 4] {
        std::array::from_fn(|mu| to_f64(&self.components[mu]))
    }
}

impl Index<usize> for FourVector {
    type Output = Rational;
    fn index(&self, mu: usize) -> &Rational {
        &self.components[mu]
    }
}

/// Transverse/longitudinal eigen-coefficients of a rank-two symbol:
/// `transverse = u1`, `longitudinal = u1 + s*u2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectorDecomp {
    pub transverse: RationalFn,
    pub longitudinal: RationalFn,
}

/// `u1(k^2) g_{mu nu} + u2(k^2) k_mu k_nu` over a fixed metric signature.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankTwoSymbol {
    u1: RationalFn,
    u2: RationalFn,
    metric: Metric,
}

impl RankTwoSymbol {
    pub fn new(u1: RationalFn, u2: RationalFn, metric: Metric) -> RankTwoSymbol {
        RankTwoSymbol { u1, u2, metric }
    }

    /// The metric symbol `g` itself — the identity element of contraction.
    pub fn identity(metric: Metric) -> RankTwoSymbol {
        RankTwoSymbol::new(RationalFn::one(), RationalFn::zero(), metric)
    }

    pub fn zero(metric: Metric) -> RankTwoSymbol {
        RankTwoSymbol::new(RationalFn::zero(), RationalFn::zero(), metric)
    }

    pub fn u1(&self) -> &RationalFn {
        &self.u1
    }

    pub fn u2(&self) -> &RationalFn {
        &self.u2
    }

    pub fn metric(&self) -> Metric {
        self.metric
    }

    pub fn is_zero(&self) -> bool {
        self.u1.is_zero() && self.u2.is_zero()
    }

    fn check_metric(&self, other: &RankTwoSymbol) -> Result<()> {
        if self.metric != other.metric {
            return Err(Error::MetricMismatch);
        }
        Ok(())
    }

    pub fn try_add(&self, other: &RankTwoSymbol) -> Result<RankTwoSymbol> {
        self.check_metric(other)?;
        Ok(RankTwoSymbol::new(
            &self.u1 + &other.u1,
            &self.u2 + &other.u2,
            self.metric,
        ))
    }

    pub fn try_sub(&self, other: &RankTwoSymbol) -> Result<RankTwoSymbol> {
        self.check_metric(other)?;
        Ok(RankTwoSymbol::new(
            &self.u1 - &other.u1,
            &self.u2 - &other.u2,
            self.metric,
        ))
    }

    pub fn scale(&self, c: &RationalFn) -> RankTwoSymbol {
        RankTwoSymbol::new(c * &self.u1, c * &self.u2, self.metric)
    }

    /// Contraction `a_{mu nu} b^{nu lambda}` in the (u1, u2) basis.
    pub fn contract(&self, other: &RankTwoSymbol) -> Result<RankTwoSymbol> {
        self.check_metric(other)?;
        let s = RationalFn::var();
        let u1 = &self.u1 * &other.u1;
        let u2 = &(&(&self.u1 * &other.u2) + &(&self.u2 * &other.u1))
            + &(&s * &(&self.u2 * &other.u2));
        Ok(RankTwoSymbol::new(u1, u2, self.metric))
    }

    /// Exact inverse: the unique symbol `d` with `a.d = g`. Requires both
    /// eigen-coefficients to be invertible rational functions; a vanishing
    /// one is the degeneracy of a gauge-field operator without gauge
    /// averaging.
    pub fn invert(&self) -> Result<RankTwoSymbol> {
        if self.u1.is_zero() {
            return Err(Error::SingularSymbol(
                "transverse coefficient u1 vanishes identically (pure gauge direction)".into(),
            ));
        }
        let s = RationalFn::var();
        let longitudinal = &self.u1 + &(&s * &self.u2);
        if longitudinal.is_zero() {
            return Err(Error::SingularSymbol(
                "longitudinal coefficient u1 + s*u2 vanishes identically".into(),
            ));
        }
        let d1 = self.u1.recip()?;
        let d2 = (-&self.u2).checked_div(&(&self.u1 * &longitudinal))?;
        Ok(RankTwoSymbol::new(d1, d2, self.metric))
    }

    /// Transverse/longitudinal eigen-coefficients.
    pub fn decompose(&self) -> ProjectorDecomp {
        let s = RationalFn::var();
        ProjectorDecomp {
            transverse: self.u1.clone(),
            longitudinal: &self.u1 + &(&s * &self.u2),
        }
    }

    /// Rebuilds the (u1, u2) form from projector coefficients; exact inverse
    /// of [`RankTwoSymbol::decompose`].
    pub fn from_projectors(decomp: &ProjectorDecomp, metric: Metric) -> Result<RankTwoSymbol> {
        let s = RationalFn::var();
        let u1 = decomp.transverse.clone();
        let u2 = (&decomp.longitudinal - &decomp.transverse).checked_div(&s)?;
        Ok(RankTwoSymbol::new(u1, u2, metric))
    }

    fn eval_coeffs_at(&self, k: &FourVector) -> Result<(Rational, Rational, Rational)> {
        let s = self.metric.inner(k, k);
        let u1 = self.u1.eval(&s)?;
        let u2 = self.u2.eval(&s)?;
        Ok((s, u1, u2))
    }

    /// The literal covariant matrix `u1(k^2) g_{mu nu} + u2(k^2) k_mu k_nu`
    /// at a concrete momentum, exactly. Fails at poles of the coefficients
    /// (in particular at `k^2 = 0` when `u2` carries a `1/s`).
    pub fn evaluate_matrix(&self, k: &FourVector) -> Result<[[Rational; 4]; 4]> {
        let (_, u1, u2) = self.eval_coeffs_at(k)?;
        let lowered = self.metric.lower(k);
        Ok(std::array::from_fn(|mu| {
            std::array::from_fn(|nu| {
                let g = if mu == nu {
                    Rational::from_integer(self.metric.component(mu).into())
                } else {
                    Rational::zero()
                };
                &u1 * g + &u2 * (&lowered[mu] * &lowered[nu])
            })
        }))
    }

    /// `(a . v)_mu = u1 v_mu + u2 (k.v) k_mu` with lowered free index —
    /// the covariant matrix applied to a contravariant vector.
    pub fn apply_to_vector(&self, k: &FourVector, v: &FourVector) -> Result<[Rational; 4]> {
        let (_, u1, u2) = self.eval_coeffs_at(k)?;
        let k_dot_v = self.metric.inner(k, v);
        let k_low = self.metric.lower(k);
        let v_low = self.metric.lower(v);
        Ok(std::array::from_fn(|mu| {
            &u1 * &v_low[mu] + &u2 * &k_dot_v * &k_low[mu]
        }))
    }
}

impl fmt::Display for RankTwoSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "u1: {} | u2: {}", self.u1, self.u2)
    }
}
