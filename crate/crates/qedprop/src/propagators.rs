//! Operators and propagators of the gauge-fixed photon theory.
//!
//! The gauge-averaging term turns the Maxwell operator into an invertible
//! rank-two operator `P`. This module assembles, as exact rank-two symbols:
//!
//! - the operator symbol of `P` for gauge parameters (alpha, beta);
//! - the bare symbol `sigma` and bare propagator `sigma~` for a model with
//!   bare gauge parameter `alpha_B` and effective mass `mtilde2`;
//! - the self-energy symbol `Sigma`, renormalized propagator `Sigma~` and
//!   polarization tensor `Pi = sigma - Sigma` for a pluggable transverse
//!   model function `f(k^2)`;
//! - the resummation residual `Sigma~ - sigma~ - sigma~.Pi.Sigma~`, which
//!   must be the exact zero symbol;
//! - the massive-vector (Proca-type) propagator integrand used only as a
//!   falloff counterexample: it tends to a constant at large momentum where
//!   the gauge-averaged propagator keeps the renormalizable `k^-2` behaviour.
//!
//! It also carries the two numeric diagnostics: a large-`s` falloff estimator
//! (exact by degree counting, and by log-log regression as the stated
//! numeric route) and a periodic-lattice verification that the Lagrangian
//! density splits into a total divergence plus `(1/2) A^mu P_{mu nu} A^nu`.

use num_traits::Signed;

use crate::clifford::Metric;
use crate::error::{Error, Result};
use crate::scalarfield::{to_f64, Rational, RationalFn};
use crate::tensoralg::RankTwoSymbol;

/// Gauge parameters of the quadratic gauge-averaging term: `alpha > 0`
/// divides the functional, `beta` (dimension 1/length) multiplies the
/// gamma-matrix part.
#[derive(Clone, Debug, PartialEq)]
pub struct GaugeParams {
    alpha: Rational,
    beta: Rational,
}

impl GaugeParams {
    pub fn new(alpha: Rational, beta: Rational) -> Result<GaugeParams> {
        if !alpha.is_positive() {
            return Err(Error::InvalidInput("gauge parameter alpha must be positive".into()));
        }
        Ok(GaugeParams { alpha, beta })
    }

    pub fn alpha(&self) -> &Rational {
        &self.alpha
    }

    pub fn beta(&self) -> &Rational {
        &self.beta
    }
}

/// Bare-theory model: gauge parameter `alpha_B > 0`, effective photon mass
/// square `mtilde2 >= 0`, and the transverse self-energy model `f(k^2)`
/// (a pluggable input — nothing here computes it from loops).
#[derive(Clone, Debug, PartialEq)]
pub struct PropagatorModel {
    alpha_b: Rational,
    mtilde2: Rational,
    f: RationalFn,
}

impl PropagatorModel {
    pub fn new(alpha_b: Rational, mtilde2: Rational, f: RationalFn) -> Result<PropagatorModel> {
        if !alpha_b.is_positive() {
            return Err(Error::InvalidInput("alpha_B must be positive".into()));
        }
        if mtilde2.is_negative() {
            return Err(Error::InvalidInput("mtilde2 must be nonnegative".into()));
        }
        Ok(PropagatorModel { alpha_b, mtilde2, f })
    }

    /// Model whose self-energy reproduces the bare theory (`f = s`, so the
    /// polarization tensor vanishes).
    pub fn bare(alpha_b: Rational, mtilde2: Rational) -> Result<PropagatorModel> {
        PropagatorModel::new(alpha_b, mtilde2, RationalFn::var())
    }

    pub fn alpha_b(&self) -> &Rational {
        &self.alpha_b
    }

    pub fn mtilde2(&self) -> &Rational {
        &self.mtilde2
    }

    pub fn f(&self) -> &RationalFn {
        &self.f
    }

    pub fn with_alpha_b(&self, alpha_b: Rational) -> Result<PropagatorModel> {
        PropagatorModel::new(alpha_b, self.mtilde2.clone(), self.f.clone())
    }
}

/// Massive-vector electrodynamics parameters: Proca mass square `m2 > 0`,
/// fermion mass carried for completeness but never used numerically.
#[derive(Clone, Debug, PartialEq)]
pub struct MassiveQEDParams {
    m2: Rational,
    fermion_mass: Rational,
}

impl MassiveQEDParams {
    pub fn new(m2: Rational, fermion_mass: Rational) -> Result<MassiveQEDParams> {
        if !m2.is_positive() {
            return Err(Error::InvalidInput("Proca mass square m2 must be positive".into()));
        }
        Ok(MassiveQEDParams { m2, fermion_mass })
    }

    pub fn m2(&self) -> &Rational {
        &self.m2
    }

    pub fn fermion_mass(&self) -> &Rational {
        &self.fermion_mass
    }
}

fn constant(c: &Rational) -> RationalFn {
    RationalFn::constant(c.clone())
}

/// Symbol of the gauge-fixed field operator
/// `P = g (-box + beta^2/alpha) + (1 - 1/alpha) d d` in Euclidean signature
/// (`-box -> k^2`, `d_mu d_nu -> -k_mu k_nu`):
/// `u1 = s + beta^2/alpha`, `u2 = 1/alpha - 1`.
pub fn operator_symbol(gp: &GaugeParams) -> RankTwoSymbol {
    let beta2 = gp.beta() * gp.beta();
    let u1 = &RationalFn::var() + &constant(&(beta2 / gp.alpha()));
    let u2 = constant(&(gp.alpha().recip() - Rational::from_integer(1.into())));
    RankTwoSymbol::new(u1, u2, Metric::EUCLIDEAN)
}

/// Bare operator symbol: `u1 = s + mtilde2`, `u2 = 1/alpha_B - 1`;
/// equivalently transverse `s + mtilde2` and longitudinal
/// `(1/alpha_B)(s + alpha_B mtilde2)`.
pub fn bare_symbol(pm: &PropagatorModel) -> RankTwoSymbol {
    let u1 = &RationalFn::var() + &constant(pm.mtilde2());
    let u2 = constant(&(pm.alpha_b().recip() - Rational::from_integer(1.into())));
    RankTwoSymbol::new(u1, u2, Metric::EUCLIDEAN)
}

/// Bare propagator: the exact inverse of the bare symbol, with closed form
/// `d1 = 1/(s + mtilde2)`,
/// `d2 = (alpha_B - 1)/((s + mtilde2)(s + alpha_B mtilde2))`.
pub fn bare_propagator(pm: &PropagatorModel) -> Result<RankTwoSymbol> {
    bare_symbol(pm).invert()
}

/// Self-energy symbol of the full theory:
/// `u1 = mtilde2 + f`, `u2 = 1/alpha_B - f/s`. Its longitudinal part equals
/// the bare one — the self-energy model only moves the transverse
/// coefficient.
pub fn self_energy(pm: &PropagatorModel) -> RankTwoSymbol {
    let u1 = &constant(pm.mtilde2()) + pm.f();
    let f_over_s = pm
        .f()
        .checked_div(&RationalFn::var())
        .expect("the variable s is not the zero function");
    let u2 = &constant(&pm.alpha_b().recip()) - &f_over_s;
    RankTwoSymbol::new(u1, u2, Metric::EUCLIDEAN)
}

/// Renormalized propagator: the exact inverse of the self-energy symbol,
/// with closed form `d1 = 1/(f + mtilde2)` and
/// `d2 = (alpha_B f/s - 1)/((s + alpha_B mtilde2)(f + mtilde2))`.
/// Only `d2` depends on the gauge parameter.
pub fn renormalized_propagator(pm: &PropagatorModel) -> Result<RankTwoSymbol> {
    self_energy(pm).invert().map_err(|e| match e {
        Error::SingularSymbol(_) => Error::SingularSymbol(
            "f + mtilde2 vanishes identically: the full theory has no transverse response".into(),
        ),
        other => other,
    })
}

/// Polarization tensor `Pi = sigma - Sigma`. Purely transverse with
/// coefficient `s - f`: `u1 = s - f`, `u2 = -(s - f)/s`, independent of
/// `alpha_B`.
pub fn polarization(pm: &PropagatorModel) -> RankTwoSymbol {
    let sigma = bare_symbol(pm);
    let full = self_energy(pm);
    sigma
        .try_sub(&full)
        .expect("both symbols are built over the Euclidean metric")
}

/// Resummation residual `Sigma~ - sigma~ - sigma~.Pi.Sigma~`. Summing
/// self-energy insertions into the bare propagator reproduces the full one,
/// so this must be the exact zero symbol.
pub fn dyson_residual(pm: &PropagatorModel) -> Result<RankTwoSymbol> {
    let bare = bare_propagator(pm)?;
    let full = renormalized_propagator(pm)?;
    let pi = polarization(pm);
    let chain = bare.contract(&pi)?.contract(&full)?;
    full.try_sub(&bare)?.try_sub(&chain)
}

/// Euclidean-rotated magnitude model of the massive-vector propagator
/// integrand `(g - kk/m^2)/(s + m^2)`: `u1 = 1/(s + m^2)`,
/// `u2 = -1/(m^2 (s + m^2))`. Used only for falloff diagnostics — its
/// longitudinal part tends to a nonzero constant at large momentum.
pub fn massive_qed_integrand(mp: &MassiveQEDParams) -> RankTwoSymbol {
    let denom = &RationalFn::var() + &constant(mp.m2());
    let u1 = denom.recip().expect("s + m2 with m2 > 0 is nonzero");
    let u2 = (-&RationalFn::one())
        .checked_div(&(&constant(mp.m2()) * &denom))
        .expect("nonzero denominator");
    RankTwoSymbol::new(u1, u2, Metric::EUCLIDEAN)
}

/// Symbol of the massive-vector field operator `(s + m^2) g - kk`. Not
/// invertible on the longitudinal sector; contracting it with
/// [`massive_qed_integrand`] gives the identity on the transverse sector
/// only.
pub fn massive_qed_operator_symbol(mp: &MassiveQEDParams) -> RankTwoSymbol {
    let u1 = &RationalFn::var() + &constant(mp.m2());
    RankTwoSymbol::new(u1, -&RationalFn::one(), Metric::EUCLIDEAN)
}

/// Which scalar coefficient of a symbol a falloff estimate applies to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SymbolComponent {
    Transverse,
    Longitudinal,
    U1,
    /// `s * u2`, the dimensionless combination that stays finite whenever
    /// `u2` itself carries the extra `1/s`.
    U2TimesS,
}

impl SymbolComponent {
    pub fn extract(&self, symbol: &RankTwoSymbol) -> RationalFn {
        let decomp = symbol.decompose();
        match self {
            SymbolComponent::Transverse => decomp.transverse,
            SymbolComponent::Longitudinal => decomp.longitudinal,
            SymbolComponent::U1 => symbol.u1().clone(),
            SymbolComponent::U2TimesS => &RationalFn::var() * symbol.u2(),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            SymbolComponent::Transverse => "transverse",
            SymbolComponent::Longitudinal => "longitudinal",
            SymbolComponent::U1 => "u1",
            SymbolComponent::U2TimesS => "u2_times_s",
        }
    }
}

impl std::str::FromStr for SymbolComponent {
    type Err = Error;
    fn from_str(text: &str) -> Result<SymbolComponent> {
        match text {
            "transverse" => Ok(SymbolComponent::Transverse),
            "longitudinal" => Ok(SymbolComponent::Longitudinal),
            "u1" => Ok(SymbolComponent::U1),
            "u2_times_s" | "u2-times-s" => Ok(SymbolComponent::U2TimesS),
            other => Err(Error::Parse(format!("unknown symbol component `{other}`"))),
        }
    }
}

/// Large-momentum falloff as a power of `k`, by log-log regression of the
/// selected coefficient over `s` in `[1e4, 1e12]` (25 log-spaced points).
/// The fitted slope is the power in `s = k^2`, so it is doubled.
pub fn falloff_exponent(symbol: &RankTwoSymbol, component: SymbolComponent) -> Result<f64> {
    let coeff = component.extract(symbol);
    if coeff.is_zero() {
        return Err(Error::ZeroCoefficient);
    }
    let n = 25;
    let (mut xs, mut ys) = (Vec::with_capacity(n), Vec::with_capacity(n));
    for i in 0..n {
        let log10_s = 4.0 + 8.0 * i as f64 / (n - 1) as f64;
        let s = 10f64.powf(log10_s);
        let v = coeff.eval_f64(s).abs();
        // ln 0 would poison the fit; a rational function that is not
        // identically zero has no roots this far out
        let y = if v == 0.0 { 0.0 } else { v.ln() };
        xs.push(s.ln());
        ys.push(y);
    }
    let xbar = xs.iter().sum::<f64>() / n as f64;
    let ybar = ys.iter().sum::<f64>() / n as f64;
    let mut sxy = 0.0;
    let mut sxx = 0.0;
    for i in 0..n {
        sxy += (xs[i] - xbar) * (ys[i] - ybar);
        sxx += (xs[i] - xbar) * (xs[i] - xbar);
    }
    let slope = if sxy == 0.0 { 0.0 } else { sxy / sxx };
    Ok(2.0 * slope)
}

/// Exact falloff as a power of `k`: `2 * (deg num - deg den)` of the selected
/// coefficient. Preferred route when the coefficient is available exactly.
pub fn falloff_exponent_exact(
    symbol: &RankTwoSymbol,
    component: SymbolComponent,
) -> Result<i64> {
    let coeff = component.extract(symbol);
    coeff.degree_diff().map(|d| 2 * d).ok_or(Error::ZeroCoefficient)
}

/// One real plane-wave mode of a periodic vector field:
/// `A_mu(x) += amplitude[mu] * cos(k.x)` with `k = (2 pi / L) * wave`.
#[derive(Clone, Debug, PartialEq)]
pub struct LatticeMode {
    pub wave: [i32; 4],
    pub amplitude: [f64; 4],
}

/// A finite real plane-wave sum on a 4D periodic box, with enough points per
/// axis that products of any two modes are still integrated exactly by the
/// lattice sum.
#[derive(Clone, Debug, PartialEq)]
pub struct LatticeField {
    box_len: f64,
    points_per_axis: usize,
    modes: Vec<LatticeMode>,
}

impl LatticeField {
    pub fn new(
        box_len: f64,
        points_per_axis: usize,
        modes: Vec<LatticeMode>,
    ) -> Result<LatticeField> {
        if !(box_len > 0.0) {
            return Err(Error::InvalidInput("box size must be positive".into()));
        }
        if points_per_axis < 8 || !points_per_axis.is_multiple_of(2) {
            return Err(Error::InvalidInput(
                "points per axis must be an even integer >= 8".into(),
            ));
        }
        let limit = (points_per_axis / 2 - 1) as i32;
        for mode in &modes {
            if mode.wave.iter().any(|w| w.abs() > limit) {
                return Err(Error::InvalidInput(format!(
                    "wave numbers must stay within the Nyquist range |n| <= {limit}"
                )));
            }
            if mode.amplitude.iter().any(|a| !a.is_finite()) {
                return Err(Error::InvalidInput("mode amplitudes must be finite".into()));
            }
        }
        Ok(LatticeField { box_len, points_per_axis, modes })
    }

    pub fn box_len(&self) -> f64 {
        self.box_len
    }

    pub fn points_per_axis(&self) -> usize {
        self.points_per_axis
    }

    pub fn modes(&self) -> &[LatticeMode] {
        &self.modes
    }
}

/// Pointwise field data obtained by differentiating the mode sum exactly
/// (spectral differentiation), then evaluating at one lattice point.
struct FieldPoint {
    a: [f64; 4],
    grad: [[f64; 4]; 4], // grad[mu][nu] = d_mu A_nu
    div: f64,
    lap: [f64; 4],      // box A_nu
    grad_div: [f64; 4], // d_mu (div A)
}

fn field_point(field: &LatticeField, x: &[f64; 4]) -> FieldPoint {
    let two_pi_over_l = 2.0 * std::f64::consts::PI / field.box_len;
    let mut out = FieldPoint {
        a: [0.0; 4],
        grad: [[0.0; 4]; 4],
        div: 0.0,
        lap: [0.0; 4],
        grad_div: [0.0; 4],
    };
    for mode in &field.modes {
        let k: [f64; 4] = std::array::from_fn(|mu| two_pi_over_l * f64::from(mode.wave[mu]));
        let phase: f64 = (0..4).map(|mu| k[mu] * x[mu]).sum();
        let (sin_p, cos_p) = phase.sin_cos();
        let k_sq: f64 = k.iter().map(|c| c * c).sum();
        let a_dot_k: f64 = (0..4).map(|mu| mode.amplitude[mu] * k[mu]).sum();
        for nu in 0..4 {
            out.a[nu] += mode.amplitude[nu] * cos_p;
            out.lap[nu] -= mode.amplitude[nu] * k_sq * cos_p;
            out.grad_div[nu] -= a_dot_k * k[nu] * cos_p;
            for mu in 0..4 {
                out.grad[mu][nu] -= mode.amplitude[nu] * k[mu] * sin_p;
            }
        }
        out.div -= a_dot_k * sin_p;
    }
    out
}

/// Verifies on a periodic Euclidean box that the gauge-fixed Lagrangian
/// density differs from `(1/2) A^mu P_{mu nu} A^nu` by a total divergence:
/// integrates both `L_Maxwell + L_G.A.` (with Euclidean Maxwell density
/// `(1/4) F_{mu nu} F^{mu nu}`) and the operator form over the box and
/// returns the relative residual, which must vanish to numerical precision.
/// The residual is absolute when the operator integral is zero.
pub fn lattice_divergence_check(field: &LatticeField, gp: &GaugeParams) -> Result<f64> {
    if field.modes.is_empty() {
        return Err(Error::EmptyField);
    }
    let n = field.points_per_axis;
    let h = field.box_len / n as f64;
    let alpha = to_f64(gp.alpha());
    let beta = to_f64(gp.beta());
    let beta2 = beta * beta;

    let mut lhs = 0.0f64;
    let mut rhs = 0.0f64;
    let mut x = [0.0f64; 4];
    for i0 in 0..n {
        x[0] = h * i0 as f64;
        for i1 in 0..n {
            x[1] = h * i1 as f64;
            for i2 in 0..n {
                x[2] = h * i2 as f64;
                for i3 in 0..n {
                    x[3] = h * i3 as f64;
                    let pt = field_point(field, &x);

                    let mut f_sq = 0.0;
                    for mu in 0..4 {
                        for nu in 0..4 {
                            let f_mn = pt.grad[mu][nu] - pt.grad[nu][mu];
                            f_sq += f_mn * f_mn;
                        }
                    }
                    let a_sq: f64 = pt.a.iter().map(|c| c * c).sum();
                    lhs += 0.25 * f_sq + (pt.div * pt.div + beta2 * a_sq) / (2.0 * alpha);

                    let mut apa = 0.0;
                    for mu in 0..4 {
                        let pa = -pt.lap[mu]
                            + (beta2 / alpha) * pt.a[mu]
                            + (1.0 - 1.0 / alpha) * pt.grad_div[mu];
                        apa += pt.a[mu] * pa;
                    }
                    rhs += 0.5 * apa;
                }
            }
        }
    }
    let cell = h * h * h * h;
    let lhs_int = lhs * cell;
    let rhs_int = rhs * cell;
    let diff = (lhs_int - rhs_int).abs();
    if rhs_int == 0.0 {
        Ok(diff)
    } else {
        Ok(diff / rhs_int.abs())
    }
}
