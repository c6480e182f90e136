//! Radiative corrections to the static Coulomb potential.
//!
//! For a static point source the corrected momentum-space potential is
//!
//! `A0_corr(s) = (q/s) * (s + mtilde2) / (f(s) + mtilde2)`,  `s = |k_vec|^2`,
//!
//! obtained by dressing the Coulomb source `q/s` with the renormalized
//! propagator and the polarization tensor; the time-time projector kills
//! every `d2` (gauge-dependent) contribution, so the spectrum depends on the
//! gauge sector only through `mtilde2`. Position space comes from the 3D
//! radial transform
//!
//! `V(r) = (1/(2 pi^2 r)) integral_0^inf kappa sin(kappa r) S(kappa^2) d kappa`,
//!
//! evaluated by subtracting the long-range `q/kappa^2` piece (transformed
//! analytically to `q/(4 pi r)`) and integrating the remainder with the
//! oscillatory quadrature of [`quadrature`]. The closed-form Yukawa potential
//! `q e^{-m r}/(4 pi r)` serves as the independent oracle for that
//! quadrature.
//!
//! Spectra that do not decay (a constant tail would transform to a contact
//! term) or that have poles on the integration path are rejected rather than
//! regularized.

mod quadrature;

use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::propagators::{polarization, renormalized_propagator, PropagatorModel};
use crate::scalarfield::{rat, to_f64, Rational, RationalFn};

pub(crate) use quadrature::fourier_sine_integral;

/// A static point charge and the overall normalization constant of its
/// momentum-space potential `norm * q / k^2` (default 1).
#[derive(Clone, Debug, PartialEq)]
pub struct StaticSource {
    q: Rational,
    normalization: Rational,
}

impl StaticSource {
    pub fn new(q: Rational, normalization: Rational) -> StaticSource {
        StaticSource { q, normalization }
    }

    /// Unit charge, unit normalization.
    pub fn unit() -> StaticSource {
        StaticSource::new(rat(1, 1), rat(1, 1))
    }

    pub fn with_charge(q: Rational) -> StaticSource {
        StaticSource::new(q, rat(1, 1))
    }

    pub fn q(&self) -> &Rational {
        &self.q
    }

    pub fn normalization(&self) -> &Rational {
        &self.normalization
    }

    fn strength(&self) -> Rational {
        &self.q * &self.normalization
    }
}

/// Radial sample grid for potential curves.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GridSpacing {
    Linear,
    Log,
}

impl std::str::FromStr for GridSpacing {
    type Err = Error;
    fn from_str(text: &str) -> Result<GridSpacing> {
        match text {
            "linear" => Ok(GridSpacing::Linear),
            "log" => Ok(GridSpacing::Log),
            other => Err(Error::Parse(format!("unknown grid spacing `{other}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RadialGrid {
    r_min: f64,
    r_max: f64,
    n: usize,
    spacing: GridSpacing,
}

impl RadialGrid {
    pub fn new(r_min: f64, r_max: f64, n: usize, spacing: GridSpacing) -> Result<RadialGrid> {
        if !(r_min > 0.0 && r_max > r_min) {
            return Err(Error::InvalidInput(
                "radial grid needs 0 < r_min < r_max".into(),
            ));
        }
        if n < 2 {
            return Err(Error::InvalidInput("radial grid needs at least 2 points".into()));
        }
        Ok(RadialGrid { r_min, r_max, n, spacing })
    }

    pub fn points(&self) -> Vec<f64> {
        let n = self.n;
        (0..n)
            .map(|i| {
                let t = i as f64 / (n - 1) as f64;
                match self.spacing {
                    GridSpacing::Linear => self.r_min + t * (self.r_max - self.r_min),
                    GridSpacing::Log => {
                        (self.r_min.ln() + t * (self.r_max.ln() - self.r_min.ln())).exp()
                    }
                }
            })
            .collect()
    }
}

/// A sampled static potential `V(r)` plus an identifier of the model that
/// produced it (carried into CSV output).
#[derive(Clone, Debug, PartialEq)]
pub struct PotentialCurve {
    pub samples: Vec<(f64, f64)>,
    pub model_id: String,
}

/// Corrected momentum-space potential of a static source, as an exact
/// rational function of `s = |k_vec|^2`:
/// `(q/s)(s + mtilde2)/(f(s) + mtilde2)`. Independent of `alpha_B`.
pub fn corrected_spectrum(pm: &PropagatorModel, src: &StaticSource) -> Result<RationalFn> {
    let mtilde2 = RationalFn::constant(pm.mtilde2().clone());
    let denom_part = &pm.f().clone() + &mtilde2;
    if denom_part.is_zero() {
        return Err(Error::SingularSymbol(
            "f + mtilde2 vanishes identically: corrected spectrum undefined".into(),
        ));
    }
    let s = RationalFn::var();
    let num = &RationalFn::constant(src.strength()) * &(&s + &mtilde2);
    num.checked_div(&(&s * &denom_part))
}

/// Closed-form Yukawa potential `q e^{-m r}/(4 pi r)` — the static potential
/// of a massive propagator and the quadrature oracle. Coulomb is its
/// `m -> 0` limit.
pub fn yukawa_closed_form(q: f64, m: f64, r: f64) -> f64 {
    q * (-m * r).exp() / (4.0 * std::f64::consts::PI * r)
}

/// Splits a decaying spectrum into its long-range Coulomb charge (residue of
/// the simple pole at `s = 0`) and the remainder, after validating
/// integrability.
fn split_long_range(spectrum: &RationalFn) -> Result<(Rational, RationalFn)> {
    if spectrum.is_zero() {
        return Ok((Rational::zero(), RationalFn::zero()));
    }
    if spectrum.degree_diff().unwrap_or(-1) >= 0 {
        return Err(Error::NonIntegrableSpectrum(
            "no decay at large momentum (a constant tail would be a contact term)".into(),
        ));
    }
    let (den_reduced, origin_mult) = spectrum.den().strip_root_at_origin();
    if origin_mult >= 2 {
        return Err(Error::NonIntegrableSpectrum(
            "pole of order >= 2 at s = 0".into(),
        ));
    }
    let coulomb_charge = if origin_mult == 1 {
        let e0 = den_reduced.eval(&Rational::zero());
        spectrum.num().eval(&Rational::zero()) / e0
    } else {
        Rational::zero()
    };
    let coulomb_part = RationalFn::constant(coulomb_charge.clone())
        .checked_div(&RationalFn::var())?;
    let remainder = spectrum - &coulomb_part;
    // poles on the integration path [0, inf) make the transform meaningless
    if remainder.den().eval(&Rational::zero()).is_zero()
        || remainder.den().count_positive_real_roots() > 0
    {
        return Err(Error::NonIntegrableSpectrum(
            "pole at nonnegative s on the integration path".into(),
        ));
    }
    Ok((coulomb_charge, remainder))
}

const QUAD_REL_TOL: f64 = 1e-10;

fn transform_one(remainder: &RationalFn, coulomb_charge: f64, r: f64) -> Result<f64> {
    let analytic = coulomb_charge / (4.0 * std::f64::consts::PI * r);
    if remainder.is_zero() {
        return Ok(analytic);
    }
    let num_coeffs = remainder.num().to_f64_coeffs();
    let den_coeffs = remainder.den().to_f64_coeffs();
    let horner = |coeffs: &[f64], x: f64| {
        coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c)
    };
    let g = move |kappa: f64| {
        let s = kappa * kappa;
        kappa * horner(&num_coeffs, s) / horner(&den_coeffs, s)
    };
    let integral = fourier_sine_integral(&g, r, QUAD_REL_TOL)?;
    Ok(analytic + integral / (2.0 * std::f64::consts::PI * std::f64::consts::PI * r))
}

/// 3D radial Fourier transform of a rational momentum-space spectrum to the
/// static potential `V(r)` on the given grid. The `q/kappa^2` long-range
/// piece is subtracted and added back analytically as `q/(4 pi r)`; the
/// remainder goes through the oscillatory sine quadrature. Samples
/// parallelize over the grid; each one is deterministic.
pub fn radial_fourier(
    spectrum: &RationalFn,
    grid: &RadialGrid,
    model_id: impl Into<String>,
) -> Result<PotentialCurve> {
    let (charge, remainder) = split_long_range(spectrum)?;
    let charge_f = to_f64(&charge);
    let points = grid.points();
    let samples: Vec<Result<(f64, f64)>> = points
        .par_iter()
        .map(|&r| transform_one(&remainder, charge_f, r).map(|v| (r, v)))
        .collect();
    let samples = samples.into_iter().collect::<Result<Vec<_>>>()?;
    Ok(PotentialCurve { samples, model_id: model_id.into() })
}

/// Numeric-path variant for spectra that are not rational functions
/// (tabulated or logarithmic one-loop models): the caller supplies the
/// pointwise spectrum and the long-range charge to subtract, and is
/// responsible for integrability.
pub fn radial_fourier_numeric(
    spectrum: &(dyn Fn(f64) -> f64 + Sync),
    coulomb_charge: f64,
    grid: &RadialGrid,
    model_id: impl Into<String>,
) -> Result<PotentialCurve> {
    let points = grid.points();
    let samples: Vec<Result<(f64, f64)>> = points
        .par_iter()
        .map(|&r| {
            let analytic = coulomb_charge / (4.0 * std::f64::consts::PI * r);
            let g = |kappa: f64| {
                let s = kappa * kappa;
                kappa * (spectrum(s) - coulomb_charge / s)
            };
            fourier_sine_integral(&g, r, QUAD_REL_TOL).map(|integral| {
                (r, analytic + integral / (2.0 * std::f64::consts::PI * std::f64::consts::PI * r))
            })
        })
        .collect();
    let samples = samples.into_iter().collect::<Result<Vec<_>>>()?;
    Ok(PotentialCurve { samples, model_id: model_id.into() })
}

/// Result of sweeping the bare gauge parameter at fixed `(mtilde2, f)`.
#[derive(Clone, Debug)]
pub struct SweepReport {
    pub alphas: Vec<Rational>,
    /// Exact equality of the corrected spectra across the sweep.
    pub spectra_identical: bool,
    /// Exact equality of the polarization symbols across the sweep.
    pub polarizations_identical: bool,
    /// Largest pointwise spectrum deviation over the probe points — exact
    /// zero when the spectra are identical.
    pub max_spectrum_deviation: Rational,
    /// The gauge-dependent propagator coefficient for each alpha_B.
    pub d2: Vec<RationalFn>,
    /// Whether all d2 coefficients are pairwise distinct (expected whenever
    /// the alphas are).
    pub d2_pairwise_distinct: bool,
}

/// Builds one model per `alpha_B` at fixed `(mtilde2, f)` and compares:
/// corrected spectra and polarization symbols must agree exactly, while the
/// `d2` propagator coefficients are expected to differ.
pub fn gauge_independence_sweep(
    mtilde2: Rational,
    f: RationalFn,
    alphas: &[Rational],
) -> Result<SweepReport> {
    if alphas.is_empty() {
        return Err(Error::InvalidInput("gauge sweep needs at least one alpha_B".into()));
    }
    let src = StaticSource::unit();
    let mut spectra = Vec::with_capacity(alphas.len());
    let mut pis = Vec::with_capacity(alphas.len());
    let mut d2 = Vec::with_capacity(alphas.len());
    for alpha_b in alphas {
        let pm = PropagatorModel::new(alpha_b.clone(), mtilde2.clone(), f.clone())?;
        spectra.push(corrected_spectrum(&pm, &src)?);
        pis.push(polarization(&pm));
        d2.push(renormalized_propagator(&pm)?.u2().clone());
    }

    let spectra_identical = spectra.windows(2).all(|w| w[0] == w[1]);
    let polarizations_identical = pis.windows(2).all(|w| w[0] == w[1]);

    // exact sup over probe points, skipping poles
    let probes: Vec<Rational> = [1, 2, 3, 5, 7].iter().map(|&p| rat(p, 1)).collect();
    let mut max_dev = Rational::zero();
    for pair in spectra.windows(2) {
        let diff = &pair[0] - &pair[1];
        for p in &probes {
            if let Ok(v) = diff.eval(p) {
                let mag = v.abs();
                if mag > max_dev {
                    max_dev = mag;
                }
            }
        }
    }

    let mut d2_pairwise_distinct = true;
    for i in 0..d2.len() {
        for j in (i + 1)..d2.len() {
            if alphas[i] != alphas[j] && d2[i] == d2[j] {
                d2_pairwise_distinct = false;
            }
        }
    }

    Ok(SweepReport {
        alphas: alphas.to_vec(),
        spectra_identical,
        polarizations_identical,
        max_spectrum_deviation: max_dev,
        d2,
        d2_pairwise_distinct,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalarfield::Polynomial;

    fn rf(num: &[i64], den: &[i64]) -> RationalFn {
        let p = |c: &[i64]| Polynomial::from_coeffs(c.iter().map(|&x| rat(x, 1)).collect());
        RationalFn::new(p(num), p(den)).unwrap()
    }

    fn model(alpha_b: (i64, i64), mtilde2: (i64, i64), f: RationalFn) -> PropagatorModel {
        PropagatorModel::new(rat(alpha_b.0, alpha_b.1), rat(mtilde2.0, mtilde2.1), f).unwrap()
    }

    #[test]
    fn corrected_spectrum_examples() {
        // f = s: no correction, pure q/s
        let pm = model((2, 1), (1, 1), RationalFn::var());
        let spec = corrected_spectrum(&pm, &StaticSource::with_charge(rat(3, 1))).unwrap();
        assert_eq!(spec, rf(&[3], &[0, 1]));

        // f = 0: q (s + mtilde2)/(s mtilde2)
        let pm = model((2, 1), (1, 1), RationalFn::zero());
        let spec = corrected_spectrum(&pm, &StaticSource::unit()).unwrap();
        assert_eq!(spec, rf(&[1, 1], &[0, 1]));

        // independent of alpha_B
        for alpha in [rat(1, 2), rat(1, 1), rat(2, 1)] {
            let pm2 = pm.with_alpha_b(alpha).unwrap();
            assert_eq!(corrected_spectrum(&pm2, &StaticSource::unit()).unwrap(), spec);
        }

        // f + mtilde2 = 0 is singular
        let pm = model((1, 1), (1, 1), rf(&[-1], &[1]));
        assert!(matches!(
            corrected_spectrum(&pm, &StaticSource::unit()),
            Err(Error::SingularSymbol(_))
        ));
    }

    #[test]
    fn long_range_part_survives() {
        // lim s*A0(s) at s -> 0 equals q when f(0) = 0
        let f = rf(&[0, 1, 2], &[3, 1]); // f(0) = 0
        let pm = model((2, 1), (5, 2), f);
        let q = rat(7, 3);
        let spec = corrected_spectrum(&pm, &StaticSource::with_charge(q.clone())).unwrap();
        let s_times = &RationalFn::var() * &spec;
        assert_eq!(s_times.eval(&rat(0, 1)).unwrap(), q);
    }

    #[test]
    fn f_zero_partial_fraction() {
        // A0(f=0) = q/s + q/mtilde2 exactly: the momentum-dependent part is
        // the uncorrected Coulomb spectrum for every mtilde2
        for mt2 in [rat(1, 1), rat(1, 4), rat(9, 100)] {
            let pm = PropagatorModel::new(rat(1, 1), mt2.clone(), RationalFn::zero()).unwrap();
            let spec = corrected_spectrum(&pm, &StaticSource::unit()).unwrap();
            let shifted = &spec - &RationalFn::constant(mt2.recip());
            assert_eq!(shifted, rf(&[1], &[0, 1]));
        }
    }

    #[test]
    fn pure_coulomb_is_analytic() {
        // S = q/kappa^2: remainder vanishes, V = q/(4 pi r) exactly
        let spec = rf(&[2], &[0, 1]);
        let grid = RadialGrid::new(0.5, 2.0, 4, GridSpacing::Linear).unwrap();
        let curve = radial_fourier(&spec, &grid, "coulomb").unwrap();
        for (r, v) in curve.samples {
            assert_eq!(v, 2.0 / (4.0 * std::f64::consts::PI * r));
        }
    }

    #[test]
    fn yukawa_spectrum_matches_closed_form() {
        // S = q/(kappa^2 + m^2) with m = 1: V(1) = q e^{-1}/(4 pi)
        let spec = rf(&[1], &[1, 1]);
        let grid = RadialGrid::new(1.0, 2.0, 2, GridSpacing::Linear).unwrap();
        let curve = radial_fourier(&spec, &grid, "yukawa").unwrap();
        let (r, v) = curve.samples[0];
        assert_eq!(r, 1.0);
        let expect = yukawa_closed_form(1.0, 1.0, 1.0);
        assert!(((v - expect) / expect).abs() < 1e-6, "{v} vs {expect}");
        // frozen value: e^{-1}/(4 pi) = 0.0292749...
        assert!((expect - 0.0292749157).abs() < 1e-9);
    }

    #[test]
    fn non_integrable_spectra_are_rejected() {
        // constant tail: the f = 0 corrected spectrum
        let pm = model((1, 1), (1, 1), RationalFn::zero());
        let spec = corrected_spectrum(&pm, &StaticSource::unit()).unwrap();
        let grid = RadialGrid::new(0.1, 1.0, 2, GridSpacing::Linear).unwrap();
        assert!(matches!(
            radial_fourier(&spec, &grid, "flat"),
            Err(Error::NonIntegrableSpectrum(_))
        ));

        // double pole at the origin
        let spec = rf(&[1], &[0, 0, 1]);
        assert!(matches!(
            radial_fourier(&spec, &grid, "double-pole"),
            Err(Error::NonIntegrableSpectrum(_))
        ));

        // pole on the positive axis: 1/((s-1)(s+2))
        let spec = rf(&[1], &[-2, 1, 1]);
        assert!(matches!(
            radial_fourier(&spec, &grid, "on-path-pole"),
            Err(Error::NonIntegrableSpectrum(_))
        ));
    }

    #[test]
    fn yukawa_closed_form_properties() {
        // Coulomb limit at fixed r
        let r = 2.0;
        assert!(
            (yukawa_closed_form(1.0, 1e-12, r) - 1.0 / (4.0 * std::f64::consts::PI * r)).abs()
                < 1e-10
        );
        // q = 1, m = 1, r = 1: e^{-1}/(4 pi)
        assert!((yukawa_closed_form(1.0, 1.0, 1.0) - 0.0292749157).abs() < 1e-9);
        // linear in q
        for (m, r) in [(0.5, 0.3), (2.0, 4.0)] {
            let v1 = yukawa_closed_form(1.0, m, r);
            let v2 = yukawa_closed_form(2.0, m, r);
            assert_eq!(v2, 2.0 * v1);
        }
    }

    #[test]
    fn numeric_path_matches_rational_path() {
        // same Yukawa spectrum through the tabulated-function entry point
        let grid = RadialGrid::new(0.5, 3.0, 4, GridSpacing::Log).unwrap();
        let m2 = 1.0;
        let numeric =
            radial_fourier_numeric(&move |s: f64| 1.0 / (s + m2), 0.0, &grid, "yukawa-num")
                .unwrap();
        let rational = radial_fourier(&rf(&[1], &[1, 1]), &grid, "yukawa-rat").unwrap();
        for ((r1, v1), (r2, v2)) in numeric.samples.iter().zip(&rational.samples) {
            assert_eq!(r1, r2);
            assert!((v1 - v2).abs() <= 1e-9 * v2.abs().max(1e-12));
        }
    }

    #[test]
    fn sweep_examples() {
        // single alpha: trivially uniform
        let report =
            gauge_independence_sweep(rat(1, 1), RationalFn::zero(), &[rat(1, 1)]).unwrap();
        assert!(report.spectra_identical && report.polarizations_identical);

        // the canonical sweep: identical spectra, distinct d2
        let alphas = [rat(1, 2), rat(1, 1), rat(2, 1), rat(5, 1)];
        let report = gauge_independence_sweep(rat(1, 1), RationalFn::zero(), &alphas).unwrap();
        assert!(report.spectra_identical);
        assert!(report.polarizations_identical);
        assert!(report.max_spectrum_deviation.is_zero());
        assert!(report.d2_pairwise_distinct);

        // negative control: different mtilde2 gives different spectra at s=1
        let s1 = corrected_spectrum(
            &model((1, 1), (1, 1), RationalFn::zero()),
            &StaticSource::unit(),
        )
        .unwrap();
        let s2 = corrected_spectrum(
            &model((1, 1), (2, 1), RationalFn::zero()),
            &StaticSource::unit(),
        )
        .unwrap();
        assert_ne!(s1.eval(&rat(1, 1)).unwrap(), s2.eval(&rat(1, 1)).unwrap());

        assert!(gauge_independence_sweep(rat(1, 1), RationalFn::zero(), &[]).is_err());
    }

    #[test]
    fn grid_validation_and_spacing() {
        assert!(RadialGrid::new(0.0, 1.0, 4, GridSpacing::Linear).is_err());
        assert!(RadialGrid::new(2.0, 1.0, 4, GridSpacing::Linear).is_err());
        assert!(RadialGrid::new(0.1, 1.0, 1, GridSpacing::Linear).is_err());
        let lin = RadialGrid::new(1.0, 3.0, 3, GridSpacing::Linear).unwrap();
        assert_eq!(lin.points(), vec![1.0, 2.0, 3.0]);
        let log = RadialGrid::new(1.0, 4.0, 3, GridSpacing::Log).unwrap();
        let pts = log.points();
        assert!((pts[1] - 2.0).abs() < 1e-12);
    }
}
