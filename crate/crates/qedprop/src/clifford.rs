//! 4x4 gamma-matrix algebra with exact Gaussian-rational entries.
//!
//! The quarter-trace of a product of two gamma matrices reproduces the metric,
//! which lets a single matrix-valued object
//! `Phi(A) = divA * I + beta * gamma.A` act as a potential for a *scalar*
//! gauge-averaging functional: the quarter-trace of `Phi^2` collapses to
//! `divA^2 + beta^2 A.A` because gamma matrices are traceless. This module
//! builds the matrices, the quadratic form (by both routes), the scalar
//! functional, and the ghost operator's action on plane waves with
//! coefficients frozen at a field point.
//!
//! Everything is exact: matrices hold complex numbers with rational real and
//! imaginary parts, and the only floating-point step is the final square root
//! of the (rational) quadratic form.

use std::fmt;

use num_complex::Complex;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalarfield::{to_f64, Rational};
use crate::tensoralg::FourVector;

/// Complex number with exact rational real and imaginary parts.
pub type CRational = Complex<Rational>;

/// 4x4 matrix of exact complex rationals, row-major.
pub type CMat4 = [[CRational; 4]; 4];

fn czero() -> CRational {
    CRational::new(Rational::zero(), Rational::zero())
}

fn cre(x: Rational) -> CRational {
    CRational::new(x, Rational::zero())
}

fn cim(x: Rational) -> CRational {
    CRational::new(Rational::zero(), x)
}

pub fn cmat_zero() -> CMat4 {
    std::array::from_fn(|_| std::array::from_fn(|_| czero()))
}

pub fn cmat_identity() -> CMat4 {
    let mut m = cmat_zero();
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = cre(Rational::one());
    }
    m
}

pub fn cmat_add(a: &CMat4, b: &CMat4) -> CMat4 {
    std::array::from_fn(|i| std::array::from_fn(|j| a[i][j].clone() + b[i][j].clone()))
}

pub fn cmat_scale(a: &CMat4, c: &CRational) -> CMat4 {
    std::array::from_fn(|i| std::array::from_fn(|j| a[i][j].clone() * c.clone()))
}

pub fn cmat_mul(a: &CMat4, b: &CMat4) -> CMat4 {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            (0..4)
                .map(|k| a[i][k].clone() * b[k][j].clone())
                .fold(czero(), |acc, t| acc + t)
        })
    })
}

pub fn cmat_trace(a: &CMat4) -> CRational {
    (0..4).map(|i| a[i][i].clone()).fold(czero(), |acc, t| acc + t)
}

/// Diagonal metric signature: four entries, each exactly +1 or -1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Metric {
    signature: [i8; 4],
}

impl Metric {
    /// Mostly-minus signature (+1, -1, -1, -1).
    pub const MINKOWSKI: Metric = Metric { signature: [1, -1, -1, -1] };
    /// All-plus signature (+1, +1, +1, +1).
    pub const EUCLIDEAN: Metric = Metric { signature: [1, 1, 1, 1] };

    pub fn new(signature: [i8; 4]) -> Result<Metric> {
        if signature.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::InvalidInput(
                "metric signature entries must be exactly +1 or -1".into(),
            ));
        }
        Ok(Metric { signature })
    }

    /// Diagonal entry `g^{mu mu}` (equal to `g_{mu mu}` for a +-1 diagonal).
    pub fn component(&self, mu: usize) -> i64 {
        i64::from(self.signature[mu])
    }

    pub fn signature(&self) -> [i8; 4] {
        self.signature
    }

    /// Inner product `g_{mu nu} a^mu b^nu` of contravariant vectors.
    pub fn inner(&self, a: &FourVector, b: &FourVector) -> Rational {
        (0..4)
            .map(|mu| {
                a.component(mu) * b.component(mu)
                    * Rational::from_integer(self.component(mu).into())
            })
            .fold(Rational::zero(), |acc, t| acc + t)
    }

    /// Lowers an index: `a_mu = g_{mu nu} a^nu`.
    pub fn lower(&self, a: &FourVector) -> [Rational; 4] {
        std::array::from_fn(|mu| {
            a.component(mu) * Rational::from_integer(self.component(mu).into())
        })
    }
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pretty: Vec<&str> = self
            .signature
            .iter()
            .map(|&s| if s > 0 { "+" } else { "-" })
            .collect();
        write!(f, "({})", pretty.join(","))
    }
}

/// Four gamma matrices realizing `{gamma^mu, gamma^nu} = 2 g^{mu nu} I` for a
/// chosen diagonal signature, with entries in {0, +-1, +-i}.
#[derive(Clone, Debug, PartialEq)]
pub struct GammaSet {
    gammas: [CMat4; 4],
    metric: Metric,
}

impl GammaSet {
    /// Standard Dirac-representation set for the given signature. Axes whose
    /// metric sign differs from the mostly-minus signature get an extra
    /// factor of `i`, which keeps every entry Gaussian rational and flips the
    /// square of that matrix.
    pub fn dirac(metric: Metric) -> GammaSet {
        let o = || czero();
        let p = || cre(Rational::one());
        let n = || cre(-Rational::one());
        let pi = || cim(Rational::one());
        let ni = || cim(-Rational::one());

        let gamma0: CMat4 = [
            [p(), o(), o(), o()],
            [o(), p(), o(), o()],
            [o(), o(), n(), o()],
            [o(), o(), o(), n()],
        ];
        let gamma1: CMat4 = [
            [o(), o(), o(), p()],
            [o(), o(), p(), o()],
            [o(), n(), o(), o()],
            [n(), o(), o(), o()],
        ];
        let gamma2: CMat4 = [
            [o(), o(), o(), ni()],
            [o(), o(), pi(), o()],
            [o(), pi(), o(), o()],
            [ni(), o(), o(), o()],
        ];
        let gamma3: CMat4 = [
            [o(), o(), p(), o()],
            [o(), o(), o(), n()],
            [n(), o(), o(), o()],
            [o(), p(), o(), o()],
        ];

        let minkowski = Metric::MINKOWSKI;
        let raw = [gamma0, gamma1, gamma2, gamma3];
        let gammas = std::array::from_fn(|mu| {
            if metric.component(mu) == minkowski.component(mu) {
                raw[mu].clone()
            } else {
                cmat_scale(&raw[mu], &cim(Rational::one()))
            }
        });
        GammaSet { gammas, metric }
    }

    pub fn metric(&self) -> Metric {
        self.metric
    }

    pub fn gamma(&self, mu: usize) -> &CMat4 {
        &self.gammas[mu]
    }

    /// `(1/4) Tr(gamma^mu gamma^nu)`; equals `g^{mu nu}` exactly.
    pub fn trace_product(&self, mu: usize, nu: usize) -> Rational {
        let tr = cmat_trace(&cmat_mul(&self.gammas[mu], &self.gammas[nu]));
        debug_assert!(tr.im.is_zero());
        tr.re / Rational::from_integer(4.into())
    }

    /// `gamma^mu gamma^nu + gamma^nu gamma^mu`.
    pub fn anticommutator(&self, mu: usize, nu: usize) -> CMat4 {
        cmat_add(
            &cmat_mul(&self.gammas[mu], &self.gammas[nu]),
            &cmat_mul(&self.gammas[nu], &self.gammas[mu]),
        )
    }

    /// Contraction `gamma^mu a_mu` with the index lowered by this set's
    /// metric.
    pub fn slash(&self, a: &FourVector) -> CMat4 {
        let lowered = self.metric.lower(a);
        let mut acc = cmat_zero();
        for mu in 0..4 {
            acc = cmat_add(&acc, &cmat_scale(&self.gammas[mu], &cre(lowered[mu].clone())));
        }
        acc
    }
}

/// Pointwise data for the matrix-valued gauge potential: the divergence
/// `divA` and the potential value `A` at one field point, plus the gauge
/// parameter `beta` (dimension 1/length).
///
/// `beta` is real in the Lorentzian theory; the Euclidean continuation
/// replaces it by a purely imaginary value, so the two constructors keep the
/// stored complex value on one axis and the quadratic form stays real.
#[derive(Clone, Debug, PartialEq)]
pub struct GaugeMatrixInput {
    div_a: Rational,
    potential: FourVector,
    beta: CRational,
}

impl GaugeMatrixInput {
    pub fn new(div_a: Rational, potential: FourVector, beta: Rational) -> GaugeMatrixInput {
        GaugeMatrixInput { div_a, potential, beta: cre(beta) }
    }

    /// Euclidean continuation: `beta = i * beta_im`.
    pub fn with_imaginary_beta(
        div_a: Rational,
        potential: FourVector,
        beta_im: Rational,
    ) -> GaugeMatrixInput {
        GaugeMatrixInput { div_a, potential, beta: cim(beta_im) }
    }

    pub fn div_a(&self) -> &Rational {
        &self.div_a
    }

    pub fn potential(&self) -> &FourVector {
        &self.potential
    }

    pub fn beta(&self) -> &CRational {
        &self.beta
    }

    /// `beta^2`, real because `beta` lies on one axis.
    pub fn beta_squared(&self) -> Rational {
        &self.beta.re * &self.beta.re - &self.beta.im * &self.beta.im
    }
}

/// The matrix `divA * I + beta * gamma^mu A_mu`: a potential for the scalar
/// gauge functional, not itself a gauge condition.
pub fn build_phi_matrix(input: &GaugeMatrixInput, gammas: &GammaSet) -> CMat4 {
    let id_part = cmat_scale(&cmat_identity(), &cre(input.div_a.clone()));
    let slash_part = cmat_scale(&gammas.slash(&input.potential), &input.beta);
    cmat_add(&id_part, &slash_part)
}

/// Quadratic form `(1/4) Tr(Phi Phi)`, evaluated through the matrix product.
/// Equals `divA^2 + beta^2 A.A` exactly; the cross terms die because the
/// gamma matrices are traceless.
pub fn gauge_quadratic_form(input: &GaugeMatrixInput, gammas: &GammaSet) -> Rational {
    let phi = build_phi_matrix(input, gammas);
    let tr = cmat_trace(&cmat_mul(&phi, &phi));
    debug_assert!(tr.im.is_zero());
    tr.re / Rational::from_integer(4.into())
}

/// Independent route to the same quadratic form, straight from the metric.
pub fn gauge_quadratic_form_direct(input: &GaugeMatrixInput, metric: Metric) -> Rational {
    let a_sq = metric.inner(&input.potential, &input.potential);
    &input.div_a * &input.div_a + input.beta_squared() * a_sq
}

/// The scalar gauge-averaging functional: the nonnegative square root of the
/// quadratic form. Undefined (error) where the form is negative, which can
/// happen in the mostly-minus signature.
pub fn gauge_functional_value(input: &GaugeMatrixInput, gammas: &GammaSet) -> Result<f64> {
    let form = gauge_quadratic_form(input, gammas);
    if form.is_negative() {
        return Err(Error::NegativeQuadraticForm { value: form.to_string() });
    }
    Ok(to_f64(&form).sqrt())
}

/// Action of the ghost operator on a plane wave `e^(i p.x)`, with the
/// field-dependent coefficients frozen at the given point: the wave is an
/// eigenfunction and this returns its eigenvalue
/// `lambda = (divA * p.p - i * beta^2 * A.p) / Phi(A)`.
pub fn ghost_action_multiplier(
    input: &GaugeMatrixInput,
    gammas: &GammaSet,
    p: &FourVector,
) -> Result<Complex<f64>> {
    let metric = gammas.metric();
    let p_dot_p = metric.inner(p, p);
    let a_dot_p = metric.inner(&input.potential, p);
    ghost_multiplier_from_invariants(input, gammas, &p_dot_p, &a_dot_p)
}

/// Same eigenvalue expressed through the two scalar invariants it actually
/// depends on; the multiplier is linear in each separately.
pub fn ghost_multiplier_from_invariants(
    input: &GaugeMatrixInput,
    gammas: &GammaSet,
    p_dot_p: &Rational,
    a_dot_p: &Rational,
) -> Result<Complex<f64>> {
    let form = gauge_quadratic_form(input, gammas);
    if form.is_negative() {
        return Err(Error::NegativeQuadraticForm { value: form.to_string() });
    }
    if form.is_zero() {
        return Err(Error::GaugeFunctionalZero);
    }
    let phi = to_f64(&form).sqrt();
    let re = &input.div_a * p_dot_p;
    let im = -(input.beta_squared() * a_dot_p);
    Ok(Complex::new(to_f64(&re) / phi, to_f64(&im) / phi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalarfield::rat;

    fn fv(c: [i64; 4]) -> FourVector {
        FourVector::from_ints(c)
    }

    #[test]
    fn quarter_trace_reproduces_metric() {
        for metric in [Metric::MINKOWSKI, Metric::EUCLIDEAN] {
            let g = GammaSet::dirac(metric);
            for mu in 0..4 {
                for nu in 0..4 {
                    let expect = if mu == nu { rat(metric.component(mu), 1) } else { rat(0, 1) };
                    assert_eq!(g.trace_product(mu, nu), expect, "({mu},{nu}) in {metric}");
                }
            }
        }
    }

    #[test]
    fn anticommutator_is_twice_metric() {
        for metric in [Metric::MINKOWSKI, Metric::EUCLIDEAN] {
            let g = GammaSet::dirac(metric);
            for mu in 0..4 {
                for nu in 0..4 {
                    let anti = g.anticommutator(mu, nu);
                    let expect = if mu == nu {
                        cmat_scale(&cmat_identity(), &cre(rat(2 * metric.component(mu), 1)))
                    } else {
                        cmat_zero()
                    };
                    assert_eq!(anti, expect, "({mu},{nu}) in {metric}");
                }
            }
        }
    }

    #[test]
    fn gammas_are_traceless() {
        for metric in [Metric::MINKOWSKI, Metric::EUCLIDEAN] {
            let g = GammaSet::dirac(metric);
            for mu in 0..4 {
                assert!(cmat_trace(g.gamma(mu)).is_zero());
            }
        }
    }

    #[test]
    fn phi_matrix_examples() {
        let g = GammaSet::dirac(Metric::MINKOWSKI);

        // pure divergence: identity matrix regardless of beta
        let input = GaugeMatrixInput::new(rat(1, 1), FourVector::zero(), rat(5, 1));
        assert_eq!(build_phi_matrix(&input, &g), cmat_identity());

        // single time component: 2 gamma^0
        let input = GaugeMatrixInput::new(rat(0, 1), fv([1, 0, 0, 0]), rat(2, 1));
        assert_eq!(
            build_phi_matrix(&input, &g),
            cmat_scale(g.gamma(0), &cre(rat(2, 1)))
        );

        // I + gamma^0 - gamma^1: the spatial index lowers with a minus sign
        let input = GaugeMatrixInput::new(rat(1, 1), fv([1, 1, 0, 0]), rat(1, 1));
        let expect = cmat_add(
            &cmat_add(&cmat_identity(), g.gamma(0)),
            &cmat_scale(g.gamma(1), &cre(rat(-1, 1))),
        );
        assert_eq!(build_phi_matrix(&input, &g), expect);
    }

    #[test]
    fn quadratic_form_examples() {
        let g = GammaSet::dirac(Metric::MINKOWSKI);

        let input = GaugeMatrixInput::new(rat(1, 1), FourVector::zero(), rat(3, 1));
        assert_eq!(gauge_quadratic_form(&input, &g), rat(1, 1));

        let input = GaugeMatrixInput::new(rat(0, 1), fv([1, 0, 0, 0]), rat(2, 1));
        assert_eq!(gauge_quadratic_form(&input, &g), rat(4, 1));

        // spacelike potential: (gamma^1)^2 = -I gives beta^2 * (A.A) = -4
        let input = GaugeMatrixInput::new(rat(0, 1), fv([0, 1, 0, 0]), rat(2, 1));
        assert_eq!(gauge_quadratic_form(&input, &g), rat(-4, 1));
    }

    #[test]
    fn functional_value_and_negative_form() {
        let g = GammaSet::dirac(Metric::MINKOWSKI);

        let input = GaugeMatrixInput::new(rat(2, 1), FourVector::zero(), rat(1, 1));
        assert_eq!(gauge_functional_value(&input, &g).unwrap(), 2.0);

        let input = GaugeMatrixInput::new(rat(0, 1), fv([1, 0, 0, 0]), rat(2, 1));
        assert_eq!(gauge_functional_value(&input, &g).unwrap(), 2.0);

        let input = GaugeMatrixInput::new(rat(0, 1), fv([0, 1, 0, 0]), rat(2, 1));
        assert!(matches!(
            gauge_functional_value(&input, &g),
            Err(Error::NegativeQuadraticForm { .. })
        ));
    }

    #[test]
    fn euclidean_continuation_flips_beta_squared() {
        let g = GammaSet::dirac(Metric::EUCLIDEAN);
        // divA = 3, A along axis 0, beta = i: form = 9 - 1*A.A = 8
        let input = GaugeMatrixInput::with_imaginary_beta(rat(3, 1), fv([1, 0, 0, 0]), rat(1, 1));
        assert_eq!(input.beta_squared(), rat(-1, 1));
        assert_eq!(gauge_quadratic_form(&input, &g), rat(8, 1));
        assert_eq!(
            gauge_quadratic_form(&input, &g),
            gauge_quadratic_form_direct(&input, Metric::EUCLIDEAN)
        );
    }

    #[test]
    fn ghost_plane_wave_examples() {
        let g = GammaSet::dirac(Metric::MINKOWSKI);

        // A = 0, divA = 1: Phi = 1 and only the d'Alembertian term survives,
        // lambda = p.p
        let input = GaugeMatrixInput::new(rat(1, 1), FourVector::zero(), rat(7, 1));
        let p = fv([2, 1, 0, 0]); // p.p = 4 - 1 = 3
        let lambda = ghost_action_multiplier(&input, &g, &p).unwrap();
        assert_eq!(lambda, Complex::new(3.0, 0.0));

        // p = 0: both derivative terms vanish
        let lambda = ghost_action_multiplier(&input, &g, &FourVector::zero()).unwrap();
        assert_eq!(lambda, Complex::new(0.0, 0.0));

        // divA = 0, A = e0, beta = 1 (Phi = 1), p = e0: lambda = -i
        let input = GaugeMatrixInput::new(rat(0, 1), fv([1, 0, 0, 0]), rat(1, 1));
        let lambda = ghost_action_multiplier(&input, &g, &fv([1, 0, 0, 0])).unwrap();
        assert_eq!(lambda, Complex::new(0.0, -1.0));
    }

    #[test]
    fn ghost_errors() {
        let g = GammaSet::dirac(Metric::MINKOWSKI);
        // Phi = 0: ghost operator undefined
        let input = GaugeMatrixInput::new(rat(0, 1), FourVector::zero(), rat(1, 1));
        assert_eq!(
            ghost_action_multiplier(&input, &g, &fv([1, 0, 0, 0])),
            Err(Error::GaugeFunctionalZero)
        );
        // negative form propagates
        let input = GaugeMatrixInput::new(rat(0, 1), fv([0, 1, 0, 0]), rat(1, 1));
        assert!(matches!(
            ghost_action_multiplier(&input, &g, &fv([1, 0, 0, 0])),
            Err(Error::NegativeQuadraticForm { .. })
        ));
    }

    #[test]
    fn ghost_multiplier_is_linear_in_each_invariant() {
        // superposition in (p.p, A.p) at a fixed field point (fixed Phi)
        let g = GammaSet::dirac(Metric::MINKOWSKI);
        let input = GaugeMatrixInput::new(rat(2, 1), fv([1, 0, 0, 0]), rat(3, 1));
        let lam = |pp: Rational, ap: Rational| {
            ghost_multiplier_from_invariants(&input, &g, &pp, &ap).unwrap()
        };
        let tol = 1e-12;
        for i in 0i64..20 {
            let pp1 = rat(i - 10, 3);
            let ap1 = rat(2 * i - 7, 5);
            let pp2 = rat(3 * i - 5, 4);
            let ap2 = rat(i - 3, 7);
            let joint = lam(&pp1 + &pp2, &ap1 + &ap2);
            let split = lam(pp1, ap1) + lam(pp2, ap2);
            assert!((joint - split).norm() < tol, "case {i}");
        }
    }
}
