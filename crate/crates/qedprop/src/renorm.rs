//! Multiplicative renormalization bookkeeping.
//!
//! Bare fields and parameters are rescalings of physical ones by the
//! z-constants; rewriting the bare Lagrangian in physical fields splits it
//! into a physical part plus counterterms, coefficient by coefficient on the
//! fixed monomial basis
//!
//! `{ F^2, psi-bar i d-slash psi, e psi-bar A-slash psi, m psi-bar psi,
//!    (d.A)^2, A.A }`.
//!
//! Fermion monomials are tracked as coefficients only — no spinor value is
//! ever computed. With the gauge-parameter choice `rho = 1/sqrt(z_alpha)`
//! the `A.A` counterterm cancels exactly and the squared divergence is the
//! only non-gauge-invariant counterterm left. The derived mass parameters
//! are `m_gamma^2 = beta^2/alpha` and `mtilde2 = m_gamma^2/z_A`, the latter
//! being the gauge-independent combination the propagator depends on.
//!
//! All constants are exact rationals supplied by the caller; nothing here
//! computes a z-factor from a loop diagram.

use std::ops::Add;

use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::scalarfield::{rational_sqrt, Rational};

fn require_positive(value: &Rational, name: &str) -> Result<()> {
    if value.is_positive() {
        Ok(())
    } else {
        Err(Error::InvalidInput(format!("{name} must be strictly positive")))
    }
}

/// The multiplicative constants `(z_A, z_psi, z_m, z_e, z_alpha)` plus the
/// gauge-parameter rescaling `rho` with `beta_B = rho * beta`. All strictly
/// positive.
#[derive(Clone, Debug, PartialEq)]
pub struct RenormConstants {
    z_a: Rational,
    z_psi: Rational,
    z_m: Rational,
    z_e: Rational,
    z_alpha: Rational,
    rho: Rational,
}

impl RenormConstants {
    pub fn new(
        z_a: Rational,
        z_psi: Rational,
        z_m: Rational,
        z_e: Rational,
        z_alpha: Rational,
        rho: Rational,
    ) -> Result<RenormConstants> {
        require_positive(&z_a, "z_A")?;
        require_positive(&z_psi, "z_psi")?;
        require_positive(&z_m, "z_m")?;
        require_positive(&z_e, "z_e")?;
        require_positive(&z_alpha, "z_alpha")?;
        require_positive(&rho, "rho")?;
        Ok(RenormConstants { z_a, z_psi, z_m, z_e, z_alpha, rho })
    }

    /// The default gauge-parameter rescaling `rho = 1/sqrt(z_alpha)`, which
    /// ties the renormalization of `beta` to that of `alpha` and kills the
    /// `A.A` counterterm. Exact arithmetic requires `z_alpha` to be a
    /// perfect rational square.
    pub fn with_lorenz_rho(
        z_a: Rational,
        z_psi: Rational,
        z_m: Rational,
        z_e: Rational,
        z_alpha: Rational,
    ) -> Result<RenormConstants> {
        require_positive(&z_alpha, "z_alpha")?;
        let root = rational_sqrt(&z_alpha).ok_or_else(|| {
            Error::InvalidInput(
                "default rho = 1/sqrt(z_alpha) needs z_alpha to be a perfect rational square; \
                 supply rho explicitly otherwise"
                    .into(),
            )
        })?;
        RenormConstants::new(z_a, z_psi, z_m, z_e, z_alpha, root.recip())
    }

    /// Identity renormalization: every constant 1.
    pub fn identity() -> RenormConstants {
        let one = Rational::one();
        RenormConstants {
            z_a: one.clone(),
            z_psi: one.clone(),
            z_m: one.clone(),
            z_e: one.clone(),
            z_alpha: one.clone(),
            rho: one,
        }
    }

    pub fn z_a(&self) -> &Rational {
        &self.z_a
    }

    pub fn z_psi(&self) -> &Rational {
        &self.z_psi
    }

    pub fn z_m(&self) -> &Rational {
        &self.z_m
    }

    pub fn z_e(&self) -> &Rational {
        &self.z_e
    }

    pub fn z_alpha(&self) -> &Rational {
        &self.z_alpha
    }

    pub fn rho(&self) -> &Rational {
        &self.rho
    }

    /// Whether `rho^2 * z_alpha = 1`, i.e. rho carries its default value.
    pub fn has_lorenz_rho(&self) -> bool {
        &self.rho * &self.rho * &self.z_alpha == Rational::one()
    }
}

/// Physical (renormalized) parameters: charge, fermion mass and the gauge
/// pair `(alpha, beta)`.
#[derive(Clone, Debug, PartialEq)]
pub struct PhysicalParams {
    e: Rational,
    m: Rational,
    alpha: Rational,
    beta: Rational,
}

impl PhysicalParams {
    pub fn new(e: Rational, m: Rational, alpha: Rational, beta: Rational) -> Result<PhysicalParams> {
        require_positive(&alpha, "alpha")?;
        Ok(PhysicalParams { e, m, alpha, beta })
    }

    pub fn e(&self) -> &Rational {
        &self.e
    }

    pub fn m(&self) -> &Rational {
        &self.m
    }

    pub fn alpha(&self) -> &Rational {
        &self.alpha
    }

    pub fn beta(&self) -> &Rational {
        &self.beta
    }

    /// `m_gamma^2 = beta^2 / alpha`, the mass parameter of the physical
    /// Lagrangian.
    pub fn m_gamma_squared(&self) -> Rational {
        &self.beta * &self.beta / &self.alpha
    }
}

/// Bare parameters produced from physical ones by the z-constants.
#[derive(Clone, Debug, PartialEq)]
pub struct BareParams {
    pub e_b: Rational,
    pub m_b: Rational,
    pub alpha_b: Rational,
    pub beta_b: Rational,
}

/// Maps physical to bare parameters:
/// `m_B = (z_m/z_psi) m`, `e_B = z_e e / (z_psi sqrt(z_A))`,
/// `alpha_B = (z_A/z_alpha) alpha`, `beta_B = rho beta`.
///
/// The charge map divides by `sqrt(z_A)`; staying exact requires `z_A` to be
/// a perfect rational square, otherwise this errors rather than rounding.
pub fn bare_from_physical(rc: &RenormConstants, pp: &PhysicalParams) -> Result<BareParams> {
    let sqrt_z_a = rational_sqrt(rc.z_a()).ok_or_else(|| {
        Error::InvalidInput(
            "exact charge renormalization needs z_A to be a perfect rational square".into(),
        )
    })?;
    Ok(BareParams {
        e_b: rc.z_e() * pp.e() / (rc.z_psi() * sqrt_z_a),
        m_b: rc.z_m() * pp.m() / rc.z_psi(),
        alpha_b: rc.z_a() * pp.alpha() / rc.z_alpha(),
        beta_b: rc.rho() * pp.beta(),
    })
}

/// The effective photon mass square `mtilde2 = beta^2/(alpha z_A)
/// = m_gamma^2 / z_A`. Equals `beta_B^2 / alpha_B` whenever
/// `rho = 1/sqrt(z_alpha)`.
pub fn mtilde_squared(rc: &RenormConstants, pp: &PhysicalParams) -> Rational {
    pp.m_gamma_squared() / rc.z_a()
}

/// Coefficients over the six-monomial basis. Signs follow the Lagrangian as
/// written: each field stores the full prefactor of its monomial, e.g.
/// `interaction` multiplies `e psi-bar gamma.A psi` and is `-e` in the
/// physical part, so minus signs live in the coefficients, not the basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LagrangianCoeffs {
    /// Coefficient of `F_{mu nu} F^{mu nu}`.
    pub f_squared: Rational,
    /// Coefficient of `psi-bar i gamma.d psi`.
    pub fermion_kinetic: Rational,
    /// Coefficient of `psi-bar gamma.A psi` (carries the charge).
    pub interaction: Rational,
    /// Coefficient of `psi-bar psi` (carries the fermion mass).
    pub fermion_mass: Rational,
    /// Coefficient of `(d.A)^2`.
    pub divergence_squared: Rational,
    /// Coefficient of `A.A`.
    pub potential_squared: Rational,
}

impl Add for &LagrangianCoeffs {
    type Output = LagrangianCoeffs;
    fn add(self, rhs: &LagrangianCoeffs) -> LagrangianCoeffs {
        LagrangianCoeffs {
            f_squared: &self.f_squared + &rhs.f_squared,
            fermion_kinetic: &self.fermion_kinetic + &rhs.fermion_kinetic,
            interaction: &self.interaction + &rhs.interaction,
            fermion_mass: &self.fermion_mass + &rhs.fermion_mass,
            divergence_squared: &self.divergence_squared + &rhs.divergence_squared,
            potential_squared: &self.potential_squared + &rhs.potential_squared,
        }
    }
}

fn r(p: i64, q: i64) -> Rational {
    Rational::new(p.into(), q.into())
}

/// Physical-part coefficients:
/// `(-1/4, 1, -e, -m, -1/(2 alpha), -beta^2/(2 alpha))`. The `A.A` entry is
/// `-m_gamma^2/2`.
pub fn physical_coeffs(pp: &PhysicalParams) -> LagrangianCoeffs {
    LagrangianCoeffs {
        f_squared: r(-1, 4),
        fermion_kinetic: r(1, 1),
        interaction: -pp.e(),
        fermion_mass: -pp.m(),
        divergence_squared: r(-1, 2) / pp.alpha(),
        potential_squared: -pp.m_gamma_squared() / r(2, 1),
    }
}

/// Counterterm coefficients:
/// `(-(z_A-1)/4, z_psi-1, -(z_e-1)e, -(z_m-1)m, -(z_alpha-1)/(2 alpha),
///   -(beta^2/(2 alpha))(rho^2 z_alpha - 1))`.
pub fn counterterm_coeffs(rc: &RenormConstants, pp: &PhysicalParams) -> LagrangianCoeffs {
    let one = Rational::one();
    LagrangianCoeffs {
        f_squared: -(rc.z_a() - &one) / r(4, 1),
        fermion_kinetic: rc.z_psi() - &one,
        interaction: -((rc.z_e() - &one) * pp.e()),
        fermion_mass: -((rc.z_m() - &one) * pp.m()),
        divergence_squared: -(rc.z_alpha() - &one) / (r(2, 1) * pp.alpha()),
        potential_squared: -(pp.m_gamma_squared() / r(2, 1))
            * (rc.rho() * rc.rho() * rc.z_alpha() - &one),
    }
}

/// The bare Lagrangian rewritten in physical fields:
/// `(-z_A/4, z_psi, -z_e e, -z_m m, -z_alpha/(2 alpha),
///   -(beta^2/(2 alpha)) rho^2 z_alpha)`. The `sqrt(z_A)` factors of the
/// interaction monomial cancel against the bare charge, so every entry is
/// rational.
pub fn bare_coeffs_in_physical_fields(
    rc: &RenormConstants,
    pp: &PhysicalParams,
) -> LagrangianCoeffs {
    LagrangianCoeffs {
        f_squared: -rc.z_a() / r(4, 1),
        fermion_kinetic: rc.z_psi().clone(),
        interaction: -(rc.z_e() * pp.e()),
        fermion_mass: -(rc.z_m() * pp.m()),
        divergence_squared: -rc.z_alpha() / (r(2, 1) * pp.alpha()),
        potential_squared: -(pp.m_gamma_squared() / r(2, 1))
            * (rc.rho() * rc.rho() * rc.z_alpha()),
    }
}

/// Checks, coefficient by coefficient on the six-monomial basis, that the
/// bare Lagrangian in physical fields equals physical part + counterterms
/// (e.g. for `F^2`: `-z_A/4 = -1/4 - (z_A - 1)/4`). Exact.
pub fn split_check(rc: &RenormConstants, pp: &PhysicalParams) -> bool {
    let bare = bare_coeffs_in_physical_fields(rc, pp);
    let recombined = &physical_coeffs(pp) + &counterterm_coeffs(rc, pp);
    bare == recombined
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalarfield::rat;

    fn pp(e: i64, m: i64, alpha: (i64, i64), beta: (i64, i64)) -> PhysicalParams {
        PhysicalParams::new(rat(e, 1), rat(m, 1), rat(alpha.0, alpha.1), rat(beta.0, beta.1))
            .unwrap()
    }

    #[test]
    fn identity_renormalization_is_transparent() {
        let rc = RenormConstants::identity();
        let params = pp(3, 2, (1, 1), (1, 2));
        let bare = bare_from_physical(&rc, &params).unwrap();
        assert_eq!(bare.e_b, rat(3, 1));
        assert_eq!(bare.m_b, rat(2, 1));
        assert_eq!(bare.alpha_b, rat(1, 1));
        assert_eq!(bare.beta_b, rat(1, 2));
    }

    #[test]
    fn bare_map_examples() {
        // z_A = 4, z_alpha = 1, alpha = 1: alpha_B = 4
        let rc = RenormConstants::new(rat(4, 1), rat(1, 1), rat(1, 1), rat(1, 1), rat(1, 1), rat(1, 1))
            .unwrap();
        let bare = bare_from_physical(&rc, &pp(3, 1, (1, 1), (0, 1))).unwrap();
        assert_eq!(bare.alpha_b, rat(4, 1));
        // z_e = 2, z_psi = 1, z_A = 4, e = 3: e_B = 2/(1*2) * 3 = 3
        let rc = RenormConstants::new(rat(4, 1), rat(1, 1), rat(1, 1), rat(2, 1), rat(1, 1), rat(1, 1))
            .unwrap();
        let bare = bare_from_physical(&rc, &pp(3, 1, (1, 1), (0, 1))).unwrap();
        assert_eq!(bare.e_b, rat(3, 1));
        // non-square z_A cannot renormalize the charge exactly
        let rc = RenormConstants::new(rat(2, 1), rat(1, 1), rat(1, 1), rat(1, 1), rat(1, 1), rat(1, 1))
            .unwrap();
        assert!(bare_from_physical(&rc, &pp(1, 1, (1, 1), (0, 1))).is_err());
    }

    #[test]
    fn mtilde_squared_examples() {
        let rc = RenormConstants::identity();
        assert_eq!(mtilde_squared(&rc, &pp(1, 1, (1, 1), (1, 1))), rat(1, 1));

        // beta = 2, alpha = 2, z_A = 4: 4/(2*4) = 1/2
        let rc = RenormConstants::new(rat(4, 1), rat(1, 1), rat(1, 1), rat(1, 1), rat(1, 1), rat(1, 1))
            .unwrap();
        assert_eq!(mtilde_squared(&rc, &pp(1, 1, (2, 1), (2, 1))), rat(1, 2));
    }

    #[test]
    fn mtilde_equals_bare_ratio_with_lorenz_rho() {
        // generate rho rational and set z_alpha = 1/rho^2 so the default
        // choice is exact
        for (rho, z_a) in [(rat(1, 2), rat(9, 4)), (rat(3, 1), rat(1, 4)), (rat(2, 5), rat(16, 1))] {
            let z_alpha = (&rho * &rho).recip();
            let rc =
                RenormConstants::new(z_a, rat(1, 1), rat(1, 1), rat(1, 1), z_alpha, rho).unwrap();
            assert!(rc.has_lorenz_rho());
            let params = pp(1, 1, (3, 2), (5, 7));
            let bare = bare_from_physical(&rc, &params).unwrap();
            assert_eq!(
                &bare.beta_b * &bare.beta_b / &bare.alpha_b,
                mtilde_squared(&rc, &params)
            );
        }
    }

    #[test]
    fn mtilde_invariant_under_joint_rescaling() {
        // (alpha, beta) -> (lambda alpha, sqrt(lambda) beta) holds mtilde2
        // fixed; realized with lambda = w^2 to stay rational
        let rc = RenormConstants::identity();
        let base = pp(1, 1, (1, 1), (1, 1));
        let expect = mtilde_squared(&rc, &base);
        for w in [rat(2, 1), rat(1, 3), rat(7, 5)] {
            let lambda = &w * &w;
            let scaled =
                PhysicalParams::new(rat(1, 1), rat(1, 1), lambda, w.clone()).unwrap();
            assert_eq!(mtilde_squared(&rc, &scaled), expect);
        }
    }

    #[test]
    fn physical_coeff_examples() {
        // alpha = 1, beta = 0: divergence -1/2, potential 0
        let coeffs = physical_coeffs(&pp(1, 1, (1, 1), (0, 1)));
        assert_eq!(coeffs.divergence_squared, rat(-1, 2));
        assert_eq!(coeffs.potential_squared, rat(0, 1));

        // alpha = 2, beta = 2: potential coefficient -4/(2*2) = -1
        let coeffs = physical_coeffs(&pp(1, 1, (2, 1), (2, 1)));
        assert_eq!(coeffs.potential_squared, rat(-1, 1));

        // the potential term is always -m_gamma^2/2
        let params = pp(2, 3, (3, 2), (5, 4));
        assert_eq!(
            physical_coeffs(&params).potential_squared,
            -params.m_gamma_squared() / rat(2, 1)
        );
    }

    #[test]
    fn counterterm_examples() {
        // identity constants: no counterterms at all
        let coeffs = counterterm_coeffs(&RenormConstants::identity(), &pp(1, 1, (1, 1), (1, 1)));
        let zero = rat(0, 1);
        assert_eq!(coeffs.f_squared, zero);
        assert_eq!(coeffs.fermion_kinetic, zero);
        assert_eq!(coeffs.interaction, zero);
        assert_eq!(coeffs.fermion_mass, zero);
        assert_eq!(coeffs.divergence_squared, zero);
        assert_eq!(coeffs.potential_squared, zero);

        // rho = 1/sqrt(z_alpha) kills the A.A counterterm for any z_alpha
        for z_alpha in [rat(4, 1), rat(9, 4), rat(1, 16)] {
            let rc = RenormConstants::with_lorenz_rho(
                rat(2, 1),
                rat(3, 1),
                rat(1, 2),
                rat(5, 1),
                z_alpha,
            )
            .unwrap();
            let coeffs = counterterm_coeffs(&rc, &pp(1, 1, (2, 1), (3, 1)));
            assert_eq!(coeffs.potential_squared, rat(0, 1));
            assert_ne!(coeffs.divergence_squared, rat(0, 1));
        }

        // z_A = 2, z_alpha = 3, rho = 1, alpha = 1, beta = 1:
        // f_squared = -1/4, divergence = -1, potential = -1
        let rc = RenormConstants::new(rat(2, 1), rat(1, 1), rat(1, 1), rat(1, 1), rat(3, 1), rat(1, 1))
            .unwrap();
        let coeffs = counterterm_coeffs(&rc, &pp(1, 1, (1, 1), (1, 1)));
        assert_eq!(coeffs.f_squared, rat(-1, 4));
        assert_eq!(coeffs.divergence_squared, rat(-1, 1));
        assert_eq!(coeffs.potential_squared, rat(-1, 1));
    }

    #[test]
    fn split_check_examples() {
        assert!(split_check(&RenormConstants::identity(), &pp(1, 1, (1, 1), (1, 1))));

        let rc = RenormConstants::new(rat(2, 1), rat(3, 2), rat(5, 4), rat(7, 3), rat(9, 5), rat(2, 3))
            .unwrap();
        let params = pp(3, 2, (5, 2), (1, 3));
        assert!(split_check(&rc, &params));

        // mutating one coefficient by 1/8 breaks the identity
        let bare = bare_coeffs_in_physical_fields(&rc, &params);
        let mut recombined = &physical_coeffs(&params) + &counterterm_coeffs(&rc, &params);
        recombined.f_squared += rat(1, 8);
        assert_ne!(bare, recombined);
    }

    #[test]
    fn lorenz_rho_constructor() {
        let rc = RenormConstants::with_lorenz_rho(rat(1, 1), rat(1, 1), rat(1, 1), rat(1, 1), rat(4, 1))
            .unwrap();
        assert_eq!(rc.rho(), &rat(1, 2));
        assert!(rc.has_lorenz_rho());
        assert!(RenormConstants::with_lorenz_rho(
            rat(1, 1),
            rat(1, 1),
            rat(1, 1),
            rat(1, 1),
            rat(2, 1)
        )
        .is_err());
    }

    #[test]
    fn validation() {
        assert!(RenormConstants::new(rat(0, 1), rat(1, 1), rat(1, 1), rat(1, 1), rat(1, 1), rat(1, 1)).is_err());
        assert!(PhysicalParams::new(rat(1, 1), rat(1, 1), rat(0, 1), rat(1, 1)).is_err());
    }
}
