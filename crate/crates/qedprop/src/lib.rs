//! Momentum-space photon propagator algebra for gauge-fixed electrodynamics.
//!
//! The library verifies, with exact rational-function arithmetic wherever an
//! identity is exact and controlled numerics where an integral is required:
//!
//! - [`scalarfield`]: arbitrary-precision rationals, polynomials and rational
//!   functions of `s = k^2` — the coefficient field of every symbol.
//! - [`clifford`]: 4x4 gamma matrices with exact Gaussian-rational entries,
//!   the matrix-valued gauge potential, the scalar gauge-averaging functional
//!   and the ghost operator's action on plane waves.
//! - [`tensoralg`]: rank-two momentum-space symbols `u1*g + u2*k(x)k`, their
//!   contraction, exact inversion and transverse/longitudinal decomposition.
//! - [`propagators`]: the gauge-field operator symbol, bare and renormalized
//!   propagators, polarization tensor, resummation residual, large-momentum
//!   falloff and the periodic-lattice Lagrangian-split check.
//! - [`renorm`]: multiplicative renormalization constants, the physical /
//!   counterterm Lagrangian split and the effective photon mass parameter.
//! - [`coulomb`]: radiative corrections to the static Coulomb potential, a
//!   radial sine-transform quadrature and its closed-form Yukawa oracle.
//! - [`checks`]: the named identity suites that back `qedprop check`.
//! - [`cli`]: the command-line front end (`check`, `propagator`, `potential`,
//!   `sweep`, `falloff`).
//!
//! See the crate `examples/` directory for one runnable program per
//! capability.

pub mod checks;
pub mod cli;
pub mod clifford;
pub mod coulomb;
pub mod error;
pub mod propagators;
pub mod renorm;
pub mod scalarfield;
pub mod tensoralg;

pub use error::{Error, Result};
pub use scalarfield::{rat, Polynomial, Rational, RationalFn};
pub use clifford::{GammaSet, GaugeMatrixInput, Metric};
pub use tensoralg::{FourVector, ProjectorDecomp, RankTwoSymbol};
pub use propagators::{
    GaugeParams, LatticeField, LatticeMode, MassiveQEDParams, PropagatorModel, SymbolComponent,
};
pub use renorm::{BareParams, LagrangianCoeffs, PhysicalParams, RenormConstants};
pub use coulomb::{GridSpacing, PotentialCurve, RadialGrid, StaticSource, SweepReport};
