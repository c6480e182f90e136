//! Radiative corrections to the static Coulomb potential.
//!
//! Dresses a static point source with the renormalized propagator and the
//! polarization tensor, transforms the corrected spectrum to position space,
//! and validates the quadrature against the closed-form Yukawa potential.
//!
//! Run with `cargo run --example coulomb_correction`.

use qedprop::coulomb::{
    corrected_spectrum, radial_fourier, yukawa_closed_form, GridSpacing, RadialGrid, StaticSource,
};
use qedprop::propagators::PropagatorModel;
use qedprop::scalarfield::{rat, Polynomial, RationalFn};

fn main() {
    let source = StaticSource::unit();

    // f = s: no correction at all, the spectrum stays q/k^2
    let plain = PropagatorModel::bare(rat(2, 1), rat(1, 1)).unwrap();
    let spec = corrected_spectrum(&plain, &source).unwrap();
    println!("f = s (no polarization): corrected spectrum = {spec}");

    // f with f(0) = 0: the long-range charge survives in full
    let f = RationalFn::new(
        Polynomial::from_coeffs(vec![rat(0, 1), rat(0, 1), rat(1, 1)]), // s^2
        Polynomial::from_coeffs(vec![rat(1, 1), rat(1, 1)]),            // s + 1
    )
    .unwrap();
    let pm = PropagatorModel::new(rat(2, 1), rat(1, 1), f).unwrap();
    let spec = corrected_spectrum(&pm, &source).unwrap();
    println!("f = s^2/(s+1):           corrected spectrum = {spec}");
    let long_range = (&RationalFn::var() * &spec).eval(&rat(0, 1)).unwrap();
    println!("  long-range charge lim s*A0(s) = {long_range} (the classical q)\n");
    assert_eq!(long_range, rat(1, 1));

    // transform to position space and compare the correction against Coulomb
    let grid = RadialGrid::new(0.2, 5.0, 8, GridSpacing::Log).unwrap();
    let curve = radial_fourier(&spec, &grid, "corrected").unwrap();
    println!("corrected static potential (q = 1):");
    println!("  {:>10}  {:>22}  {:>14}", "r", "V(r)", "V/V_coulomb");
    for (r, v) in &curve.samples {
        let coulomb = 1.0 / (4.0 * std::f64::consts::PI * r);
        println!("  {r:>10.4}  {v:>22.15e}  {:>14.10}", v / coulomb);
    }

    // oracle: the massive reference spectrum q/(k^2 + m^2) must transform to
    // the closed-form Yukawa potential
    let m = 1.0f64;
    let yukawa_spec = RationalFn::new(
        Polynomial::one(),
        Polynomial::from_coeffs(vec![rat(1, 1), rat(1, 1)]),
    )
    .unwrap();
    let curve = radial_fourier(&yukawa_spec, &grid, "yukawa").unwrap();
    let mut worst: f64 = 0.0;
    for (r, v) in &curve.samples {
        let expect = yukawa_closed_form(1.0, m, *r);
        worst = worst.max(((v - expect) / expect).abs());
    }
    println!("\nYukawa oracle: max relative quadrature error over the grid = {worst:.2e}");
    assert!(worst < 1e-6);

    // a spectrum with a constant tail transforms to a contact term and is
    // rejected rather than regularized
    let flat_model = PropagatorModel::new(rat(1, 1), rat(1, 1), RationalFn::zero()).unwrap();
    let flat = corrected_spectrum(&flat_model, &source).unwrap();
    println!(
        "\nf = 0 spectrum {flat} is rejected: {:?}",
        radial_fourier(&flat, &grid, "flat").err().map(|e| e.to_string())
    );
}
