//! Gauge-independence sweep of the corrected Coulomb spectrum.
//!
//! Builds one model per bare gauge parameter at fixed (mtilde2, f) and
//! verifies that the polarization tensor and the corrected spectrum are the
//! same rational functions for every alpha_B, while the kk propagator
//! coefficient d2 — the only gauge-dependent piece — differs.
//!
//! Run with `cargo run --example gauge_sweep`.

use qedprop::coulomb::{corrected_spectrum, gauge_independence_sweep, StaticSource};
use qedprop::propagators::PropagatorModel;
use qedprop::scalarfield::{rat, RationalFn};

fn main() {
    let alphas = [rat(1, 2), rat(1, 1), rat(2, 1), rat(5, 1)];
    let mtilde2 = rat(1, 1);
    let f = RationalFn::zero();

    let report = gauge_independence_sweep(mtilde2.clone(), f.clone(), &alphas).unwrap();
    println!("sweep over alpha_B in {{1/2, 1, 2, 5}} at mtilde2 = 1, f = 0:");
    println!("  spectra identical        : {}", report.spectra_identical);
    println!("  polarizations identical  : {}", report.polarizations_identical);
    println!("  max spectrum deviation   : {}", report.max_spectrum_deviation);
    println!("  d2 pairwise distinct     : {}", report.d2_pairwise_distinct);
    for (alpha, d2) in report.alphas.iter().zip(&report.d2) {
        println!("    alpha_B = {alpha:>3}: d2 = {d2}");
    }
    assert!(report.spectra_identical && report.d2_pairwise_distinct);

    // negative control: moving mtilde2 does change the physics
    let s1 = corrected_spectrum(
        &PropagatorModel::new(rat(1, 1), rat(1, 1), f.clone()).unwrap(),
        &StaticSource::unit(),
    )
    .unwrap();
    let s2 = corrected_spectrum(
        &PropagatorModel::new(rat(1, 1), rat(2, 1), f).unwrap(),
        &StaticSource::unit(),
    )
    .unwrap();
    println!(
        "\nnegative control at s = 1: mtilde2 = 1 gives {}, mtilde2 = 2 gives {}",
        s1.eval(&rat(1, 1)).unwrap(),
        s2.eval(&rat(1, 1)).unwrap()
    );
    assert_ne!(s1, s2);
}
