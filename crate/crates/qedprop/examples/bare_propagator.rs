//! From the gauge-fixed field operator to the bare photon propagator.
//!
//! Builds the operator symbol for gauge parameters (alpha, beta), inverts the
//! bare symbol exactly, checks the closed form, and cross-checks the exact
//! inverse against a plain numeric 4x4 matrix inversion at a concrete
//! momentum.
//!
//! Run with `cargo run --example bare_propagator`.

use qedprop::propagators::{bare_propagator, bare_symbol, operator_symbol, GaugeParams, PropagatorModel};
use qedprop::scalarfield::{rat, to_f64};
use qedprop::tensoralg::FourVector;
use qedprop::Metric;
use qedprop::RankTwoSymbol;

fn main() {
    // at alpha = 1 the operator collapses to (k^2 + beta^2) g
    let gp = GaugeParams::new(rat(1, 1), rat(1, 1)).unwrap();
    let op = operator_symbol(&gp);
    println!("operator symbol at alpha = 1, beta = 1:");
    println!("  u1 = {}", op.u1());
    println!("  u2 = {} (vanishes: pure metric operator)\n", op.u2());

    // bare model: alpha_B = 2, mtilde2 = 1
    let pm = PropagatorModel::bare(rat(2, 1), rat(1, 1)).unwrap();
    let sigma = bare_symbol(&pm);
    let decomp = sigma.decompose();
    println!("bare symbol at alpha_B = 2, mtilde2 = 1:");
    println!("  transverse   = {}", decomp.transverse);
    println!("  longitudinal = {}\n", decomp.longitudinal);

    let prop = bare_propagator(&pm).unwrap();
    println!("bare propagator (exact inverse):");
    println!("  d1 = {}", prop.u1());
    println!("  d2 = {}", prop.u2());
    println!(
        "  at k^2 = 1: d1 = {}, d2 = {}\n",
        prop.u1().eval(&rat(1, 1)).unwrap(),
        prop.u2().eval(&rat(1, 1)).unwrap()
    );

    // definitionally, sigma . propagator = g
    assert_eq!(
        sigma.contract(&prop).unwrap(),
        RankTwoSymbol::identity(Metric::EUCLIDEAN)
    );
    println!("sigma contracted with its propagator = identity symbol (exact)\n");

    // numeric cross-check at k = (1,0,0,0): the literal matrices are inverse
    let k = FourVector::from_ints([1, 0, 0, 0]);
    let m = sigma.evaluate_matrix(&k).unwrap();
    let m_inv = prop.evaluate_matrix(&k).unwrap();
    println!("sigma matrix at Euclidean k = (1,0,0,0) and its exact inverse:");
    for mu in 0..4 {
        let lhs: Vec<String> = (0..4).map(|nu| m[mu][nu].to_string()).collect();
        let rhs: Vec<String> = (0..4).map(|nu| m_inv[mu][nu].to_string()).collect();
        println!("  [{}]    [{}]", lhs.join(", "), rhs.join(", "));
    }
    let mut max_residual = 0.0f64;
    for mu in 0..4 {
        for nu in 0..4 {
            let entry: f64 = (0..4)
                .map(|lam| to_f64(&m[mu][lam]) * to_f64(&m_inv[lam][nu]))
                .sum();
            let expect = if mu == nu { 1.0 } else { 0.0 };
            max_residual = max_residual.max((entry - expect).abs());
        }
    }
    println!("\nfloat product residual against the identity: {max_residual:.2e}");
    assert!(max_residual < 1e-14);
}
