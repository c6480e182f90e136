//! Large-momentum falloff: gauge-averaged propagator versus a hard mass
//! term.
//!
//! The gauge-averaged propagator keeps the renormalizable `1/k^2` behaviour
//! at large momentum. A massive-vector (Proca-type) propagator instead
//! carries a `kk/m^2` numerator whose longitudinal part tends to a nonzero
//! constant — the signature of non-renormalizability. Both behaviours are
//! read off exactly from degrees and confirmed by log-log regression.
//!
//! Run with `cargo run --example massive_contrast`.

use qedprop::propagators::{
    bare_propagator, falloff_exponent, falloff_exponent_exact, massive_qed_integrand,
    massive_qed_operator_symbol, MassiveQEDParams, PropagatorModel, SymbolComponent,
};
use qedprop::scalarfield::rat;

fn main() {
    let pm = PropagatorModel::bare(rat(2, 1), rat(1, 1)).unwrap();
    let prop = bare_propagator(&pm).unwrap();
    let exact = falloff_exponent_exact(&prop, SymbolComponent::U1).unwrap();
    let fitted = falloff_exponent(&prop, SymbolComponent::U1).unwrap();
    println!("gauge-averaged bare propagator, metric coefficient d1:");
    println!("  exact power of k : {exact}");
    println!("  fitted power of k: {fitted:.4}\n");
    assert_eq!(exact, -2);

    let mp = MassiveQEDParams::new(rat(1, 1), rat(1, 1)).unwrap();
    let integrand = massive_qed_integrand(&mp);
    println!("massive-vector propagator integrand (m^2 = 1):");
    println!("  u1 = {}", integrand.u1());
    println!("  u2 = {}", integrand.u2());
    let tail = SymbolComponent::U2TimesS.extract(&integrand);
    println!(
        "  s * u2 at s = 10^9: {} (tends to -1/m^2)",
        tail.eval(&rat(1_000_000_000, 1)).unwrap()
    );
    let exact = falloff_exponent_exact(&integrand, SymbolComponent::Longitudinal).unwrap();
    let fitted = falloff_exponent(&integrand, SymbolComponent::Longitudinal).unwrap();
    println!("  longitudinal exact power of k : {exact}");
    println!("  longitudinal fitted power of k: {fitted:.4}\n");
    assert_eq!(exact, 0);

    // the massive operator only inverts on the transverse sector
    let op = massive_qed_operator_symbol(&mp);
    let product = op.contract(&integrand).unwrap().decompose();
    println!("massive operator contracted with its integrand:");
    println!("  transverse   = {} (identity)", product.transverse);
    println!("  longitudinal = {} (not identity: no longitudinal inverse)", product.longitudinal);
    assert!(product.transverse.is_one());
    assert!(!product.longitudinal.is_one());
}
