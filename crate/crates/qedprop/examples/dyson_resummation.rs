//! Self-energy, polarization tensor, and the resummation identity.
//!
//! For a model function f(k^2) the self-energy symbol shifts only the
//! transverse coefficient; the polarization tensor Pi = sigma - Sigma is
//! purely transverse (current conservation) and gauge-independent, and
//! resumming it into the bare propagator reproduces the renormalized one
//! exactly: Sigma~ - sigma~ - sigma~.Pi.Sigma~ = 0 as rational functions.
//!
//! Run with `cargo run --example dyson_resummation`.

use qedprop::propagators::{
    bare_propagator, bare_symbol, dyson_residual, polarization, renormalized_propagator,
    self_energy, PropagatorModel,
};
use qedprop::scalarfield::{rat, Polynomial, RationalFn};
use qedprop::tensoralg::FourVector;
use qedprop::Metric;

fn main() {
    // f = s/(s + 1): a bounded self-energy model
    let f = RationalFn::new(
        Polynomial::from_coeffs(vec![rat(0, 1), rat(1, 1)]),
        Polynomial::from_coeffs(vec![rat(1, 1), rat(1, 1)]),
    )
    .unwrap();
    let pm = PropagatorModel::new(rat(2, 1), rat(1, 1), f).unwrap();

    let sigma = bare_symbol(&pm);
    let full = self_energy(&pm);
    println!("bare symbol     : {sigma}");
    println!("self-energy     : {full}");
    println!(
        "longitudinal parts agree exactly: {}\n",
        sigma.decompose().longitudinal == full.decompose().longitudinal
    );

    let pi = polarization(&pm);
    let decomp = pi.decompose();
    println!("polarization Pi = sigma - Sigma:");
    println!("  transverse   = {}", decomp.transverse);
    println!("  longitudinal = {} (transversality)", decomp.longitudinal);
    assert!(decomp.longitudinal.is_zero());

    // k^mu Pi_{mu nu} = 0 at a concrete momentum
    let k = FourVector::from_ints([1, 2, 0, 1]);
    let matrix = pi.evaluate_matrix(&k).unwrap();
    for nu in 0..4 {
        let contracted = (0..4)
            .map(|mu| k.component(mu) * &matrix[mu][nu])
            .fold(rat(0, 1), |acc, t| acc + t);
        assert_eq!(contracted, rat(0, 1));
    }
    println!("k contracted with Pi vanishes at k = (1,2,0,1), exactly\n");

    // gauge independence: Pi does not move with alpha_B
    let pi_other = polarization(&pm.with_alpha_b(rat(1, 2)).unwrap());
    assert_eq!(pi, pi_other);
    println!("Pi is identical for alpha_B = 2 and alpha_B = 1/2 (exact)\n");

    let bare = bare_propagator(&pm).unwrap();
    let renorm = renormalized_propagator(&pm).unwrap();
    println!("bare propagator         : {bare}");
    println!("renormalized propagator : {renorm}");

    let residual = dyson_residual(&pm).unwrap();
    println!(
        "\nresummation residual Sigma~ - sigma~ - sigma~.Pi.Sigma~ is zero: {}",
        residual.is_zero()
    );
    assert!(residual.is_zero());

    // degenerate input: a vanishing transverse response cannot be inverted
    let flat = PropagatorModel::new(rat(1, 1), rat(1, 1), RationalFn::from_int(-1)).unwrap();
    println!(
        "f = -mtilde2 has no renormalized propagator: {:?}",
        renormalized_propagator(&flat).err().map(|e| e.to_string())
    );
    let _ = Metric::EUCLIDEAN;
}
