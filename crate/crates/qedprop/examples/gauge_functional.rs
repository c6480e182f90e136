//! The matrix-valued gauge potential and the scalar gauge-averaging
//! functional built from it.
//!
//! Walks through the chain: quarter-traces of gamma products give back the
//! metric, the matrix `Phi(A) = divA I + beta gamma.A` squares (under the
//! quarter-trace) to the scalar quadratic form `divA^2 + beta^2 A.A`, whose
//! square root is the gauge functional, and the ghost operator acts on plane
//! waves by a computable eigenvalue.
//!
//! Run with `cargo run --example gauge_functional`.

use qedprop::clifford::{
    build_phi_matrix, gauge_functional_value, gauge_quadratic_form, gauge_quadratic_form_direct,
    ghost_action_multiplier, GammaSet, GaugeMatrixInput, Metric,
};
use qedprop::scalarfield::rat;
use qedprop::tensoralg::FourVector;

fn main() {
    let gammas = GammaSet::dirac(Metric::MINKOWSKI);

    println!("quarter-traces (1/4) Tr(gamma^mu gamma^nu):");
    for mu in 0..4 {
        let row: Vec<String> = (0..4)
            .map(|nu| gammas.trace_product(mu, nu).to_string())
            .collect();
        println!("  [{}]", row.join(", "));
    }
    println!("  = the mostly-minus metric, exactly\n");

    // a field point: divA = 1, A = (1, 1, 0, 0), beta = 1
    let input = GaugeMatrixInput::new(rat(1, 1), FourVector::from_ints([1, 1, 0, 0]), rat(1, 1));
    let phi = build_phi_matrix(&input, &gammas);
    println!("Phi(A) at divA = 1, A = (1,1,0,0), beta = 1 (I + gamma^0 - gamma^1):");
    for row in &phi {
        let cells: Vec<String> = row.iter().map(|c| format!("{}+{}i", c.re, c.im)).collect();
        println!("  [{}]", cells.join(", "));
    }

    let by_trace = gauge_quadratic_form(&input, &gammas);
    let direct = gauge_quadratic_form_direct(&input, Metric::MINKOWSKI);
    println!("\nquadratic form by trace route:  {by_trace}");
    println!("quadratic form computed directly: {direct}");
    assert_eq!(by_trace, direct);

    let value = gauge_functional_value(&input, &gammas).unwrap();
    println!("gauge functional Phi(A) = sqrt({by_trace}) = {value}\n");

    // spacelike potential: the Minkowski quadratic form can go negative and
    // the functional is then undefined
    let spacelike = GaugeMatrixInput::new(rat(0, 1), FourVector::from_ints([0, 1, 0, 0]), rat(2, 1));
    println!(
        "spacelike A with beta = 2: quadratic form = {}, functional = {:?}",
        gauge_quadratic_form(&spacelike, &gammas),
        gauge_functional_value(&spacelike, &gammas)
    );

    // ghost action on plane waves, coefficients frozen at the field point
    let wave_input = GaugeMatrixInput::new(rat(1, 1), FourVector::zero(), rat(3, 1));
    let p = FourVector::from_ints([2, 1, 0, 0]); // p.p = 3
    let lambda = ghost_action_multiplier(&wave_input, &gammas, &p).unwrap();
    println!("\nghost eigenvalue at divA = 1, A = 0, p = (2,1,0,0): {lambda} (= p.p)");
    assert_eq!(lambda.re, 3.0);

    let input = GaugeMatrixInput::new(rat(0, 1), FourVector::from_ints([1, 0, 0, 0]), rat(1, 1));
    let lambda = ghost_action_multiplier(&input, &gammas, &FourVector::from_ints([1, 0, 0, 0]))
        .unwrap();
    println!("ghost eigenvalue at divA = 0, A = e0, beta = 1, p = e0: {lambda} (= -i)");
    assert_eq!((lambda.re, lambda.im), (0.0, -1.0));

    // Euclidean continuation: beta purely imaginary flips beta^2
    let eu = GammaSet::dirac(Metric::EUCLIDEAN);
    let continued =
        GaugeMatrixInput::with_imaginary_beta(rat(3, 1), FourVector::from_ints([1, 0, 0, 0]), rat(1, 1));
    println!(
        "\nEuclidean continuation (beta -> i): quadratic form = {} (9 - A.A)",
        gauge_quadratic_form(&continued, &eu)
    );
    assert_eq!(gauge_quadratic_form(&continued, &eu), rat(8, 1));
}
