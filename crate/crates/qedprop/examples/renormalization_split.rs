//! Multiplicative renormalization bookkeeping and the counterterm split.
//!
//! Shows the bare-parameter map, the exact split of the bare Lagrangian into
//! physical part plus counterterms on the six-monomial basis, and how the
//! gauge-parameter choice rho = 1/sqrt(z_alpha) leaves the squared
//! divergence as the only non-gauge-invariant counterterm.
//!
//! Run with `cargo run --example renormalization_split`.

use qedprop::renorm::{
    bare_coeffs_in_physical_fields, bare_from_physical, counterterm_coeffs, mtilde_squared,
    physical_coeffs, split_check, PhysicalParams, RenormConstants,
};
use qedprop::scalarfield::rat;

fn main() {
    let rc = RenormConstants::with_lorenz_rho(
        rat(4, 1), // z_A
        rat(3, 2), // z_psi
        rat(5, 4), // z_m
        rat(2, 1), // z_e
        rat(9, 4), // z_alpha -> rho = 2/3
    )
    .unwrap();
    let pp = PhysicalParams::new(rat(3, 1), rat(2, 1), rat(2, 1), rat(1, 2)).unwrap();

    println!("constants: z_A = {}, z_psi = {}, z_m = {}, z_e = {}, z_alpha = {}, rho = {}",
        rc.z_a(), rc.z_psi(), rc.z_m(), rc.z_e(), rc.z_alpha(), rc.rho());

    let bare = bare_from_physical(&rc, &pp).unwrap();
    println!("\nbare parameters from physical (e = 3, m = 2, alpha = 2, beta = 1/2):");
    println!("  e_B = {}, m_B = {}, alpha_B = {}, beta_B = {}",
        bare.e_b, bare.m_b, bare.alpha_b, bare.beta_b);

    let mt2 = mtilde_squared(&rc, &pp);
    println!("\neffective photon mass square mtilde2 = beta^2/(alpha z_A) = {mt2}");
    println!("beta_B^2/alpha_B = {} (same, because rho = 1/sqrt(z_alpha))",
        &bare.beta_b * &bare.beta_b / &bare.alpha_b);
    assert_eq!(&bare.beta_b * &bare.beta_b / &bare.alpha_b, mt2);

    let ph = physical_coeffs(&pp);
    let ct = counterterm_coeffs(&rc, &pp);
    let bare_coeffs = bare_coeffs_in_physical_fields(&rc, &pp);
    println!("\ncoefficients on {{F^2, kinetic, interaction, mass, (d.A)^2, A.A}}:");
    println!("  physical     : {}, {}, {}, {}, {}, {}",
        ph.f_squared, ph.fermion_kinetic, ph.interaction, ph.fermion_mass,
        ph.divergence_squared, ph.potential_squared);
    println!("  counterterms : {}, {}, {}, {}, {}, {}",
        ct.f_squared, ct.fermion_kinetic, ct.interaction, ct.fermion_mass,
        ct.divergence_squared, ct.potential_squared);
    println!("  bare         : {}, {}, {}, {}, {}, {}",
        bare_coeffs.f_squared, bare_coeffs.fermion_kinetic, bare_coeffs.interaction,
        bare_coeffs.fermion_mass, bare_coeffs.divergence_squared, bare_coeffs.potential_squared);

    assert!(split_check(&rc, &pp));
    println!("\nsplit identity (bare = physical + counterterms) holds exactly");

    assert!(ct.potential_squared == rat(0, 1));
    assert!(ct.divergence_squared != rat(0, 1));
    println!("A.A counterterm is exactly zero; (d.A)^2 is the only non-gauge-invariant one");

    // a rho that ignores z_alpha reintroduces the A.A counterterm
    let broken = RenormConstants::new(rat(4, 1), rat(3, 2), rat(5, 4), rat(2, 1), rat(9, 4), rat(1, 1))
        .unwrap();
    let ct_broken = counterterm_coeffs(&broken, &pp);
    println!(
        "\nwith rho = 1 instead: A.A counterterm = {} (nonzero, the split still holds: {})",
        ct_broken.potential_squared,
        split_check(&broken, &pp)
    );
    assert!(ct_broken.potential_squared != rat(0, 1));
}
