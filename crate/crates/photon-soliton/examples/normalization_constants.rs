//! Closed-form amplitude normalization across wavelengths: alpha, the
//! matched beta, their consistency, and the wavelength-independent gradient
//! orthogonality at the cusp.
//!
//! ```bash
//! cargo run -p photon-soliton --example normalization_constants
//! ```

use std::f64::consts::PI;

use photon_soliton::constants::PhysicalConstants;
use photon_soliton::normalization::{alpha_closed_form, beta_closed_form, beta_z_conjecture, gradient_ratio, match_beta};

fn main() {
    let k = PhysicalConstants::codata2018();

    println!(
        "{:>12} {:>15} {:>15} {:>12} {:>12}",
        "lambda (m)", "alpha (V/m^2)", "beta (V)", "match rel", "grad ratio"
    );
    for lambda in [400e-9, 650e-9, 10.5e-6, 1.0] {
        let alpha = alpha_closed_form(lambda, 1, &k).unwrap();
        let beta = beta_closed_form(lambda, 1, &k).unwrap();
        let matched = match_beta(alpha, lambda).unwrap();
        let ratio = gradient_ratio(alpha, beta, lambda / (2.0 * PI)).unwrap();
        println!(
            "{:>12.3e} {:>15.6e} {:>15.6e} {:>12.2e} {:>12.9}",
            lambda,
            alpha,
            beta,
            (beta - matched).abs() / beta,
            ratio
        );
    }
    println!("\nthe gradient ratio -beta/(alpha r^2) at r = lambda/2pi is -1 for every");
    println!("wavelength: the interior and evanescent slopes are orthogonal at the cusp.");

    // Quantum-number scaling: both amplitudes grow as sqrt(n).
    let lambda = 650e-9;
    println!("\n{:>4} {:>15} {:>15}", "n", "alpha (V/m^2)", "beta (V)");
    for n in [1, 2, 4] {
        println!(
            "{n:>4} {:>15.6e} {:>15.6e}",
            alpha_closed_form(lambda, n, &k).unwrap(),
            beta_closed_form(lambda, n, &k).unwrap()
        );
    }

    // The z-dependent matching conjecture: beta(z) tapers to zero at the
    // ellipsoid tips. (A field built from it no longer solves the vacuum
    // Maxwell equations; see the betaz_paradox example.)
    println!("\nbeta(z) conjecture profile at lambda = {lambda:.2e} m:");
    println!("{:>10} {:>15} {:>10}", "z/lambda", "beta(z) (V)", "beta/beta0");
    let beta0 = beta_closed_form(lambda, 1, &k).unwrap();
    for step in 0..=5 {
        let z = lambda / 2.0 * step as f64 / 5.0;
        let bz = beta_z_conjecture(z, lambda, 1, &k).unwrap();
        println!("{:>10.2} {:>15.6e} {:>10.4}", z / lambda, bz, bz / beta0);
    }
}
