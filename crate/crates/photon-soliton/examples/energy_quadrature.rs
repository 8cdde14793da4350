//! Quantizing the amplitude by energy quadrature: ellipsoid vs cylinder
//! regions, the two energy-density conventions and their 2 pi offset, the
//! 15/8 region ratio, and a Monte-Carlo cross-check.
//!
//! ```bash
//! cargo run -p photon-soliton --example energy_quadrature
//! ```

use std::f64::consts::PI;

use photon_soliton::constants::PhysicalConstants;
use photon_soliton::normalization::{
    alpha_closed_form, energy_quadrature, energy_quadrature_mc, solve_alpha_from_energy,
    EnergyConvention, NormalizationPair, Region,
};
use photon_soliton::photon::{PhotonSpec, Polarization};

fn main() {
    let k = PhysicalConstants::codata2018();
    let lambda = 650e-9;
    let n = 1;
    let budget = 20_000;
    let spec = PhotonSpec::new(lambda, n, Polarization::spin_plus()).unwrap();

    // Dimensionless constant alpha^2 eps0 lambda^6 / (n h c) for each
    // region and convention. Standard SI gives 60 pi^3 (ellipsoid) and
    // 32 pi^3 (cylinder); the closed-form-calibrated convention scales both by 2 pi
    // to 120 pi^4 and 64 pi^4.
    println!("solved normalization constants (alpha^2 eps0 lambda^6 / n h c):\n");
    println!(
        "{:>14} {:>12} {:>14} {:>14}",
        "convention", "region", "constant", "reference"
    );
    let references = [
        (EnergyConvention::StandardSi, Region::Ellipsoid, 60.0 * PI.powi(3)),
        (EnergyConvention::StandardSi, Region::Cylinder, 32.0 * PI.powi(3)),
        (EnergyConvention::ClosedFormCalibrated, Region::Ellipsoid, 120.0 * PI.powi(4)),
        (EnergyConvention::ClosedFormCalibrated, Region::Cylinder, 64.0 * PI.powi(4)),
    ];
    for (convention, region, reference) in references {
        let (pair, _) = solve_alpha_from_energy(lambda, n, region, convention, budget, &k).unwrap();
        let constant = pair.alpha.powi(2) * k.eps0 * lambda.powi(6) / (f64::from(n) * k.h * k.c);
        println!(
            "{:>14} {:>12} {:>14.6} {:>14.6}",
            format!("{convention:?}"),
            format!("{region:?}"),
            constant,
            reference
        );
    }

    // The region ratio is convention-independent: 120/64 = 15/8.
    let (ell, _) = solve_alpha_from_energy(lambda, n, Region::Ellipsoid, EnergyConvention::StandardSi, budget, &k).unwrap();
    let (cyl, _) = solve_alpha_from_energy(lambda, n, Region::Cylinder, EnergyConvention::StandardSi, budget, &k).unwrap();
    println!(
        "\nalpha^2 ratio ellipsoid/cylinder = {:.9} (15/8 = {:.9})",
        (ell.alpha / cyl.alpha).powi(2),
        15.0 / 8.0
    );

    // The calibrated convention reproduces the closed form on the ellipsoid.
    let (calibrated, _) = solve_alpha_from_energy(lambda, n, Region::Ellipsoid, EnergyConvention::ClosedFormCalibrated, budget, &k).unwrap();
    let closed = alpha_closed_form(lambda, n, &k).unwrap();
    println!(
        "calibrated quadrature alpha / closed-form alpha = {:.12}",
        calibrated.alpha / closed
    );
    println!(
        "standard-SI alpha^2 / closed-form alpha^2          = {:.9} (1/(2 pi) = {:.9})",
        (ell.alpha / closed).powi(2),
        1.0 / (2.0 * PI)
    );

    // Gauss product rule against the seeded Monte-Carlo sampler.
    let norm = NormalizationPair::closed_form(lambda, n, &k).unwrap();
    let product = energy_quadrature(&spec, &norm, Region::Ellipsoid, EnergyConvention::ClosedFormCalibrated, budget, &k).unwrap();
    let mc = energy_quadrature_mc(&spec, &norm, Region::Ellipsoid, EnergyConvention::ClosedFormCalibrated, 200_000, 0, &k).unwrap();
    let target = spec.quantized_energy(&k);
    println!("\nenergy with the closed-form amplitude (closed-form-calibrated, ellipsoid):");
    println!("  product rule : {:.8e} J ({} evaluations)", product.value, product.samples_used);
    println!("  Monte-Carlo  : {:.8e} J +- {:.1e} ({} samples)", mc.value, mc.abs_error_estimate, mc.samples_used);
    println!("  n h c/lambda : {:.8e} J", target);
}
