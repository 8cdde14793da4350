//! Operator eigenvalues of the wavefunction: z angular momentum +-1 (in
//! hbar) for the pure spin states, axial momentum h/lambda, energy h nu;
//! and the vanishing field angular momentum of the strictly transverse
//! field.
//!
//! ```bash
//! cargo run -p photon-soliton --example angular_momentum_eigenvalues
//! ```

use photon_soliton::constants::PhysicalConstants;
use photon_soliton::field::SpacetimePoint;
use photon_soliton::normalization::{momentum_angular_quadrature, NormalizationPair};
use photon_soliton::photon::{PhotonSpec, Polarization};
use photon_soliton::verify::{
    eigen_steps, energy_momentum_eigencheck, lz_eigencheck, DEFAULT_EIGEN_PHASE_STEP,
};

fn main() {
    let k = PhysicalConstants::codata2018();
    let lambda = 650e-9;
    let point = SpacetimePoint::cylindrical(5e-8, 0.9, 2e-8, 1e-16).unwrap();

    println!("Lz estimates (units of hbar), phi step {DEFAULT_EIGEN_PHASE_STEP:.0e} rad:");
    for (label, pol) in [
        ("spin +1 (pure A)", Polarization::spin_plus()),
        ("spin -1 (pure B)", Polarization::spin_minus()),
    ] {
        let spec = PhotonSpec::new(lambda, 1, pol).unwrap();
        let report = lz_eigencheck(&spec, &point, DEFAULT_EIGEN_PHASE_STEP, &k).unwrap();
        println!(
            "  {label:<18} estimate = {:+.9} {:+.1e}i, expected {:+}",
            report.estimate.re, report.estimate.im, report.expected
        );
    }
    let mixed = PhotonSpec::new(lambda, 1, Polarization::equal_superposition()).unwrap();
    println!(
        "  superposition      -> {}",
        lz_eigencheck(&mixed, &point, DEFAULT_EIGEN_PHASE_STEP, &k).unwrap_err()
    );

    let spec = PhotonSpec::new(lambda, 1, Polarization::spin_plus()).unwrap();
    let (dz, dt) = eigen_steps(&spec, &k);
    let (momentum, energy) = energy_momentum_eigencheck(&spec, &point, dz, dt, &k).unwrap();
    println!("\naxial momentum: estimate {:.9e} kg m/s", momentum.estimate.re);
    println!("                expected {:.9e} (h / lambda)", momentum.expected);
    println!("energy:         estimate {:.9e} J", energy.estimate.re);
    println!("                expected {:.9e} (h c / lambda)", energy.expected);
    println!(
        "relative errors: momentum {:.1e}, energy {:.1e}",
        momentum.relative_error(),
        energy.relative_error()
    );

    // The field's own axial angular momentum integral vanishes: with
    // E_z = H_z = 0 the Poynting vector is purely axial, so the transverse
    // momentum density is identically zero. The spin claim lives in the Lz
    // operator above, not in this integral.
    let norm = NormalizationPair::closed_form(lambda, 1, &k).unwrap();
    let quad = momentum_angular_quadrature(&spec, &norm, 16_000, &k).unwrap();
    println!(
        "\nfield angular-momentum integral over the envelope: {:.3e} kg m^2/s",
        quad.value
    );
    println!("(identically zero for this strictly transverse field)");
}
