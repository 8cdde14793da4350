//! Finite-difference verification that both field branches solve the vacuum
//! Maxwell equations, with a step-halving convergence table.
//!
//! ```bash
//! cargo run -p photon-soliton --example maxwell_residuals
//! ```

use std::f64::consts::PI;

use photon_soliton::constants::PhysicalConstants;
use photon_soliton::field::{self, SpacetimePoint};
use photon_soliton::normalization::NormalizationPair;
use photon_soliton::photon::{PhotonSpec, Polarization};
use photon_soliton::suite::{evanescent_grid, interior_grid, SuiteConfig};
use photon_soliton::verify::{FdSteps, ResidualChecker, StencilGuard};

fn main() {
    let k = PhysicalConstants::codata2018();
    let lambda = 650e-9;
    let spec = PhotonSpec::new(lambda, 1, Polarization::spin_plus()).unwrap();
    let norm = NormalizationPair::closed_form(lambda, 1, &k).unwrap();
    let cfg = SuiteConfig::new(lambda, 0);

    let steps = FdSteps::default_for(lambda, k.c);
    println!(
        "steps: spatial {:.2e} m (lambda/1e4), temporal {:.2e} s\n",
        steps.spatial, steps.temporal
    );

    // Worst normalized residuals over seeded grids, by branch.
    let interior_checker = ResidualChecker::new(steps, lambda, StencilGuard::open(), &k);
    let mut worst = 0.0_f64;
    for p in interior_grid(&spec, 100, cfg.seed, &k) {
        let rep = interior_checker
            .maxwell(|q| Ok(field::field_interior(q, norm.alpha, &spec, &k)), &p)
            .unwrap();
        worst = worst.max(rep.max_residual());
    }
    println!("interior branch,   100 seeded points: max residual = {worst:.3e}");

    let evanescent_checker = ResidualChecker::new(steps, lambda, StencilGuard::axis(), &k);
    let mut worst = 0.0_f64;
    for p in evanescent_grid(&spec, 100, cfg.seed, &k) {
        let rep = evanescent_checker
            .maxwell(|q| field::field_evanescent(q, norm.beta, &spec, &k), &p)
            .unwrap();
        worst = worst.max(rep.max_residual());
    }
    println!("evanescent branch, 100 seeded points: max residual = {worst:.3e}");
    println!("(residuals are normalized by local field scale times 2 pi / lambda)\n");

    // Second-order convergence: each halving of the step divides the
    // truncation error by ~4, down to the rounding floor.
    let p = SpacetimePoint::cylindrical(2.0 * lambda / (2.0 * PI), 0.7, 3e-8, 0.0).unwrap();
    println!("{:>12} {:>14} {:>8}", "step/lambda", "max residual", "ratio");
    let mut previous: Option<f64> = None;
    for exponent in 0..7 {
        let fraction = 1e-2 / 2f64.powi(exponent);
        let checker = ResidualChecker::new(
            FdSteps::for_wavelength(lambda, k.c, fraction),
            lambda,
            StencilGuard::axis(),
            &k,
        );
        let res = checker
            .maxwell(|q| field::field_evanescent(q, norm.beta, &spec, &k), &p)
            .unwrap()
            .max_residual();
        match previous {
            Some(prev) => println!("{fraction:>12.2e} {res:>14.4e} {:>8.2}", prev / res),
            None => println!("{fraction:>12.2e} {res:>14.4e} {:>8}", "-"),
        }
        previous = Some(res);
    }

    // A d'Alembert check on a single component, and on a deliberately
    // corrupted radial form (r^2), which is not a solution.
    let checker = ResidualChecker::new(steps, lambda, StencilGuard::axis(), &k);
    let good = checker
        .dalembert(|q| Ok(field::field_interior(q, norm.alpha, &spec, &k).e.x), &p)
        .unwrap();
    let corrupted = checker
        .dalembert(
            |q| Ok(field::field_interior(q, norm.alpha, &spec, &k).e.x * q.r()),
            &p,
        )
        .unwrap();
    println!("\nd'Alembert residual of E_x:        {good:.3e}");
    println!("d'Alembert residual of r^2 form:   {corrupted:.3e} (not a solution)");
}
