//! The causality ellipsoid: dimensions across wavelengths, containment
//! tests, interval classification and a Monte-Carlo volume cross-check.
//!
//! ```bash
//! cargo run -p photon-soliton --example soliton_envelope
//! ```

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::PI;

use photon_soliton::constants::PhysicalConstants;
use photon_soliton::field::SpacetimePoint;
use photon_soliton::geometry::{self, EnvelopeGeometry};

fn main() {
    let k = PhysicalConstants::codata2018();

    println!("{:>12} {:>14} {:>14} {:>9}", "lambda (m)", "length (m)", "diameter (m)", "aspect");
    for lambda in [400e-9, 650e-9, 10.5e-6] {
        let env = EnvelopeGeometry::for_wavelength(lambda).unwrap();
        println!(
            "{:>12.3e} {:>14.5e} {:>14.5e} {:>9.6}",
            lambda,
            env.length(),
            env.max_diameter(),
            env.aspect_ratio()
        );
    }

    let lambda = 650e-9;
    let env = EnvelopeGeometry::for_wavelength(lambda).unwrap();
    println!("\ncontainment at lambda = {lambda:.2e} m (center at origin):");
    for (label, r, z) in [
        ("origin", 0.0, 0.0),
        ("matching ring", lambda / (2.0 * PI), 0.0),
        ("half-length tip", 0.0, lambda / 2.0),
        ("beyond the tip", 0.0, 0.6 * lambda),
        ("outside radially", lambda, 0.0),
    ] {
        let p = SpacetimePoint::cylindrical(r, 0.0, z, 0.0).unwrap();
        println!("  {label:<18} r = {r:>10.3e}, z = {z:>10.3e} -> {}", env.contains_at(&p, 0.0));
    }

    // Two same-phase events one period apart along the axis are
    // null-separated; that is what fixes the length at lambda.
    let causal = geometry::causal_length_check(lambda, &k).unwrap();
    println!("\ncausal length check:");
    println!("  s^2 (algebraic, one period)   = {:.3e} m^2", causal.s_squared_period);
    println!("  event-route classification    = {:?}", causal.event_interval.kind);
    println!("  s^2 (half period)             = {:.3e} m^2", causal.s_squared_half_period);

    // Interval classes around the envelope.
    let a = SpacetimePoint::cartesian(0.0, 0.0, 0.0, 0.0);
    for (label, dz, dt) in [
        ("simultaneous, dz = lambda", lambda, 0.0),
        ("one period, dz = lambda", lambda, lambda / k.c),
        ("one period, dz = 0", 0.0, lambda / k.c),
    ] {
        let b = SpacetimePoint::cartesian(0.0, 0.0, dz, dt);
        let class = geometry::interval_classify(&a, &b, geometry::default_null_tolerance(&a, &b, &k), &k);
        println!("  {label:<28} -> {:?} (s^2 = {:+.3e})", class.kind, class.s_squared);
    }

    // Volume lambda^3/(6 pi), cross-checked by containment sampling.
    let exact = lambda_cubed_over_6pi(lambda);
    let mc = monte_carlo_volume(&env, 1_000_000, 42);
    println!("\nvolume: exact lambda^3/(6 pi) = {exact:.6e} m^3");
    println!("        closed form            = {:.6e} m^3", env.volume());
    println!("        Monte-Carlo (1e6)      = {mc:.6e} m^3 ({:+.3}%)", (mc / exact - 1.0) * 100.0);
}

fn lambda_cubed_over_6pi(lambda: f64) -> f64 {
    lambda.powi(3) / (6.0 * PI)
}

fn monte_carlo_volume(env: &EnvelopeGeometry, samples: u64, seed: u64) -> f64 {
    let (a, c) = (env.radial_semi_axis, env.half_length);
    let box_volume = (2.0 * a) * (2.0 * a) * (2.0 * c);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut hits = 0u64;
    for _ in 0..samples {
        let p = SpacetimePoint::cartesian(
            rng.random_range(-a..a),
            rng.random_range(-a..a),
            rng.random_range(-c..c),
            0.0,
        );
        if env.contains_at(&p, 0.0) {
            hits += 1;
        }
    }
    box_volume * hits as f64 / samples as f64
}
