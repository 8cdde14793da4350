//! Numeric integration over cylindrical coordinates.
//!
//! Product rule: Gauss-Legendre in r and z, uniform rectangle rule in phi
//! (spectrally exact for the trigonometric integrands here). A Monte-Carlo
//! integrator over the same regions serves as an independent cross-check.

use rand::Rng;
use std::f64::consts::PI;

/// Gauss-Legendre nodes and weights on [-1, 1], by Newton iteration on the
/// Legendre recurrence. Accurate to ~1e-15 for the small orders used here.
pub fn gauss_legendre(n: usize) -> Vec<(f64, f64)> {
    assert!(n >= 1, "at least one node");
    let mut out = Vec::with_capacity(n);
    let nf = n as f64;
    for i in 0..n {
        // Tricomi initial guess for the i-th root of P_n.
        let mut x = (PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre_with_derivative(n, x);
            dp = d;
            let dx = -p / d;
            x += dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        out.push((x, w));
    }
    out
}

/// P_n(x) and P_n'(x) from the three-term recurrence.
fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

/// Rescales [-1, 1] nodes to [a, b].
pub fn map_interval(nodes: &[(f64, f64)], a: f64, b: f64) -> Vec<(f64, f64)> {
    let half = 0.5 * (b - a);
    let mid = 0.5 * (a + b);
    nodes
        .iter()
        .map(|&(x, w)| (mid + half * x, half * w))
        .collect()
}

/// Integrates f(r, phi, z) r dr dphi dz overphi in [0, 2pi), z in
/// [z_min, z_max], r in [0, r_max(z)].
///
/// Node counts: `n_r` and `n_z` Gauss-Legendre points, `n_phi` uniform
/// angles. Returns the integral and the number of integrand evaluations.
pub fn integrate_cylindrical<F, R>(
    mut f: F,
    r_max_of_z: R,
    z_min: f64,
    z_max: f64,
    n_r: usize,
    n_z: usize,
    n_phi: usize,
) -> (f64, usize)
where
    F: FnMut(f64, f64, f64) -> f64,
    R: Fn(f64) -> f64,
{
    let gl_r = gauss_legendre(n_r);
    let gl_z = map_interval(&gauss_legendre(n_z), z_min, z_max);
    let dphi = 2.0 * PI / n_phi as f64;
    let mut total = 0.0;
    let mut evals = 0;
    for &(z, wz) in &gl_z {
        let r_max = r_max_of_z(z);
        if r_max <= 0.0 {
            continue;
        }
        let nodes_r = map_interval(&gl_r, 0.0, r_max);
        for &(r, wr) in &nodes_r {
            let mut phi_sum = 0.0;
            for j in 0..n_phi {
                let phi = dphi * j as f64;
                phi_sum += f(r, phi, z);
                evals += 1;
            }
            total += wz * wr * r * phi_sum * dphi;
        }
    }
    (total, evals)
}

/// Monte-Carlo integral of f over the region {r <= r_max(z), z in
/// [z_min, z_max]} by uniform sampling of the bounding cylinder.
///
/// Returns (estimate, one-sigma error estimate, samples).
pub fn integrate_cylindrical_mc<F, R, G>(
    mut f: F,
    r_max_of_z: R,
    r_bound: f64,
    z_min: f64,
    z_max: f64,
    samples: usize,
    rng: &mut G,
) -> (f64, f64, usize)
where
    F: FnMut(f64, f64, f64) -> f64,
    R: Fn(f64) -> f64,
    G: Rng,
{
    let volume = PI * r_bound * r_bound * (z_max - z_min);
    let mut sum = 0.0;
    let mut sum_sq = 0.0;
    for _ in 0..samples {
        // Uniform over the cylinder: r = r_bound sqrt(u).
        let r = r_bound * rng.random::<f64>().sqrt();
        let phi = rng.random::<f64>() * 2.0 * PI;
        let z = z_min + rng.random::<f64>() * (z_max - z_min);
        let v = if r <= r_max_of_z(z) { f(r, phi, z) } else { 0.0 };
        sum += v;
        sum_sq += v * v;
    }
    let n = samples as f64;
    let mean = sum / n;
    let variance = (sum_sq / n - mean * mean).max(0.0);
    (volume * mean, volume * (variance / n).sqrt(), samples)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn gauss_legendre_exact_for_polynomials() {
        // n-point rule integrates degree 2n-1 exactly: x^6 over [-1,1] with n=4.
        let nodes = gauss_legendre(4);
        let integral: f64 = nodes.iter().map(|&(x, w)| w * x.powi(6)).sum();
        assert_relative_eq!(integral, 2.0 / 7.0, max_relative = 1e-14);

        let weight_sum: f64 = nodes.iter().map(|&(_, w)| w).sum();
        assert_relative_eq!(weight_sum, 2.0, max_relative = 1e-14);
    }

    #[test]
    fn gauss_legendre_cosine() {
        let nodes = map_interval(&gauss_legendre(12), 0.0, PI / 2.0);
        let integral: f64 = nodes.iter().map(|&(x, w)| w * x.cos()).sum();
        assert_relative_eq!(integral, 1.0, max_relative = 1e-13);
    }

    #[test]
    fn cylinder_volume() {
        let (v, _) = integrate_cylindrical(|_, _, _| 1.0, |_| 1.0, -1.0, 1.0, 8, 8, 8);
        assert_relative_eq!(v, 2.0 * PI, max_relative = 1e-12);
    }

    #[test]
    fn second_moment_over_disk() {
        // integral of r^2 over the unit disk x unit height = pi/2.
        let (v, _) = integrate_cylindrical(|r, _, _| r * r, |_| 1.0, 0.0, 1.0, 8, 4, 8);
        assert_relative_eq!(v, PI / 2.0, max_relative = 1e-12);
    }

    #[test]
    fn ellipsoid_volume_via_variable_radius() {
        // Unit-sphere volume with r_max(z) = sqrt(1 - z^2).
        let (v, _) = integrate_cylindrical(
            |_, _, _| 1.0,
            |z: f64| (1.0 - z * z).max(0.0).sqrt(),
            -1.0,
            1.0,
            16,
            32,
            4,
        );
        assert_relative_eq!(v, 4.0 / 3.0 * PI, max_relative = 1e-6);
    }

    #[test]
    fn phi_rule_integrates_harmonics() {
        // Rectangle rule in phi is exact for cos(2 phi)^2 -> pi average.
        let (v, _) = integrate_cylindrical(
            |_, phi, _| (2.0 * phi).cos().powi(2),
            |_| 1.0,
            0.0,
            1.0,
            4,
            2,
            16,
        );
        // integral = (1/2)(2 pi) * (r dr over [0,1] = 1/2) = pi/2.
        assert_relative_eq!(v, PI / 2.0, max_relative = 1e-12);
    }

    #[test]
    fn monte_carlo_agrees_with_product_rule() {
        let f = |r: f64, _phi: f64, z: f64| r * r * (1.0 + z);
        let r_max = |z: f64| (1.0 - z * z).max(0.0).sqrt();
        let (exact, _) = integrate_cylindrical(f, r_max, -1.0, 1.0, 24, 48, 8);
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let (mc, sigma, _) =
            integrate_cylindrical_mc(f, r_max, 1.0, -1.0, 1.0, 200_000, &mut rng);
        assert!(
            (mc - exact).abs() < 5.0 * sigma.max(1e-12),
            "mc {mc} vs exact {exact} (sigma {sigma})"
        );
    }

    #[test]
    fn monte_carlo_deterministic_for_fixed_seed() {
        let f = |r: f64, _: f64, _: f64| r;
        let run = || {
            let mut rng = ChaCha8Rng::seed_from_u64(5);
            integrate_cylindrical_mc(f, |_| 1.0, 1.0, 0.0, 1.0, 10_000, &mut rng).0
        };
        assert_eq!(run().to_bits(), run().to_bits());
    }
}
