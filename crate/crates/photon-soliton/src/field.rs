//! Electromagnetic field of the photon soliton.
//!
//! Fields are complex analytic signals; the physical field is the real part.
//! The wavefunction is
//!
//! ```text
//! psi(r, phi, z - c t) = (alpha r + beta / r) (A e^{i phi} + B e^{-i phi}) S(z - c t)
//! S(z - c t) = exp{ 2 pi i (z - c t) / lambda }
//! ```
//!
//! and the six Cartesian field components follow the same separated form:
//!
//! ```text
//! E_z = H_z = 0                      (transverse wave)
//! E_x = (alpha r + beta/r) (A e^{i phi} + B e^{-i phi}) S =  mu0 c H_y
//! E_y = i (alpha r - beta/r) (A e^{i phi} - B e^{-i phi}) S = -mu0 c H_x
//! ```
//!
//! The interior branch keeps the `alpha r` term (regular on the axis, zero at
//! r = 0); the evanescent branch keeps the `beta / r` term (singular on the
//! axis, intensity falling as 1/r^2). Both branches solve the vacuum Maxwell
//! equations exactly away from the axis; [`field_total`] switches between
//! them on the causality-ellipsoid surface.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use crate::constants::PhysicalConstants;
use crate::error::{Error, Result};
use crate::geometry;
use crate::normalization::NormalizationPair;
use crate::photon::PhotonSpec;

/// Relative tolerance used by [`field_total`] to check that (alpha, beta)
/// satisfy the amplitude-matching condition beta = alpha (lambda/2pi)^2.
pub const MATCHING_CHECK_TOL: f64 = 1e-9;

/// Event in the lab frame: position (m) and time (s).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpacetimePoint {
    pub x: f64,
    pub y: f64,
    pub z: f64,
    pub t: f64,
}

impl SpacetimePoint {
    pub fn cartesian(x: f64, y: f64, z: f64, t: f64) -> Self {
        Self { x, y, z, t }
    }

    /// Builds a point from cylindrical coordinates (r >= 0, phi in radians).
    pub fn cylindrical(r: f64, phi: f64, z: f64, t: f64) -> Result<Self> {
        if !(r.is_finite() && r >= 0.0) {
            return Err(Error::NegativeRadius(r));
        }
        Ok(Self {
            x: r * phi.cos(),
            y: r * phi.sin(),
            z,
            t,
        })
    }

    /// Distance from the propagation axis, r = sqrt(x^2 + y^2) >= 0.
    pub fn r(&self) -> f64 {
        self.x.hypot(self.y)
    }

    /// Polar angle in (-pi, pi].
    pub fn phi(&self) -> f64 {
        let p = self.y.atan2(self.x);
        if p <= -PI {
            p + 2.0 * PI
        } else {
            p
        }
    }

    /// Copy shifted by the given offsets; used by finite-difference stencils.
    pub fn offset(&self, dx: f64, dy: f64, dz: f64, dt: f64) -> Self {
        Self {
            x: self.x + dx,
            y: self.y + dy,
            z: self.z + dz,
            t: self.t + dt,
        }
    }
}

/// Which radial branch produced a sample.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    Interior,
    Evanescent,
}

/// Complex 3-vector (analytic signal components).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ComplexVec3 {
    pub x: Complex64,
    pub y: Complex64,
    pub z: Complex64,
}

impl ComplexVec3 {
    pub fn zero() -> Self {
        let z = Complex64::new(0.0, 0.0);
        Self { x: z, y: z, z }
    }

    /// Euclidean magnitude sqrt(|x|^2 + |y|^2 + |z|^2).
    pub fn magnitude(&self) -> f64 {
        (self.x.norm_sqr() + self.y.norm_sqr() + self.z.norm_sqr()).sqrt()
    }

    /// Largest component modulus.
    pub fn max_component(&self) -> f64 {
        self.x.norm().max(self.y.norm()).max(self.z.norm())
    }

    /// Component-wise real part.
    pub fn real(&self) -> [f64; 3] {
        [self.x.re, self.y.re, self.z.re]
    }
}

/// Complex E (V/m) and H (A/m) at one spacetime point.
///
/// E.z and H.z are exactly zero: the wave is transverse.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FieldSample {
    pub e: ComplexVec3,
    pub h: ComplexVec3,
    pub branch: Branch,
}

impl FieldSample {
    pub fn e_magnitude(&self) -> f64 {
        self.e.magnitude()
    }

    pub fn h_magnitude(&self) -> f64 {
        self.h.magnitude()
    }
}

/// Polar field components (E_r, E_phi, H_r, H_phi) at a point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PolarComponents {
    pub e_r: Complex64,
    pub e_phi: Complex64,
    pub h_r: Complex64,
    pub h_phi: Complex64,
}

/// Traveling monochromatic phase S(z - c t) = exp{2 pi i (z - c t)/lambda}.
///
/// Unit modulus for every argument; errors on a non-positive wavelength.
pub fn travel_phase(z: f64, t: f64, lambda: f64, c: f64) -> Result<Complex64> {
    if !(lambda.is_finite() && lambda > 0.0) {
        return Err(Error::InvalidWavelength(lambda));
    }
    Ok(phase_factor(z, t, lambda, c))
}

fn phase_factor(z: f64, t: f64, lambda: f64, c: f64) -> Complex64 {
    Complex64::cis(2.0 * PI * (z - c * t) / lambda)
}

fn angular_factors(spec: &PhotonSpec, phi: f64) -> (Complex64, Complex64) {
    let a = spec.polarization.a();
    let b = spec.polarization.b();
    let e_plus = Complex64::cis(phi);
    let e_minus = Complex64::cis(-phi);
    // (A e^{i phi} + B e^{-i phi},  A e^{i phi} - B e^{-i phi})
    (a * e_plus + b * e_minus, a * e_plus - b * e_minus)
}

/// Scalar wavefunction (alpha r + beta/r)(A e^{i phi} + B e^{-i phi}) S(z-ct).
///
/// `alpha` carries V/m^2 and `beta` carries V, so both radial terms are V/m.
/// Errors with [`Error::AxisSingularity`] when beta != 0 and r = 0.
pub fn psi(
    point: &SpacetimePoint,
    alpha: f64,
    beta: f64,
    spec: &PhotonSpec,
    k: &PhysicalConstants,
) -> Result<Complex64> {
    let r = point.r();
    if beta != 0.0 && r == 0.0 {
        return Err(Error::AxisSingularity);
    }
    let radial = alpha * r + if beta != 0.0 { beta / r } else { 0.0 };
    let (sum, _) = angular_factors(spec, point.phi());
    Ok(radial * sum * phase_factor(point.z, point.t, spec.lambda, k.c))
}

fn assemble(radial_sum: f64, radial_diff: f64, point: &SpacetimePoint, spec: &PhotonSpec, k: &PhysicalConstants, branch: Branch) -> FieldSample {
    let (sum, diff) = angular_factors(spec, point.phi());
    let s = phase_factor(point.z, point.t, spec.lambda, k.c);
    let i = Complex64::new(0.0, 1.0);
    let e_x = radial_sum * sum * s;
    let e_y = i * radial_diff * diff * s;
    let imp = k.impedance(); // mu0 c
    FieldSample {
        e: ComplexVec3 {
            x: e_x,
            y: e_y,
            z: Complex64::new(0.0, 0.0),
        },
        h: ComplexVec3 {
            x: -e_y / imp,
            y: e_x / imp,
            z: Complex64::new(0.0, 0.0),
        },
        branch,
    }
}

/// Interior branch (beta = 0): amplitude grows linearly with r, zero on the
/// axis. Valid everywhere; callers restrict it to the envelope.
pub fn field_interior(
    point: &SpacetimePoint,
    alpha: f64,
    spec: &PhotonSpec,
    k: &PhysicalConstants,
) -> FieldSample {
    let ar = alpha * point.r();
    assemble(ar, ar, point, spec, k, Branch::Interior)
}

/// Evanescent branch (alpha = 0): amplitude falls as 1/r, intensity as 1/r^2.
/// Errors with [`Error::AxisSingularity`] at r = 0.
pub fn field_evanescent(
    point: &SpacetimePoint,
    beta: f64,
    spec: &PhotonSpec,
    k: &PhysicalConstants,
) -> Result<FieldSample> {
    let r = point.r();
    if r == 0.0 {
        return Err(Error::AxisSingularity);
    }
    let br = beta / r;
    Ok(assemble(br, -br, point, spec, k, Branch::Evanescent))
}

/// Piecewise field: interior inside the causality ellipsoid (boundary
/// included), evanescent outside.
///
/// The envelope co-moves with the wave: its center sits at z = c t. The
/// amplitudes must satisfy the matching condition beta = alpha (lambda/2pi)^2
/// so the two branches agree on the z = c t ring of the surface; elsewhere on
/// the surface the amplitudes differ (the model's unresolved discontinuity)
/// and the interior value is used on the boundary itself.
pub fn field_total(
    point: &SpacetimePoint,
    spec: &PhotonSpec,
    norm: &NormalizationPair,
    k: &PhysicalConstants,
) -> Result<FieldSample> {
    let expected_beta = norm.alpha * spec.matching_radius().powi(2);
    let scale = norm.beta.abs().max(expected_beta.abs());
    if (norm.beta - expected_beta).abs() > MATCHING_CHECK_TOL * scale {
        return Err(Error::UnmatchedAmplitudes {
            beta: norm.beta,
            expected_beta,
        });
    }
    let env = geometry::envelope(spec);
    let center_z = k.c * point.t;
    if geometry::contains(point, &env, center_z) {
        Ok(field_interior(point, norm.alpha, spec, k))
    } else {
        field_evanescent(point, norm.beta, spec, k)
    }
}

/// Projects a Cartesian sample onto the local polar basis at `point`.
///
/// For either branch the impedance relations carry over: E_r = mu0 c H_phi
/// and E_phi = -mu0 c H_r. For the evanescent branch the results reduce to
/// E_r = (beta/r)(A+B) S and E_phi = -i (beta/r)(A-B) S, independent of phi.
pub fn polar_components(sample: &FieldSample, point: &SpacetimePoint) -> Result<PolarComponents> {
    if point.r() == 0.0 {
        return Err(Error::PolarBasisUndefined);
    }
    let phi = point.phi();
    let (cos_p, sin_p) = (phi.cos(), phi.sin());
    Ok(PolarComponents {
        e_r: sample.e.x * cos_p + sample.e.y * sin_p,
        e_phi: -sample.e.x * sin_p + sample.e.y * cos_p,
        h_r: sample.h.x * cos_p + sample.h.y * sin_p,
        h_phi: -sample.h.x * sin_p + sample.h.y * cos_p,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::normalization;
    use crate::photon::Polarization;
    use approx::assert_relative_eq;

    fn consts() -> PhysicalConstants {
        PhysicalConstants::codata2018()
    }

    fn spec_plus(lambda: f64) -> PhotonSpec {
        PhotonSpec::new(lambda, 1, Polarization::spin_plus()).unwrap()
    }

    fn rel_diff(a: Complex64, b: Complex64) -> f64 {
        (a - b).norm() / a.norm().max(b.norm()).max(f64::MIN_POSITIVE)
    }

    #[test]
    fn travel_phase_trivial_points() {
        let k = consts();
        let one = travel_phase(0.0, 0.0, 1.0, k.c).unwrap();
        assert_relative_eq!(one.re, 1.0, epsilon = 1e-15);
        assert_relative_eq!(one.im, 0.0, epsilon = 1e-15);

        // One full wavelength is one full turn.
        let periodic = travel_phase(1.0, 0.0, 1.0, k.c).unwrap();
        assert_relative_eq!(periodic.re, 1.0, epsilon = 1e-12);
        assert!(periodic.im.abs() < 1e-12);

        // Half a wavelength is a phase of pi.
        let half = travel_phase(0.5, 0.0, 1.0, k.c).unwrap();
        assert_relative_eq!(half.re, -1.0, epsilon = 1e-12);
        assert!(half.im.abs() < 1e-12);
    }

    #[test]
    fn travel_phase_unit_modulus_and_domain() {
        let k = consts();
        let s = travel_phase(0.3, 1.7e-9, 650e-9, k.c).unwrap();
        assert_relative_eq!(s.norm(), 1.0, epsilon = 1e-12);
        assert!(matches!(
            travel_phase(0.0, 0.0, 0.0, k.c),
            Err(Error::InvalidWavelength(_))
        ));
        assert!(matches!(
            travel_phase(0.0, 0.0, -1.0, k.c),
            Err(Error::InvalidWavelength(_))
        ));
    }

    #[test]
    fn psi_unit_case() {
        // r=1, phi=0, z=t=0, alpha=1, beta=0, A=1: every factor is one.
        let k = consts();
        let spec = spec_plus(1.0);
        let p = SpacetimePoint::cylindrical(1.0, 0.0, 0.0, 0.0).unwrap();
        let v = psi(&p, 1.0, 0.0, &spec, &k).unwrap();
        assert_relative_eq!(v.re, 1.0, epsilon = 1e-15);
        assert_relative_eq!(v.im, 0.0, epsilon = 1e-15);
    }

    #[test]
    fn psi_quarter_turn() {
        // r=2 and phi=pi/2 give 2 e^{i pi/2} = 2i.
        let k = consts();
        let spec = spec_plus(1.0);
        let p = SpacetimePoint::cylindrical(2.0, PI / 2.0, 0.0, 0.0).unwrap();
        let v = psi(&p, 1.0, 0.0, &spec, &k).unwrap();
        assert!(v.re.abs() < 1e-14);
        assert_relative_eq!(v.im, 2.0, epsilon = 1e-14);
    }

    #[test]
    fn psi_radial_terms_meet_at_matching_radius() {
        // With beta = alpha (lambda/2pi)^2 both radial terms equal alpha*r
        // at r = lambda/2pi, so psi = 2 alpha (lambda/2pi).
        let k = consts();
        let lambda = 650e-9;
        let spec = spec_plus(lambda);
        let alpha = 3.0;
        let a = spec.matching_radius();
        let beta = alpha * a * a;
        let p = SpacetimePoint::cylindrical(a, 0.0, 0.0, 0.0).unwrap();
        let v = psi(&p, alpha, beta, &spec, &k).unwrap();
        assert_relative_eq!(v.re, 2.0 * alpha * a, max_relative = 1e-12);
    }

    #[test]
    fn psi_axis_singularity() {
        let k = consts();
        let spec = spec_plus(1.0);
        let p = SpacetimePoint::cartesian(0.0, 0.0, 0.1, 0.0);
        assert_eq!(psi(&p, 1.0, 1.0, &spec, &k), Err(Error::AxisSingularity));
        // beta = 0 on the axis is regular (and zero).
        assert_eq!(
            psi(&p, 1.0, 0.0, &spec, &k).unwrap().norm(),
            0.0
        );
    }

    #[test]
    fn interior_zero_on_axis() {
        let k = consts();
        let spec = spec_plus(650e-9);
        let s = field_interior(&SpacetimePoint::cartesian(0.0, 0.0, 0.0, 0.0), 1.0, &spec, &k);
        assert_eq!(s.e_magnitude(), 0.0);
        assert_eq!(s.h_magnitude(), 0.0);
        assert_eq!(s.branch, Branch::Interior);
    }

    #[test]
    fn interior_spin_plus_relation() {
        // Pure A: E_y = i E_x.
        let k = consts();
        let spec = spec_plus(650e-9);
        let p = SpacetimePoint::cylindrical(1e-7, 0.81, 3e-8, 1e-16).unwrap();
        let s = field_interior(&p, 2.5, &spec, &k);
        let i = Complex64::new(0.0, 1.0);
        assert!(rel_diff(s.e.y, i * s.e.x) < 1e-14);
    }

    #[test]
    fn impedance_relations_both_branches() {
        let k = consts();
        let spec = PhotonSpec::new(650e-9, 1, Polarization::equal_superposition()).unwrap();
        let p = SpacetimePoint::cylindrical(2.1e-7, -1.2, 5e-8, 2e-16).unwrap();
        let imp = k.impedance();
        for s in [
            field_interior(&p, 2.5, &spec, &k),
            field_evanescent(&p, 1e-14, &spec, &k).unwrap(),
        ] {
            assert!(rel_diff(s.e.x, s.h.y * imp) < 1e-12);
            assert!(rel_diff(s.e.y, -s.h.x * imp) < 1e-12);
            assert_eq!(s.e.z.norm(), 0.0);
            assert_eq!(s.h.z.norm(), 0.0);
        }
    }

    #[test]
    fn evanescent_amplitude_halves_when_r_doubles() {
        let k = consts();
        let spec = spec_plus(650e-9);
        let p1 = SpacetimePoint::cylindrical(2e-7, 0.3, 1e-8, 0.0).unwrap();
        let p2 = SpacetimePoint::cylindrical(4e-7, 0.3, 1e-8, 0.0).unwrap();
        let s1 = field_evanescent(&p1, 1e-14, &spec, &k).unwrap();
        let s2 = field_evanescent(&p2, 1e-14, &spec, &k).unwrap();
        assert_relative_eq!(s2.e.x.norm(), s1.e.x.norm() / 2.0, max_relative = 1e-12);
    }

    #[test]
    fn evanescent_spin_plus_relation_and_zero_beta() {
        let k = consts();
        let spec = spec_plus(650e-9);
        let p = SpacetimePoint::cylindrical(3e-7, 1.0, 0.0, 0.0).unwrap();
        let s = field_evanescent(&p, 1e-14, &spec, &k).unwrap();
        let i = Complex64::new(0.0, 1.0);
        assert!(rel_diff(s.e.y, -i * s.e.x) < 1e-14);

        let z = field_evanescent(&p, 0.0, &spec, &k).unwrap();
        assert_eq!(z.e_magnitude(), 0.0);

        let axis = SpacetimePoint::cartesian(0.0, 0.0, 0.0, 0.0);
        assert_eq!(
            field_evanescent(&axis, 1e-14, &spec, &k),
            Err(Error::AxisSingularity)
        );
    }

    #[test]
    fn total_field_branch_selection() {
        let k = consts();
        let lambda = 650e-9;
        let spec = spec_plus(lambda);
        let norm = normalization::NormalizationPair::closed_form(lambda, 1, &k).unwrap();

        let origin = SpacetimePoint::cartesian(0.0, 0.0, 0.0, 0.0);
        let s0 = field_total(&origin, &spec, &norm, &k).unwrap();
        assert_eq!(s0.branch, Branch::Interior);
        assert_eq!(s0.e_magnitude(), 0.0);

        let outside = SpacetimePoint::cylindrical(lambda, 0.0, 0.0, 0.0).unwrap();
        assert_eq!(
            field_total(&outside, &spec, &norm, &k).unwrap().branch,
            Branch::Evanescent
        );

        // On-axis exterior point: the 1/r branch has no finite value.
        let on_axis = SpacetimePoint::cartesian(0.0, 0.0, 0.6 * lambda, 0.0);
        assert_eq!(
            field_total(&on_axis, &spec, &norm, &k),
            Err(Error::AxisSingularity)
        );
    }

    #[test]
    fn total_field_continuous_at_matching_ring() {
        let k = consts();
        let lambda = 650e-9;
        let spec = spec_plus(lambda);
        let norm = normalization::NormalizationPair::closed_form(lambda, 1, &k).unwrap();
        let a = spec.matching_radius();
        let p = SpacetimePoint::cylindrical(a, 0.4, 0.0, 0.0).unwrap();
        let inner = field_interior(&p, norm.alpha, &spec, &k);
        let outer = field_evanescent(&p, norm.beta, &spec, &k).unwrap();
        assert_relative_eq!(
            inner.e_magnitude(),
            outer.e_magnitude(),
            max_relative = 1e-12
        );
    }

    #[test]
    fn total_field_rejects_unmatched_amplitudes() {
        let k = consts();
        let lambda = 650e-9;
        let spec = spec_plus(lambda);
        let norm = NormalizationPair {
            alpha: 1.0,
            beta: 1.0,
            source: normalization::NormalizationSource::ClosedForm,
        };
        assert!(matches!(
            field_total(&SpacetimePoint::cartesian(0.0, 0.0, 0.0, 0.0), &spec, &norm, &k),
            Err(Error::UnmatchedAmplitudes { .. })
        ));
    }

    #[test]
    fn polar_ratio_pure_and_balanced() {
        let k = consts();
        let lambda = 650e-9;
        let p = SpacetimePoint::cylindrical(3e-7, 0.7, 2e-8, 0.0).unwrap();

        // A = 1, B = 0: E_phi / E_r = -i.
        let plus = spec_plus(lambda);
        let s = field_evanescent(&p, 1e-14, &plus, &k).unwrap();
        let pc = polar_components(&s, &p).unwrap();
        let ratio = pc.e_phi / pc.e_r;
        assert!(ratio.re.abs() < 1e-14);
        assert_relative_eq!(ratio.im, -1.0, epsilon = 1e-13);

        // A = B: the (A - B) factor kills E_phi.
        let mixed = PhotonSpec::new(lambda, 1, Polarization::equal_superposition()).unwrap();
        let s = field_evanescent(&p, 1e-14, &mixed, &k).unwrap();
        let pc = polar_components(&s, &p).unwrap();
        assert!(pc.e_phi.norm() < 1e-14 * pc.e_r.norm());
    }

    #[test]
    fn polar_impedance_relations() {
        let k = consts();
        let spec = PhotonSpec::new(650e-9, 1, Polarization::equal_superposition()).unwrap();
        let p = SpacetimePoint::cylindrical(4e-7, -2.0, 1e-8, 1e-16).unwrap();
        let s = field_evanescent(&p, 1e-14, &spec, &k).unwrap();
        let pc = polar_components(&s, &p).unwrap();
        let imp = k.impedance();
        // Compare against the overall polar magnitude: single components can
        // sit at angular nodes where a relative check is meaningless.
        let scale = pc
            .e_r
            .norm()
            .max(pc.e_phi.norm())
            .max(pc.h_r.norm() * imp)
            .max(pc.h_phi.norm() * imp);
        assert!((pc.e_r - pc.h_phi * imp).norm() < 1e-12 * scale);
        assert!((pc.e_phi + pc.h_r * imp).norm() < 1e-12 * scale);
    }

    #[test]
    fn polar_components_phi_independent_for_evanescent() {
        let k = consts();
        let spec = spec_plus(650e-9);
        let r = 5e-7;
        let mut reference: Option<PolarComponents> = None;
        for phi in [-2.5, -0.4, 0.0, 1.1, 3.0] {
            let p = SpacetimePoint::cylindrical(r, phi, 1e-8, 2e-16).unwrap();
            let s = field_evanescent(&p, 1e-14, &spec, &k).unwrap();
            let pc = polar_components(&s, &p).unwrap();
            if let Some(r0) = reference {
                assert!(rel_diff(pc.e_r, r0.e_r) < 1e-12);
                assert!(rel_diff(pc.e_phi, r0.e_phi) < 1e-12);
                assert!(rel_diff(pc.h_r, r0.h_r) < 1e-12);
                assert!(rel_diff(pc.h_phi, r0.h_phi) < 1e-12);
            } else {
                reference = Some(pc);
            }
        }
    }

    #[test]
    fn polar_basis_undefined_on_axis() {
        let k = consts();
        let spec = spec_plus(650e-9);
        let p = SpacetimePoint::cartesian(0.0, 0.0, 0.0, 0.0);
        let s = field_interior(&p, 1.0, &spec, &k);
        assert_eq!(polar_components(&s, &p), Err(Error::PolarBasisUndefined));
    }

    #[test]
    fn interior_amplitude_linear_in_r() {
        let k = consts();
        let spec = spec_plus(650e-9);
        let mut first: Option<f64> = None;
        for r in [1e-8, 5e-8, 9e-8] {
            let p = SpacetimePoint::cylindrical(r, 0.9, 1e-8, 0.0).unwrap();
            let s = field_interior(&p, 2.0, &spec, &k);
            let ratio = s.e_magnitude() / r;
            match first {
                Some(f) => assert_relative_eq!(ratio, f, max_relative = 1e-12),
                None => first = Some(ratio),
            }
        }
    }

    #[test]
    fn phase_periodicity_in_z_and_t() {
        let k = consts();
        let lambda = 650e-9;
        let spec = spec_plus(lambda);
        let p = SpacetimePoint::cylindrical(7e-8, 0.33, 1e-8, 0.0).unwrap();
        let base = field_interior(&p, 1.0, &spec, &k);
        let shifted_z = field_interior(&p.offset(0.0, 0.0, lambda, 0.0), 1.0, &spec, &k);
        let shifted_t = field_interior(&p.offset(0.0, 0.0, 0.0, lambda / k.c), 1.0, &spec, &k);
        assert!(rel_diff(base.e.x, shifted_z.e.x) < 1e-12);
        assert!(rel_diff(base.e.y, shifted_z.e.y) < 1e-12);
        assert!(rel_diff(base.e.x, shifted_t.e.x) < 1e-12);
        assert!(rel_diff(base.e.y, shifted_t.e.y) < 1e-12);
    }
}
