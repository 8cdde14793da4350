//! Causality ellipsoid and special-relativistic interval classification.
//!
//! Same-phase events within a self-propagating wave must be separated by
//! time-like (or, in the limit, null) intervals. For a monochromatic wave of
//! wavelength lambda this confines the field to a circular ellipsoid of
//! length lambda along the propagation axis and maximum diameter lambda/pi:
//!
//! ```text
//! (2 pi r)^2 + (2 (z - z_center))^2 <= lambda^2
//! ```

use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use crate::constants::PhysicalConstants;
use crate::error::{Error, Result};
use crate::field::SpacetimePoint;
use crate::photon::PhotonSpec;

/// Semi-axes of the causality ellipsoid.
///
/// The length-to-diameter aspect ratio is exactly pi for every wavelength.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EnvelopeGeometry {
    /// Transverse semi-axis lambda / 2 pi (m).
    pub radial_semi_axis: f64,
    /// Axial semi-axis lambda / 2 (m).
    pub half_length: f64,
    /// Wavelength (m).
    pub lambda: f64,
}

impl EnvelopeGeometry {
    pub fn for_wavelength(lambda: f64) -> Result<Self> {
        if !(lambda.is_finite() && lambda > 0.0) {
            return Err(Error::InvalidWavelength(lambda));
        }
        Ok(Self {
            radial_semi_axis: lambda / (2.0 * PI),
            half_length: lambda / 2.0,
            lambda,
        })
    }

    /// Full length along the propagation axis (= lambda).
    pub fn length(&self) -> f64 {
        2.0 * self.half_length
    }

    /// Maximum transverse diameter (= lambda / pi).
    pub fn max_diameter(&self) -> f64 {
        2.0 * self.radial_semi_axis
    }

    /// Length over diameter; pi by construction.
    pub fn aspect_ratio(&self) -> f64 {
        self.half_length / self.radial_semi_axis
    }

    /// Enclosed volume (4/3) pi a^2 c = lambda^3 / (6 pi).
    pub fn volume(&self) -> f64 {
        4.0 / 3.0 * PI * self.radial_semi_axis.powi(2) * self.half_length
    }

    /// Containment with the envelope centered at `center_z` on the axis.
    pub fn contains_at(&self, point: &SpacetimePoint, center_z: f64) -> bool {
        let r = point.r();
        let dz = point.z - center_z;
        (2.0 * PI * r).powi(2) + (2.0 * dz).powi(2) <= self.lambda.powi(2)
    }

    /// First-order estimate of the distance from `point` (at envelope center
    /// `center_z`) to the ellipsoid surface; used by stencil guards.
    pub fn surface_distance_estimate(&self, point: &SpacetimePoint, center_z: f64) -> f64 {
        let r = point.r();
        let dz = point.z - center_z;
        let a = self.radial_semi_axis;
        let c = self.half_length;
        let f = (r / a).powi(2) + (dz / c).powi(2) - 1.0;
        let grad = 2.0 * ((r / (a * a)).powi(2) + (dz / (c * c)).powi(2)).sqrt();
        if grad < f64::MIN_POSITIVE {
            // At the exact center the gradient vanishes; the surface is at
            // least the smaller semi-axis away.
            a.min(c)
        } else {
            f.abs() / grad
        }
    }
}

/// Envelope for a photon spec (wavelength already validated).
pub fn envelope(spec: &PhotonSpec) -> EnvelopeGeometry {
    EnvelopeGeometry {
        radial_semi_axis: spec.matching_radius(),
        half_length: spec.lambda / 2.0,
        lambda: spec.lambda,
    }
}

/// True iff (2 pi r)^2 + (2 (z - center_z))^2 <= lambda^2 (closed surface).
pub fn contains(point: &SpacetimePoint, env: &EnvelopeGeometry, center_z: f64) -> bool {
    env.contains_at(point, center_z)
}

/// Surface radius r(z) = (1/2pi) sqrt(lambda^2 - (2z)^2) for |z| <= lambda/2,
/// measured from the envelope center. Monotone decreasing in |z|.
pub fn surface_radius(z: f64, lambda: f64) -> Result<f64> {
    if !(lambda.is_finite() && lambda > 0.0) {
        return Err(Error::InvalidWavelength(lambda));
    }
    if z.abs() > lambda / 2.0 {
        return Err(Error::Domain {
            name: "z",
            value: z,
            constraint: "|z| <= lambda/2",
        });
    }
    Ok((lambda.powi(2) - (2.0 * z).powi(2)).sqrt() / (2.0 * PI))
}

/// Sign classification of the invariant interval s^2 = c^2 dt^2 - |dx|^2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IntervalKind {
    Timelike,
    Null,
    Spacelike,
}

/// Invariant interval between two events with its classification.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IntervalClass {
    /// s^2 = c^2 dt^2 - (dx^2 + dy^2 + dz^2), in m^2.
    pub s_squared: f64,
    #[serde(rename = "class")]
    pub kind: IntervalKind,
}

/// Default tolerance band around s^2 = 0: 1e-9 * (c dt)^2, absorbing
/// floating-point cancellation between the two squared terms.
pub fn default_null_tolerance(a: &SpacetimePoint, b: &SpacetimePoint, k: &PhysicalConstants) -> f64 {
    let ct = k.c * (b.t - a.t);
    1e-9 * ct * ct
}

/// Classifies the interval between two events; |s^2| <= tol counts as null.
pub fn interval_classify(
    a: &SpacetimePoint,
    b: &SpacetimePoint,
    tol: f64,
    k: &PhysicalConstants,
) -> IntervalClass {
    let ct = k.c * (b.t - a.t);
    let dx = b.x - a.x;
    let dy = b.y - a.y;
    let dz = b.z - a.z;
    let s_squared = ct * ct - (dx * dx + dy * dy + dz * dz);
    let kind = if s_squared.abs() <= tol {
        IntervalKind::Null
    } else if s_squared > 0.0 {
        IntervalKind::Timelike
    } else {
        IntervalKind::Spacelike
    };
    IntervalClass { s_squared, kind }
}

/// Null-interval consistency of the wave's claimed length.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CausalLengthReport {
    pub lambda: f64,
    /// s^2 for two same-phase events one period apart along the axis, with
    /// c*dt substituted algebraically (c * lambda/c = lambda); identically 0.
    pub s_squared_period: f64,
    /// The same interval evaluated through explicit event coordinates
    /// (dt = lambda/c rounds, so this is zero only to rounding).
    pub event_interval: IntervalClass,
    /// Sub-period self-consistency: dz = lambda/2, dt = lambda/(2c).
    pub s_squared_half_period: f64,
    pub half_period_interval: IntervalClass,
}

/// Checks that two same-phase events one period apart along the propagation
/// axis are null-separated: c^2 (lambda/c)^2 - lambda^2 = 0.
pub fn causal_length_check(lambda: f64, k: &PhysicalConstants) -> Result<CausalLengthReport> {
    if !(lambda.is_finite() && lambda > 0.0) {
        return Err(Error::InvalidWavelength(lambda));
    }
    // Algebraic route: dt = lambda/c means c*dt is exactly lambda, without
    // round-tripping through the quotient.
    let light_distance = lambda;
    let dz = lambda;
    let s_squared_period = light_distance * light_distance - dz * dz;
    let half_light_distance = lambda / 2.0;
    let half_dz = lambda / 2.0;
    let s_squared_half_period = half_light_distance * half_light_distance - half_dz * half_dz;
    let half = lambda / 2.0;

    // Event route, with the rounding of lambda/c left in.
    let a = SpacetimePoint::cartesian(0.0, 0.0, 0.0, 0.0);
    let b = SpacetimePoint::cartesian(0.0, 0.0, lambda, lambda / k.c);
    let event_interval = interval_classify(&a, &b, default_null_tolerance(&a, &b, k), k);
    let bh = SpacetimePoint::cartesian(0.0, 0.0, half, half / k.c);
    let half_period_interval = interval_classify(&a, &bh, default_null_tolerance(&a, &bh, k), k);

    Ok(CausalLengthReport {
        lambda,
        s_squared_period,
        event_interval,
        s_squared_half_period,
        half_period_interval,
    })
}
