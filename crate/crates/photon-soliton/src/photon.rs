//! Photon description: polarization state and wave parameters.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::{PI, SQRT_2};

use crate::constants::PhysicalConstants;
use crate::error::{Error, Result};

/// Tolerance on the |A|^2 + |B|^2 = 1 constraint for strict construction.
pub const POLARIZATION_NORM_TOL: f64 = 1e-12;

/// Complex coefficient pair (A, B) multiplying the e^{+i phi} and e^{-i phi}
/// angular factors. Normalized so |A|^2 + |B|^2 = 1.
///
/// Pure A is the spin +1 state, pure B the spin -1 state; anything else is a
/// superposition.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Polarization {
    a: Complex64,
    b: Complex64,
}

impl Polarization {
    /// Builds a polarization from arbitrary coefficients, rescaling so that
    /// |A|^2 + |B|^2 = 1. Rejects the zero pair.
    pub fn normalized(a: Complex64, b: Complex64) -> Result<Self> {
        let norm_sq = a.norm_sqr() + b.norm_sqr();
        if !norm_sq.is_finite() || norm_sq == 0.0 {
            return Err(Error::ZeroPolarization);
        }
        let scale = norm_sq.sqrt().recip();
        Ok(Self {
            a: a * scale,
            b: b * scale,
        })
    }

    /// Builds a polarization that must already satisfy |A|^2 + |B|^2 = 1
    /// within [`POLARIZATION_NORM_TOL`]; rejects unnormalized input.
    pub fn strict(a: Complex64, b: Complex64) -> Result<Self> {
        let norm_sq = a.norm_sqr() + b.norm_sqr();
        if !norm_sq.is_finite() || (norm_sq - 1.0).abs() > POLARIZATION_NORM_TOL {
            return Err(Error::UnnormalizedPolarization {
                norm_sq,
                tolerance: POLARIZATION_NORM_TOL,
            });
        }
        Ok(Self { a, b })
    }

    /// Spin +1 state: A = 1, B = 0.
    pub fn spin_plus() -> Self {
        Self {
            a: Complex64::new(1.0, 0.0),
            b: Complex64::new(0.0, 0.0),
        }
    }

    /// Spin -1 state: A = 0, B = 1.
    pub fn spin_minus() -> Self {
        Self {
            a: Complex64::new(0.0, 0.0),
            b: Complex64::new(1.0, 0.0),
        }
    }

    /// Equal-weight superposition A = B = 1/sqrt(2).
    pub fn equal_superposition() -> Self {
        let w = Complex64::new(1.0 / SQRT_2, 0.0);
        Self { a: w, b: w }
    }

    pub fn a(&self) -> Complex64 {
        self.a
    }

    pub fn b(&self) -> Complex64 {
        self.b
    }

    /// Mirror state with A and B exchanged (phi -> -phi symmetry).
    pub fn swapped(&self) -> Self {
        Self {
            a: self.b,
            b: self.a,
        }
    }

    /// +1 for pure A, -1 for pure B, None for superpositions.
    pub fn spin(&self) -> Option<i8> {
        let a_zero = self.a.norm_sqr() == 0.0;
        let b_zero = self.b.norm_sqr() == 0.0;
        match (a_zero, b_zero) {
            (false, true) => Some(1),
            (true, false) => Some(-1),
            _ => None,
        }
    }

    /// True when exactly one of A, B is nonzero.
    pub fn is_pure(&self) -> bool {
        self.spin().is_some()
    }
}

/// Wave parameters of one photon: wavelength, energy quantum number n
/// (energy n*h*nu; n > 1 is a multiphoton) and the polarization pair.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhotonSpec {
    /// Wavelength (m), > 0.
    pub lambda: f64,
    /// Energy quantum number, >= 1.
    pub n: u32,
    pub polarization: Polarization,
}

impl PhotonSpec {
    pub fn new(lambda: f64, n: u32, polarization: Polarization) -> Result<Self> {
        if !(lambda.is_finite() && lambda > 0.0) {
            return Err(Error::InvalidWavelength(lambda));
        }
        if n < 1 {
            return Err(Error::InvalidQuantumNumber(n));
        }
        Ok(Self {
            lambda,
            n,
            polarization,
        })
    }

    /// Wavenumber k = 2 pi / lambda (1/m).
    pub fn wavenumber(&self) -> f64 {
        2.0 * PI / self.lambda
    }

    /// Angular frequency omega = 2 pi c / lambda (rad/s).
    pub fn omega(&self, k: &PhysicalConstants) -> f64 {
        2.0 * PI * k.c / self.lambda
    }

    /// Oscillation period lambda / c (s).
    pub fn period(&self, k: &PhysicalConstants) -> f64 {
        self.lambda / k.c
    }

    /// Envelope matching radius lambda / 2 pi (m), the maximum radius of the
    /// causality ellipsoid.
    pub fn matching_radius(&self) -> f64 {
        self.lambda / (2.0 * PI)
    }

    /// Quantized field energy n h c / lambda (J).
    pub fn quantized_energy(&self, k: &PhysicalConstants) -> f64 {
        f64::from(self.n) * k.h * k.c / self.lambda
    }
}
