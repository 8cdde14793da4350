//! Vacuum electromagnetic constants (SI).

use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Relative tolerance on the vacuum identity mu0 * eps0 * c^2 = 1.
pub const VACUUM_IDENTITY_TOL: f64 = 1e-9;

/// SI constants used throughout the model. All strictly positive.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhysicalConstants {
    /// Planck constant (J s).
    pub h: f64,
    /// Speed of light in vacuum (m/s).
    pub c: f64,
    /// Vacuum permittivity (F/m).
    pub eps0: f64,
    /// Vacuum permeability (H/m).
    pub mu0: f64,
    /// Elementary charge (C).
    pub e_charge: f64,
}

impl PhysicalConstants {
    /// CODATA 2018 values. h, c and e are exact by definition of the SI;
    /// eps0 and mu0 are the recommended measured values.
    pub const fn codata2018() -> Self {
        Self {
            h: 6.626_070_15e-34,
            c: 299_792_458.0,
            eps0: 8.854_187_812_8e-12,
            mu0: 1.256_637_062_12e-6,
            e_charge: 1.602_176_634e-19,
        }
    }

    /// Reduced Planck constant h/2pi (J s).
    pub fn hbar(&self) -> f64 {
        self.h / (2.0 * PI)
    }

    /// Vacuum impedance scale mu0 * c (ohm); relates E (V/m) to H (A/m).
    pub fn impedance(&self) -> f64 {
        self.mu0 * self.c
    }

    /// Checks positivity of every constant and the identity mu0*eps0*c^2 = 1
    /// to within [`VACUUM_IDENTITY_TOL`] relative.
    pub fn validate(&self) -> Result<()> {
        let fields = [
            ("h", self.h),
            ("c", self.c),
            ("eps0", self.eps0),
            ("mu0", self.mu0),
            ("e_charge", self.e_charge),
        ];
        for (name, value) in fields {
            if !(value.is_finite() && value > 0.0) {
                return Err(Error::InvalidConstants(format!(
                    "{name} must be positive and finite, got {value}"
                )));
            }
        }
        let identity = self.mu0 * self.eps0 * self.c * self.c;
        if (identity - 1.0).abs() > VACUUM_IDENTITY_TOL {
            return Err(Error::InvalidConstants(format!(
                "mu0*eps0*c^2 = {identity}, off unity by {:e}",
                (identity - 1.0).abs()
            )));
        }
        Ok(())
    }
}

impl Default for PhysicalConstants {
    fn default() -> Self {
        Self::codata2018()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn codata_satisfies_vacuum_identity() {
        let k = PhysicalConstants::codata2018();
        k.validate().unwrap();
        assert!((k.mu0 * k.eps0 * k.c * k.c - 1.0).abs() < 1e-9);
    }

    #[test]
    fn hbar_is_h_over_two_pi() {
        let k = PhysicalConstants::codata2018();
        assert!((k.hbar() * 2.0 * PI / k.h - 1.0).abs() < 1e-15);
    }

    #[test]
    fn rejects_nonpositive_constant() {
        let mut k = PhysicalConstants::codata2018();
        k.eps0 = 0.0;
        assert!(k.validate().is_err());
    }

    #[test]
    fn rejects_inconsistent_permeability() {
        let mut k = PhysicalConstants::codata2018();
        k.mu0 *= 1.001;
        assert!(k.validate().is_err());
    }
}
