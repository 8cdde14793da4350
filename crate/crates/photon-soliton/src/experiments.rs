//! Quantitative experimental predictions of the soliton model.
//!
//! Closed-form predictions: the intrinsic (multiphoton-threshold) intensity
//! I_p = 4 pi h c^2 / lambda^4, the soliton dimensions (lambda, lambda/pi),
//! the absorption/transit time lambda/c, and the photoelectric stopping
//! voltage V = (h nu - h nu0)/e.
//!
//! Two curves are model extensions rather than closed claims and every
//! record built from them says so: slit transmission integrates the
//! soliton's r^2 intensity profile over a centered slit, and the two-slit
//! visibility uses the evanescent 1/r amplitude at the far slit relative to
//! the matched boundary amplitude. Size-based predictions assume circular
//! polarization, for which the lambda/pi diameter holds.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::f64::consts::PI;

use crate::constants::PhysicalConstants;
use crate::error::{Error, Result};

/// Whether a prediction follows from the model's closed claims or from a
/// model extension (an invented functional form consistent with them).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ModelProvenance {
    ClosedForm,
    Extension,
}

/// One named prediction with units, the formula that produced it, and an
/// echo of the inputs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PredictionRecord {
    pub name: String,
    pub value: f64,
    pub units: String,
    /// The formula itself, written out.
    pub formula: String,
    pub model: ModelProvenance,
    pub inputs: BTreeMap<String, f64>,
}

impl PredictionRecord {
    pub fn new(
        name: &str,
        value: f64,
        units: &str,
        formula: &str,
        model: ModelProvenance,
        inputs: &[(&str, f64)],
    ) -> Self {
        Self {
            name: name.to_string(),
            value,
            units: units.to_string(),
            formula: formula.to_string(),
            model,
            inputs: inputs
                .iter()
                .map(|(k, v)| ((*k).to_string(), *v))
                .collect(),
        }
    }
}

fn check_lambda(lambda: f64) -> Result<()> {
    if !(lambda.is_finite() && lambda > 0.0) {
        return Err(Error::InvalidWavelength(lambda));
    }
    Ok(())
}

/// Mean intensity within the soliton, I_p = 4 pi h c^2 / lambda^4 (W/m^2);
/// equals the threshold intensity for the onset of multiphoton absorption.
pub fn intrinsic_intensity(lambda: f64, k: &PhysicalConstants) -> Result<f64> {
    check_lambda(lambda)?;
    Ok(4.0 * PI * k.h * k.c * k.c / lambda.powi(4))
}

/// Soliton length and diameter (m).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SolitonDimensions {
    /// Length along the propagation axis (= lambda).
    pub length: f64,
    /// Maximum transverse diameter (= lambda / pi).
    pub diameter: f64,
}

impl SolitonDimensions {
    /// Length over diameter; pi identically.
    pub fn aspect_ratio(&self) -> f64 {
        self.length / self.diameter
    }
}

/// (lambda, lambda/pi) for circularly polarized states.
pub fn soliton_dimensions(lambda: f64) -> Result<SolitonDimensions> {
    check_lambda(lambda)?;
    Ok(SolitonDimensions {
        length: lambda,
        diameter: lambda / PI,
    })
}

/// Relative gap between the classic resolving-power estimate lambda/3 and
/// the soliton diameter lambda/pi: (lambda/3 - lambda/pi)/(lambda/3)
/// = 1 - 3/pi ~ 4.51%, independent of wavelength.
pub fn resolving_power_gap() -> f64 {
    1.0 - 3.0 / PI
}

/// Predicted absorption time: the period, equal to the transit time of the
/// soliton past a fixed point, tau = lambda / c (s). A few femtoseconds for
/// visible light.
pub fn absorption_time(lambda: f64, k: &PhysicalConstants) -> Result<f64> {
    check_lambda(lambda)?;
    Ok(lambda / k.c)
}

/// Photoelectric outcome for light of frequency nu on a surface with
/// threshold frequency nu0.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhotoelectricResult {
    /// Kinetic energy of emitted electrons, h (nu - nu0) (J); 0 below
    /// threshold.
    pub kinetic_energy: f64,
    /// Stopping voltage (h nu - h nu0)/e (V); 0 below threshold.
    pub stopping_voltage: f64,
    /// Whether electrons are emitted (nu >= nu0).
    pub emits: bool,
}

/// One-photon-per-electron energy balance of the photoelectric effect.
pub fn photoelectric(nu: f64, nu0: f64, k: &PhysicalConstants) -> Result<PhotoelectricResult> {
    for (name, value) in [("nu", nu), ("nu0", nu0)] {
        if !(value.is_finite() && value > 0.0) {
            return Err(Error::Domain {
                name: if name == "nu" { "nu" } else { "nu0" },
                value,
                constraint: "> 0",
            });
        }
    }
    let emits = nu >= nu0;
    let kinetic_energy = if emits { k.h * (nu - nu0) } else { 0.0 };
    Ok(PhotoelectricResult {
        kinetic_energy,
        stopping_voltage: kinetic_energy / k.e_charge,
        emits,
    })
}

/// Fraction of the soliton's cross-sectional intensity passing a centered
/// slit of width w (model extension).
///
/// The transverse intensity profile is proportional to r^2 on the disk
/// r <= lambda/2pi, so with s = min(w/2, R)/R the transmitted fraction has
/// the closed form
///
/// ```text
/// T(s) = [ asin(s) + (s/3)(2 s^2 + 1) sqrt(1 - s^2) ] / (pi/2)
/// ```
///
/// T(0) = 0, strictly increasing, and T = 1 once the slit clears the full
/// diameter (w >= lambda/pi).
pub fn slit_transmission(width: f64, lambda: f64) -> Result<f64> {
    check_lambda(lambda)?;
    if !(width.is_finite() && width >= 0.0) {
        return Err(Error::Domain {
            name: "width",
            value: width,
            constraint: "width >= 0",
        });
    }
    let radius = lambda / (2.0 * PI);
    let s = (width / 2.0 / radius).min(1.0);
    if s >= 1.0 {
        return Ok(1.0);
    }
    let root = (1.0 - s * s).sqrt();
    Ok((s.asin() + s / 3.0 * (2.0 * s * s + 1.0) * root) / (PI / 2.0))
}

/// Two-slit interference pattern in the small-angle (Fraunhofer) regime.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FringePattern {
    /// Slit separation (m).
    pub slit_separation: f64,
    /// Wavelength (m).
    pub wavelength: f64,
    /// Screen distance (m).
    pub screen_distance: f64,
    /// Maxima positions x_m = m lambda L / d for m = -max..=max (m),
    /// odd-symmetric about zero.
    pub maxima_positions: Vec<f64>,
    /// Soliton-model visibility at this separation; None when the far slit
    /// would sit inside the envelope (d < lambda/2pi), where the model is
    /// undefined.
    pub visibility: Option<f64>,
    /// Set when max_order * lambda / d exceeds 0.1 and the small-angle
    /// positions are no longer trustworthy.
    pub small_angle_warning: bool,
}

/// Interference maxima at x_m = m lambda L / d; the same positions as the
/// classical continuous-wave construction.
pub fn fringe_maxima(
    d: f64,
    lambda: f64,
    screen_distance: f64,
    max_order: u32,
) -> Result<FringePattern> {
    check_lambda(lambda)?;
    if !(d.is_finite() && d > 0.0) {
        return Err(Error::Domain {
            name: "d",
            value: d,
            constraint: "d > 0",
        });
    }
    if !(screen_distance.is_finite() && screen_distance > 0.0) {
        return Err(Error::Domain {
            name: "screen_distance",
            value: screen_distance,
            constraint: "L > 0",
        });
    }
    let spacing = lambda * screen_distance / d;
    let mut maxima_positions = Vec::with_capacity(2 * max_order as usize + 1);
    for m in -(max_order as i64)..=(max_order as i64) {
        // Mirror the positive orders so x_{-m} = -x_m exactly.
        let x = m.unsigned_abs() as f64 * spacing;
        maxima_positions.push(if m < 0 { -x } else { x });
    }
    Ok(FringePattern {
        slit_separation: d,
        wavelength: lambda,
        screen_distance,
        maxima_positions,
        visibility: visibility_model(d, lambda).ok(),
        small_angle_warning: f64::from(max_order) * lambda / d > 0.1,
    })
}

/// Soliton-model fringe visibility (model extension).
///
/// The soliton passes one slit; its evanescent amplitude at the other slit,
/// relative to the matched boundary amplitude, is rho = (lambda/2pi)/d.
/// Two-amplitude interference then gives V = 2 rho / (1 + rho^2): equal to 1
/// when the far slit touches the envelope (d = lambda/2pi), strictly
/// decreasing in d, and falling to 0 as d grows, unlike the classical
/// continuous wave, whose visibility is independent of d.
pub fn visibility_model(d: f64, lambda: f64) -> Result<f64> {
    check_lambda(lambda)?;
    let boundary = lambda / (2.0 * PI);
    if !(d.is_finite() && d >= boundary) {
        return Err(Error::Domain {
            name: "d",
            value: d,
            constraint: "d >= lambda/(2 pi)",
        });
    }
    let rho = boundary / d;
    Ok(2.0 * rho / (1.0 + rho * rho))
}

/// Record builders used by the report and CLI layers.
pub mod records {
    use super::*;

    pub fn threshold_intensity(lambda: f64, k: &PhysicalConstants) -> Result<PredictionRecord> {
        Ok(PredictionRecord::new(
            "threshold_intensity",
            intrinsic_intensity(lambda, k)?,
            "W/m^2",
            "I_p = 4*pi*h*c^2/lambda^4",
            ModelProvenance::ClosedForm,
            &[("lambda", lambda)],
        ))
    }

    pub fn dimensions(lambda: f64) -> Result<Vec<PredictionRecord>> {
        let dims = soliton_dimensions(lambda)?;
        Ok(vec![
            PredictionRecord::new(
                "soliton_length",
                dims.length,
                "m",
                "length = lambda",
                ModelProvenance::ClosedForm,
                &[("lambda", lambda)],
            ),
            PredictionRecord::new(
                "soliton_diameter",
                dims.diameter,
                "m",
                "diameter = lambda/pi",
                ModelProvenance::ClosedForm,
                &[("lambda", lambda)],
            ),
            PredictionRecord::new(
                "aspect_ratio",
                dims.aspect_ratio(),
                "dimensionless",
                "length/diameter = pi",
                ModelProvenance::ClosedForm,
                &[("lambda", lambda)],
            ),
            PredictionRecord::new(
                "resolving_power_gap",
                resolving_power_gap(),
                "dimensionless",
                "(lambda/3 - lambda/pi)/(lambda/3) = 1 - 3/pi",
                ModelProvenance::ClosedForm,
                &[("lambda", lambda)],
            ),
        ])
    }

    pub fn absorption(lambda: f64, k: &PhysicalConstants) -> Result<PredictionRecord> {
        Ok(PredictionRecord::new(
            "absorption_time",
            absorption_time(lambda, k)?,
            "s",
            "tau = lambda/c",
            ModelProvenance::ClosedForm,
            &[("lambda", lambda)],
        ))
    }

    pub fn photoelectric_records(
        nu: f64,
        nu0: f64,
        k: &PhysicalConstants,
    ) -> Result<Vec<PredictionRecord>> {
        let result = photoelectric(nu, nu0, k)?;
        let inputs: &[(&str, f64)] = &[("nu", nu), ("nu0", nu0)];
        Ok(vec![
            PredictionRecord::new(
                "photoelectric_kinetic_energy",
                result.kinetic_energy,
                "J",
                "KE = h*(nu - nu0) for nu >= nu0, else 0",
                ModelProvenance::ClosedForm,
                inputs,
            ),
            PredictionRecord::new(
                "photoelectric_stopping_voltage",
                result.stopping_voltage,
                "V",
                "V = (h*nu - h*nu0)/e",
                ModelProvenance::ClosedForm,
                inputs,
            ),
            PredictionRecord::new(
                "photoelectric_emits",
                if result.emits { 1.0 } else { 0.0 },
                "boolean",
                "emits iff nu >= nu0",
                ModelProvenance::ClosedForm,
                inputs,
            ),
        ])
    }

    pub fn transmission(width: f64, lambda: f64) -> Result<PredictionRecord> {
        Ok(PredictionRecord::new(
            "slit_transmission",
            slit_transmission(width, lambda)?,
            "dimensionless",
            "T = clipped-r^2-profile fraction; T(w >= lambda/pi) = 1",
            ModelProvenance::Extension,
            &[("width", width), ("lambda", lambda)],
        ))
    }

    pub fn visibility(d: f64, lambda: f64) -> Result<PredictionRecord> {
        Ok(PredictionRecord::new(
            "fringe_visibility",
            visibility_model(d, lambda)?,
            "dimensionless",
            "V = 2*rho/(1 + rho^2), rho = (lambda/2pi)/d",
            ModelProvenance::Extension,
            &[("d", d), ("lambda", lambda)],
        ))
    }
}
