//! Run configuration: constants overrides, tolerances, budgets, seeds.
//!
//! A configuration file can be pointed to by the `PHOTON_SOLITON_CONFIG`
//! environment variable; it holds either JSON with this module's schema or
//! simple `key=value` lines (dotted keys, `#` comments). Command-line flags
//! override file values.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::path::Path;

use crate::constants::PhysicalConstants;
use crate::error::{Error, Result};
use crate::normalization::MIN_QUADRATURE_BUDGET;
use crate::suite::{SuiteConfig, SuiteTolerances};
use crate::verify;

/// Environment variable naming an optional configuration file.
pub const CONFIG_ENV_VAR: &str = "PHOTON_SOLITON_CONFIG";

/// Report/output format.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum OutputFormat {
    Json,
    Csv,
}

/// Finite-difference step fractions.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct FdFractions {
    /// Spatial step as a fraction of lambda.
    pub spatial: f64,
    /// Temporal step as a fraction of the period.
    pub temporal: f64,
    /// Operator-eigencheck step in phase radians.
    pub eigen_phase: f64,
}

impl Default for FdFractions {
    fn default() -> Self {
        Self {
            spatial: verify::DEFAULT_FD_FRACTION,
            temporal: verify::DEFAULT_FD_FRACTION,
            eigen_phase: verify::DEFAULT_EIGEN_PHASE_STEP,
        }
    }
}

/// Full run configuration, echoed into every report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct RunConfig {
    pub constants: PhysicalConstants,
    /// Named tolerances; see [`default_tolerances`] for the built-in set.
    pub tolerances: BTreeMap<String, f64>,
    /// Field evaluations per quadrature (>= 1e4).
    pub quadrature_budget: usize,
    pub fd: FdFractions,
    pub seed: u64,
    pub output_format: OutputFormat,
}

/// Built-in tolerance set.
pub fn default_tolerances() -> BTreeMap<String, f64> {
    [
        ("maxwell_residual", 1e-6),
        ("dalembert_residual", 1e-6),
        ("eigen_relative", 1e-8),
        ("betaz_ratio_min", 1e3),
        ("quadrature_relative", 5e-3),
        ("match_relative", 1e-12),
    ]
    .into_iter()
    .map(|(k, v)| (k.to_string(), v))
    .collect()
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            constants: PhysicalConstants::codata2018(),
            tolerances: default_tolerances(),
            quadrature_budget: MIN_QUADRATURE_BUDGET,
            fd: FdFractions::default(),
            seed: 0,
            output_format: OutputFormat::Json,
        }
    }
}

impl RunConfig {
    /// Named tolerance, falling back to the built-in default.
    pub fn tolerance(&self, name: &str) -> f64 {
        self.tolerances
            .get(name)
            .copied()
            .unwrap_or_else(|| *default_tolerances().get(name).expect("known tolerance name"))
    }

    pub fn validate(&self) -> Result<()> {
        self.constants.validate()?;
        if self.quadrature_budget < MIN_QUADRATURE_BUDGET {
            return Err(Error::BudgetTooSmall {
                budget: self.quadrature_budget,
                minimum: MIN_QUADRATURE_BUDGET,
            });
        }
        for (name, value) in &self.tolerances {
            if !(value.is_finite() && *value > 0.0) {
                return Err(Error::Config(format!(
                    "tolerance {name} must be positive, got {value}"
                )));
            }
        }
        for (name, value) in [
            ("fd.spatial", self.fd.spatial),
            ("fd.temporal", self.fd.temporal),
            ("fd.eigen_phase", self.fd.eigen_phase),
        ] {
            if !(value.is_finite() && value > 0.0) {
                return Err(Error::Config(format!(
                    "{name} must be positive, got {value}"
                )));
            }
        }
        Ok(())
    }

    /// Suite configuration for a given wavelength / quantum number.
    pub fn suite_config(&self, lambda: f64, n: u32, points_per_branch: usize) -> SuiteConfig {
        SuiteConfig {
            lambda,
            n,
            seed: self.seed,
            points_per_branch,
            eigen_points: 100,
            fd_fraction: self.fd.spatial,
            eigen_phase_step: self.fd.eigen_phase,
            tolerances: SuiteTolerances {
                maxwell_residual: self.tolerance("maxwell_residual"),
                dalembert_residual: self.tolerance("dalembert_residual"),
                eigen_relative: self.tolerance("eigen_relative"),
                betaz_ratio_min: self.tolerance("betaz_ratio_min"),
            },
            constants: self.constants,
        }
    }

    /// Parses either JSON (first non-blank byte `{`) or `key=value` lines.
    pub fn parse(text: &str) -> Result<Self> {
        let trimmed = text.trim_start();
        let mut config = if trimmed.starts_with('{') {
            serde_json::from_str::<RunConfig>(text)
                .map_err(|e| Error::Config(format!("invalid JSON config: {e}")))?
        } else {
            let mut config = RunConfig::default();
            for (line_no, raw) in text.lines().enumerate() {
                let line = raw.trim();
                if line.is_empty() || line.starts_with('#') {
                    continue;
                }
                let (key, value) = line.split_once('=').ok_or_else(|| {
                    Error::Config(format!("line {}: expected key=value", line_no + 1))
                })?;
                config.apply_key_value(key.trim(), value.trim(), line_no + 1)?;
            }
            config
        };
        // Ensure every default tolerance key exists so reports echo the
        // effective values.
        for (key, value) in default_tolerances() {
            config.tolerances.entry(key).or_insert(value);
        }
        Ok(config)
    }

    fn apply_key_value(&mut self, key: &str, value: &str, line: usize) -> Result<()> {
        let bad = |what: &str| Error::Config(format!("line {line}: invalid {what}: {value}"));
        let parse_f64 = || value.parse::<f64>().map_err(|_| bad("number"));
        match key {
            "seed" => self.seed = value.parse().map_err(|_| bad("seed"))?,
            "quadrature_budget" => {
                self.quadrature_budget = value.parse().map_err(|_| bad("budget"))?
            }
            "output_format" => {
                self.output_format = match value {
                    "json" => OutputFormat::Json,
                    "csv" => OutputFormat::Csv,
                    _ => return Err(bad("output_format")),
                }
            }
            "fd.spatial" => self.fd.spatial = parse_f64()?,
            "fd.temporal" => self.fd.temporal = parse_f64()?,
            "fd.eigen_phase" => self.fd.eigen_phase = parse_f64()?,
            "constants.h" => self.constants.h = parse_f64()?,
            "constants.c" => self.constants.c = parse_f64()?,
            "constants.eps0" => self.constants.eps0 = parse_f64()?,
            "constants.mu0" => self.constants.mu0 = parse_f64()?,
            "constants.e_charge" => self.constants.e_charge = parse_f64()?,
            _ => {
                if let Some(name) = key.strip_prefix("tolerance.") {
                    self.tolerances.insert(name.to_string(), parse_f64()?);
                } else {
                    return Err(Error::Config(format!("line {line}: unknown key {key}")));
                }
            }
        }
        Ok(())
    }

    pub fn load_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    /// Loads the file named by `PHOTON_SOLITON_CONFIG`, if set.
    pub fn load_from_env() -> Result<Option<Self>> {
        match std::env::var(CONFIG_ENV_VAR) {
            Ok(path) if !path.is_empty() => Ok(Some(Self::load_file(Path::new(&path))?)),
            _ => Ok(None),
        }
    }
}
