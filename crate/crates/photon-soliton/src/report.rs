//! Machine-readable report envelope (versioned JSON, plot-ready CSV).
//!
//! JSON reports are byte-identical for identical configurations and seeds
//! once the timestamp is suppressed; record order is fixed and every map is
//! ordered. CSV uses `.` decimals, `,` delimiters and scientific notation
//! with 12 significant digits, and every numeric row carries a units column.

use serde::Serialize;

use crate::config::RunConfig;
use crate::experiments::PredictionRecord;
use crate::normalization::QuadratureResult;
use crate::verify::{EigenReport, ResidualReport};

/// Bumped on any breaking change to the JSON layout.
pub const SCHEMA_VERSION: u32 = 1;

/// One report entry.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Record {
    Prediction(PredictionRecord),
    Residual(ResidualReport),
    Quadrature(QuadratureResult),
    Eigen(EigenReport),
}

/// Top-level report.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportEnvelope {
    pub schema_version: u32,
    pub tool_version: String,
    pub config: RunConfig,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timestamp: Option<u64>,
    pub records: Vec<Record>,
    /// Conjunction of every asserted check in the run.
    pub pass: bool,
}

impl ReportEnvelope {
    pub fn new(config: RunConfig, records: Vec<Record>, pass: bool, timestamp: Option<u64>) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            config,
            timestamp,
            records,
            pass,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// Flattens every record to `name,value,units` rows.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("name,value,units\n");
        for (index, record) in self.records.iter().enumerate() {
            match record {
                Record::Prediction(p) => {
                    csv_row(&mut out, &p.name, p.value, &p.units);
                }
                Record::Residual(r) => {
                    let prefix = format!("residual[{index}]");
                    csv_row(&mut out, &format!("{prefix}.div_e"), r.div_e, "dimensionless");
                    csv_row(&mut out, &format!("{prefix}.div_h"), r.div_h, "dimensionless");
                    csv_row(&mut out, &format!("{prefix}.faraday"), r.faraday, "dimensionless");
                    csv_row(&mut out, &format!("{prefix}.ampere"), r.ampere, "dimensionless");
                    csv_row(&mut out, &format!("{prefix}.spatial_step"), r.spatial_step, "m");
                    csv_row(&mut out, &format!("{prefix}.temporal_step"), r.temporal_step, "s");
                }
                Record::Quadrature(q) => {
                    let prefix = format!("quadrature[{index}]");
                    csv_row(&mut out, &format!("{prefix}.value"), q.value, "J");
                    csv_row(
                        &mut out,
                        &format!("{prefix}.abs_error_estimate"),
                        q.abs_error_estimate,
                        "J",
                    );
                    csv_row(
                        &mut out,
                        &format!("{prefix}.samples_used"),
                        q.samples_used as f64,
                        "count",
                    );
                }
                Record::Eigen(e) => {
                    let prefix = format!("eigen[{index}]");
                    let units = match e.operator {
                        crate::verify::Operator::Lz => "hbar",
                        crate::verify::Operator::Energy => "J",
                        crate::verify::Operator::MomentumZ => "kg*m/s",
                    };
                    csv_row(&mut out, &format!("{prefix}.estimate_re"), e.estimate.re, units);
                    csv_row(&mut out, &format!("{prefix}.estimate_im"), e.estimate.im, units);
                    csv_row(&mut out, &format!("{prefix}.expected"), e.expected, units);
                }
            }
        }
        out
    }
}

fn csv_row(out: &mut String, name: &str, value: f64, units: &str) {
    out.push_str(name);
    out.push(',');
    out.push_str(&format_sig12(value));
    out.push(',');
    out.push_str(units);
    out.push('\n');
}

/// Scientific notation with 12 significant digits, `.` decimal separator.
pub fn format_sig12(value: f64) -> String {
    format!("{value:.11e}")
}
