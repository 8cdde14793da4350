//! Assemble a full verification report programmatically: every suite, the
//! normalization cross-checks, and a JSON envelope identical to what the
//! `report` subcommand emits.
//!
//! ```bash
//! cargo run -p photon-soliton --example report_pipeline
//! ```

use photon_soliton::config::RunConfig;
use photon_soliton::report::{Record, ReportEnvelope};
use photon_soliton::suite;

fn main() {
    let config = RunConfig::default();
    let suite_cfg = config.suite_config(650e-9, 1, 200);

    let outcomes = suite::run_all(&suite_cfg).unwrap();
    let mut records = Vec::new();
    let mut pass = true;
    for outcome in &outcomes {
        println!(
            "suite {:<10} -> {}",
            outcome.name,
            if outcome.pass { "pass" } else { "FAIL" }
        );
        pass &= outcome.pass;
        records.extend(outcome.records.iter().cloned());
    }

    let envelope = ReportEnvelope::new(config, records, pass, None);
    let json = envelope.to_json();
    println!("\nreport: {} bytes of JSON, pass = {}", json.len(), envelope.pass);

    // Reports flatten to name,value,units rows for plotting.
    let csv = envelope.to_csv();
    println!("CSV preview:");
    for line in csv.lines().take(8) {
        println!("  {line}");
    }
    let summaries = envelope
        .records
        .iter()
        .filter(|r| matches!(r, Record::Prediction(_)))
        .count();
    println!("  ... ({} summary records total)", summaries);
}
