//! Build a custom deliberation circuit from scratch, evaluate it, and round
//! it through the JSON schema.
//!
//! The circuit tests a single candidate action (the Hadamard) on one spare
//! copy: control 0 means "H moved the copy onto |0>", so the table applies
//! H; control 1 applies the identity as a fallback.
//!
//! Run with: cargo run -p qagency --example evaluate_circuit

use std::collections::BTreeMap;

use qagency::agency::{evaluate, schema, AgencyCircuitSpec, Regime};
use qagency::linalg::gates;
use qagency::qstate::PureState;

fn main() {
    let mut table = BTreeMap::new();
    table.insert("0".to_string(), gates::hadamard());
    table.insert("1".to_string(), gates::identity2());
    let spec = AgencyCircuitSpec::new(
        "Q_(I)H".to_string(),
        vec![gates::hadamard()],
        table,
        PureState::zero(),
    )
    .expect("table entries are unitary and complete");

    println!("=== Evaluating a custom single-control circuit ===\n");
    for regime in [Regime::Copies, Regime::Clones] {
        let report = evaluate(&spec, regime).unwrap();
        println!(
            "{} [{}]: fidelity worst {:.5} / avg {:.5} / best {:.5}",
            spec.name(),
            regime,
            report.fidelity.worst,
            report.fidelity.average,
            report.fidelity.best
        );
    }

    // export: the JSON schema is the same format `qagency eval --circuit`
    // accepts from disk
    let json = schema::spec_to_json(&spec).unwrap();
    println!("\ncircuit-spec JSON ({} bytes), head:", json.len());
    for line in json.lines().take(6) {
        println!("  {line}");
    }

    let back = schema::spec_from_json(&json).unwrap();
    let a = evaluate(&spec, Regime::Copies).unwrap();
    let b = evaluate(&back, Regime::Copies).unwrap();
    println!(
        "\nround-trip through JSON changes metrics by at most {:.2e}",
        a.max_metric_diff(&b)
    );

    // the per-state CSV is the same payload `qagency eval --format csv` emits
    let csv = a.to_csv();
    println!("\nreport CSV, first rows:");
    for line in csv.lines().take(4) {
        println!("  {line}");
    }
}
