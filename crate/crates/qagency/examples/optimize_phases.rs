//! Search the free phases of the superposed control-table rows.
//!
//! Ambiguous rows apply a unitary superposition of the successful actions,
//! and the built-in phase choices are only one option — this searches for
//! better ones. The four-control circuit turns out to leave real fidelity
//! on the table.
//!
//! Run with: cargo run --release -p qagency --example optimize_phases

use qagency::agency::Regime;
use qagency::optimizer::{optimize, ParamSpace};

fn main() {
    for (name, budget) in [("Q_IX", 8), ("Q_IHX", 30), ("Q_IX'Y'Z'", 10)] {
        let space = ParamSpace::for_builtin(name).unwrap();
        println!(
            "{name}: {} superposed rows, {} free phases",
            space.free_entries().len(),
            space.num_params()
        );
        let outcome = optimize(&space, Regime::Copies, budget, 2024).unwrap();
        println!(
            "  baseline {:.5} -> best {:.5} (delta {:+.5}, {} trace points, budget {budget})",
            outcome.baseline,
            outcome.best_value,
            outcome.best_value - outcome.baseline,
            outcome.trace.len()
        );
        if outcome.best_value > outcome.baseline + 1e-6 {
            let improved = outcome
                .best_spec
                .control_table()
                .iter()
                .filter(|(bits, entry)| {
                    space
                        .base_spec()
                        .entry(bits)
                        .map(|base| !entry.approx_eq(base, 1e-9))
                        == Some(true)
                })
                .map(|(bits, _)| bits.clone())
                .collect::<Vec<_>>();
            println!("  rows that changed: {}", improved.join(", "));
        }
        println!();
    }
    println!("How much a smarter phase assignment can recover, and for which");
    println!("circuits, is open; the searcher is deterministic per seed, so");
    println!("results are comparable across runs.");
}
