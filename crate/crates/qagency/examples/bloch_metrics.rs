//! The 26-state evaluation set and the Bloch-sphere metrics.
//!
//! Run with: cargo run -p qagency --example bloch_metrics

use qagency::agency::{builtin, run_on_copies};
use qagency::qstate::{bloch_metrics, fidelity, test_blochs, test_states, to_bloch, PureState};

fn main() {
    println!("=== The canonical 26-state test set ===\n");
    println!("six axis points, twelve edge midpoints, eight cube corners,");
    println!("each group ordered lexicographically descending in (x, y, z):\n");
    for (i, v) in test_blochs().iter().enumerate() {
        let group = match i {
            0..=5 => "axis",
            6..=17 => "edge",
            _ => "corner",
        };
        println!(
            "  {i:>2} [{group:^6}] ({:>7.4}, {:>7.4}, {:>7.4})",
            v.x, v.y, v.z
        );
    }

    println!("\n=== Metrics of circuit outputs ===\n");
    let spec = builtin("Q_IX").unwrap();
    let target = PureState::zero().density();
    println!("running {} on a few inputs (copies regime):", spec.name());
    println!(
        "  {:<28} {:>9} {:>9} {:>9}",
        "input bloch", "fidelity", "length", "angle"
    );
    for psi in test_states().iter().step_by(5) {
        let v = to_bloch(&psi.density()).unwrap();
        let out = run_on_copies(&spec, psi).unwrap();
        let f = fidelity(&out, &target).unwrap();
        let (len, angle) = bloch_metrics(&out).unwrap();
        println!(
            "  ({:>7.4}, {:>7.4}, {:>7.4})  {f:>9.5} {len:>9.5} {angle:>9.5}",
            v.x, v.y, v.z
        );
    }

    println!("\nThe y-axis inputs collapse to the fully mixed state: length 0,");
    println!("fidelity 1/2, and no direction left to be wrong about (angle 0).");
    println!("Fidelity against |0> and the Bloch data are linked: F = (1 + z)/2.");
}
