//! Run the three no-go certificates and print them as JSON.
//!
//! Run with: cargo run -p qagency --example nogo_certificates

use num_complex::Complex64;
use qagency::linalg::gates;
use qagency::nogo::{no_cloning_witness, selector_impossibility, superposed_action_symmetry};
use qagency::qstate::PureState;

fn main() {
    let s = std::f64::consts::FRAC_1_SQRT_2;

    // 1. A machine that copies |0> and |1> misses superpositions by a
    //    fixed, computable margin.
    let cloning = no_cloning_witness(Complex64::new(s, 0.0), Complex64::new(s, 0.0)).unwrap();
    println!(
        "no-cloning: distance {:.6} (sqrt(2 - sqrt 2) = {:.6}) -> {}",
        cloning.violation_magnitude,
        (2.0 - std::f64::consts::SQRT_2).sqrt(),
        if cloning.is_valid() {
            "violation witnessed"
        } else {
            "no violation"
        }
    );

    // 2. Acting with a superposition of two candidate actions on a single
    //    copy destroys the record of which branch came from which action.
    let i_x = gates::pauli_x().scale(Complex64::new(0.0, 1.0));
    let symmetry =
        superposed_action_symmetry(&PureState::zero(), &gates::identity2(), &i_x).unwrap();
    println!(
        "superposed-action: asymmetry {:.1e}, branch overlap {:.3}, scaled-unitary: {}",
        symmetry.violation_magnitude,
        symmetry.overlap.unwrap(),
        symmetry.scaled_unitary.unwrap()
    );

    // 3. No controlled completion lets the circuit always pick the better
    //    of two actions on an ambiguous input.
    let psi = PureState::qubit(
        Complex64::new(0.75f64.sqrt(), 0.0),
        Complex64::new(0.25f64.sqrt(), 0.0),
    )
    .unwrap();
    for grid in [4, 8, 16] {
        let cert =
            selector_impossibility(&gates::identity2(), &gates::pauli_x(), &psi, grid).unwrap();
        println!(
            "selector gap at grid {grid:>2}: {:.6} (floor {})",
            cert.violation_magnitude, cert.tolerance
        );
    }

    println!("\nfull certificates as JSON:\n");
    let selector = selector_impossibility(&gates::identity2(), &gates::pauli_x(), &psi, 8).unwrap();
    for cert in [&cloning, &symmetry, &selector] {
        println!("{}\n", cert.to_json_string().unwrap());
    }
}
