//! Deliberate-then-act circuits.
//!
//! A circuit on `N` qubits tests one candidate unitary per control slot on
//! the first `N - 1` copies of an environment state, then applies a
//! controlled unitary `C_U` that picks the action on the final target copy
//! from the control register. Control bit `i` is the output of deliberation
//! unitary `U_i`; bit value 0 means the test landed on the target state
//! `|0>` (success), so the all-zeros bitstring is "every action looked
//! good" and the all-ones bitstring is "every action looked bad".

mod builtin;
mod report;
pub mod schema;

pub use builtin::{builtin, builtin_circuits, rotated_paulis};
pub use report::{EvaluationReport, MetricSummary, Regime, StateRecord};

pub(crate) use builtin::{find_def, synthesize_entry};

use std::collections::BTreeMap;

use crate::cloning::symmetric_clone;
use crate::error::{Error, Result};
use crate::linalg::{gates, ComplexMatrix};
use crate::qstate::{bloch_metrics, fidelity, test_states, to_bloch, DensityMatrix, PureState};

/// A deliberation circuit: per-slot deliberation unitaries plus the control
/// table mapping each control bitstring to the unitary applied to the
/// target qubit.
#[derive(Debug, Clone)]
pub struct AgencyCircuitSpec {
    name: String,
    deliberation_unitaries: Vec<ComplexMatrix>,
    control_table: BTreeMap<String, ComplexMatrix>,
    target_state: PureState,
}

impl AgencyCircuitSpec {
    /// Validate and assemble a circuit spec.
    ///
    /// Requires one deliberation unitary per control slot, a complete
    /// control table (one 2x2 unitary entry at 1e-10 per bitstring), and a
    /// single-qubit target state. The induced `C_U` must itself be unitary
    /// at 1e-10.
    pub fn new(
        name: String,
        deliberation_unitaries: Vec<ComplexMatrix>,
        control_table: BTreeMap<String, ComplexMatrix>,
        target_state: PureState,
    ) -> Result<Self> {
        let k = deliberation_unitaries.len();
        if k == 0 {
            return Err(Error::BadControlTable {
                reason: "need at least one deliberation unitary".into(),
            });
        }
        if target_state.num_qubits() != 1 {
            return Err(Error::NotSingleQubit {
                qubits: target_state.num_qubits(),
            });
        }
        for (i, u) in deliberation_unitaries.iter().enumerate() {
            if u.rows() != 2 || u.cols() != 2 || !u.is_unitary(1e-10)? {
                return Err(Error::BadControlTable {
                    reason: format!("deliberation unitary {i} is not a 2x2 unitary"),
                });
            }
        }
        if control_table.len() != 1 << k {
            return Err(Error::BadControlTable {
                reason: format!(
                    "expected {} entries for {k} controls, found {}",
                    1 << k,
                    control_table.len()
                ),
            });
        }
        for (bits, entry) in &control_table {
            if bits.len() != k || !bits.chars().all(|c| c == '0' || c == '1') {
                return Err(Error::BadControlTable {
                    reason: format!("invalid control bitstring {bits:?}"),
                });
            }
            if entry.rows() != 2 || entry.cols() != 2 || !entry.is_unitary(1e-10)? {
                return Err(Error::NonUnitaryEntry {
                    bitstring: bits.clone(),
                });
            }
        }
        let spec = Self {
            name,
            deliberation_unitaries,
            control_table,
            target_state,
        };
        if !build_cu(&spec)?.is_unitary(1e-10)? {
            return Err(Error::BadControlTable {
                reason: "induced controlled unitary is not unitary".into(),
            });
        }
        Ok(spec)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn deliberation_unitaries(&self) -> &[ComplexMatrix] {
        &self.deliberation_unitaries
    }

    pub fn control_table(&self) -> &BTreeMap<String, ComplexMatrix> {
        &self.control_table
    }

    pub fn target_state(&self) -> &PureState {
        &self.target_state
    }

    /// Number of control qubits.
    pub fn num_controls(&self) -> usize {
        self.deliberation_unitaries.len()
    }

    /// Controls plus target.
    pub fn num_qubits(&self) -> usize {
        self.num_controls() + 1
    }

    /// Table entry for a control bitstring.
    pub fn entry(&self, bits: &str) -> Option<&ComplexMatrix> {
        self.control_table.get(bits)
    }
}

fn bits_to_index(bits: &str) -> usize {
    bits.chars()
        .fold(0, |acc, c| (acc << 1) | (c == '1') as usize)
}

/// Block-diagonal controlled unitary `C_U = sum_b |b><b| ⊗ V_b` over the
/// control register (most significant) and target qubit (least
/// significant).
pub fn build_cu(spec: &AgencyCircuitSpec) -> Result<ComplexMatrix> {
    let k = spec.num_controls();
    let dim = 1usize << (k + 1);
    let mut cu = ComplexMatrix::zeros(dim, dim);
    for (bits, entry) in &spec.control_table {
        if !entry.is_unitary(1e-10)? {
            return Err(Error::NonUnitaryEntry {
                bitstring: bits.clone(),
            });
        }
        let base = bits_to_index(bits) << 1;
        for r in 0..2 {
            for c in 0..2 {
                cu.set(base + r, base + c, entry.get(r, c));
            }
        }
    }
    Ok(cu)
}

/// The full deliberate-then-act unitary `C_U (U_1 ⊗ ... ⊗ U_{N-1} ⊗ I)`.
pub fn full_unitary(spec: &AgencyCircuitSpec) -> Result<ComplexMatrix> {
    let mut delib = spec.deliberation_unitaries[0].clone();
    for u in &spec.deliberation_unitaries[1..] {
        delib = delib.kron(u)?;
    }
    let delib = delib.kron(&gates::identity2())?;
    Ok(build_cu(spec)?.matmul(&delib))
}

/// Run the circuit on `N` perfect copies of `psi` and return the reduced
/// state of the target qubit.
pub fn run_on_copies(spec: &AgencyCircuitSpec, psi: &PureState) -> Result<DensityMatrix> {
    let joint = run_on_copies_joint(spec, psi)?;
    joint.partial_trace(&[spec.num_controls()])
}

/// Joint (controls + target) output state of the copies regime, before any
/// tracing.
pub fn run_on_copies_joint(spec: &AgencyCircuitSpec, psi: &PureState) -> Result<DensityMatrix> {
    if psi.num_qubits() != 1 {
        return Err(Error::NotSingleQubit {
            qubits: psi.num_qubits(),
        });
    }
    let n = spec.num_qubits();
    let input = psi.tensor_power(n)?;
    let out = full_unitary(spec)?.matmul(&input.as_column());
    // unitary image of a normalized pure state
    Ok(DensityMatrix::trusted(out.matmul(&out.dagger())))
}

/// Run the circuit on the entangled `N`-clone output of the symmetric
/// cloning machine and return the reduced state of the target qubit.
///
/// The clone state is invariant under qubit exchange, so which clone feeds
/// which slot is immaterial; clones `1..N-1` act as controls and clone `N`
/// as target.
pub fn run_on_clones(spec: &AgencyCircuitSpec, psi: &PureState) -> Result<DensityMatrix> {
    let n = spec.num_qubits();
    let ensemble = symmetric_clone(psi, n)?;
    let u = full_unitary(spec)?;
    // unitary conjugation of a validated density matrix
    let rho = DensityMatrix::trusted(u.matmul(ensemble.state().matrix()).matmul(&u.dagger()));
    rho.partial_trace(&[n - 1])
}

/// Evaluate a circuit over the 26 canonical test states.
pub fn evaluate(spec: &AgencyCircuitSpec, regime: Regime) -> Result<EvaluationReport> {
    let target = spec.target_state.density();
    let mut records = Vec::with_capacity(26);
    for psi in test_states() {
        let out = match regime {
            Regime::Copies => run_on_copies(spec, &psi)?,
            Regime::Clones => run_on_clones(spec, &psi)?,
        };
        let (bloch_length, bloch_angle_error) = bloch_metrics(&out)?;
        records.push(StateRecord {
            input_bloch: to_bloch(&psi.density())?,
            fidelity: fidelity(&out, &target)?,
            bloch_length,
            bloch_angle_error,
        });
    }
    Ok(EvaluationReport::from_records(
        spec.name.clone(),
        regime,
        records,
    ))
}

/// True iff the circuit reaches fidelity 1 on both basis states without
/// entangling controls and target — the regime where the environment basis
/// is known and deliberation is decisive for every basis input.
pub fn classical_limit_check(
    spec: &AgencyCircuitSpec,
    basis: (&PureState, &PureState),
) -> Result<bool> {
    let (b0, b1) = basis;
    if b0.num_qubits() != 1 || b1.num_qubits() != 1 {
        return Err(Error::NotSingleQubit {
            qubits: b0.num_qubits().max(b1.num_qubits()),
        });
    }
    let overlap = b0.inner(b1).norm();
    if overlap > 1e-10 {
        return Err(Error::NotOrthonormal { overlap });
    }
    let target = spec.target_state.density();
    for psi in [b0, b1] {
        let out = run_on_copies(spec, psi)?;
        let f = fidelity(&out, &target)?;
        if f < 1.0 - 1e-9 || out.purity() < 1.0 - 1e-9 {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::matmul_chain;
    use crate::qstate::{pure_from_bloch, BlochVector};
    use num_complex::Complex64;
    use std::f64::consts::FRAC_1_SQRT_2;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn by_name(name: &str) -> AgencyCircuitSpec {
        builtin(name).unwrap()
    }

    #[test]
    fn builtin_lookup_and_shape() {
        let circuits = builtin_circuits();
        assert_eq!(circuits.len(), 4);
        assert_eq!(circuits[0].name(), "Q_(I)X");
        assert_eq!(circuits[0].num_controls(), 1);
        assert_eq!(circuits[1].num_controls(), 2);
        assert_eq!(circuits[2].num_controls(), 3);
        assert_eq!(circuits[3].num_controls(), 4);
        assert!(builtin("qixyz").is_ok());
        assert!(builtin("Q_IX'Y'Z'").is_ok());
        assert!(matches!(builtin("nope"), Err(Error::UnknownCircuit(_))));
    }

    #[test]
    fn every_builtin_table_entry_is_unitary() {
        for spec in builtin_circuits() {
            for (bits, entry) in spec.control_table() {
                assert!(
                    entry.is_unitary(1e-10).unwrap(),
                    "{} entry {bits}",
                    spec.name()
                );
            }
            assert!(build_cu(&spec).unwrap().is_unitary(1e-10).unwrap());
        }
    }

    #[test]
    fn q_ix_table_matches_reference_rows() {
        let spec = by_name("Q_IX");
        let i2 = gates::identity2();
        let x = gates::pauli_x();
        assert!(spec.entry("01").unwrap().approx_eq(&i2, 1e-15));
        assert!(spec.entry("10").unwrap().approx_eq(&x, 1e-15));
        let s = c(FRAC_1_SQRT_2, 0.0);
        let plus = i2.add(&x.scale(c(0.0, 1.0))).scale(s);
        let minus = i2.add(&x.scale(c(0.0, -1.0))).scale(s);
        assert!(spec.entry("00").unwrap().approx_eq(&plus, 1e-12));
        assert!(spec.entry("11").unwrap().approx_eq(&minus, 1e-12));
    }

    #[test]
    fn q_ihx_table_matches_reference_rows() {
        let spec = by_name("Q_IHX");
        let i2 = gates::identity2();
        let h = gates::hadamard();
        let x = gates::pauli_x();
        // |111> -> (I + iH - iX)/sqrt(3 - sqrt(2))
        let expected = i2
            .add(&h.scale(c(0.0, 1.0)))
            .add(&x.scale(c(0.0, -1.0)))
            .scale(c(1.0 / (3.0 - std::f64::consts::SQRT_2).sqrt(), 0.0));
        assert!(spec.entry("111").unwrap().approx_eq(&expected, 1e-12));
        // |100> -> (H + X)/sqrt(2 + sqrt(2))
        let expected = h
            .add(&x)
            .scale(c(1.0 / (2.0 + std::f64::consts::SQRT_2).sqrt(), 0.0));
        assert!(spec.entry("100").unwrap().approx_eq(&expected, 1e-12));
        assert!(spec.entry("101").unwrap().approx_eq(&h, 1e-15));
    }

    #[test]
    fn rotated_paulis_expectations_and_algebra() {
        let (xp, yp, zp) = rotated_paulis();
        let ket0 = PureState::zero().as_column();
        let inv_sqrt3 = 1.0 / 3f64.sqrt();
        for p in [&xp, &yp, &zp] {
            let expect = ket0.dagger().matmul(&p.matmul(&ket0)).get(0, 0);
            assert!((expect.re - inv_sqrt3).abs() < 1e-12 && expect.im.abs() < 1e-12);
            // squares to the identity
            assert!(p.matmul(p).approx_eq(&gates::identity2(), 1e-12));
        }
        // orthogonal axes: traceless products and vanishing anticommutators
        for (a, b) in [(&xp, &yp), (&xp, &zp), (&yp, &zp)] {
            assert!(a.matmul(b).trace().norm() < 1e-12);
            let anti = a.matmul(b).add(&b.matmul(a));
            assert!(anti.approx_eq(&ComplexMatrix::zeros(2, 2), 1e-10));
        }
    }

    #[test]
    fn cu_routes_decisive_controls() {
        // |10> ⊗ |1> -> |10> ⊗ X|1> = |10> ⊗ |0>
        let spec = by_name("Q_IX");
        let cu = build_cu(&spec).unwrap();
        let in_state = PureState::basis(3, 0b101).as_column();
        let expected = PureState::basis(3, 0b100).as_column();
        assert!(cu.matmul(&in_state).approx_eq(&expected, 1e-12));
    }

    #[test]
    fn cu_is_block_diagonal() {
        let spec = by_name("Q_IX");
        let cu = build_cu(&spec).unwrap();
        for row in 0..8 {
            for col in 0..8 {
                if row >> 1 != col >> 1 {
                    assert_eq!(cu.get(row, col), Complex64::ZERO);
                }
            }
        }
        assert!(cu
            .matmul(&cu.dagger())
            .approx_eq(&ComplexMatrix::identity(8), 1e-10));
    }

    #[test]
    fn build_cu_rejects_non_unitary_entries() {
        let mut table = BTreeMap::new();
        table.insert("0".to_string(), gates::identity2());
        table.insert("1".to_string(), gates::identity2().scale(c(0.5, 0.0)));
        let err = AgencyCircuitSpec::new(
            "bad".into(),
            vec![gates::pauli_x()],
            table,
            PureState::zero(),
        )
        .unwrap_err();
        match err {
            Error::NonUnitaryEntry { bitstring } => assert_eq!(bitstring, "1"),
            other => panic!("unexpected error {other}"),
        }
    }

    #[test]
    fn copies_regime_worked_examples() {
        let spec = by_name("Q_IX");
        let target = PureState::zero().density();

        // |1>: deliberation reads |10>, applies X, lands exactly on |0>
        let out = run_on_copies(&spec, &PureState::one()).unwrap();
        assert!((fidelity(&out, &target).unwrap() - 1.0).abs() < 1e-12);
        assert!((out.purity() - 1.0).abs() < 1e-12);

        // |0>: decisive the other way round
        let out = run_on_copies(&spec, &PureState::zero()).unwrap();
        assert!((fidelity(&out, &target).unwrap() - 1.0).abs() < 1e-12);

        // sqrt(3/4)|0> + sqrt(1/4)|1>: ambiguous controls corrupt the target
        let psi = PureState::qubit(c((0.75f64).sqrt(), 0.0), c(0.5, 0.0)).unwrap();
        let out = run_on_copies(&spec, &psi).unwrap();
        assert!((fidelity(&out, &target).unwrap() - 0.625).abs() < 1e-12);
    }

    #[test]
    fn copies_regime_is_global_phase_invariant() {
        let spec = by_name("Q_IHX");
        let psi = pure_from_bloch(&BlochVector::new(0.6, -0.64, 0.48)).unwrap();
        let phased = PureState::new(
            psi.amplitudes()
                .iter()
                .map(|a| a * Complex64::from_polar(1.0, 1.234))
                .collect(),
        )
        .unwrap();
        let a = run_on_copies(&spec, &psi).unwrap();
        let b = run_on_copies(&spec, &phased).unwrap();
        assert!(a.matrix().approx_eq(b.matrix(), 1e-10));
    }

    #[test]
    fn clones_regime_q_proto_is_input_independent() {
        let spec = by_name("Q_(I)X");
        let target = PureState::zero().density();
        for v in [
            BlochVector::new(0.0, 0.0, 1.0),
            BlochVector::new(1.0, 0.0, 0.0),
            BlochVector::new(0.0, -1.0, 0.0),
        ] {
            let psi = pure_from_bloch(&v).unwrap();
            let out = run_on_clones(&spec, &psi).unwrap();
            let f = fidelity(&out, &target).unwrap();
            assert!((f - 2.0 / 3.0).abs() < 1e-9, "got {f}");
        }
    }

    #[test]
    fn clone_input_marginal_matches_cloner_fidelity() {
        // before C_U acts, the target slot of the clone register holds a
        // (2N+1)/(3N) fidelity clone
        let spec = by_name("Q_IX");
        let n = spec.num_qubits();
        let psi = pure_from_bloch(&BlochVector::new(0.8, 0.0, 0.6)).unwrap();
        let ens = symmetric_clone(&psi, n).unwrap();
        let marginal = ens.state().partial_trace(&[n - 1]).unwrap();
        let f = fidelity(&marginal, &psi.density()).unwrap();
        let expected = (2.0 * n as f64 + 1.0) / (3.0 * n as f64);
        assert!((f - expected).abs() < 1e-10);
    }

    #[test]
    fn evaluate_q_ix_copies_matches_exact_aggregates() {
        let report = evaluate(&by_name("Q_IX"), Regime::Copies).unwrap();
        assert_eq!(report.states.len(), 26);
        assert!((report.fidelity.worst - 0.5).abs() < 1e-9);
        assert!((report.fidelity.average - 2.0 / 3.0).abs() < 1e-9);
        assert!((report.fidelity.best - 1.0).abs() < 1e-9);
        assert!(report.aggregates_consistent());
        // aggregate ordering invariants
        assert!(report.fidelity.worst <= report.fidelity.average);
        assert!(report.fidelity.average <= report.fidelity.best);
        assert!(report.bloch_angle_error.worst >= report.bloch_angle_error.average);
        assert!(report.bloch_angle_error.average >= report.bloch_angle_error.best);
    }

    #[test]
    fn proto_agent_and_q_ix_agree_on_copies() {
        let a = evaluate(&by_name("Q_(I)X"), Regime::Copies).unwrap();
        let b = evaluate(&by_name("Q_IX"), Regime::Copies).unwrap();
        assert!(a.max_metric_diff(&b) < 1e-9);
    }

    #[test]
    fn outputs_are_trace_one_and_positive() {
        for spec in builtin_circuits() {
            for v in [
                BlochVector::new(0.0, 1.0, 0.0),
                BlochVector::new(-1.0, 0.0, 0.0),
            ] {
                let psi = pure_from_bloch(&v).unwrap();
                let out = run_on_copies(&spec, &psi).unwrap();
                assert!((out.matrix().trace().re - 1.0).abs() < 1e-10);
                let min_eig = out.matrix().hermitian_eigenvalues().unwrap()[0];
                assert!(min_eig > -1e-8);
            }
        }
    }

    #[test]
    fn classical_limit_holds_for_computational_basis_only() {
        let spec = by_name("Q_IX");
        assert!(classical_limit_check(&spec, (&PureState::zero(), &PureState::one())).unwrap());
        assert!(!classical_limit_check(&spec, (&PureState::plus(), &PureState::minus())).unwrap());
        assert!(matches!(
            classical_limit_check(&spec, (&PureState::zero(), &PureState::zero())),
            Err(Error::NotOrthonormal { .. })
        ));
    }

    #[test]
    fn full_unitary_composes_deliberation_then_control() {
        let spec = by_name("Q_(I)X");
        let delib = gates::pauli_x().kron(&gates::identity2()).unwrap();
        let cu = build_cu(&spec).unwrap();
        let composed = matmul_chain(&[delib, cu]).unwrap();
        assert!(full_unitary(&spec).unwrap().approx_eq(&composed, 1e-12));
    }
}
