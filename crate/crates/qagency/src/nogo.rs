//! Numerical certificates of the impossibility results that constrain
//! unitary deliberation: no-cloning, label-exchange symmetry of superposed
//! actions, and the nonexistence of a best-action selector.
//!
//! A certificate is a concrete witness computation, not a proof: it
//! exhibits inputs for which the forbidden behaviour misses its target by
//! a measured margin.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;
use crate::qstate::PureState;

/// How a certificate's magnitude is to be read.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CertificateKind {
    /// The magnitude witnesses a violation; the certificate holds when it
    /// exceeds the tolerance.
    Violation,
    /// The magnitude witnesses a symmetry; the certificate holds when it
    /// stays below the tolerance.
    Symmetry,
}

/// Outcome of one certificate run, serializable for CLI reports.
#[derive(Debug, Clone, Serialize)]
pub struct NoGoCertificate {
    pub claim_id: String,
    pub witness: String,
    pub violation_magnitude: f64,
    pub tolerance: f64,
    pub kind: CertificateKind,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub overlap: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub scaled_unitary: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl NoGoCertificate {
    /// A violation certificate holds when the magnitude exceeds the
    /// tolerance; a symmetry certificate when it stays below.
    pub fn is_valid(&self) -> bool {
        match self.kind {
            CertificateKind::Violation => self.violation_magnitude > self.tolerance,
            CertificateKind::Symmetry => self.violation_magnitude <= self.tolerance,
        }
    }

    pub fn to_json_string(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }
}

/// Margin below which a selector grid search would count as "achieved";
/// the linearity argument guarantees a strictly positive deviation.
pub const SELECTOR_FLOOR: f64 = 0.01;

fn require_qubit_unitary(u: &ComplexMatrix, which: &'static str) -> Result<()> {
    if u.rows() != 2 || u.cols() != 2 || !u.is_unitary(1e-10)? {
        return Err(Error::NonUnitaryOperator { which });
    }
    Ok(())
}

/// Feed `(alpha|0> + beta|1>) ⊗ |R>` through the unitary that clones both
/// computational basis states (CNOT with `|R> = |0>`) and measure how far
/// the output lands from the intended clone `|psi> ⊗ |psi>`.
///
/// The distance vanishes exactly when `alpha * beta = 0`: a machine that
/// copies a basis cannot also copy its superpositions.
pub fn no_cloning_witness(alpha: Complex64, beta: Complex64) -> Result<NoGoCertificate> {
    let norm_sq = alpha.norm_sqr() + beta.norm_sqr();
    if (norm_sq - 1.0).abs() > 1e-10 {
        return Err(Error::NotNormalized { norm_sq });
    }
    // CNOT(|psi>|0>) = alpha|00> + beta|11>
    let cloned = [alpha, Complex64::ZERO, Complex64::ZERO, beta];
    let product = [alpha * alpha, alpha * beta, beta * alpha, beta * beta];
    let violation = cloned
        .iter()
        .zip(&product)
        .map(|(a, b)| (a - b).norm_sqr())
        .sum::<f64>()
        .sqrt();

    let tolerance = 1e-9;
    let boundary = violation <= tolerance;
    Ok(NoGoCertificate {
        claim_id: "no-cloning".into(),
        witness: format!(
            "basis cloner |x>|0> -> |x>|x> applied to ({alpha:.6})|0> + ({beta:.6})|1>; \
             output distance to |psi>|psi| measured in vector norm"
        ),
        violation_magnitude: violation,
        tolerance,
        kind: CertificateKind::Violation,
        overlap: None,
        scaled_unitary: None,
        note: boundary.then(|| "boundary case, not a violation: input is a basis state".into()),
    })
}

/// Apply the superposition `U_0 + U_1` to one copy of `psi` and certify the
/// label-exchange symmetry: `U_0|psi> + U_1|psi>` is the same vector as
/// `U_1|psi> + U_0|psi>`, so nothing in the output records which branch
/// came from which action.
///
/// The certificate also reports `|<psi_x|psi_y>|` (how distinguishable the
/// two branch outputs would have been) and whether `U_0 + U_1` is unitary
/// after scaling, which holds only for special operator pairs. Errors when
/// the superposition annihilates the state, in which case no normalized
/// output exists.
pub fn superposed_action_symmetry(
    psi: &PureState,
    u0: &ComplexMatrix,
    u1: &ComplexMatrix,
) -> Result<NoGoCertificate> {
    if psi.num_qubits() != 1 {
        return Err(Error::NotSingleQubit {
            qubits: psi.num_qubits(),
        });
    }
    require_qubit_unitary(u0, "u0")?;
    require_qubit_unitary(u1, "u1")?;

    let col = psi.as_column();
    let v0 = u0.matmul(&col);
    let v1 = u1.matmul(&col);
    let forward = v0.add(&v1);
    let backward = v1.add(&v0);
    let violation = forward.max_abs_diff(&backward);

    let norm = forward.frobenius_norm();
    if norm <= 1e-9 {
        return Err(Error::SuperpositionNotUnitary);
    }
    let out = forward.scale(Complex64::new(1.0 / norm, 0.0));

    // is (u0 + u1)/c unitary for some scalar c?
    let sum = u0.add(u1);
    let gram = sum.dagger().matmul(&sum);
    let lambda = gram.trace().re / 2.0;
    let scaled_unitary = lambda > 1e-12
        && gram.max_abs_diff(&ComplexMatrix::identity(2).scale(Complex64::new(lambda, 0.0)))
            <= 1e-9;

    let overlap = v0.dagger().matmul(&v1).get(0, 0).norm();
    Ok(NoGoCertificate {
        claim_id: "superposed-action-symmetry".into(),
        witness: format!(
            "(U0 + U1)|psi> normalized to ({:.6})|0> + ({:.6})|1>; \
             branch order is unobservable, so the agent cannot tell which \
             action produced which term",
            out.get(0, 0),
            out.get(1, 0)
        ),
        violation_magnitude: violation,
        tolerance: 1e-12,
        kind: CertificateKind::Symmetry,
        overlap: Some(overlap),
        scaled_unitary: Some(scaled_unitary),
        note: (!scaled_unitary)
            .then(|| "U0 + U1 is not proportional to a unitary; only the state-level action is normalized".into()),
    })
}

/// Grid-search certificate that no controlled completion turns the
/// deliberation circuit into a reliable best-action selector.
///
/// The two decisive branches are pinned by the selector conditions:
/// `|01>|psi> -> |01> U1|psi>` and `|10>|psi> -> |10> U2|psi>`. The free
/// images of `|00>|psi>` and `|11>|psi>` are parameterized as controlled
/// completions `|00>⊗t0`, `|11>⊗t1` with `t0`, `t1` ranging over a
/// `(theta, phi)` Bloch grid (`grid` points per real parameter, theta
/// endpoint included). For every completion the deliberation output on
/// `U1|psi> ⊗ U2|psi> ⊗ |psi>` is scored by how far it sits from the
/// nearest ideal outcome `|z> ⊗ U_i|psi>`:
/// `(1 - max Schmidt coefficient^2)` for the control-target entanglement
/// plus the trace distance from the reduced target state to the nearer of
/// `U1|psi>`, `U2|psi>`. The returned magnitude is the minimum over the
/// grid; refining `grid` by an integer multiple can only lower it.
///
/// Errors with a decisive-input diagnosis when any of the four control
/// amplitudes vanishes: for basis-state deliberations the selector exists
/// and succeeds exactly.
pub fn selector_impossibility(
    u1: &ComplexMatrix,
    u2: &ComplexMatrix,
    psi: &PureState,
    grid: usize,
) -> Result<NoGoCertificate> {
    if psi.num_qubits() != 1 {
        return Err(Error::NotSingleQubit {
            qubits: psi.num_qubits(),
        });
    }
    require_qubit_unitary(u1, "u1")?;
    require_qubit_unitary(u2, "u2")?;
    assert!(grid >= 1, "grid must be positive");

    let col = psi.as_column();
    let v1 = u1.matmul(&col);
    let v2 = u2.matmul(&col);
    let (a, b) = (v1.get(0, 0), v1.get(1, 0));
    let (c, d) = (v2.get(0, 0), v2.get(1, 0));
    if [a, b, c, d].iter().any(|amp| amp.norm() < 1e-9) {
        return Err(Error::DecisiveInput);
    }

    let bloch_of = |p: Complex64, q: Complex64| -> [f64; 3] {
        // Bloch vector of the rank-one state (p, q)(p, q)^dagger
        [
            2.0 * (p.conj() * q).re,
            2.0 * (p.conj() * q).im,
            p.norm_sqr() - q.norm_sqr(),
        ]
    };
    let target1 = bloch_of(a, b);
    let target2 = bloch_of(c, d);

    // fixed decisive rows of the output, as unnormalized target-qubit vectors
    let row1 = [a * d * a, a * d * b];
    let row2 = [b * c * c, b * c * d];
    let w0 = (a * c).norm();
    let w3 = (b * d).norm();

    let thetas: Vec<f64> = (0..=grid)
        .map(|k| std::f64::consts::PI * k as f64 / grid as f64)
        .collect();
    let phis: Vec<f64> = (0..grid)
        .map(|k| 2.0 * std::f64::consts::PI * k as f64 / grid as f64)
        .collect();
    let mut completions = Vec::with_capacity(thetas.len() * phis.len());
    for &theta in &thetas {
        for &phi in &phis {
            completions.push([
                Complex64::new((theta / 2.0).cos(), 0.0),
                Complex64::from_polar((theta / 2.0).sin(), phi),
            ]);
        }
    }

    let mut best = f64::INFINITY;
    let mut best_pair = (0usize, 0usize);
    for (i0, t0) in completions.iter().enumerate() {
        // accumulate the |00> branch once per t0
        let r0 = [t0[0] * w0, t0[1] * w0];
        for (i3, t1) in completions.iter().enumerate() {
            let r3 = [t1[0] * w3, t1[1] * w3];
            // reduced target state rho = sum_b r_b r_b^dagger
            let mut p00 = 0.0;
            let mut p01 = Complex64::ZERO;
            let mut p11 = 0.0;
            for r in [&r0, &row1, &row2, &r3] {
                p00 += r[0].norm_sqr();
                p11 += r[1].norm_sqr();
                p01 += r[0] * r[1].conj();
            }
            let bloch = [2.0 * p01.re, -2.0 * p01.im, p00 - p11];
            let len = (bloch[0] * bloch[0] + bloch[1] * bloch[1] + bloch[2] * bloch[2]).sqrt();
            // largest Schmidt coefficient^2 = largest eigenvalue of rho
            let entanglement = 1.0 - (1.0 + len) / 2.0;
            let dist = |t: &[f64; 3]| {
                let dx = bloch[0] - t[0];
                let dy = bloch[1] - t[1];
                let dz = bloch[2] - t[2];
                0.5 * (dx * dx + dy * dy + dz * dz).sqrt()
            };
            let deviation = entanglement + dist(&target1).min(dist(&target2));
            if deviation < best {
                best = deviation;
                best_pair = (i0, i3);
            }
        }
    }

    Ok(NoGoCertificate {
        claim_id: "selector-impossibility".into(),
        witness: format!(
            "controlled completions |00>⊗t0, |11>⊗t1 on a {grid}-point Bloch grid; \
             best completion indices (t0 = {}, t1 = {}) of {} still deviates from \
             every product form |z> ⊗ Ui|psi>",
            best_pair.0,
            best_pair.1,
            completions.len()
        ),
        violation_magnitude: best,
        tolerance: SELECTOR_FLOOR,
        kind: CertificateKind::Violation,
        overlap: None,
        scaled_unitary: None,
        note: None,
    })
}
