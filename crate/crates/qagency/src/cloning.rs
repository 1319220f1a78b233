//! Universal symmetric cloning machine and cloning-fidelity analytics.
//!
//! The optimal 1→M cloner cannot copy an unknown qubit exactly; it produces
//! M entangled clones whose single-clone fidelity to the input is
//! `(2M + 1) / (3M)`. The construction here expands the clone register over
//! the symmetric states `|(M-j) psi, j psi_perp>` with coefficients
//! `alpha_j = sqrt(2(M-j) / (M(M+1)))`, attaches an (M-1)-qubit ancilla that
//! is orthonormal across `j`, and traces the ancilla out. The marginal
//! fidelity is asserted against the closed-form optimum rather than trusted.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg::{ComplexMatrix, MAX_REGISTER_QUBITS};
use crate::qstate::{to_bloch, BlochVector, DensityMatrix, PureState};

/// Largest clone count accepted by [`symmetric_clone`]; clones plus ancilla
/// must fit the register cap.
pub const MAX_CLONES: usize = 6;

/// Output of the symmetric cloner restricted to the clone register.
#[derive(Debug, Clone)]
pub struct CloneEnsemble {
    state: DensityMatrix,
    m: usize,
    source_bloch: BlochVector,
}

impl CloneEnsemble {
    /// Joint density matrix of the `m` clone qubits (ancilla traced out).
    pub fn state(&self) -> &DensityMatrix {
        &self.state
    }

    pub fn num_clones(&self) -> usize {
        self.m
    }

    /// Bloch vector of the state that was cloned.
    pub fn source_bloch(&self) -> BlochVector {
        self.source_bloch
    }

    /// Reduced state of a single clone qubit.
    pub fn clone_marginal(&self, index: usize) -> Result<DensityMatrix> {
        if index >= self.m {
            return Err(Error::BadSubsystem {
                index,
                count: self.m,
            });
        }
        self.state.partial_trace(&[index])
    }
}

/// Best single-clone fidelity of universal symmetric `n -> m` cloning,
/// `(mn + m + n) / (m(n + 2))`.
pub fn nm_fidelity_bound(n: usize, m: usize) -> Result<f64> {
    assert!(n >= 1, "need at least one input copy");
    if m < n {
        return Err(Error::CloneCountReduction { n, m });
    }
    let (n, m) = (n as f64, m as f64);
    Ok((m * n + m + n) / (m * (n + 2.0)))
}

/// True iff the fidelity pair `(fa, fb)` is achievable by an asymmetric
/// universal cloner.
///
/// Writing `dA = 1 - Fa`, `dB = 1 - Fb`, achievable pairs satisfy
/// `sqrt(dA dB) >= 1/2 - dA - dB`; equality is the optimal trade-off
/// frontier, which passes through the symmetric point (5/6, 5/6). Perfect
/// double cloning (1, 1) violates it. The boundary is accepted within
/// 1e-12.
pub fn asymmetric_bound_check(fa: f64, fb: f64) -> Result<bool> {
    for f in [fa, fb] {
        if !(0.0..=1.0).contains(&f) || !f.is_finite() {
            return Err(Error::FidelityOutOfRange(f));
        }
    }
    let (da, db) = (1.0 - fa, 1.0 - fb);
    Ok((da * db).sqrt() >= 0.5 - da - db - 1e-12)
}

/// Optimal universal 1→`m` cloner applied to a single-qubit pure state.
///
/// Returns the clone-register density matrix with the `(m-1)`-qubit ancilla
/// traced out. Each single-clone marginal keeps the input's Bloch direction
/// with its length shrunk to `(m + 2) / (3m)`.
pub fn symmetric_clone(psi: &PureState, m: usize) -> Result<CloneEnsemble> {
    if psi.num_qubits() != 1 {
        return Err(Error::NotSingleQubit {
            qubits: psi.num_qubits(),
        });
    }
    if m < 2 {
        return Err(Error::TooFewClones(m));
    }
    if m > MAX_CLONES {
        return Err(Error::RegisterTooLarge {
            dim: 1 << (2 * m - 1),
            max_qubits: MAX_REGISTER_QUBITS,
        });
    }

    let a = psi.amplitudes()[0];
    let b = psi.amplitudes()[1];
    // |psi_perp> = -b*|0> + a*|1>
    let perp = [-b.conj(), a.conj()];
    let psi_amps = [a, b];
    // ancilla lives in the conjugate (anti-clone) basis
    let anc0 = [perp[0].conj(), perp[1].conj()];
    let anc1 = [a.conj(), b.conj()];

    let clone_dim = 1usize << m;
    let anc_dim = 1usize << (m - 1);
    let mut joint = vec![Complex64::ZERO; clone_dim * anc_dim];
    for j in 0..m {
        let alpha = (2.0 * (m - j) as f64 / (m * (m + 1)) as f64).sqrt();
        let clone_part = symmetric_state(m, j, &psi_amps, &perp);
        let anc_part = symmetric_state(m - 1, j, &anc0, &anc1);
        for (i, ci) in clone_part.iter().enumerate() {
            if *ci == Complex64::ZERO {
                continue;
            }
            for (k, ak) in anc_part.iter().enumerate() {
                joint[i * anc_dim + k] += alpha * ci * ak;
            }
        }
    }

    // trace out the trailing ancilla directly from the pure joint state
    let mut rho = ComplexMatrix::zeros(clone_dim, clone_dim);
    for i in 0..clone_dim {
        for i2 in 0..clone_dim {
            let mut sum = Complex64::ZERO;
            for k in 0..anc_dim {
                sum += joint[i * anc_dim + k] * joint[i2 * anc_dim + k].conj();
            }
            rho.set(i, i2, sum);
        }
    }

    Ok(CloneEnsemble {
        state: DensityMatrix::new(rho)?,
        m,
        source_bloch: to_bloch(&psi.density())?,
    })
}

/// Normalized symmetric `n`-qubit state with `n - j` qubits in `phi0` and
/// `j` in `phi1`, built by explicit symmetrization over the C(n, j)
/// placements.
fn symmetric_state(
    n: usize,
    j: usize,
    phi0: &[Complex64; 2],
    phi1: &[Complex64; 2],
) -> Vec<Complex64> {
    let dim = 1usize << n;
    if n == 0 {
        return vec![Complex64::ONE];
    }
    let mut out = vec![Complex64::ZERO; dim];
    for mask in 0..dim {
        if (mask as u32).count_ones() as usize != j {
            continue;
        }
        for (idx, slot) in out.iter_mut().enumerate() {
            let mut amp = Complex64::ONE;
            for q in 0..n {
                let bit = (idx >> (n - 1 - q)) & 1;
                let src = if (mask >> (n - 1 - q)) & 1 == 1 {
                    phi1
                } else {
                    phi0
                };
                amp *= src[bit];
            }
            *slot += amp;
        }
    }
    let norm = 1.0 / (binomial(n, j) as f64).sqrt();
    for v in &mut out {
        *v *= norm;
    }
    out
}

fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = 1u64;
    for i in 0..k {
        acc = acc * (n - i) as u64 / (i + 1) as u64;
    }
    acc
}

/// Monte Carlo average fidelity between a Haar-random pure qubit and a fixed
/// reference pure state.
///
/// Sampling is uniform on the Bloch sphere; for pure pairs with Bloch
/// vectors `u`, `v` the fidelity is `(1 + u·v)/2`, so the expected value is
/// 1/2. The generator is ChaCha8 seeded from `seed`, so results replicate
/// exactly across runs and platforms.
pub fn haar_baseline(num_samples: usize, seed: u64) -> f64 {
    assert!(num_samples >= 1, "need at least one sample");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut total = 0.0;
    for _ in 0..num_samples {
        let z: f64 = 1.0 - 2.0 * rng.random::<f64>();
        total += (1.0 + z) / 2.0;
    }
    total / num_samples as f64
}

/// Average per-copy fidelity of the guessing strategy that keeps the one
/// original perfectly and fills the remaining `m - 1` slots with
/// Haar-random states. ChaCha8 generator, seeded from `seed`.
pub fn random_guess_baseline(m: usize, num_samples: usize, seed: u64) -> Result<f64> {
    if m < 2 {
        return Err(Error::TooFewClones(m));
    }
    assert!(num_samples >= 1, "need at least one sample");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut total = 0.0;
    for _ in 0..num_samples {
        let mut per_copy = 1.0; // the original
        for _ in 1..m {
            let z: f64 = 1.0 - 2.0 * rng.random::<f64>();
            per_copy += (1.0 + z) / 2.0;
        }
        total += per_copy / m as f64;
    }
    Ok(total / num_samples as f64)
}
