//! Qubit-register states, Bloch-sphere conversions, fidelity, and the
//! canonical 26-state evaluation set.
//!
//! Conventions used throughout the crate:
//! - the target of every evaluation is `|0>`, i.e. the +z pole;
//! - Bloch angle error is the angle between a state's Bloch vector and the
//!   +z axis, computed as `atan2(hypot(x, y), z)`. A zero-length Bloch
//!   vector carries no direction, so its angle error is defined as 0;
//! - pure states reconstructed from Bloch vectors fix the global phase by
//!   making the `|0>` amplitude real and non-negative.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, gates, ComplexMatrix};

/// Tolerance below which a Bloch vector is treated as directionless.
pub const ZERO_LENGTH_TOL: f64 = 1e-9;

const NORM_TOL: f64 = 1e-10;

/// Normalized pure state of an n-qubit register.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    amplitudes: Vec<Complex64>,
    num_qubits: usize,
}

impl PureState {
    /// Build a state from amplitudes; the length must be a power of two and
    /// the squared norm must be 1 within 1e-10.
    pub fn new(amplitudes: Vec<Complex64>) -> Result<Self> {
        let len = amplitudes.len();
        if len < 2 || !len.is_power_of_two() {
            return Err(Error::BadStateLength { len });
        }
        let norm_sq: f64 = amplitudes.iter().map(|a| a.norm_sqr()).sum();
        if (norm_sq - 1.0).abs() > NORM_TOL {
            return Err(Error::NotNormalized { norm_sq });
        }
        Ok(Self {
            amplitudes,
            num_qubits: len.trailing_zeros() as usize,
        })
    }

    /// Single-qubit state `a|0> + b|1>`.
    pub fn qubit(a: Complex64, b: Complex64) -> Result<Self> {
        Self::new(vec![a, b])
    }

    /// Computational basis state `|index>` on `num_qubits` qubits.
    pub fn basis(num_qubits: usize, index: usize) -> Self {
        let dim = 1usize << num_qubits;
        assert!(index < dim, "basis index out of range");
        let mut amplitudes = vec![Complex64::ZERO; dim];
        amplitudes[index] = Complex64::ONE;
        Self {
            amplitudes,
            num_qubits,
        }
    }

    pub fn zero() -> Self {
        Self::basis(1, 0)
    }

    pub fn one() -> Self {
        Self::basis(1, 1)
    }

    pub fn plus() -> Self {
        let s = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        Self::qubit(s, s).expect("|+> is normalized")
    }

    pub fn minus() -> Self {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        Self::qubit(Complex64::new(s, 0.0), Complex64::new(-s, 0.0)).expect("|-> is normalized")
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn as_column(&self) -> ComplexMatrix {
        ComplexMatrix::column(&self.amplitudes)
    }

    /// Tensor product `self ⊗ other` (self is the most significant factor).
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        let col = self.as_column().kron(&other.as_column())?;
        Ok(Self {
            amplitudes: col.entries().to_vec(),
            num_qubits: self.num_qubits + other.num_qubits,
        })
    }

    /// `self ⊗ self ⊗ ... ⊗ self`, `n` factors.
    pub fn tensor_power(&self, n: usize) -> Result<Self> {
        assert!(n >= 1, "tensor power needs at least one factor");
        let mut out = self.clone();
        for _ in 1..n {
            out = out.tensor(self)?;
        }
        Ok(out)
    }

    pub fn density(&self) -> DensityMatrix {
        let col = self.as_column();
        let rho = col.matmul(&col.dagger());
        DensityMatrix {
            matrix: rho,
            num_qubits: self.num_qubits,
        }
    }

    /// Inner product `<self|other>`.
    pub fn inner(&self, other: &Self) -> Complex64 {
        assert_eq!(self.num_qubits, other.num_qubits);
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }
}

/// Density matrix of an n-qubit register: Hermitian, unit trace, positive
/// semidefinite up to a -1e-8 eigenvalue floor. All checks run at
/// construction.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    matrix: ComplexMatrix,
    num_qubits: usize,
}

impl DensityMatrix {
    pub fn new(matrix: ComplexMatrix) -> Result<Self> {
        let dim = matrix.rows();
        if !matrix.is_square() {
            return Err(Error::NotDensity {
                reason: format!("matrix is {}x{}", matrix.rows(), matrix.cols()),
            });
        }
        if dim < 2 || !dim.is_power_of_two() {
            return Err(Error::NotDensity {
                reason: format!("dimension {dim} is not a power of two"),
            });
        }
        if !matrix.is_hermitian(1e-10) {
            return Err(Error::NotDensity {
                reason: "not Hermitian within 1e-10".into(),
            });
        }
        let tr = matrix.trace();
        if (tr.re - 1.0).abs() > 1e-10 || tr.im.abs() > 1e-10 {
            return Err(Error::NotDensity {
                reason: format!("trace {tr} is not 1 within 1e-10"),
            });
        }
        let min_eig = matrix
            .hermitian_eigenvalues()?
            .first()
            .copied()
            .unwrap_or(0.0);
        if min_eig < -1e-8 {
            return Err(Error::NotDensity {
                reason: format!("minimum eigenvalue {min_eig} below -1e-8"),
            });
        }
        Ok(Self {
            matrix,
            num_qubits: dim.trailing_zeros() as usize,
        })
    }

    pub fn from_pure(state: &PureState) -> Self {
        state.density()
    }

    /// Construction for matrices already known to be valid density
    /// matrices (unitary conjugations and partial traces of validated
    /// states preserve all three invariants), skipping the eigenvalue
    /// check that dominates hot evaluation loops.
    pub(crate) fn trusted(matrix: ComplexMatrix) -> Self {
        debug_assert!(matrix.is_hermitian(1e-9));
        debug_assert!((matrix.trace().re - 1.0).abs() < 1e-9);
        let dim = matrix.rows();
        Self {
            matrix,
            num_qubits: dim.trailing_zeros() as usize,
        }
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    /// `tr(rho^2)`; 1 for pure states.
    pub fn purity(&self) -> f64 {
        self.matrix.matmul(&self.matrix).trace().re
    }

    /// Reduced state on the listed qubits (qubit 0 is the most significant
    /// tensor factor).
    pub fn partial_trace(&self, keep: &[usize]) -> Result<DensityMatrix> {
        let dims = vec![2usize; self.num_qubits];
        let reduced = linalg::partial_trace(&self.matrix, &dims, keep)?;
        DensityMatrix::new(reduced)
    }
}

/// Point in (or on) the Bloch ball.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BlochVector {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl BlochVector {
    pub fn new(x: f64, y: f64, z: f64) -> Self {
        Self { x, y, z }
    }

    pub fn length(&self) -> f64 {
        (self.x * self.x + self.y * self.y + self.z * self.z).sqrt()
    }

    pub fn dot(&self, other: &Self) -> f64 {
        self.x * other.x + self.y * other.y + self.z * other.z
    }

    pub fn negated(&self) -> Self {
        Self::new(-self.x, -self.y, -self.z)
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        (self.x - other.x).abs() <= tol
            && (self.y - other.y).abs() <= tol
            && (self.z - other.z).abs() <= tol
    }
}

/// Fidelity between two density matrices of equal dimension.
///
/// Single-qubit pairs use the closed form `tr(rho sigma) + 2 sqrt(det rho
/// det sigma)`, which is exact for qubits and avoids matrix square roots.
/// In higher dimensions at least one argument must be pure, in which case
/// the fidelity is `tr(rho sigma)`.
pub fn fidelity(rho: &DensityMatrix, sigma: &DensityMatrix) -> Result<f64> {
    if rho.dim() != sigma.dim() {
        return Err(Error::DimensionMismatch {
            op: "fidelity",
            lhs: format!("{}", rho.dim()),
            rhs: format!("{}", sigma.dim()),
        });
    }
    let overlap = rho.matrix().matmul(sigma.matrix()).trace().re;
    let value = if rho.num_qubits() == 1 {
        let det = |m: &ComplexMatrix| {
            let d = (m.get(0, 0) * m.get(1, 1) - m.get(0, 1) * m.get(1, 0)).re;
            // rounding leaves pure states with determinants of order 1e-17;
            // floor them so the closed form stays exact against pure states
            if d < 1e-15 {
                0.0
            } else {
                d
            }
        };
        overlap + 2.0 * (det(rho.matrix()) * det(sigma.matrix())).sqrt()
    } else if rho.purity() >= 1.0 - 1e-9 || sigma.purity() >= 1.0 - 1e-9 {
        overlap
    } else {
        return Err(Error::UnsupportedFidelity);
    };
    Ok(value.clamp(0.0, 1.0))
}

/// Bloch vector `(tr(rho X), tr(rho Y), tr(rho Z))` of a single-qubit state.
/// Imaginary residue below 1e-10 is discarded.
pub fn to_bloch(rho: &DensityMatrix) -> Result<BlochVector> {
    if rho.num_qubits() != 1 {
        return Err(Error::NotSingleQubit {
            qubits: rho.num_qubits(),
        });
    }
    let expect = |op: ComplexMatrix| rho.matrix().matmul(&op).trace().re;
    Ok(BlochVector::new(
        expect(gates::pauli_x()),
        expect(gates::pauli_y()),
        expect(gates::pauli_z()),
    ))
}

/// Bloch vector length and angle error from the +z axis (the `|0>` target).
///
/// Vectors shorter than [`ZERO_LENGTH_TOL`] have no direction and report an
/// angle error of 0.
pub fn bloch_metrics(rho: &DensityMatrix) -> Result<(f64, f64)> {
    let v = to_bloch(rho)?;
    let length = v.length();
    let angle = if length < ZERO_LENGTH_TOL {
        0.0
    } else {
        (v.x * v.x + v.y * v.y).sqrt().atan2(v.z)
    };
    Ok((length, angle))
}

/// Pure state with the given unit Bloch vector; the `|0>` amplitude is made
/// real and non-negative.
pub fn pure_from_bloch(v: &BlochVector) -> Result<PureState> {
    let len = v.length();
    if (len - 1.0).abs() > 1e-9 {
        return Err(Error::NotUnitBloch { len });
    }
    let theta = v.z.clamp(-1.0, 1.0).acos();
    let phi = v.y.atan2(v.x);
    let a = Complex64::new((theta / 2.0).cos(), 0.0);
    let b = Complex64::from_polar((theta / 2.0).sin(), phi);
    // renormalize away the rounding in cos/sin
    let norm = (a.norm_sqr() + b.norm_sqr()).sqrt();
    PureState::qubit(a / norm, b / norm)
}

/// The 26 canonical single-qubit test states.
///
/// Their Bloch vectors are the signed permutations of `(±1, 0, 0)` (6 axis
/// points), `(±1, ±1, 0)/√2` (12 edge points), and `(±1, ±1, ±1)/√3` (8
/// corner points). Within each group the order is lexicographically
/// descending in `(x, y, z)`; axes come first, then edges, then corners.
/// The ordering is fixed so that reports are reproducible byte for byte.
pub fn test_states() -> Vec<PureState> {
    test_blochs()
        .iter()
        .map(|v| pure_from_bloch(v).expect("test vectors are unit length"))
        .collect()
}

/// Bloch vectors of [`test_states`], in the same canonical order.
pub fn test_blochs() -> Vec<BlochVector> {
    let mut axes = Vec::new();
    for axis in 0..3 {
        for sign in [1.0, -1.0] {
            let mut v = [0.0; 3];
            v[axis] = sign;
            axes.push(BlochVector::new(v[0], v[1], v[2]));
        }
    }

    let s = std::f64::consts::FRAC_1_SQRT_2;
    let mut edges = Vec::new();
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        for si in [1.0, -1.0] {
            for sj in [1.0, -1.0] {
                let mut v = [0.0; 3];
                v[i] = si * s;
                v[j] = sj * s;
                edges.push(BlochVector::new(v[0], v[1], v[2]));
            }
        }
    }

    let c = 1.0 / 3f64.sqrt();
    let mut corners = Vec::new();
    for sx in [1.0, -1.0] {
        for sy in [1.0, -1.0] {
            for sz in [1.0, -1.0] {
                corners.push(BlochVector::new(sx * c, sy * c, sz * c));
            }
        }
    }

    let desc = |a: &BlochVector, b: &BlochVector| {
        (b.x, b.y, b.z)
            .partial_cmp(&(a.x, a.y, a.z))
            .expect("test vectors are finite")
    };
    axes.sort_by(desc);
    edges.sort_by(desc);
    corners.sort_by(desc);

    let mut all = axes;
    all.extend(edges);
    all.extend(corners);
    all
}
