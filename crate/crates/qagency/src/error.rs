//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by state construction, circuit assembly, and the CLI.
#[derive(Debug, Error)]
pub enum Error {
    #[error("register too large: dimension {dim} exceeds the {max_qubits}-qubit cap")]
    RegisterTooLarge { dim: usize, max_qubits: u32 },

    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch in {op}: {lhs} vs {rhs}")]
    DimensionMismatch {
        op: &'static str,
        lhs: String,
        rhs: String,
    },

    #[error(
        "operator chain mismatch: ops[{left}] is {left_dims} but ops[{right}] is {right_dims}"
    )]
    ChainMismatch {
        left: usize,
        left_dims: String,
        right: usize,
        right_dims: String,
    },

    #[error("operator chain is empty")]
    EmptyChain,

    #[error("subsystem dims {dims:?} multiply to {product}, expected {expected}")]
    DimsProductMismatch {
        dims: Vec<usize>,
        product: usize,
        expected: usize,
    },

    #[error("partial trace must keep at least one subsystem")]
    EmptyKeep,

    #[error("invalid subsystem index {index} for {count} subsystems")]
    BadSubsystem { index: usize, count: usize },

    #[error("state is not normalized: |psi|^2 = {norm_sq}")]
    NotNormalized { norm_sq: f64 },

    #[error("expected a single-qubit state, got {qubits} qubits")]
    NotSingleQubit { qubits: usize },

    #[error("amplitude vector length {len} is not a power of two")]
    BadStateLength { len: usize },

    #[error("Bloch vector must have unit length, got {len}")]
    NotUnitBloch { len: f64 },

    #[error("not a density matrix: {reason}")]
    NotDensity { reason: String },

    #[error("cloning requires at least 2 clones, got {0}")]
    TooFewClones(usize),

    #[error("cloning cannot reduce copy count: n = {n}, m = {m}")]
    CloneCountReduction { n: usize, m: usize },

    #[error("fidelity {0} is outside [0, 1]")]
    FidelityOutOfRange(f64),

    #[error("mixed-mixed fidelity is only implemented for single qubits")]
    UnsupportedFidelity,

    #[error("control table entry for |{bitstring}> is not unitary")]
    NonUnitaryEntry { bitstring: String },

    #[error("operator {which} is not unitary")]
    NonUnitaryOperator { which: &'static str },

    #[error("invalid control table: {reason}")]
    BadControlTable { reason: String },

    #[error("basis states are not orthonormal: |<b0|b1>| = {overlap}")]
    NotOrthonormal { overlap: f64 },

    #[error("superposition not unitary")]
    SuperpositionNotUnitary,

    #[error("decisive input: selector exists here")]
    DecisiveInput,

    #[error("no unitary superposition exists for entry |{bitstring}>")]
    InfeasibleEntry { bitstring: String },

    #[error("nothing to optimize: circuit has no superposed control entries")]
    NothingToOptimize,

    #[error("unknown built-in circuit {0:?}")]
    UnknownCircuit(String),

    #[error("circuit spec schema error: {0}")]
    Schema(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
