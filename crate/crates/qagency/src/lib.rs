//! Simulation toolkit for "deliberate then act" qubit circuits.
//!
//! A deliberation circuit tests a set of candidate single-qubit unitaries on
//! spare copies of an unknown environment state and uses the outcomes, as a
//! quantum control register, to pick the action applied to a final target
//! copy. This crate builds those circuits, feeds them either perfect copies
//! or the output of the optimal universal cloning machine, scores the result
//! against the target state, and certifies numerically why the unitary
//! version of this scheme cannot act as a reliable selector.
//!
//! Modules:
//! - [`linalg`]: dense complex matrices, tensor products, partial traces.
//! - [`qstate`]: pure states, density matrices, Bloch-sphere metrics, and
//!   the canonical 26-state evaluation set.
//! - [`cloning`]: optimal universal symmetric 1→M cloner and fidelity
//!   analytics.
//! - [`agency`]: circuit specs, the four built-in circuits, and evaluation
//!   reports over copies or clones.
//! - [`nogo`]: numerical certificates for no-cloning, superposed-action
//!   symmetry, and selector impossibility.
//! - [`optimizer`]: derivative-free search over the free phases of
//!   superposed control-table entries.
//! - [`cli`]: command-line front end used by the `qagency` binary.
//!
//! See the `examples/` directory for a runnable tour of each capability.

pub mod agency;
pub mod cli;
pub mod cloning;
pub mod error;
pub mod linalg;
pub mod nogo;
pub mod optimizer;
pub mod qstate;

pub use agency::{
    builtin, builtin_circuits, evaluate, AgencyCircuitSpec, EvaluationReport, Regime,
};
pub use error::{Error, Result};
pub use linalg::ComplexMatrix;
pub use qstate::{BlochVector, DensityMatrix, PureState};
