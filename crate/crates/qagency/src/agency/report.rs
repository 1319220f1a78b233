//! Evaluation reports: per-state metrics over the 26-state test set plus
//! worst/average/best aggregates, exportable as CSV and JSON.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::qstate::BlochVector;

/// Input regime for a circuit evaluation: perfect copies of the environment
/// state, or the entangled output of the symmetric cloning machine.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Regime {
    Copies,
    Clones,
}

impl std::fmt::Display for Regime {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Regime::Copies => write!(f, "copies"),
            Regime::Clones => write!(f, "clones"),
        }
    }
}

impl std::str::FromStr for Regime {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "copies" => Ok(Regime::Copies),
            "clones" => Ok(Regime::Clones),
            other => Err(format!("unknown regime {other:?} (expected copies|clones)")),
        }
    }
}

/// Worst, arithmetic-mean, and best value of one metric over the test set.
///
/// "Worst" and "best" are metric-dependent: for fidelity and Bloch length
/// the worst value is the minimum, for angle error it is the maximum.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MetricSummary {
    pub worst: f64,
    pub average: f64,
    pub best: f64,
}

/// Metrics for one input state.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StateRecord {
    pub input_bloch: BlochVector,
    pub fidelity: f64,
    pub bloch_length: f64,
    pub bloch_angle_error: f64,
}

/// Full evaluation of one circuit in one regime.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvaluationReport {
    pub circuit_name: String,
    pub regime: Regime,
    pub states: Vec<StateRecord>,
    pub fidelity: MetricSummary,
    pub bloch_length: MetricSummary,
    pub bloch_angle_error: MetricSummary,
}

fn summarize(values: impl Iterator<Item = f64> + Clone, larger_is_better: bool) -> MetricSummary {
    let mut min = f64::INFINITY;
    let mut max = f64::NEG_INFINITY;
    let mut sum = 0.0;
    let mut count = 0usize;
    for v in values {
        min = min.min(v);
        max = max.max(v);
        sum += v;
        count += 1;
    }
    let average = sum / count as f64;
    if larger_is_better {
        MetricSummary {
            worst: min,
            average,
            best: max,
        }
    } else {
        MetricSummary {
            worst: max,
            average,
            best: min,
        }
    }
}

impl EvaluationReport {
    /// Assemble a report, computing the aggregates from the records.
    pub fn from_records(circuit_name: String, regime: Regime, states: Vec<StateRecord>) -> Self {
        assert!(!states.is_empty(), "report needs at least one record");
        let fidelity = summarize(states.iter().map(|r| r.fidelity), true);
        let bloch_length = summarize(states.iter().map(|r| r.bloch_length), true);
        let bloch_angle_error = summarize(states.iter().map(|r| r.bloch_angle_error), false);
        Self {
            circuit_name,
            regime,
            states,
            fidelity,
            bloch_length,
            bloch_angle_error,
        }
    }

    /// True iff recomputing the aggregates from the per-state records
    /// reproduces the stored aggregates exactly.
    pub fn aggregates_consistent(&self) -> bool {
        let recomputed =
            Self::from_records(self.circuit_name.clone(), self.regime, self.states.clone());
        recomputed.fidelity == self.fidelity
            && recomputed.bloch_length == self.bloch_length
            && recomputed.bloch_angle_error == self.bloch_angle_error
    }

    /// Largest absolute difference between the two reports' metrics,
    /// per-state and aggregate.
    pub fn max_metric_diff(&self, other: &Self) -> f64 {
        let mut d: f64 = 0.0;
        for (a, b) in self.states.iter().zip(&other.states) {
            d = d.max((a.fidelity - b.fidelity).abs());
            d = d.max((a.bloch_length - b.bloch_length).abs());
            d = d.max((a.bloch_angle_error - b.bloch_angle_error).abs());
        }
        for (a, b) in [
            (&self.fidelity, &other.fidelity),
            (&self.bloch_length, &other.bloch_length),
            (&self.bloch_angle_error, &other.bloch_angle_error),
        ] {
            d = d.max((a.worst - b.worst).abs());
            d = d.max((a.average - b.average).abs());
            d = d.max((a.best - b.best).abs());
        }
        d
    }

    /// CSV rendering: one row per input state followed by the three
    /// aggregate rows. Numbers print in shortest round-trip form.
    pub fn to_csv(&self) -> String {
        let mut out = String::from(
            "circuit,regime,row,state_index,bloch_x,bloch_y,bloch_z,fidelity,bloch_length,bloch_angle_error\n",
        );
        for (i, r) in self.states.iter().enumerate() {
            out.push_str(&format!(
                "{},{},state,{},{},{},{},{},{},{}\n",
                self.circuit_name,
                self.regime,
                i,
                r.input_bloch.x,
                r.input_bloch.y,
                r.input_bloch.z,
                r.fidelity,
                r.bloch_length,
                r.bloch_angle_error
            ));
        }
        for (row, f, l, a) in [
            (
                "worst",
                self.fidelity.worst,
                self.bloch_length.worst,
                self.bloch_angle_error.worst,
            ),
            (
                "average",
                self.fidelity.average,
                self.bloch_length.average,
                self.bloch_angle_error.average,
            ),
            (
                "best",
                self.fidelity.best,
                self.bloch_length.best,
                self.bloch_angle_error.best,
            ),
        ] {
            out.push_str(&format!(
                "{},{},{},,,,,{},{},{}\n",
                self.circuit_name, self.regime, row, f, l, a
            ));
        }
        out
    }

    pub fn to_json_string(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }
}
