//! JSON wire format for circuit specs.
//!
//! ```json
//! {
//!   "schema_version": 1,
//!   "name": "Q_IX",
//!   "deliberation_unitaries": [[[ [1,0],[0,0] ], [ [0,0],[1,0] ]], ...],
//!   "control_table": { "00": <matrix>, "01": <matrix>, ... },
//!   "target_state": [[1,0],[0,0]]
//! }
//! ```
//!
//! A matrix is an array of rows, each row an array of `[re, im]` pairs; a
//! state is an array of `[re, im]` amplitude pairs. `schema_version` is
//! mandatory and must equal [`SCHEMA_VERSION`].

use std::collections::BTreeMap;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;
use crate::qstate::PureState;

use super::AgencyCircuitSpec;

pub const SCHEMA_VERSION: u32 = 1;

type MatrixJson = Vec<Vec<[f64; 2]>>;
type StateJson = Vec<[f64; 2]>;

#[derive(Debug, Serialize, Deserialize)]
pub struct CircuitSpecJson {
    pub schema_version: u32,
    pub name: String,
    pub deliberation_unitaries: Vec<MatrixJson>,
    pub control_table: BTreeMap<String, MatrixJson>,
    pub target_state: StateJson,
}

fn matrix_to_json(m: &ComplexMatrix) -> MatrixJson {
    (0..m.rows())
        .map(|i| {
            (0..m.cols())
                .map(|j| [m.get(i, j).re, m.get(i, j).im])
                .collect()
        })
        .collect()
}

fn matrix_from_json(rows: &MatrixJson, what: &str) -> Result<ComplexMatrix> {
    let n_rows = rows.len();
    let n_cols = rows.first().map(Vec::len).unwrap_or(0);
    if n_rows == 0 || rows.iter().any(|r| r.len() != n_cols) {
        return Err(Error::Schema(format!("{what}: ragged or empty matrix")));
    }
    let entries = rows
        .iter()
        .flatten()
        .map(|&[re, im]| Complex64::new(re, im))
        .collect::<Vec<_>>();
    if entries
        .iter()
        .any(|c| !c.re.is_finite() || !c.im.is_finite())
    {
        return Err(Error::Schema(format!("{what}: non-finite entry")));
    }
    Ok(ComplexMatrix::new(n_rows, n_cols, entries))
}

/// Serialize a circuit spec to pretty-printed JSON.
pub fn spec_to_json(spec: &AgencyCircuitSpec) -> Result<String> {
    let json = CircuitSpecJson {
        schema_version: SCHEMA_VERSION,
        name: spec.name().to_string(),
        deliberation_unitaries: spec
            .deliberation_unitaries()
            .iter()
            .map(matrix_to_json)
            .collect(),
        control_table: spec
            .control_table()
            .iter()
            .map(|(bits, m)| (bits.clone(), matrix_to_json(m)))
            .collect(),
        target_state: spec
            .target_state()
            .amplitudes()
            .iter()
            .map(|a| [a.re, a.im])
            .collect(),
    };
    Ok(serde_json::to_string_pretty(&json)?)
}

/// Parse and validate a circuit spec from JSON text.
pub fn spec_from_json(text: &str) -> Result<AgencyCircuitSpec> {
    let json: CircuitSpecJson =
        serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))?;
    if json.schema_version != SCHEMA_VERSION {
        return Err(Error::Schema(format!(
            "unsupported schema_version {} (expected {SCHEMA_VERSION})",
            json.schema_version
        )));
    }
    let delib = json
        .deliberation_unitaries
        .iter()
        .enumerate()
        .map(|(i, m)| matrix_from_json(m, &format!("deliberation_unitaries[{i}]")))
        .collect::<Result<Vec<_>>>()?;
    let table = json
        .control_table
        .iter()
        .map(|(bits, m)| {
            Ok((
                bits.clone(),
                matrix_from_json(m, &format!("control_table[{bits}]"))?,
            ))
        })
        .collect::<Result<BTreeMap<_, _>>>()?;
    let amps = json
        .target_state
        .iter()
        .map(|&[re, im]| Complex64::new(re, im))
        .collect::<Vec<_>>();
    let target = PureState::new(amps).map_err(|e| Error::Schema(format!("target_state: {e}")))?;
    AgencyCircuitSpec::new(json.name, delib, table, target)
}
