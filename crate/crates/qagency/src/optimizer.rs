//! Derivative-free search over the free phases of superposed control-table
//! entries.
//!
//! Ambiguous control rows apply `sum_i e^{i theta_i} U_i` rescaled to
//! unitarity, and the phase choices are not pinned by the deliberation
//! conditions. This module parameterizes those phases (the first term of
//! each row is held at its built-in value, since a row's global phase is
//! unobservable) and maximizes an evaluation objective by coordinate-wise
//! golden-section refinement plus seeded random restarts.
//!
//! Unitarity survives superposition only on a thin feasible set — for
//! Pauli-algebra rows it is a lattice of quarter turns — so every
//! candidate is filtered through the unitarity check and each restart is
//! also probed after snapping to the nearest quarter-turn lattice point.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::f64::consts::{FRAC_PI_2, PI, TAU};

use crate::agency::{self, evaluate, AgencyCircuitSpec, Regime};
use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;

/// What the search maximizes. Average fidelity is the default; worst-case
/// fidelity is exposed as an alternative reading of "performs better".
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Objective {
    #[default]
    AverageFidelity,
    WorstFidelity,
}

/// One superposed control row opened up for optimization.
#[derive(Debug, Clone)]
pub struct FreeEntry {
    /// Control bitstring of the row.
    pub bitstring: String,
    /// Palette indices of the superposed operators.
    pub terms: Vec<usize>,
    /// Starting phases, one per term; the first stays fixed.
    pub seed_phases: Vec<f64>,
}

/// Search space: a base circuit plus the rows whose phases are free.
#[derive(Debug, Clone)]
pub struct ParamSpace {
    base: AgencyCircuitSpec,
    palette: Vec<ComplexMatrix>,
    free: Vec<FreeEntry>,
}

impl ParamSpace {
    /// Build the search space of a built-in circuit. Rows applying a
    /// single operator are decisive and never varied; the space is empty
    /// for circuits without superposed rows.
    pub fn for_builtin(name: &str) -> Result<Self> {
        let def = agency::find_def(name).ok_or_else(|| Error::UnknownCircuit(name.to_string()))?;
        let palette = (def.palette)();
        let free = def
            .rows
            .iter()
            .filter(|row| row.terms.len() >= 2)
            .map(|row| FreeEntry {
                bitstring: row.bits.to_string(),
                terms: row.terms.iter().map(|&(i, _)| i).collect(),
                seed_phases: row.terms.iter().map(|&(_, p)| p).collect(),
            })
            .collect();
        Ok(Self {
            base: agency::builtin(name)?,
            palette,
            free,
        })
    }

    /// Assemble a custom search space over an arbitrary circuit.
    pub fn new(
        base: AgencyCircuitSpec,
        palette: Vec<ComplexMatrix>,
        free: Vec<FreeEntry>,
    ) -> Result<Self> {
        for entry in &free {
            if base.entry(&entry.bitstring).is_none() {
                return Err(Error::BadControlTable {
                    reason: format!("free entry |{}> not present in the table", entry.bitstring),
                });
            }
            if entry.terms.len() < 2 || entry.terms.len() != entry.seed_phases.len() {
                return Err(Error::BadControlTable {
                    reason: format!("free entry |{}> has malformed terms", entry.bitstring),
                });
            }
            if entry.terms.iter().any(|&i| i >= palette.len()) {
                return Err(Error::BadControlTable {
                    reason: format!(
                        "free entry |{}> indexes outside the palette",
                        entry.bitstring
                    ),
                });
            }
        }
        Ok(Self {
            base,
            palette,
            free,
        })
    }

    pub fn base_spec(&self) -> &AgencyCircuitSpec {
        &self.base
    }

    pub fn free_entries(&self) -> &[FreeEntry] {
        &self.free
    }

    /// Total number of free phase angles (terms beyond the first of every
    /// free row).
    pub fn num_params(&self) -> usize {
        self.free.iter().map(|e| e.terms.len() - 1).sum()
    }

    /// Phases of the built-in tables, the search's starting point.
    pub fn seed_params(&self) -> Vec<f64> {
        self.free
            .iter()
            .flat_map(|e| e.seed_phases[1..].iter().copied())
            .collect()
    }

    /// Circuit at a parameter point. Fails with the offending bitstring
    /// when a row's phased sum does not rescale to a unitary.
    pub fn spec_for(&self, params: &[f64]) -> Result<AgencyCircuitSpec> {
        assert_eq!(params.len(), self.num_params(), "parameter count mismatch");
        let mut table = self.base.control_table().clone();
        let mut cursor = 0usize;
        for entry in &self.free {
            let n_free = entry.terms.len() - 1;
            let mut terms = Vec::with_capacity(entry.terms.len());
            terms.push((entry.terms[0], entry.seed_phases[0]));
            for (i, &theta) in params[cursor..cursor + n_free].iter().enumerate() {
                terms.push((entry.terms[i + 1], theta));
            }
            cursor += n_free;
            let matrix = agency::synthesize_entry(&self.palette, &terms, &entry.bitstring)?;
            table.insert(entry.bitstring.clone(), matrix);
        }
        AgencyCircuitSpec::new(
            self.base.name().to_string(),
            self.base.deliberation_unitaries().to_vec(),
            table,
            self.base.target_state().clone(),
        )
        .map_err(|e| match e {
            Error::NonUnitaryEntry { bitstring } => Error::InfeasibleEntry { bitstring },
            other => other,
        })
    }
}

/// Evaluation objective of a circuit under the given regime.
pub fn objective(spec: &AgencyCircuitSpec, regime: Regime) -> Result<f64> {
    objective_with(spec, regime, Objective::AverageFidelity)
}

pub fn objective_with(spec: &AgencyCircuitSpec, regime: Regime, kind: Objective) -> Result<f64> {
    let report = evaluate(spec, regime)?;
    Ok(match kind {
        Objective::AverageFidelity => report.fidelity.average,
        Objective::WorstFidelity => report.fidelity.worst,
    })
}

/// One audited point of the search.
#[derive(Debug, Clone, Serialize)]
pub struct TracePoint {
    pub params: Vec<f64>,
    pub value: f64,
}

/// Search result: the best circuit found, its objective value, the
/// starting value, and the audit trace of accepted points.
#[derive(Debug, Clone)]
pub struct OptimizeOutcome {
    pub best_spec: AgencyCircuitSpec,
    pub best_value: f64,
    pub baseline: f64,
    pub trace: Vec<TracePoint>,
}

impl OptimizeOutcome {
    /// JSON export: best spec in the circuit-spec schema plus the trace.
    pub fn to_json_string(&self) -> Result<String> {
        let spec_value: serde_json::Value =
            serde_json::from_str(&agency::schema::spec_to_json(&self.best_spec)?)?;
        let doc = serde_json::json!({
            "baseline": self.baseline,
            "best_value": self.best_value,
            "best_spec": spec_value,
            "trace": self.trace,
        });
        Ok(serde_json::to_string_pretty(&doc)?)
    }
}

/// Maximize the average fidelity over the free phases. See
/// [`optimize_with`].
pub fn optimize(
    space: &ParamSpace,
    regime: Regime,
    budget: usize,
    seed: u64,
) -> Result<OptimizeOutcome> {
    optimize_with(space, regime, budget, seed, Objective::AverageFidelity)
}

/// Coordinate-wise golden-section refinement from the built-in phases,
/// plus `budget` seeded random restarts (each probed raw and snapped to
/// the quarter-turn lattice). The result is never worse than the
/// starting point, is deterministic for a fixed seed, and is
/// non-decreasing in `budget`: restart `r` depends only on `seed` and `r`.
pub fn optimize_with(
    space: &ParamSpace,
    regime: Regime,
    budget: usize,
    seed: u64,
    kind: Objective,
) -> Result<OptimizeOutcome> {
    if space.free.is_empty() {
        return Err(Error::NothingToOptimize);
    }
    probe_feasibility(space)?;

    let eval = |params: &[f64]| -> Result<Option<f64>> {
        match space.spec_for(params) {
            Ok(spec) => Ok(Some(objective_with(&spec, regime, kind)?)),
            Err(Error::InfeasibleEntry { .. }) => Ok(None),
            Err(other) => Err(other),
        }
    };

    let mut trace = Vec::new();
    let seed_params = space.seed_params();
    let baseline = eval(&seed_params)?.ok_or_else(|| Error::InfeasibleEntry {
        bitstring: space.free[0].bitstring.clone(),
    })?;
    trace.push(TracePoint {
        params: seed_params.clone(),
        value: baseline,
    });

    let mut best_params = seed_params.clone();
    let mut best_value = baseline;
    let refined = refine(&eval, seed_params, baseline, &mut trace)?;
    if refined.1 > best_value {
        (best_params, best_value) = refined;
    }

    for restart in 0..budget {
        let mut rng = ChaCha8Rng::seed_from_u64(
            seed ^ (restart as u64 + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15),
        );
        let raw: Vec<f64> = (0..space.num_params())
            .map(|_| rng.random::<f64>() * TAU)
            .collect();
        let snapped: Vec<f64> = raw
            .iter()
            .map(|t| ((t / FRAC_PI_2).round() * FRAC_PI_2).rem_euclid(TAU))
            .collect();
        let mut start = None;
        for candidate in [snapped, raw] {
            if let Some(value) = eval(&candidate)? {
                start = Some((candidate, value));
                break;
            }
        }
        let Some((params, value)) = start else {
            continue;
        };
        trace.push(TracePoint {
            params: params.clone(),
            value,
        });
        let (params, value) = refine(&eval, params, value, &mut trace)?;
        if value > best_value {
            best_value = value;
            best_params = params;
        }
    }

    Ok(OptimizeOutcome {
        best_spec: space.spec_for(&best_params)?,
        best_value,
        baseline,
        trace,
    })
}

/// Per-coordinate maximization: quarter-turn lattice probes (the feasible
/// set of Pauli-algebra rows) followed by a golden-section pass over a
/// full period around the current angle.
fn refine(
    eval: &dyn Fn(&[f64]) -> Result<Option<f64>>,
    mut params: Vec<f64>,
    mut value: f64,
    trace: &mut Vec<TracePoint>,
) -> Result<(Vec<f64>, f64)> {
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    for _sweep in 0..2 {
        let mut improved = false;
        for i in 0..params.len() {
            let mut best_theta = params[i];
            let mut best_val = value;
            let mut consider = |theta: f64, val: Option<f64>| {
                if let Some(v) = val {
                    if v > best_val + 1e-12 {
                        best_val = v;
                        best_theta = theta;
                    }
                }
            };

            let mut probe = params.clone();
            for k in 0..4 {
                let theta = k as f64 * FRAC_PI_2;
                probe[i] = theta;
                consider(theta, eval(&probe)?);
            }

            // golden-section over one full period, treating infeasible
            // points as worthless rather than failing
            let (mut lo, mut hi) = (params[i] - PI, params[i] + PI);
            let score = |theta: f64, probe: &mut Vec<f64>| -> Result<f64> {
                probe[i] = theta;
                Ok(eval(probe)?.unwrap_or(-1.0))
            };
            let mut x1 = hi - (hi - lo) * INV_PHI;
            let mut x2 = lo + (hi - lo) * INV_PHI;
            let mut f1 = score(x1, &mut probe)?;
            let mut f2 = score(x2, &mut probe)?;
            for _ in 0..24 {
                if f1 >= f2 {
                    hi = x2;
                    x2 = x1;
                    f2 = f1;
                    x1 = hi - (hi - lo) * INV_PHI;
                    f1 = score(x1, &mut probe)?;
                } else {
                    lo = x1;
                    x1 = x2;
                    f1 = f2;
                    x2 = lo + (hi - lo) * INV_PHI;
                    f2 = score(x2, &mut probe)?;
                }
            }
            let mid = 0.5 * (lo + hi);
            probe[i] = mid;
            consider(mid, eval(&probe)?);

            if best_theta != params[i] && best_val > value {
                params[i] = best_theta;
                value = best_val;
                improved = true;
                trace.push(TracePoint {
                    params: params.clone(),
                    value,
                });
            }
        }
        if !improved {
            break;
        }
    }
    Ok((params, value))
}

/// Verify that every free row admits at least one unitary phase
/// assignment. Two-term rows always do (a relative phase can always align
/// the two branch images); rows with more terms are scanned over the
/// quarter-turn lattice plus a fine grid, which covers the lattice-like
/// feasible sets that phased operator sums produce in practice.
fn probe_feasibility(space: &ParamSpace) -> Result<()> {
    for entry in &space.free {
        let n_free = entry.terms.len() - 1;
        if n_free <= 1 {
            continue;
        }
        let candidates: Vec<f64> = (0..24).map(|k| k as f64 * TAU / 24.0).collect();
        let mut found = false;
        let mut counters = vec![0usize; n_free];
        'scan: loop {
            let mut terms = vec![(entry.terms[0], entry.seed_phases[0])];
            for (slot, &c) in counters.iter().enumerate() {
                terms.push((entry.terms[slot + 1], candidates[c]));
            }
            if agency::synthesize_entry(&space.palette, &terms, &entry.bitstring).is_ok() {
                found = true;
                break 'scan;
            }
            // odometer increment
            let mut slot = 0;
            loop {
                counters[slot] += 1;
                if counters[slot] < candidates.len() {
                    break;
                }
                counters[slot] = 0;
                slot += 1;
                if slot == n_free {
                    break 'scan;
                }
            }
        }
        if !found {
            return Err(Error::InfeasibleEntry {
                bitstring: entry.bitstring.clone(),
            });
        }
    }
    Ok(())
}
