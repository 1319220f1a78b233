//! Command-line front end.
//!
//! Subcommands:
//! - `reproduce-table`: evaluate the four built-in circuits in both input
//!   regimes and diff every cell against the embedded reference values.
//! - `eval`: evaluate one circuit (built-in name or JSON spec path).
//! - `nogo`: run the three no-go certificates.
//! - `optimize`: search the free phases of a built-in circuit.
//! - `clone`: run the symmetric cloning machine on one input state.
//!
//! Exit codes are a stable contract: 0 success, 1 quantitative failure
//! (tolerance breach, invalid certificate, nothing to optimize), 2 usage
//! or I/O error. All commands are deterministic given their flags; there
//! is no environment-variable configuration.

use std::f64::consts::FRAC_PI_2;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use crate::agency::{self, evaluate, schema, AgencyCircuitSpec, EvaluationReport, Regime};
use crate::cloning::{haar_baseline, nm_fidelity_bound, random_guess_baseline, symmetric_clone};
use crate::error::{Error, Result};
use crate::nogo;
use crate::optimizer::{self, Objective, ParamSpace};
use crate::qstate::{fidelity, pure_from_bloch, to_bloch, BlochVector, PureState};

/// Parsed command line.
#[derive(Debug, Parser)]
#[command(
    name = "qagency",
    about = "Deliberate-then-act qubit circuits, cloning machines, and their no-go certificates",
    version
)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Pretty,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RegimeChoice {
    Copies,
    Clones,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ObjectiveChoice {
    Average,
    Worst,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate all built-in circuits and diff against the reference table
    ReproduceTable {
        /// Restrict to one built-in circuit
        #[arg(long)]
        only: Option<String>,
        /// Input regime(s) to evaluate
        #[arg(long, value_enum, default_value = "both")]
        regime: RegimeChoice,
        #[arg(long, value_enum, default_value = "pretty")]
        format: OutputFormat,
        /// Write the report here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
        /// Override the tolerance applied to inexact copies-regime cells
        #[arg(long)]
        tol_copies: Option<f64>,
        /// Override the tolerance applied to inexact clones-regime cells
        #[arg(long)]
        tol_clones: Option<f64>,
    },
    /// Evaluate one circuit over the 26-state test set
    Eval {
        /// Built-in name or path to a circuit-spec JSON file
        #[arg(long)]
        circuit: String,
        #[arg(long, value_parser = parse_regime, default_value = "copies")]
        regime: Regime,
        #[arg(long, value_enum, default_value = "pretty")]
        format: OutputFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the no-go certificates
    Nogo {
        /// |0> amplitude for the no-cloning witness
        #[arg(long)]
        alpha: Option<f64>,
        /// |1> amplitude for the no-cloning witness
        #[arg(long)]
        beta: Option<f64>,
        /// Grid points per real parameter in the selector search
        #[arg(long, default_value_t = 8)]
        grid: usize,
        #[arg(long, value_enum, default_value = "pretty")]
        format: OutputFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Search the free phases of a built-in circuit
    Optimize {
        /// Built-in circuit name
        #[arg(long)]
        circuit: String,
        /// Number of random restarts
        #[arg(long, default_value_t = 50)]
        budget: usize,
        /// Seed for the restart generator (ChaCha8)
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, value_parser = parse_regime, default_value = "copies")]
        regime: Regime,
        /// Quantity to maximize
        #[arg(long, value_enum, default_value = "average")]
        objective: ObjectiveChoice,
        #[arg(long, value_enum, default_value = "pretty")]
        format: OutputFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Clone a qubit with the optimal symmetric machine
    Clone {
        /// Number of clones (2 to 6)
        #[arg(long)]
        m: usize,
        /// Unit Bloch vector of the input, as "x,y,z"
        #[arg(long)]
        bloch: String,
        /// Samples for the Haar baselines
        #[arg(long, default_value_t = 100_000)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, value_enum, default_value = "pretty")]
        format: OutputFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn parse_regime(s: &str) -> std::result::Result<Regime, String> {
    s.parse()
}

/// Dispatch a parsed command; returns the process exit code.
pub fn run(config: &RunConfig) -> i32 {
    let outcome = match &config.command {
        Command::ReproduceTable {
            only,
            regime,
            format,
            out,
            tol_copies,
            tol_clones,
        } => cmd_reproduce_table(
            only.as_deref(),
            *regime,
            *format,
            out.as_deref(),
            *tol_copies,
            *tol_clones,
        ),
        Command::Eval {
            circuit,
            regime,
            format,
            out,
        } => cmd_eval(circuit, *regime, *format, out.as_deref()),
        Command::Nogo {
            alpha,
            beta,
            grid,
            format,
            out,
        } => cmd_nogo(*alpha, *beta, *grid, *format, out.as_deref()),
        Command::Optimize {
            circuit,
            budget,
            seed,
            regime,
            objective,
            format,
            out,
        } => cmd_optimize(
            circuit,
            *budget,
            *seed,
            *regime,
            *objective,
            *format,
            out.as_deref(),
        ),
        Command::Clone {
            m,
            bloch,
            samples,
            seed,
            format,
            out,
        } => cmd_clone(*m, bloch, *samples, *seed, *format, out.as_deref()),
    };
    match outcome {
        Ok(code) => code,
        Err(Error::NothingToOptimize) => {
            eprintln!("error: {}", Error::NothingToOptimize);
            1
        }
        Err(err) => {
            eprintln!("error: {err}");
            2
        }
    }
}

fn write_output(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// reproduce-table

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Metric {
    Fidelity,
    BlochLength,
    AngleError,
}

impl Metric {
    fn label(self) -> &'static str {
        match self {
            Metric::Fidelity => "Fidelity",
            Metric::BlochLength => "Bloch Vector Length",
            Metric::AngleError => "Bloch Angle Error (rad)",
        }
    }

    fn key(self) -> &'static str {
        match self {
            Metric::Fidelity => "fidelity",
            Metric::BlochLength => "bloch_length",
            Metric::AngleError => "bloch_angle_error",
        }
    }
}

struct ReferenceRow {
    circuit: &'static str,
    regime: Regime,
    metric: Metric,
    values: [f64; 3],
    tolerances: [f64; 3],
}

const EXACT: f64 = 1e-9;
const COPIES_TOL: f64 = 1e-4;
const CLONES_TOL: f64 = 1e-3;
const CLONE_FIDELITY_TOL: f64 = 1e-6;

/// Reference performance table: worst/average/best per metric, circuit,
/// and regime. Cells that are exact fractions carry a 1e-9 tolerance;
/// five-decimal cells carry 1e-4 (copies) or 1e-3 (clones); the clone
/// fidelity cells of the two I-vs-X circuits are pinned at 1e-6.
#[rustfmt::skip]
fn reference_table() -> Vec<ReferenceRow> {
    use Metric::*;
    use Regime::*;
    let third = 1.0 / 3.0;
    let two_thirds = 2.0 / 3.0;
    vec![
        ReferenceRow { circuit: "Q_(I)X", regime: Copies, metric: Fidelity, values: [0.5, two_thirds, 1.0], tolerances: [EXACT; 3] },
        ReferenceRow { circuit: "Q_(I)X", regime: Copies, metric: BlochLength, values: [0.0, 0.73399, 1.0], tolerances: [EXACT, COPIES_TOL, EXACT] },
        ReferenceRow { circuit: "Q_(I)X", regime: Copies, metric: AngleError, values: [FRAC_PI_2, 0.97095, 0.0], tolerances: [EXACT, COPIES_TOL, EXACT] },
        ReferenceRow { circuit: "Q_(I)X", regime: Clones, metric: Fidelity, values: [two_thirds; 3], tolerances: [CLONE_FIDELITY_TOL; 3] },
        ReferenceRow { circuit: "Q_(I)X", regime: Clones, metric: BlochLength, values: [third, 0.49421, 0.74536], tolerances: [EXACT, CLONES_TOL, CLONES_TOL] },
        ReferenceRow { circuit: "Q_(I)X", regime: Clones, metric: AngleError, values: [1.10715, 0.64282, 0.0], tolerances: [CLONES_TOL, CLONES_TOL, EXACT] },
        ReferenceRow { circuit: "Q_IX", regime: Copies, metric: Fidelity, values: [0.5, two_thirds, 1.0], tolerances: [EXACT; 3] },
        ReferenceRow { circuit: "Q_IX", regime: Copies, metric: BlochLength, values: [0.0, 0.73399, 1.0], tolerances: [EXACT, COPIES_TOL, EXACT] },
        ReferenceRow { circuit: "Q_IX", regime: Copies, metric: AngleError, values: [FRAC_PI_2, 0.97095, 0.0], tolerances: [EXACT, COPIES_TOL, EXACT] },
        ReferenceRow { circuit: "Q_IX", regime: Clones, metric: Fidelity, values: [two_thirds; 3], tolerances: [CLONE_FIDELITY_TOL; 3] },
        ReferenceRow { circuit: "Q_IX", regime: Clones, metric: BlochLength, values: [third, 0.45326, 0.64788], tolerances: [EXACT, CLONES_TOL, CLONES_TOL] },
        ReferenceRow { circuit: "Q_IX", regime: Clones, metric: AngleError, values: [1.03048, 0.58182, 0.0], tolerances: [CLONES_TOL, CLONES_TOL, EXACT] },
        ReferenceRow { circuit: "Q_IHX", regime: Copies, metric: Fidelity, values: [0.43562, 0.69372, 0.92678], tolerances: [COPIES_TOL; 3] },
        ReferenceRow { circuit: "Q_IHX", regime: Copies, metric: BlochLength, values: [0.30530, 0.69391, 0.95040], tolerances: [COPIES_TOL; 3] },
        ReferenceRow { circuit: "Q_IHX", regime: Copies, metric: AngleError, values: [1.86017, 0.96929, 0.11297], tolerances: [COPIES_TOL; 3] },
        ReferenceRow { circuit: "Q_IHX", regime: Clones, metric: Fidelity, values: [0.62644, 0.69394, 0.76144], tolerances: [CLONES_TOL; 3] },
        ReferenceRow { circuit: "Q_IHX", regime: Clones, metric: BlochLength, values: [0.35600, 0.46061, 0.58729], tolerances: [CLONES_TOL; 3] },
        ReferenceRow { circuit: "Q_IHX", regime: Clones, metric: AngleError, values: [1.02859, 0.51454, 0.12499], tolerances: [CLONES_TOL; 3] },
        ReferenceRow { circuit: "Q_IX'Y'Z'", regime: Copies, metric: Fidelity, values: [0.44774, 0.65882, 0.76955], tolerances: [COPIES_TOL; 3] },
        ReferenceRow { circuit: "Q_IX'Y'Z'", regime: Copies, metric: BlochLength, values: [0.18519, 0.51126, 0.66668], tolerances: [COPIES_TOL; 3] },
        ReferenceRow { circuit: "Q_IX'Y'Z'", regime: Copies, metric: AngleError, values: [1.76471, 0.82512, 0.0], tolerances: [COPIES_TOL, COPIES_TOL, 1e-6] },
        ReferenceRow { circuit: "Q_IX'Y'Z'", regime: Clones, metric: Fidelity, values: [0.62840, 0.65802, 0.68765], tolerances: [CLONES_TOL; 3] },
        ReferenceRow { circuit: "Q_IX'Y'Z'", regime: Clones, metric: BlochLength, values: [0.25952, 0.32018, 0.37996], tolerances: [CLONES_TOL; 3] },
        ReferenceRow { circuit: "Q_IX'Y'Z'", regime: Clones, metric: AngleError, values: [0.26909, 0.14712, 0.04660], tolerances: [CLONES_TOL; 3] },
    ]
}

struct DiffCell {
    circuit: String,
    regime: Regime,
    metric: Metric,
    column: &'static str,
    computed: f64,
    reference: f64,
    deviation: f64,
    tolerance: f64,
    pass: bool,
}

fn metric_triple(report: &EvaluationReport, metric: Metric) -> [f64; 3] {
    let summary = match metric {
        Metric::Fidelity => &report.fidelity,
        Metric::BlochLength => &report.bloch_length,
        Metric::AngleError => &report.bloch_angle_error,
    };
    [summary.worst, summary.average, summary.best]
}

fn cmd_reproduce_table(
    only: Option<&str>,
    regime: RegimeChoice,
    format: OutputFormat,
    out: Option<&Path>,
    tol_copies: Option<f64>,
    tol_clones: Option<f64>,
) -> Result<i32> {
    // reject unknown names before any computation
    let selected: Vec<AgencyCircuitSpec> = match only {
        Some(name) => vec![agency::builtin(name)?],
        None => agency::builtin_circuits(),
    };
    let regimes: &[Regime] = match regime {
        RegimeChoice::Copies => &[Regime::Copies],
        RegimeChoice::Clones => &[Regime::Clones],
        RegimeChoice::Both => &[Regime::Copies, Regime::Clones],
    };

    let reference = reference_table();
    let mut reports = Vec::new();
    let mut cells = Vec::new();
    for spec in &selected {
        for &reg in regimes {
            let report = evaluate(spec, reg)?;
            for metric in [Metric::Fidelity, Metric::BlochLength, Metric::AngleError] {
                let row = reference
                    .iter()
                    .find(|r| r.circuit == spec.name() && r.regime == reg && r.metric == metric)
                    .expect("reference table covers all built-ins");
                let computed = metric_triple(&report, metric);
                for (i, column) in ["worst", "average", "best"].iter().enumerate() {
                    let override_tol = match reg {
                        Regime::Copies => tol_copies,
                        Regime::Clones => tol_clones,
                    };
                    let tolerance = override_tol.unwrap_or(row.tolerances[i]);
                    let deviation = (computed[i] - row.values[i]).abs();
                    cells.push(DiffCell {
                        circuit: spec.name().to_string(),
                        regime: reg,
                        metric,
                        column,
                        computed: computed[i],
                        reference: row.values[i],
                        deviation,
                        tolerance,
                        pass: deviation <= tolerance,
                    });
                }
            }
            reports.push(report);
        }
    }

    let all_pass = cells.iter().all(|c| c.pass);
    let text = match format {
        OutputFormat::Pretty => render_table_pretty(&reports, &cells),
        OutputFormat::Csv => render_table_csv(&cells),
        OutputFormat::Json => render_table_json(&cells)?,
    };
    write_output(&text, out)?;
    Ok(if all_pass { 0 } else { 1 })
}

fn render_table_pretty(reports: &[EvaluationReport], cells: &[DiffCell]) -> String {
    let mut s = String::new();
    for report in reports {
        let _ = writeln!(
            s,
            "{} [{} regime]  ({} test states)",
            report.circuit_name,
            report.regime,
            report.states.len()
        );
        let _ = writeln!(
            s,
            "  {:<26} {:>9} {:>9} {:>9}",
            "", "worst", "average", "best"
        );
        for metric in [Metric::Fidelity, Metric::BlochLength, Metric::AngleError] {
            let triple = metric_triple(report, metric);
            let _ = writeln!(
                s,
                "  {:<26} {:>9.5} {:>9.5} {:>9.5}",
                metric.label(),
                triple[0],
                triple[1],
                triple[2]
            );
        }
        s.push('\n');
    }
    let _ = writeln!(s, "reference diff (per cell, absolute deviation):");
    let _ = writeln!(
        s,
        "  {:<10} {:<7} {:<24} {:<8} {:>10} {:>10} {:>10} {:>8} {:>6}",
        "circuit", "regime", "metric", "cell", "computed", "reference", "|dev|", "tol", "status"
    );
    for c in cells {
        let _ = writeln!(
            s,
            "  {:<10} {:<7} {:<24} {:<8} {:>10.5} {:>10.5} {:>10.2e} {:>8.0e} {:>6}",
            c.circuit,
            c.regime.to_string(),
            c.metric.label(),
            c.column,
            c.computed,
            c.reference,
            c.deviation,
            c.tolerance,
            if c.pass { "ok" } else { "FAIL" }
        );
    }
    s
}

fn render_table_csv(cells: &[DiffCell]) -> String {
    let mut s = String::from(
        "circuit,regime,metric,cell,computed,reference,abs_deviation,tolerance,pass\n",
    );
    for c in cells {
        let _ = writeln!(
            s,
            "{},{},{},{},{},{},{},{},{}",
            c.circuit,
            c.regime,
            c.metric.key(),
            c.column,
            c.computed,
            c.reference,
            c.deviation,
            c.tolerance,
            c.pass
        );
    }
    s
}

fn render_table_json(cells: &[DiffCell]) -> Result<String> {
    let rows: Vec<serde_json::Value> = cells
        .iter()
        .map(|c| {
            serde_json::json!({
                "circuit": c.circuit,
                "regime": c.regime.to_string(),
                "metric": c.metric.key(),
                "cell": c.column,
                "computed": c.computed,
                "reference": c.reference,
                "abs_deviation": c.deviation,
                "tolerance": c.tolerance,
                "pass": c.pass,
            })
        })
        .collect();
    Ok(format!("{:#}\n", serde_json::Value::Array(rows)))
}

// ---------------------------------------------------------------------------
// eval

fn resolve_circuit(selector: &str) -> Result<AgencyCircuitSpec> {
    if let Ok(spec) = agency::builtin(selector) {
        return Ok(spec);
    }
    let path = Path::new(selector);
    if !path.exists() {
        return Err(Error::UnknownCircuit(format!(
            "{selector} (not a built-in name and no such file)"
        )));
    }
    schema::spec_from_json(&std::fs::read_to_string(path)?)
}

fn render_report_pretty(report: &EvaluationReport) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "{} [{} regime], {} states",
        report.circuit_name,
        report.regime,
        report.states.len()
    );
    let _ = writeln!(
        s,
        "  {:>3} {:>7} {:>7} {:>7}   {:>9} {:>9} {:>9}",
        "#", "x", "y", "z", "fidelity", "length", "angle"
    );
    for (i, r) in report.states.iter().enumerate() {
        let _ = writeln!(
            s,
            "  {:>3} {:>7.3} {:>7.3} {:>7.3}   {:>9.5} {:>9.5} {:>9.5}",
            i,
            r.input_bloch.x,
            r.input_bloch.y,
            r.input_bloch.z,
            r.fidelity,
            r.bloch_length,
            r.bloch_angle_error
        );
    }
    let _ = writeln!(
        s,
        "  {:<26} {:>9} {:>9} {:>9}",
        "", "worst", "average", "best"
    );
    for metric in [Metric::Fidelity, Metric::BlochLength, Metric::AngleError] {
        let t = metric_triple(report, metric);
        let _ = writeln!(
            s,
            "  {:<26} {:>9.5} {:>9.5} {:>9.5}",
            metric.label(),
            t[0],
            t[1],
            t[2]
        );
    }
    s
}

fn cmd_eval(
    selector: &str,
    regime: Regime,
    format: OutputFormat,
    out: Option<&Path>,
) -> Result<i32> {
    let spec = resolve_circuit(selector)?;
    let report = evaluate(&spec, regime)?;
    let text = match format {
        OutputFormat::Pretty => render_report_pretty(&report),
        OutputFormat::Csv => report.to_csv(),
        OutputFormat::Json => report.to_json_string()? + "\n",
    };
    write_output(&text, out)?;
    Ok(0)
}

// ---------------------------------------------------------------------------
// nogo

fn cmd_nogo(
    alpha: Option<f64>,
    beta: Option<f64>,
    grid: usize,
    format: OutputFormat,
    out: Option<&Path>,
) -> Result<i32> {
    use crate::linalg::gates;

    // default no-cloning input: the equal superposition
    let (alpha, beta) = match (alpha, beta) {
        (Some(a), Some(b)) => (a, b),
        (Some(a), None) => (a, (1.0 - a * a).max(0.0).sqrt()),
        (None, Some(b)) => ((1.0 - b * b).max(0.0).sqrt(), b),
        (None, None) => (
            std::f64::consts::FRAC_1_SQRT_2,
            std::f64::consts::FRAC_1_SQRT_2,
        ),
    };

    let cloning_cert =
        nogo::no_cloning_witness(Complex64::new(alpha, 0.0), Complex64::new(beta, 0.0))?;
    // superposed-action demo: I against iX on |0>, a unitary superposition
    let i_x = gates::pauli_x().scale(Complex64::new(0.0, 1.0));
    let symmetry_cert =
        nogo::superposed_action_symmetry(&PureState::zero(), &gates::identity2(), &i_x)?;
    // selector search on the canonical ambiguous input
    let psi = PureState::qubit(
        Complex64::new(0.75f64.sqrt(), 0.0),
        Complex64::new(0.25f64.sqrt(), 0.0),
    )?;
    let selector_cert =
        nogo::selector_impossibility(&gates::identity2(), &gates::pauli_x(), &psi, grid)?;

    let certs = [cloning_cert, symmetry_cert, selector_cert];
    let all_valid = certs.iter().all(|c| c.is_valid());

    let text = match format {
        OutputFormat::Pretty => {
            let mut s = String::new();
            for c in &certs {
                let _ = writeln!(
                    s,
                    "{:<28} magnitude {:>10.5}  tolerance {:>8.0e}  [{}]",
                    c.claim_id,
                    c.violation_magnitude,
                    c.tolerance,
                    if c.is_valid() {
                        "holds"
                    } else {
                        "NOT ESTABLISHED"
                    }
                );
                if let Some(overlap) = c.overlap {
                    let _ = writeln!(
                        s,
                        "{:<28} branch overlap |<psi_x|psi_y>| = {overlap:.5}",
                        ""
                    );
                }
                if let Some(note) = &c.note {
                    let _ = writeln!(s, "{:<28} note: {note}", "");
                }
            }
            s
        }
        OutputFormat::Csv => {
            let mut s = String::from("claim_id,violation_magnitude,tolerance,valid,note\n");
            for c in &certs {
                let _ = writeln!(
                    s,
                    "{},{},{},{},{}",
                    c.claim_id,
                    c.violation_magnitude,
                    c.tolerance,
                    c.is_valid(),
                    c.note.as_deref().unwrap_or("")
                );
            }
            s
        }
        OutputFormat::Json => format!("{:#}\n", serde_json::json!(certs)),
    };
    write_output(&text, out)?;
    Ok(if all_valid { 0 } else { 1 })
}

// ---------------------------------------------------------------------------
// optimize

fn cmd_optimize(
    circuit: &str,
    budget: usize,
    seed: u64,
    regime: Regime,
    objective: ObjectiveChoice,
    format: OutputFormat,
    out: Option<&Path>,
) -> Result<i32> {
    let space = ParamSpace::for_builtin(circuit)?;
    let kind = match objective {
        ObjectiveChoice::Average => Objective::AverageFidelity,
        ObjectiveChoice::Worst => Objective::WorstFidelity,
    };
    let outcome = optimizer::optimize_with(&space, regime, budget, seed, kind)?;
    let text = match format {
        OutputFormat::Pretty => format!(
            "circuit {} [{} regime], {} free phases, budget {budget}, seed {seed}\n\
             baseline  {:.5}\nbest      {:.5}\ndelta     {:+.5}\ntrace     {} points\n",
            space.base_spec().name(),
            regime,
            space.num_params(),
            outcome.baseline,
            outcome.best_value,
            outcome.best_value - outcome.baseline,
            outcome.trace.len(),
        ),
        OutputFormat::Csv => {
            let mut s = String::from("circuit,regime,budget,seed,baseline,best_value\n");
            let _ = writeln!(
                s,
                "{},{},{},{},{},{}",
                space.base_spec().name(),
                regime,
                budget,
                seed,
                outcome.baseline,
                outcome.best_value
            );
            s
        }
        OutputFormat::Json => outcome.to_json_string()? + "\n",
    };
    write_output(&text, out)?;
    Ok(0)
}

// ---------------------------------------------------------------------------
// clone

fn parse_bloch(text: &str) -> Result<BlochVector> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 3 {
        return Err(Error::Schema(format!(
            "expected bloch vector as x,y,z, got {text:?}"
        )));
    }
    let mut v = [0.0f64; 3];
    for (slot, raw) in v.iter_mut().zip(&parts) {
        *slot = raw
            .trim()
            .parse::<f64>()
            .map_err(|e| Error::Schema(format!("bad bloch component {raw:?}: {e}")))?;
    }
    Ok(BlochVector::new(v[0], v[1], v[2]))
}

fn cmd_clone(
    m: usize,
    bloch: &str,
    samples: usize,
    seed: u64,
    format: OutputFormat,
    out: Option<&Path>,
) -> Result<i32> {
    let source = parse_bloch(bloch)?;
    let psi = pure_from_bloch(&source)?;
    let ensemble = symmetric_clone(&psi, m)?;
    let marginal = ensemble.clone_marginal(0)?;
    let marginal_fidelity = fidelity(&marginal, &psi.density())?;
    let marginal_bloch = to_bloch(&marginal)?;
    let bound = nm_fidelity_bound(1, m)?;
    let haar = haar_baseline(samples, seed);
    let guess = random_guess_baseline(m, samples, seed)?;

    let text = match format {
        OutputFormat::Pretty => format!(
            "symmetric 1->{m} cloning of bloch ({:.5}, {:.5}, {:.5})\n\
             marginal fidelity      {:.5}   (optimal bound {:.5})\n\
             marginal bloch         ({:.5}, {:.5}, {:.5})  length {:.5}\n\
             haar random baseline   {:.5}   ({} samples, seed {seed})\n\
             keep-original baseline {:.5}\n",
            source.x,
            source.y,
            source.z,
            marginal_fidelity,
            bound,
            marginal_bloch.x,
            marginal_bloch.y,
            marginal_bloch.z,
            marginal_bloch.length(),
            haar,
            samples,
            guess,
        ),
        OutputFormat::Csv => {
            let mut s = String::from(
                "m,marginal_fidelity,fidelity_bound,bloch_length,haar_baseline,guess_baseline\n",
            );
            let _ = writeln!(
                s,
                "{m},{marginal_fidelity},{bound},{},{haar},{guess}",
                marginal_bloch.length()
            );
            s
        }
        OutputFormat::Json => format!(
            "{:#}\n",
            serde_json::json!({
                "m": m,
                "source_bloch": [source.x, source.y, source.z],
                "marginal_fidelity": marginal_fidelity,
                "fidelity_bound": bound,
                "marginal_bloch": [marginal_bloch.x, marginal_bloch.y, marginal_bloch.z],
                "marginal_length": marginal_bloch.length(),
                "haar_baseline": haar,
                "guess_baseline": guess,
                "samples": samples,
                "seed": seed,
            })
        ),
    };
    write_output(&text, out)?;
    Ok(0)
}
