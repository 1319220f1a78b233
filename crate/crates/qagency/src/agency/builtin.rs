//! The four built-in deliberation circuits and their control tables.
//!
//! Every table row is stored as a phased sum over a small operator palette:
//! a decisive row applies a single operator, an ambiguous row applies a
//! unitary superposition `sum_i e^{i theta_i} U_i` of the deliberation
//! unitaries that scored a success, scaled back to unitarity. The phase
//! choices of the superposed rows are fixed table data; they are validated
//! for unitarity at load rather than derived.

use std::collections::BTreeMap;
use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{gates, ComplexMatrix};
use crate::qstate::PureState;

use super::AgencyCircuitSpec;

/// One control-table row: a phased operator sum over the palette.
#[derive(Debug, Clone, Copy)]
pub(crate) struct BuiltinRow {
    pub bits: &'static str,
    pub terms: &'static [(usize, f64)],
}

/// Data backing one built-in circuit.
pub(crate) struct BuiltinDef {
    pub name: &'static str,
    pub aliases: &'static [&'static str],
    pub palette: fn() -> Vec<ComplexMatrix>,
    /// Palette indices of the deliberation unitaries, in slot order.
    pub delib: &'static [usize],
    pub rows: &'static [BuiltinRow],
}

/// `sum_i e^{i theta_i} palette[i]`, rescaled to unitarity.
///
/// A single zero-phase term is returned verbatim. Otherwise the sum is
/// divided by `‖A‖_F / √2` (exact when `A A† ∝ I`) and rejected if the
/// result is not unitary at 1e-8 — superposing unitaries only yields a
/// unitary in special cases, so candidates are filtered, never assumed.
pub(crate) fn synthesize_entry(
    palette: &[ComplexMatrix],
    terms: &[(usize, f64)],
    bits: &str,
) -> Result<ComplexMatrix> {
    assert!(!terms.is_empty(), "control row needs at least one term");
    if terms.len() == 1 && terms[0].1 == 0.0 {
        return Ok(palette[terms[0].0].clone());
    }
    let mut sum = ComplexMatrix::zeros(2, 2);
    for &(idx, phase) in terms {
        sum = sum.add(&palette[idx].scale(Complex64::from_polar(1.0, phase)));
    }
    let scale = sum.frobenius_norm() / std::f64::consts::SQRT_2;
    if scale < 1e-9 {
        return Err(Error::InfeasibleEntry {
            bitstring: bits.to_string(),
        });
    }
    let candidate = sum.scale(Complex64::new(1.0 / scale, 0.0));
    if candidate.is_unitary(1e-8)? {
        Ok(candidate)
    } else {
        Err(Error::InfeasibleEntry {
            bitstring: bits.to_string(),
        })
    }
}

/// Azimuth of the first rotated-Pauli axis: exactly -π/12, because
/// `tan 15° = 2 - √3` is the azimuth of the image of the x axis under the
/// geodesic rotation that carries +z onto the Bloch diagonal `(1,1,1)/√3`.
pub(crate) const FRAME_AZIMUTH: f64 = -PI / 12.0;

/// The rotated Paulis X', Y', Z': Hermitian unitaries along three mutually
/// orthogonal Bloch axes that each make the same angle with +z, so that
/// `<0|X'|0> = <0|Y'|0> = <0|Z'|0> = 1/√3`.
///
/// The axes are the images of x, y, z under the minimal rotation taking the
/// +z axis onto the ball diagonal `(1,1,1)/√3`; equivalently a symmetric
/// right-handed trine `(sqrt(2/3) cos φk, sqrt(2/3) sin φk, 1/√3)` with
/// `φk = FRAME_AZIMUTH + 2πk/3`. The trine has a residual rotational
/// freedom about +z; [`FRAME_AZIMUTH`] pins it to the geodesic frame.
pub fn rotated_paulis() -> (ComplexMatrix, ComplexMatrix, ComplexMatrix) {
    let r = (2.0f64 / 3.0).sqrt();
    let z = 1.0 / 3.0f64.sqrt();
    let axis = |k: f64| {
        let phi = FRAME_AZIMUTH + k * 2.0 * PI / 3.0;
        gates::axis_pauli(r * phi.cos(), r * phi.sin(), z)
    };
    (axis(0.0), axis(1.0), axis(2.0))
}

fn palette_ix() -> Vec<ComplexMatrix> {
    vec![gates::identity2(), gates::pauli_x()]
}

fn palette_xi() -> Vec<ComplexMatrix> {
    vec![gates::pauli_x(), gates::identity2()]
}

fn palette_ihx() -> Vec<ComplexMatrix> {
    vec![gates::identity2(), gates::hadamard(), gates::pauli_x()]
}

fn palette_ixyz() -> Vec<ComplexMatrix> {
    let (xp, yp, zp) = rotated_paulis();
    vec![gates::identity2(), xp, yp, zp]
}

#[rustfmt::skip]
const Q_PROTO_ROWS: &[BuiltinRow] = &[
    BuiltinRow { bits: "0", terms: &[(0, 0.0)] },
    BuiltinRow { bits: "1", terms: &[(1, 0.0)] },
];

#[rustfmt::skip]
const Q_IX_ROWS: &[BuiltinRow] = &[
    BuiltinRow { bits: "00", terms: &[(0, 0.0), (1, FRAC_PI_2)] },
    BuiltinRow { bits: "01", terms: &[(0, 0.0)] },
    BuiltinRow { bits: "10", terms: &[(1, 0.0)] },
    BuiltinRow { bits: "11", terms: &[(0, 0.0), (1, -FRAC_PI_2)] },
];

#[rustfmt::skip]
const Q_IHX_ROWS: &[BuiltinRow] = &[
    BuiltinRow { bits: "000", terms: &[(0, 0.0), (1, FRAC_PI_2), (2, FRAC_PI_2)] },
    BuiltinRow { bits: "001", terms: &[(0, 0.0), (1, -FRAC_PI_2)] },
    BuiltinRow { bits: "010", terms: &[(0, 0.0), (2, FRAC_PI_2)] },
    BuiltinRow { bits: "011", terms: &[(0, 0.0)] },
    BuiltinRow { bits: "100", terms: &[(1, 0.0), (2, 0.0)] },
    BuiltinRow { bits: "101", terms: &[(1, 0.0)] },
    BuiltinRow { bits: "110", terms: &[(2, 0.0)] },
    BuiltinRow { bits: "111", terms: &[(0, 0.0), (1, FRAC_PI_2), (2, -FRAC_PI_2)] },
];

#[rustfmt::skip]
const Q_IXYZ_ROWS: &[BuiltinRow] = &[
    BuiltinRow { bits: "0000", terms: &[(0, 0.0), (1, FRAC_PI_2), (2, FRAC_PI_2), (3, FRAC_PI_2)] },
    BuiltinRow { bits: "0001", terms: &[(0, 0.0), (1, FRAC_PI_2), (2, FRAC_PI_2)] },
    BuiltinRow { bits: "0010", terms: &[(0, 0.0), (1, -FRAC_PI_2), (3, FRAC_PI_2)] },
    BuiltinRow { bits: "0011", terms: &[(0, 0.0), (1, FRAC_PI_2)] },
    BuiltinRow { bits: "0100", terms: &[(0, 0.0), (2, -FRAC_PI_2), (3, -FRAC_PI_2)] },
    BuiltinRow { bits: "0101", terms: &[(0, 0.0), (2, FRAC_PI_2)] },
    BuiltinRow { bits: "0110", terms: &[(0, 0.0), (3, FRAC_PI_2)] },
    BuiltinRow { bits: "0111", terms: &[(0, 0.0)] },
    BuiltinRow { bits: "1000", terms: &[(1, 0.0), (2, 0.0), (3, 0.0)] },
    BuiltinRow { bits: "1001", terms: &[(1, 0.0), (2, PI)] },
    BuiltinRow { bits: "1010", terms: &[(1, PI), (3, 0.0)] },
    BuiltinRow { bits: "1011", terms: &[(1, 0.0)] },
    BuiltinRow { bits: "1100", terms: &[(2, 0.0), (3, PI)] },
    BuiltinRow { bits: "1101", terms: &[(2, 0.0)] },
    BuiltinRow { bits: "1110", terms: &[(3, 0.0)] },
    BuiltinRow { bits: "1111", terms: &[(0, 0.0), (1, -FRAC_PI_2), (2, -FRAC_PI_2), (3, -FRAC_PI_2)] },
];

pub(crate) fn builtin_defs() -> Vec<BuiltinDef> {
    vec![
        BuiltinDef {
            name: "Q_(I)X",
            aliases: &["q(i)x", "qpx", "proto"],
            palette: palette_xi,
            delib: &[0],
            rows: Q_PROTO_ROWS,
        },
        BuiltinDef {
            name: "Q_IX",
            aliases: &["qix"],
            palette: palette_ix,
            delib: &[0, 1],
            rows: Q_IX_ROWS,
        },
        BuiltinDef {
            name: "Q_IHX",
            aliases: &["qihx"],
            palette: palette_ihx,
            delib: &[0, 1, 2],
            rows: Q_IHX_ROWS,
        },
        BuiltinDef {
            name: "Q_IX'Y'Z'",
            aliases: &["qix'y'z'", "qixyz"],
            palette: palette_ixyz,
            delib: &[0, 1, 2, 3],
            rows: Q_IXYZ_ROWS,
        },
    ]
}

pub(crate) fn find_def(name: &str) -> Option<BuiltinDef> {
    let wanted = name.trim().to_ascii_lowercase().replace('_', "");
    builtin_defs().into_iter().find(|def| {
        def.name.to_ascii_lowercase().replace('_', "") == wanted
            || def.aliases.iter().any(|a| *a == wanted)
    })
}

pub(crate) fn spec_from_def(def: &BuiltinDef) -> AgencyCircuitSpec {
    let palette = (def.palette)();
    let delib = def.delib.iter().map(|&i| palette[i].clone()).collect();
    let mut table = BTreeMap::new();
    for row in def.rows {
        let entry = synthesize_entry(&palette, row.terms, row.bits)
            .expect("built-in table rows are unitary");
        table.insert(row.bits.to_string(), entry);
    }
    AgencyCircuitSpec::new(def.name.to_string(), delib, table, PureState::zero())
        .expect("built-in circuits satisfy the table invariants")
}

/// The four built-in circuits, smallest register first.
pub fn builtin_circuits() -> Vec<AgencyCircuitSpec> {
    builtin_defs().iter().map(spec_from_def).collect()
}

/// Look up a built-in circuit by name. Matching ignores case and
/// underscores; `"qixyz"` is accepted for `Q_IX'Y'Z'`.
pub fn builtin(name: &str) -> Result<AgencyCircuitSpec> {
    find_def(name)
        .map(|def| spec_from_def(&def))
        .ok_or_else(|| Error::UnknownCircuit(name.to_string()))
}
