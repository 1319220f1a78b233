//! Dense complex linear algebra kernel.
//!
//! Everything in this crate runs on small registers (at most
//! [`MAX_REGISTER_QUBITS`] qubits), so matrices are stored dense and
//! row-major. All operations are pure functions over immutable values.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Largest register the kernel will materialize. Tensor products that would
/// exceed `2^MAX_REGISTER_QUBITS` rows or columns are rejected.
pub const MAX_REGISTER_QUBITS: u32 = 12;

/// Dimension cap implied by [`MAX_REGISTER_QUBITS`].
pub const MAX_DIM: usize = 1 << MAX_REGISTER_QUBITS;

/// Default tolerance for structural checks (unitarity, hermiticity).
pub const STRUCTURAL_TOL: f64 = 1e-10;

/// Default tolerance for trace identities.
pub const TRACE_TOL: f64 = 1e-12;

/// Dense complex matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Complex64>,
}

impl ComplexMatrix {
    /// Create a matrix from row-major entries.
    ///
    /// Panics if the entry count does not match the dimensions or any entry
    /// is non-finite; both indicate a bug in the caller, not bad input data.
    pub fn new(rows: usize, cols: usize, entries: Vec<Complex64>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must be rows*cols");
        assert!(
            entries.iter().all(|c| c.re.is_finite() && c.im.is_finite()),
            "matrix entries must be finite"
        );
        Self {
            rows,
            cols,
            entries,
        }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![Complex64::ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Complex64::ONE);
        }
        m
    }

    /// Column vector from a slice of amplitudes.
    pub fn column(amplitudes: &[Complex64]) -> Self {
        Self::new(amplitudes.len(), 1, amplitudes.to_vec())
    }

    /// Build a square matrix from rows of `(re, im)` pairs.
    pub fn from_rows(rows: &[Vec<(f64, f64)>]) -> Self {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, Vec::len);
        let entries = rows
            .iter()
            .flat_map(|r| {
                assert_eq!(r.len(), n_cols, "ragged rows");
                r.iter().map(|&(re, im)| Complex64::new(re, im))
            })
            .collect();
        Self::new(n_rows, n_cols, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.entries[row * self.cols + col]
    }

    #[inline]
    pub fn set(&mut self, row: usize, col: usize, value: Complex64) {
        self.entries[row * self.cols + col] = value;
    }

    pub fn trace(&self) -> Complex64 {
        assert!(self.is_square(), "trace requires a square matrix");
        (0..self.rows).map(|i| self.get(i, i)).sum()
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).conj());
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a + b)
            .collect();
        Self::new(self.rows, self.cols, entries)
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a - b)
            .collect();
        Self::new(self.rows, self.cols, entries)
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        let entries = self.entries.iter().map(|c| c * factor).collect();
        Self::new(self.rows, self.cols, entries)
    }

    /// Matrix product `self * other`. Panics on mismatched inner dimensions;
    /// use [`matmul_chain`] for a checked variant.
    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(
            self.cols, other.rows,
            "inner dimensions must agree in matmul"
        );
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == Complex64::ZERO {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + a * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    /// Kronecker product `self ⊗ other`.
    ///
    /// Entry `((i*b.rows + k), (j*b.cols + l))` equals `a[i,j] * b[k,l]`, so
    /// the left factor is the most significant subsystem.
    pub fn kron(&self, other: &Self) -> Result<Self> {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        if rows > MAX_DIM || cols > MAX_DIM {
            return Err(Error::RegisterTooLarge {
                dim: rows.max(cols),
                max_qubits: MAX_REGISTER_QUBITS,
            });
        }
        let mut out = Self::zeros(rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        out.set(i * other.rows + k, j * other.cols + l, a * other.get(k, l));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Largest absolute entry of `self - other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        (self.rows, self.cols) == (other.rows, other.cols) && self.max_abs_diff(other) <= tol
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.entries
            .iter()
            .map(|c| c.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// True iff `‖self·self† − I‖_max ≤ tol`. Errors on non-square input.
    pub fn is_unitary(&self, tol: f64) -> Result<bool> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let product = self.matmul(&self.dagger());
        Ok(product.max_abs_diff(&Self::identity(self.rows)) <= tol)
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        if !self.is_square() {
            return false;
        }
        for i in 0..self.rows {
            for j in 0..=i {
                if (self.get(i, j) - self.get(j, i).conj()).norm() > tol {
                    return false;
                }
            }
        }
        true
    }

    /// Eigenvalues of a Hermitian matrix, ascending.
    ///
    /// The complex Hermitian matrix `X + iY` is embedded as the real
    /// symmetric matrix `[[X, -Y], [Y, X]]`, whose spectrum is that of the
    /// original with every eigenvalue doubled, and diagonalized by cyclic
    /// Jacobi sweeps.
    pub fn hermitian_eigenvalues(&self) -> Result<Vec<f64>> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Vec::new());
        }
        let dim = 2 * n;
        let mut a = vec![0.0f64; dim * dim];
        for i in 0..n {
            for j in 0..n {
                let z = self.get(i, j);
                a[i * dim + j] = z.re;
                a[(i + n) * dim + (j + n)] = z.re;
                a[i * dim + (j + n)] = -z.im;
                a[(i + n) * dim + j] = z.im;
            }
        }
        jacobi_symmetric(&mut a, dim);
        let mut eigs: Vec<f64> = (0..dim).map(|i| a[i * dim + i]).collect();
        eigs.sort_by(f64::total_cmp);
        // every eigenvalue appears twice in the embedding
        Ok(eigs.into_iter().step_by(2).collect())
    }
}

/// Cyclic Jacobi diagonalization of a real symmetric matrix, in place.
fn jacobi_symmetric(a: &mut [f64], n: usize) {
    let off = |a: &[f64]| -> f64 {
        let mut s = 0.0;
        for p in 0..n {
            for q in (p + 1)..n {
                s += a[p * n + q] * a[p * n + q];
            }
        }
        s
    };
    for _sweep in 0..60 {
        if off(a) < 1e-28 * (n * n) as f64 {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq.abs() < 1e-300 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let tau = (aqq - app) / (2.0 * apq);
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    -1.0 / (-tau + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
            }
        }
    }
}

/// Multiply a chain of operators in application order: the first listed
/// operator acts first on the state, so the result is `ops[n-1] ··· ops[0]`.
pub fn matmul_chain(ops: &[ComplexMatrix]) -> Result<ComplexMatrix> {
    let first = ops.first().ok_or(Error::EmptyChain)?;
    let mut acc = first.clone();
    for (i, op) in ops.iter().enumerate().skip(1) {
        if op.cols() != acc.rows() {
            return Err(Error::ChainMismatch {
                left: i - 1,
                left_dims: format!("{}x{}", acc.rows(), acc.cols()),
                right: i,
                right_dims: format!("{}x{}", op.rows(), op.cols()),
            });
        }
        acc = op.matmul(&acc);
    }
    Ok(acc)
}

/// Partial trace of `rho` over the subsystems *not* listed in `keep`.
///
/// `dims` lists the subsystem dimensions with the leftmost factor most
/// significant (matching [`ComplexMatrix::kron`]); kept subsystems appear in
/// the result in ascending original order.
pub fn partial_trace(rho: &ComplexMatrix, dims: &[usize], keep: &[usize]) -> Result<ComplexMatrix> {
    if !rho.is_square() {
        return Err(Error::NotSquare {
            rows: rho.rows(),
            cols: rho.cols(),
        });
    }
    let product: usize = dims.iter().product();
    if product != rho.rows() {
        return Err(Error::DimsProductMismatch {
            dims: dims.to_vec(),
            product,
            expected: rho.rows(),
        });
    }
    if keep.is_empty() {
        return Err(Error::EmptyKeep);
    }
    let mut keep_sorted = keep.to_vec();
    keep_sorted.sort_unstable();
    keep_sorted.dedup();
    if keep_sorted.len() != keep.len() {
        return Err(Error::BadControlTable {
            reason: "duplicate subsystem index in keep set".into(),
        });
    }
    for &k in &keep_sorted {
        if k >= dims.len() {
            return Err(Error::BadSubsystem {
                index: k,
                count: dims.len(),
            });
        }
    }
    let traced: Vec<usize> = (0..dims.len())
        .filter(|i| !keep_sorted.contains(i))
        .collect();

    // strides for composing flat indices, row-major over subsystems
    let mut strides = vec![1usize; dims.len()];
    for i in (0..dims.len().saturating_sub(1)).rev() {
        strides[i] = strides[i + 1] * dims[i + 1];
    }

    let keep_dim: usize = keep_sorted.iter().map(|&k| dims[k]).product();
    let traced_dim: usize = traced.iter().map(|&t| dims[t]).product();

    // flat offset of a composite sub-index over the given subsystem list
    let offset = |subsystems: &[usize], mut idx: usize| -> usize {
        let mut off = 0;
        for &s in subsystems.iter().rev() {
            off += (idx % dims[s]) * strides[s];
            idx /= dims[s];
        }
        off
    };

    let mut out = ComplexMatrix::zeros(keep_dim, keep_dim);
    for kr in 0..keep_dim {
        let row_base = offset(&keep_sorted, kr);
        for kc in 0..keep_dim {
            let col_base = offset(&keep_sorted, kc);
            let mut sum = Complex64::ZERO;
            for t in 0..traced_dim {
                let t_off = offset(&traced, t);
                sum += rho.get(row_base + t_off, col_base + t_off);
            }
            out.set(kr, kc, sum);
        }
    }
    Ok(out)
}

/// Common single-qubit operators.
pub mod gates {
    use super::ComplexMatrix;
    use num_complex::Complex64;
    use std::f64::consts::FRAC_1_SQRT_2;

    pub fn identity2() -> ComplexMatrix {
        ComplexMatrix::identity(2)
    }

    pub fn pauli_x() -> ComplexMatrix {
        ComplexMatrix::from_rows(&[vec![(0.0, 0.0), (1.0, 0.0)], vec![(1.0, 0.0), (0.0, 0.0)]])
    }

    pub fn pauli_y() -> ComplexMatrix {
        ComplexMatrix::from_rows(&[vec![(0.0, 0.0), (0.0, -1.0)], vec![(0.0, 1.0), (0.0, 0.0)]])
    }

    pub fn pauli_z() -> ComplexMatrix {
        ComplexMatrix::from_rows(&[vec![(1.0, 0.0), (0.0, 0.0)], vec![(0.0, 0.0), (-1.0, 0.0)]])
    }

    pub fn hadamard() -> ComplexMatrix {
        let s = FRAC_1_SQRT_2;
        ComplexMatrix::from_rows(&[vec![(s, 0.0), (s, 0.0)], vec![(s, 0.0), (-s, 0.0)]])
    }

    /// CNOT with the first qubit as control: `|x>|y> -> |x>|y XOR x>`.
    pub fn cnot() -> ComplexMatrix {
        let mut m = ComplexMatrix::zeros(4, 4);
        m.set(0, 0, Complex64::ONE);
        m.set(1, 1, Complex64::ONE);
        m.set(2, 3, Complex64::ONE);
        m.set(3, 2, Complex64::ONE);
        m
    }

    /// Hermitian unitary `n · (X, Y, Z)` along a unit Bloch axis.
    pub fn axis_pauli(nx: f64, ny: f64, nz: f64) -> ComplexMatrix {
        ComplexMatrix::from_rows(&[vec![(nz, 0.0), (nx, -ny)], vec![(nx, ny), (-nz, 0.0)]])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use gates::*;
    use num_complex::Complex64;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn ket(bits: &str) -> ComplexMatrix {
        let mut v = ComplexMatrix::column(&[Complex64::ONE]);
        for b in bits.chars() {
            let q = match b {
                '0' => ComplexMatrix::column(&[Complex64::ONE, Complex64::ZERO]),
                '1' => ComplexMatrix::column(&[Complex64::ZERO, Complex64::ONE]),
                _ => panic!("bad bit"),
            };
            v = v.kron(&q).unwrap();
        }
        v
    }

    #[test]
    fn kron_of_identities_is_identity() {
        let i2 = ComplexMatrix::identity(2);
        let i4 = i2.kron(&i2).unwrap();
        assert!(i4.approx_eq(&ComplexMatrix::identity(4), 0.0));
    }

    #[test]
    fn kron_x_with_identity_flips_first_qubit() {
        let op = pauli_x().kron(&identity2()).unwrap();
        let out = op.matmul(&ket("10"));
        assert!(out.approx_eq(&ket("00"), 1e-15));
    }

    #[test]
    fn kron_of_kets_is_composite_ket() {
        let k0 = ComplexMatrix::column(&[Complex64::ONE, Complex64::ZERO]);
        let k1 = ComplexMatrix::column(&[Complex64::ZERO, Complex64::ONE]);
        assert!(k0.kron(&k1).unwrap().approx_eq(&ket("01"), 0.0));
    }

    #[test]
    fn kron_rejects_oversized_registers() {
        let big = ComplexMatrix::identity(MAX_DIM);
        let err = big.kron(&ComplexMatrix::identity(2)).unwrap_err();
        assert!(err.to_string().contains("register too large"));
    }

    #[test]
    fn dagger_examples() {
        let i2 = identity2();
        assert!(i2.dagger().approx_eq(&i2, 0.0));
        let ix = pauli_x().scale(c(0.0, 1.0));
        assert!(ix.dagger().approx_eq(&pauli_x().scale(c(0.0, -1.0)), 0.0));
        let psi = ComplexMatrix::column(&[c(0.6, 0.0), c(0.0, 0.8)]);
        let bra = psi.dagger();
        assert_eq!((bra.rows(), bra.cols()), (1, 2));
        assert_eq!(bra.get(0, 1), c(0.0, -0.8));
    }

    #[test]
    fn dagger_is_an_involution_exactly() {
        let m = ComplexMatrix::from_rows(&[
            vec![(0.25, -1.5), (3.0, 0.125)],
            vec![(0.0, 2.0), (-0.5, 0.75)],
        ]);
        assert_eq!(m.dagger().dagger(), m);
    }

    #[test]
    fn unitarity_check_examples() {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let i_plus_ix = identity2()
            .add(&pauli_x().scale(c(0.0, 1.0)))
            .scale(c(s, 0.0));
        assert!(i_plus_ix.is_unitary(1e-10).unwrap());

        let i_plus_x = identity2().add(&pauli_x()).scale(c(s, 0.0));
        assert!(!i_plus_x.is_unitary(1e-10).unwrap());

        assert!(identity2().is_unitary(1e-10).unwrap());

        let rect = ComplexMatrix::zeros(2, 3);
        assert!(matches!(
            rect.is_unitary(1e-10),
            Err(Error::NotSquare { .. })
        ));
    }

    #[test]
    fn partial_trace_of_bell_state_is_maximally_mixed() {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let bell = ket("00").scale(c(s, 0.0)).add(&ket("11").scale(c(s, 0.0)));
        let rho = bell.matmul(&bell.dagger());
        let half_i = ComplexMatrix::identity(2).scale(c(0.5, 0.0));
        for keep in [0usize, 1] {
            let reduced = partial_trace(&rho, &[2, 2], &[keep]).unwrap();
            assert!(reduced.approx_eq(&half_i, 1e-12));
        }
    }

    #[test]
    fn partial_trace_of_product_state_keeps_the_factor() {
        let k0 = ket("0");
        let k1 = ket("1");
        let rho = k0
            .matmul(&k0.dagger())
            .kron(&k1.matmul(&k1.dagger()))
            .unwrap();
        let reduced = partial_trace(&rho, &[2, 2], &[1]).unwrap();
        assert!(reduced.approx_eq(&k1.matmul(&k1.dagger()), 1e-12));
    }

    #[test]
    fn tracing_controls_out_of_decisive_output_leaves_pure_target() {
        // |10> ⊗ X|1> = |100>; discarding both controls leaves |0><0|
        let state = ket("10").kron(&pauli_x().matmul(&ket("1"))).unwrap();
        let rho = state.matmul(&state.dagger());
        let target = partial_trace(&rho, &[2, 2, 2], &[2]).unwrap();
        let expected = ket("0").matmul(&ket("0").dagger());
        assert!(target.approx_eq(&expected, 1e-12));
    }

    #[test]
    fn partial_trace_error_paths() {
        let rho = ComplexMatrix::identity(4).scale(c(0.25, 0.0));
        assert!(matches!(
            partial_trace(&rho, &[2, 3], &[0]),
            Err(Error::DimsProductMismatch { .. })
        ));
        assert!(matches!(
            partial_trace(&rho, &[2, 2], &[]),
            Err(Error::EmptyKeep)
        ));
        assert!(matches!(
            partial_trace(&rho, &[2, 2], &[5]),
            Err(Error::BadSubsystem { .. })
        ));
    }

    #[test]
    fn partial_trace_preserves_trace() {
        // pseudo-random 3-qubit density matrix
        let mut seed = 0x243F6A8885A308D3u64;
        let mut next = move || {
            seed = seed
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            (seed >> 11) as f64 / (1u64 << 53) as f64 - 0.5
        };
        let g = ComplexMatrix::new(8, 8, (0..64).map(|_| c(next(), next())).collect());
        let gg = g.matmul(&g.dagger());
        let rho = gg.scale(c(1.0 / gg.trace().re, 0.0));
        for keep in [vec![0], vec![1, 2], vec![0, 2]] {
            let reduced = partial_trace(&rho, &[2, 2, 2], &keep).unwrap();
            assert!((reduced.trace() - rho.trace()).norm() <= 1e-12);
        }
    }

    #[test]
    fn chain_applies_in_listed_order() {
        let h = hadamard();
        let x = pauli_x();
        let i2 = ComplexMatrix::identity(2);
        assert!(matmul_chain(&[x.clone(), x.clone()])
            .unwrap()
            .approx_eq(&i2, 1e-12));
        assert!(matmul_chain(&[h.clone(), h.clone()])
            .unwrap()
            .approx_eq(&i2, 1e-12));
        let u = hadamard().matmul(&pauli_y());
        assert!(matmul_chain(&[u.clone(), u.dagger()])
            .unwrap()
            .approx_eq(&i2, 1e-12));
        // S then X differs from X then S: chain order is application order
        let s_then_x = matmul_chain(&[pauli_z(), x.clone()]).unwrap();
        assert!(s_then_x.approx_eq(&x.matmul(&pauli_z()), 0.0));
    }

    #[test]
    fn chain_errors_name_the_offending_pair() {
        let err =
            matmul_chain(&[ComplexMatrix::identity(2), ComplexMatrix::identity(4)]).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("ops[0]") && msg.contains("ops[1]"), "{msg}");
        assert!(matches!(matmul_chain(&[]), Err(Error::EmptyChain)));
    }

    #[test]
    fn hermitian_eigenvalues_of_known_matrices() {
        let z_eigs = pauli_z().hermitian_eigenvalues().unwrap();
        assert!((z_eigs[0] + 1.0).abs() < 1e-12 && (z_eigs[1] - 1.0).abs() < 1e-12);
        let y_eigs = pauli_y().hermitian_eigenvalues().unwrap();
        assert!((y_eigs[0] + 1.0).abs() < 1e-12 && (y_eigs[1] - 1.0).abs() < 1e-12);

        // PSD spectrum for G G† and eigenvalue sum equals the trace
        let g = ComplexMatrix::from_rows(&[
            vec![(1.0, 0.5), (-0.25, 2.0), (0.0, -1.0)],
            vec![(0.5, 0.0), (1.5, -0.5), (2.0, 0.25)],
            vec![(-1.0, 1.0), (0.75, 0.0), (0.5, 0.5)],
        ]);
        let gg = g.matmul(&g.dagger());
        let eigs = gg.hermitian_eigenvalues().unwrap();
        assert!(eigs.iter().all(|&e| e > -1e-10));
        let sum: f64 = eigs.iter().sum();
        assert!((sum - gg.trace().re).abs() < 1e-9);
    }

    #[test]
    fn trace_preserved_under_unitary_conjugation() {
        let u = hadamard().kron(&pauli_y()).unwrap();
        let mut rho = ComplexMatrix::zeros(4, 4);
        rho.set(0, 0, c(0.5, 0.0));
        rho.set(3, 3, c(0.5, 0.0));
        rho.set(0, 3, c(0.25, 0.1));
        rho.set(3, 0, c(0.25, -0.1));
        let evolved = u.matmul(&rho).matmul(&u.dagger());
        assert!((evolved.trace() - rho.trace()).norm() <= 1e-12);
    }
}
