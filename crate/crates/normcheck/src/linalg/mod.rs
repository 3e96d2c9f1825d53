//! Dense complex matrices and the decompositions the inequality catalog
//! consumes.
//!
//! `ComplexMatrix` is a value type: every operation is pure and returns a new
//! matrix, entries are validated to be finite at construction, and instances
//! are safe to share across threads.

mod decomp;
pub(crate) mod dense;
mod textio;

pub use decomp::{HermitianEigen, PsdFactors, SchurDecomposition, SvdDecomposition};
pub use textio::{read_matrix, write_matrix};

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use nalgebra::DMatrix;
use num_complex::Complex64;
use thiserror::Error;

/// Relative residual budget for every decomposition: ‖A − recon‖ ≤ EPS_DECOMP·‖A‖.
pub const EPS_DECOMP: f64 = 1e-10;
/// Eigenvalues of a nominally PSD matrix in [−EPS_PSD·‖A‖, 0) are clamped to 0.
pub const EPS_PSD: f64 = 1e-10;
/// Hermiticity precondition: ‖A − A*‖ ≤ EPS_HERM·‖A‖ (Frobenius).
pub const EPS_HERM: f64 = 1e-8;

#[derive(Debug, Error)]
pub enum LinalgError {
    #[error("matrix entries must be finite (found non-finite entry at row {row}, col {col})")]
    NonFinite { row: usize, col: usize },
    #[error("entry buffer has {got} entries, expected {rows}×{cols}={expected}")]
    BadEntryCount {
        rows: usize,
        cols: usize,
        got: usize,
        expected: usize,
    },
    #[error("dimension mismatch: {context} ({left_rows}×{left_cols} vs {right_rows}×{right_cols})")]
    DimensionMismatch {
        context: &'static str,
        left_rows: usize,
        left_cols: usize,
        right_rows: usize,
        right_cols: usize,
    },
    #[error("matrix must be square, got {rows}×{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is not Hermitian: ‖A − A*‖ = {deviation:.3e} exceeds {budget:.3e}")]
    NotHermitian { deviation: f64, budget: f64 },
    #[error("matrix is not positive semidefinite: eigenvalue {eigenvalue:.6e} below −{budget:.3e}")]
    NotPsd { eigenvalue: f64, budget: f64 },
    #[error("{kind} iteration failed to converge")]
    NonConvergence { kind: &'static str },
    #[error("decomposition residual {residual:.3e} exceeds budget {budget:.3e} for {kind}")]
    ResidualTooLarge {
        kind: &'static str,
        residual: f64,
        budget: f64,
    },
    #[error("matrix text parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// Dense rectangular complex matrix, the universal operand.
///
/// Entries are stored via `nalgebra`; the public constructors take row-major
/// data to match the on-disk text format. All entries are finite by
/// construction.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix {
    inner: DMatrix<Complex64>,
}

impl ComplexMatrix {
    /// Builds a matrix from row-major entries, rejecting NaN/Inf.
    pub fn from_rows(rows: usize, cols: usize, entries: Vec<Complex64>) -> Result<Self, LinalgError> {
        if entries.len() != rows * cols {
            return Err(LinalgError::BadEntryCount {
                rows,
                cols,
                got: entries.len(),
                expected: rows * cols,
            });
        }
        let inner = DMatrix::from_fn(rows, cols, |i, j| entries[i * cols + j]);
        Self::from_inner(inner)
    }

    /// Builds a matrix from a closure over (row, col).
    pub fn from_fn(
        rows: usize,
        cols: usize,
        f: impl FnMut(usize, usize) -> Complex64,
    ) -> Result<Self, LinalgError> {
        Self::from_inner(DMatrix::from_fn(rows, cols, f))
    }

    /// Builds a real matrix from row-major f64 entries.
    pub fn from_real_rows(rows: usize, cols: usize, entries: &[f64]) -> Result<Self, LinalgError> {
        Self::from_rows(
            rows,
            cols,
            entries.iter().map(|&x| Complex64::new(x, 0.0)).collect(),
        )
    }

    pub(crate) fn from_inner(inner: DMatrix<Complex64>) -> Result<Self, LinalgError> {
        for j in 0..inner.ncols() {
            for i in 0..inner.nrows() {
                let z = inner[(i, j)];
                if !z.re.is_finite() || !z.im.is_finite() {
                    return Err(LinalgError::NonFinite { row: i, col: j });
                }
            }
        }
        Ok(Self { inner })
    }

    /// Wraps without the finiteness scan; for internal results of arithmetic
    /// on already-validated operands.
    pub(crate) fn from_inner_unchecked(inner: DMatrix<Complex64>) -> Self {
        Self { inner }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            inner: DMatrix::zeros(rows, cols),
        }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            inner: DMatrix::identity(n, n),
        }
    }

    /// The 0×0 matrix; `a.direct_sum(&empty)` returns `a` unchanged.
    pub fn empty() -> Self {
        Self {
            inner: DMatrix::zeros(0, 0),
        }
    }

    pub fn diagonal(values: &[Complex64]) -> Self {
        let n = values.len();
        Self {
            inner: DMatrix::from_fn(n, n, |i, j| {
                if i == j {
                    values[i]
                } else {
                    Complex64::new(0.0, 0.0)
                }
            }),
        }
    }

    pub fn real_diagonal(values: &[f64]) -> Self {
        let vals: Vec<Complex64> = values.iter().map(|&x| Complex64::new(x, 0.0)).collect();
        Self::diagonal(&vals)
    }

    pub fn rows(&self) -> usize {
        self.inner.nrows()
    }

    pub fn cols(&self) -> usize {
        self.inner.ncols()
    }

    pub fn is_square(&self) -> bool {
        self.rows() == self.cols()
    }

    pub fn is_empty(&self) -> bool {
        self.rows() == 0 || self.cols() == 0
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.inner[(row, col)]
    }

    /// Row-major iteration over entries.
    pub fn entries_row_major(&self) -> impl Iterator<Item = Complex64> + '_ {
        let cols = self.cols();
        (0..self.rows() * cols).map(move |k| self.inner[(k / cols, k % cols)])
    }

    pub fn adjoint(&self) -> Self {
        Self {
            inner: self.inner.adjoint(),
        }
    }

    pub fn transpose(&self) -> Self {
        Self {
            inner: self.inner.transpose(),
        }
    }

    pub fn conjugate(&self) -> Self {
        Self {
            inner: self.inner.map(|z| z.conj()),
        }
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self {
            inner: self.inner.map(|z| z * s),
        }
    }

    pub fn scale_re(&self, s: f64) -> Self {
        self.scale(Complex64::new(s, 0.0))
    }

    /// ℜ(A) = (A + A*)/2. Requires a square matrix.
    pub fn real_part(&self) -> Result<Self, LinalgError> {
        self.require_square()?;
        Ok(Self {
            inner: (&self.inner + self.inner.adjoint()).map(|z| z * 0.5),
        })
    }

    /// ℑ(A) = (A − A*)/2i. Requires a square matrix.
    pub fn imag_part(&self) -> Result<Self, LinalgError> {
        self.require_square()?;
        let half_over_i = Complex64::new(0.0, -0.5);
        Ok(Self {
            inner: (&self.inner - self.inner.adjoint()).map(|z| z * half_over_i),
        })
    }

    pub fn trace(&self) -> Complex64 {
        self.inner.trace()
    }

    /// Frobenius (Hilbert–Schmidt entrywise) norm; decomposition-free.
    pub fn frobenius_norm(&self) -> f64 {
        self.inner.norm()
    }

    pub fn max_entry_modulus(&self) -> f64 {
        self.inner.iter().fold(0.0, |m, z| m.max(z.norm()))
    }

    /// ‖A − A*‖_F, the hermiticity deviation (square matrices).
    pub fn hermiticity_deviation(&self) -> Result<f64, LinalgError> {
        self.require_square()?;
        Ok((&self.inner - self.inner.adjoint()).norm())
    }

    pub fn is_hermitian_within(&self, rel_tol: f64) -> bool {
        match self.hermiticity_deviation() {
            Ok(dev) => dev <= rel_tol * self.frobenius_norm().max(f64::MIN_POSITIVE),
            Err(_) => false,
        }
    }

    /// Block-diagonal direct sum [[A, 0], [0, B]]. Empty blocks collapse away.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let (m1, n1) = (self.rows(), self.cols());
        let (m2, n2) = (other.rows(), other.cols());
        let mut out = DMatrix::zeros(m1 + m2, n1 + n2);
        out.view_mut((0, 0), (m1, n1)).copy_from(&self.inner);
        out.view_mut((m1, n1), (m2, n2)).copy_from(&other.inner);
        Self { inner: out }
    }

    /// Dense assembly of the 2×2 operator matrix [[A, X], [B, Y]].
    pub fn block2x2(a: &Self, x: &Self, b: &Self, y: &Self) -> Result<Self, LinalgError> {
        let mismatch = |context| LinalgError::DimensionMismatch {
            context,
            left_rows: a.rows(),
            left_cols: a.cols(),
            right_rows: y.rows(),
            right_cols: y.cols(),
        };
        if a.rows() != x.rows() || b.rows() != y.rows() {
            return Err(mismatch("block2x2 row heights"));
        }
        if a.cols() != b.cols() || x.cols() != y.cols() {
            return Err(mismatch("block2x2 column widths"));
        }
        let (m1, n1) = (a.rows(), a.cols());
        let (m2, n2) = (b.rows(), x.cols());
        let mut out = DMatrix::zeros(m1 + m2, n1 + n2);
        out.view_mut((0, 0), (m1, n1)).copy_from(&a.inner);
        out.view_mut((0, n1), (m1, n2)).copy_from(&x.inner);
        out.view_mut((m1, 0), (m2, n1)).copy_from(&b.inner);
        out.view_mut((m1, n1), (m2, n2)).copy_from(&y.inner);
        Ok(Self { inner: out })
    }

    /// Checked matrix product.
    pub fn try_mul(&self, rhs: &Self) -> Result<Self, LinalgError> {
        if self.cols() != rhs.rows() {
            return Err(LinalgError::DimensionMismatch {
                context: "matrix product",
                left_rows: self.rows(),
                left_cols: self.cols(),
                right_rows: rhs.rows(),
                right_cols: rhs.cols(),
            });
        }
        Ok(Self {
            inner: &self.inner * &rhs.inner,
        })
    }

    /// A*A, the Gram matrix of the columns.
    pub fn gram(&self) -> Self {
        Self {
            inner: self.inner.adjoint() * &self.inner,
        }
    }

    /// AA*, the Gram matrix of the rows.
    pub fn cogram(&self) -> Self {
        Self {
            inner: &self.inner * self.inner.adjoint(),
        }
    }

    /// ⟨Ax, y⟩ = y* A x for column indices into X and Y.
    pub fn sandwich(&self, x: &Self, xcol: usize, y: &Self, ycol: usize) -> Complex64 {
        let ax = &self.inner * x.inner.column(xcol);
        y.inner.column(ycol).dotc(&ax)
    }

    pub fn column(&self, j: usize) -> Vec<Complex64> {
        self.inner.column(j).iter().copied().collect()
    }

    pub(crate) fn require_square(&self) -> Result<(), LinalgError> {
        if self.is_square() {
            Ok(())
        } else {
            Err(LinalgError::NotSquare {
                rows: self.rows(),
                cols: self.cols(),
            })
        }
    }

    pub(crate) fn inner(&self) -> &DMatrix<Complex64> {
        &self.inner
    }

    /// Entrywise closeness in max-modulus, for tests and format round-trips.
    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.rows() == other.rows()
            && self.cols() == other.cols()
            && (&self.inner - &other.inner).iter().all(|z| z.norm() <= tol)
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix {}×{} [", self.rows(), self.cols())?;
        for i in 0..self.rows() {
            write!(f, "  ")?;
            for j in 0..self.cols() {
                let z = self.get(i, j);
                write!(f, "{:+.4}{:+.4}i  ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $op:tt, $context:expr) => {
        impl $trait for &ComplexMatrix {
            type Output = ComplexMatrix;
            fn $method(self, rhs: &ComplexMatrix) -> ComplexMatrix {
                if $context == "matrix product" {
                    assert_eq!(self.cols(), rhs.rows(), "{} dimension mismatch", $context);
                } else {
                    assert_eq!(
                        (self.rows(), self.cols()),
                        (rhs.rows(), rhs.cols()),
                        "{} dimension mismatch",
                        $context
                    );
                }
                ComplexMatrix::from_inner_unchecked(&self.inner $op &rhs.inner)
            }
        }
    };
}

binop!(Add, add, +, "matrix sum");
binop!(Sub, sub, -, "matrix difference");
binop!(Mul, mul, *, "matrix product");

impl Neg for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn neg(self) -> ComplexMatrix {
        ComplexMatrix::from_inner_unchecked(-&self.inner)
    }
}
