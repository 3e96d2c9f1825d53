//! Decompositions behind every norm and bound: Hermitian eigen, SVD, complex
//! Schur (with deterministic eigenvalue ordering), Moore–Penrose
//! pseudoinverse, numeric rank, and spectral functions of PSD matrices.
//!
//! Every decomposition validates its reconstruction residual against
//! [`EPS_DECOMP`](super::EPS_DECOMP) before returning, so downstream bounds
//! can trust the factors instead of re-checking them.

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::dense;
use super::{ComplexMatrix, LinalgError, EPS_DECOMP, EPS_HERM, EPS_PSD};

/// Eigenvalue/eigenvector pair of a Hermitian matrix, eigenvalues descending.
#[derive(Debug, Clone)]
pub struct HermitianEigen {
    /// Real eigenvalues in descending order.
    pub values: Vec<f64>,
    /// Unitary matrix whose columns are the matching eigenvectors.
    pub vectors: Option<ComplexMatrix>,
}

/// Singular value decomposition A = U Σ V*.
#[derive(Debug, Clone)]
pub struct SvdDecomposition {
    /// Non-negative singular values in descending order.
    pub singular_values: Vec<f64>,
    /// Left singular vectors U (rows(A) × k).
    pub left: Option<ComplexMatrix>,
    /// Right singular vectors V (cols(A) × k), not conjugated.
    pub right: Option<ComplexMatrix>,
}

/// Complex Schur form A = Q T Q* with T upper triangular.
///
/// Eigenvalues are listed in decreasing modulus, ties broken by decreasing
/// real part then decreasing imaginary part. When the basis is requested, the
/// triangular factor is reordered by unitary similarity so that diag(T)
/// equals `values` entry for entry and ⟨Aqₙ, qₙ⟩ = λₙ.
#[derive(Debug, Clone)]
pub struct SchurDecomposition {
    pub values: Vec<Complex64>,
    /// Unitary Schur basis Q.
    pub basis: Option<ComplexMatrix>,
    /// Upper-triangular factor T = Q*AQ.
    pub triangular: Option<ComplexMatrix>,
}

fn residual_check(
    kind: &'static str,
    original: &DMatrix<Complex64>,
    reconstructed: &DMatrix<Complex64>,
) -> Result<(), LinalgError> {
    let scale = original.norm().max(f64::MIN_POSITIVE);
    let residual = (original - reconstructed).norm() / scale;
    if residual <= EPS_DECOMP {
        Ok(())
    } else {
        Err(LinalgError::ResidualTooLarge {
            kind,
            residual,
            budget: EPS_DECOMP,
        })
    }
}

/// Sort key with strict descending order for Schur eigenvalue listings.
fn schur_key(z: Complex64) -> (f64, f64, f64) {
    (z.norm(), z.re, z.im)
}

fn key_gt(a: (f64, f64, f64), b: (f64, f64, f64)) -> bool {
    if a.0 != b.0 {
        return a.0 > b.0;
    }
    if a.1 != b.1 {
        return a.1 > b.1;
    }
    a.2 > b.2
}

impl ComplexMatrix {
    /// Eigendecomposition of a Hermitian matrix, eigenvalues descending.
    ///
    /// The input must satisfy ‖A − A*‖ ≤ EPS_HERM·‖A‖; the decomposition runs
    /// on the Hermitian average (A + A*)/2.
    pub fn hermitian_eig(&self, want_vectors: bool) -> Result<HermitianEigen, LinalgError> {
        self.require_square()?;
        if self.is_empty() {
            return Ok(HermitianEigen {
                values: Vec::new(),
                vectors: want_vectors.then(ComplexMatrix::empty),
            });
        }
        let deviation = self.hermiticity_deviation()?;
        let scale = self.frobenius_norm().max(f64::MIN_POSITIVE);
        if deviation > EPS_HERM * scale {
            return Err(LinalgError::NotHermitian {
                deviation,
                budget: EPS_HERM * scale,
            });
        }
        let herm = (self.inner() + self.inner().adjoint()).map(|z| z * 0.5);
        let (values, vectors) = dense::hermitian_jacobi(&herm, true);
        let vectors = vectors.expect("vectors requested");

        let n = self.rows();
        let lambda = DMatrix::from_fn(n, n, |i, j| {
            if i == j {
                Complex64::new(values[i], 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            }
        });
        let recon = &vectors * lambda * vectors.adjoint();
        residual_check("Hermitian eigendecomposition", &herm, &recon)?;

        Ok(HermitianEigen {
            values,
            vectors: want_vectors
                .then(|| ComplexMatrix::from_inner_unchecked(vectors)),
        })
    }

    /// Singular value decomposition with descending singular values.
    pub fn svd(&self, want_vectors: bool) -> Result<SvdDecomposition, LinalgError> {
        if self.is_empty() {
            return Ok(SvdDecomposition {
                singular_values: Vec::new(),
                left: want_vectors.then(ComplexMatrix::empty),
                right: want_vectors.then(ComplexMatrix::empty),
            });
        }
        let (singular_values, u, v) = dense::jacobi_svd(self.inner());
        let k = singular_values.len();

        let sigma = DMatrix::from_fn(k, k, |i, j| {
            if i == j {
                Complex64::new(singular_values[i], 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            }
        });
        let recon = &u * sigma * v.adjoint();
        residual_check("singular value decomposition", self.inner(), &recon)?;

        Ok(SvdDecomposition {
            singular_values,
            left: want_vectors.then(|| ComplexMatrix::from_inner_unchecked(u)),
            right: want_vectors.then(|| ComplexMatrix::from_inner_unchecked(v)),
        })
    }

    /// Complex Schur eigenvalues, deterministically ordered (see
    /// [`SchurDecomposition`]). With `want_basis` the unitary Q and the
    /// reordered triangular factor are returned as well.
    pub fn schur(&self, want_basis: bool) -> Result<SchurDecomposition, LinalgError> {
        self.require_square()?;
        if self.is_empty() {
            return Ok(SchurDecomposition {
                values: Vec::new(),
                basis: want_basis.then(ComplexMatrix::empty),
                triangular: want_basis.then(ComplexMatrix::empty),
            });
        }
        let (mut q, mut t) =
            dense::complex_schur(self.inner()).ok_or(LinalgError::NonConvergence {
                kind: "Schur decomposition",
            })?;
        let n = self.rows();
        let scale = self.frobenius_norm().max(f64::MIN_POSITIVE);

        if want_basis {
            reorder_schur(&mut q, &mut t, scale);
            // zero the strict lower triangle the swaps may have smudged
            for i in 0..n {
                for j in 0..i {
                    t[(i, j)] = Complex64::new(0.0, 0.0);
                }
            }
            let recon = &q * &t * q.adjoint();
            residual_check("Schur decomposition", self.inner(), &recon)?;
            let values: Vec<Complex64> = (0..n).map(|i| t[(i, i)]).collect();
            Ok(SchurDecomposition {
                values,
                basis: Some(ComplexMatrix::from_inner_unchecked(q)),
                triangular: Some(ComplexMatrix::from_inner_unchecked(t)),
            })
        } else {
            let recon = &q * &t * q.adjoint();
            residual_check("Schur decomposition", self.inner(), &recon)?;
            let mut values: Vec<Complex64> = (0..n).map(|i| t[(i, i)]).collect();
            values.sort_by(|&a, &b| {
                let (ka, kb) = (schur_key(a), schur_key(b));
                kb.0.total_cmp(&ka.0)
                    .then(kb.1.total_cmp(&ka.1))
                    .then(kb.2.total_cmp(&ka.2))
            });
            Ok(SchurDecomposition {
                values,
                basis: None,
                triangular: None,
            })
        }
    }

    /// |A| = (A*A)^{1/2}, computed from the SVD as V Σ V*.
    pub fn abs_operator(&self) -> Result<ComplexMatrix, LinalgError> {
        if self.is_empty() {
            return Ok(ComplexMatrix::empty());
        }
        let svd = self.svd(true)?;
        let v = svd.right.expect("vectors requested");
        let sigma = ComplexMatrix::real_diagonal(&svd.singular_values);
        Ok(&(&v * &sigma) * &v.adjoint())
    }

    /// Moore–Penrose pseudoinverse via the SVD with the numeric-rank
    /// threshold; satisfies the four Penrose identities to EPS-scaled
    /// residuals.
    pub fn pseudoinverse(&self) -> Result<ComplexMatrix, LinalgError> {
        if self.is_empty() {
            return Ok(ComplexMatrix::from_inner_unchecked(DMatrix::zeros(
                self.cols(),
                self.rows(),
            )));
        }
        let svd = self.svd(true)?;
        let tau = self.rank_threshold(&svd.singular_values);
        let inv: Vec<f64> = svd
            .singular_values
            .iter()
            .map(|&s| if s > tau { 1.0 / s } else { 0.0 })
            .collect();
        let u = svd.left.expect("vectors requested");
        let v = svd.right.expect("vectors requested");
        let sigma_pinv = ComplexMatrix::real_diagonal(&inv);
        Ok(&(&v * &sigma_pinv) * &u.adjoint())
    }

    fn rank_threshold(&self, singular_values: &[f64]) -> f64 {
        let s1 = singular_values.first().copied().unwrap_or(0.0);
        self.rows().max(self.cols()) as f64 * f64::EPSILON * s1
    }

    /// Count of singular values above max(m,n)·ε·s₁; 0 for the zero matrix.
    pub fn numeric_rank(&self) -> Result<usize, LinalgError> {
        if self.is_empty() {
            return Ok(0);
        }
        let svd = self.svd(false)?;
        let tau = self.rank_threshold(&svd.singular_values);
        Ok(svd.singular_values.iter().filter(|&&s| s > tau).count())
    }

    /// f(A) for Hermitian PSD A: eigenvalues mapped by `f`, eigenvectors
    /// reused. Eigenvalues in [−EPS_PSD·‖A‖, 0) are clamped to 0 first;
    /// anything lower is a `NotPsd` error.
    pub fn spectral_function(
        &self,
        f: impl Fn(f64) -> f64,
    ) -> Result<ComplexMatrix, LinalgError> {
        if self.is_empty() {
            return Ok(ComplexMatrix::empty());
        }
        let eig = self.hermitian_eig(true)?;
        let opnorm_scale = eig
            .values
            .iter()
            .fold(0.0f64, |m, &v| m.max(v.abs()));
        let budget = EPS_PSD * opnorm_scale.max(f64::MIN_POSITIVE);
        let mut mapped = Vec::with_capacity(eig.values.len());
        for &v in &eig.values {
            if v < -budget {
                return Err(LinalgError::NotPsd {
                    eigenvalue: v,
                    budget,
                });
            }
            mapped.push(f(v.max(0.0)));
        }
        let vecs = eig.vectors.expect("vectors requested");
        let lambda = ComplexMatrix::real_diagonal(&mapped);
        Ok(&(&vecs * &lambda) * &vecs.adjoint())
    }

    /// A^t for Hermitian PSD A, with the 0⁰ = 1 convention (A⁰ = I).
    pub fn psd_power(&self, t: f64) -> Result<ComplexMatrix, LinalgError> {
        self.spectral_function(|x| x.powf(t))
    }

    /// Eigenbasis of a Hermitian PSD matrix, factored once for repeated
    /// spectral functions.
    pub fn psd_factors(&self) -> Result<PsdFactors, LinalgError> {
        PsdFactors::new(self)
    }
}

/// Clamped eigenbasis of a PSD matrix; cheap repeated powers and their
/// Schatten norms.
#[derive(Debug, Clone)]
pub struct PsdFactors {
    vectors: ComplexMatrix,
    values: Vec<f64>,
}

impl PsdFactors {
    pub fn new(m: &ComplexMatrix) -> Result<Self, LinalgError> {
        let eig = m.hermitian_eig(true)?;
        let top = eig.values.iter().fold(0.0f64, |a, &v| a.max(v.abs()));
        let budget = EPS_PSD * top.max(f64::MIN_POSITIVE);
        let mut values = Vec::with_capacity(eig.values.len());
        for &v in &eig.values {
            if v < -budget {
                return Err(LinalgError::NotPsd {
                    eigenvalue: v,
                    budget,
                });
            }
            values.push(v.max(0.0));
        }
        Ok(PsdFactors {
            vectors: eig.vectors.expect("vectors requested"),
            values,
        })
    }

    /// Clamped eigenvalues, descending.
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Operator norm = top eigenvalue.
    pub fn opnorm(&self) -> f64 {
        self.values.first().copied().unwrap_or(0.0)
    }

    pub fn apply(&self, f: impl Fn(f64) -> f64) -> ComplexMatrix {
        let mapped: Vec<f64> = self.values.iter().map(|&v| f(v)).collect();
        let lambda = ComplexMatrix::real_diagonal(&mapped);
        &(&self.vectors * &lambda) * &self.vectors.adjoint()
    }

    /// M^t with the 0⁰ = 1 convention.
    pub fn power(&self, t: f64) -> ComplexMatrix {
        self.apply(|x| x.powf(t))
    }
}

/// Reorders a complex Schur form in place so the diagonal is listed in
/// decreasing modulus (ties by decreasing real, then imaginary part).
///
/// Adjacent diagonal entries are swapped by a 2×2 unitary similarity built
/// from an eigenvector of the corresponding triangular block, the complex
/// analogue of LAPACK's ztrexc. Entries within 1e-12·scale of each other are
/// treated as tied and never swapped: a defective cluster cannot be reordered
/// and an equal pair does not need to be.
fn reorder_schur(q: &mut DMatrix<Complex64>, t: &mut DMatrix<Complex64>, scale: f64) {
    let n = t.nrows();
    let tie = 1e-12 * scale.max(1.0);
    loop {
        let mut swapped = false;
        for k in 0..n.saturating_sub(1) {
            let a = t[(k, k)];
            let b = t[(k + 1, k + 1)];
            if (a - b).norm() <= tie {
                continue;
            }
            if key_gt(schur_key(b), schur_key(a)) {
                swap_adjacent(q, t, k);
                swapped = true;
            }
        }
        if !swapped {
            break;
        }
    }
}

/// Swaps diagonal positions k and k+1 of the triangular factor by a unitary
/// similarity, updating Q accordingly.
fn swap_adjacent(q: &mut DMatrix<Complex64>, t: &mut DMatrix<Complex64>, k: usize) {
    let t11 = t[(k, k)];
    let t12 = t[(k, k + 1)];
    let t22 = t[(k + 1, k + 1)];
    // v = (t12, t22 − t11) is an eigenvector of [[t11, t12], [0, t22]] for t22
    let v0 = t12;
    let v1 = t22 - t11;
    let r = (v0.norm_sqr() + v1.norm_sqr()).sqrt();
    if r == 0.0 {
        return;
    }
    let g00 = v0 / r;
    let g10 = v1 / r;
    // second column orthonormal to the first
    let g01 = -g10.conj();
    let g11 = g00.conj();

    let n = t.nrows();
    // T ← G* T (rows k, k+1)
    for j in 0..n {
        let a = t[(k, j)];
        let b = t[(k + 1, j)];
        t[(k, j)] = g00.conj() * a + g10.conj() * b;
        t[(k + 1, j)] = g01.conj() * a + g11.conj() * b;
    }
    // T ← T G (cols k, k+1)
    for i in 0..n {
        let a = t[(i, k)];
        let b = t[(i, k + 1)];
        t[(i, k)] = a * g00 + b * g10;
        t[(i, k + 1)] = a * g01 + b * g11;
    }
    // Q ← Q G
    for i in 0..n {
        let a = q[(i, k)];
        let b = q[(i, k + 1)];
        q[(i, k)] = a * g00 + b * g10;
        q[(i, k + 1)] = a * g01 + b * g11;
    }
    t[(k + 1, k)] = Complex64::new(0.0, 0.0);
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn demo_matrix(n: usize) -> ComplexMatrix {
        // deterministic, non-normal, complex
        ComplexMatrix::from_fn(n, n, |i, j| {
            c(
                ((3 * i + 7 * j + 1) % 11) as f64 / 3.0 - 1.5,
                ((5 * i + 2 * j) % 7) as f64 / 4.0 - 0.7,
            )
        })
        .unwrap()
    }

    #[test]
    fn hermitian_eig_diagonal_descending() {
        let a = ComplexMatrix::real_diagonal(&[1.0, 5.0, 3.0]);
        let eig = a.hermitian_eig(false).unwrap();
        assert_eq!(eig.values, vec![5.0, 3.0, 1.0]);
    }

    #[test]
    fn hermitian_eig_pauli_x() {
        let a = ComplexMatrix::from_real_rows(2, 2, &[0.0, 1.0, 1.0, 0.0]).unwrap();
        let eig = a.hermitian_eig(true).unwrap();
        assert!((eig.values[0] - 1.0).abs() < 1e-12);
        assert!((eig.values[1] + 1.0).abs() < 1e-12);
    }

    #[test]
    fn hermitian_eig_identity_all_ones() {
        let eig = ComplexMatrix::identity(6).hermitian_eig(false).unwrap();
        assert!(eig.values.iter().all(|&v| (v - 1.0).abs() < 1e-13));
    }

    #[test]
    fn hermitian_eig_rejects_non_hermitian() {
        let a = ComplexMatrix::from_real_rows(2, 2, &[0.0, 1.0, 0.0, 0.0]).unwrap();
        assert!(matches!(
            a.hermitian_eig(false),
            Err(LinalgError::NotHermitian { .. })
        ));
    }

    #[test]
    fn svd_of_diagonal_takes_moduli() {
        let a = ComplexMatrix::real_diagonal(&[3.0, -4.0]);
        let svd = a.svd(false).unwrap();
        assert!((svd.singular_values[0] - 4.0).abs() < 1e-12);
        assert!((svd.singular_values[1] - 3.0).abs() < 1e-12);
    }

    #[test]
    fn svd_rank_one_outer_product() {
        // uv* with unit u, v has singular values (1, 0, 0)
        let u = [c(0.6, 0.0), c(0.0, 0.8), c(0.0, 0.0)];
        let v = [c(0.0, 1.0), c(0.0, 0.0), c(0.0, 0.0)];
        let a = ComplexMatrix::from_fn(3, 3, |i, j| u[i] * v[j].conj()).unwrap();
        let svd = a.svd(false).unwrap();
        assert!((svd.singular_values[0] - 1.0).abs() < 1e-12);
        assert!(svd.singular_values[1].abs() < 1e-12);
    }

    #[test]
    fn svd_trace_identity() {
        let a = ComplexMatrix::from_fn(5, 3, |i, j| c((i + 2 * j) as f64 * 0.21, j as f64 - 1.0))
            .unwrap();
        let svd = a.svd(false).unwrap();
        let sum_sq: f64 = svd.singular_values.iter().map(|s| s * s).sum();
        let trace = a.gram().trace().re;
        assert!((sum_sq - trace).abs() <= 1e-10 * trace.abs().max(1.0));
    }

    #[test]
    fn schur_of_upper_triangular_reads_diagonal() {
        let a =
            ComplexMatrix::from_real_rows(3, 3, &[2.0, 5.0, 1.0, 0.0, -7.0, 3.0, 0.0, 0.0, 4.0])
                .unwrap();
        let s = a.schur(false).unwrap();
        let mods: Vec<f64> = s.values.iter().map(|z| z.norm()).collect();
        assert!((mods[0] - 7.0).abs() < 1e-10);
        assert!((mods[1] - 4.0).abs() < 1e-10);
        assert!((mods[2] - 2.0).abs() < 1e-10);
    }

    #[test]
    fn schur_rotation_has_pure_imaginary_pair() {
        let a = ComplexMatrix::from_real_rows(2, 2, &[0.0, 1.0, -1.0, 0.0]).unwrap();
        let s = a.schur(false).unwrap();
        // ordering tie on modulus broken by decreasing imaginary part
        assert!((s.values[0] - c(0.0, 1.0)).norm() < 1e-10);
        assert!((s.values[1] - c(0.0, -1.0)).norm() < 1e-10);
    }

    #[test]
    fn schur_basis_diagonal_matches_values() {
        let a = demo_matrix(5);
        let s = a.schur(true).unwrap();
        let q = s.basis.as_ref().unwrap();
        let t = s.triangular.as_ref().unwrap();
        // unitary to budget
        let qq = &q.adjoint() * q;
        assert!(qq.approx_eq(&ComplexMatrix::identity(5), 1e-12));
        // ordering respected
        for w in s.values.windows(2) {
            assert!(w[0].norm() >= w[1].norm() - 1e-9);
        }
        // ⟨Aqₙ, qₙ⟩ = λₙ = tₙₙ
        let scale = a.frobenius_norm();
        for n in 0..5 {
            let rayleigh = a.sandwich(q, n, q, n);
            assert!((rayleigh - s.values[n]).norm() <= 1e-8 * scale);
            assert!((t.get(n, n) - s.values[n]).norm() == 0.0);
        }
    }

    #[test]
    fn schur_handles_nilpotent_shift() {
        let a = ComplexMatrix::from_real_rows(3, 3, &[0., 1., 0., 0., 0., 1., 0., 0., 0.])
            .unwrap();
        let s = a.schur(true).unwrap();
        assert!(s.values.iter().all(|z| z.norm() < 1e-12));
    }

    #[test]
    fn abs_operator_of_diagonal() {
        let a = ComplexMatrix::real_diagonal(&[-3.0, 4.0]);
        let abs = a.abs_operator().unwrap();
        assert!(abs.approx_eq(&ComplexMatrix::real_diagonal(&[3.0, 4.0]), 1e-12));
    }

    #[test]
    fn abs_operator_of_jordan_cell() {
        let a = ComplexMatrix::from_real_rows(2, 2, &[0.0, 1.0, 0.0, 0.0]).unwrap();
        let abs = a.abs_operator().unwrap();
        assert!(abs.approx_eq(&ComplexMatrix::real_diagonal(&[0.0, 1.0]), 1e-12));
    }

    #[test]
    fn abs_operator_of_zero_is_zero() {
        let z = ComplexMatrix::zeros(3, 3);
        assert!(z.abs_operator().unwrap().approx_eq(&z, 0.0));
    }

    #[test]
    fn abs_operator_squares_to_gram() {
        let a = demo_matrix(4);
        let abs = a.abs_operator().unwrap();
        let sq = &abs * &abs;
        let gram = a.gram();
        let budget = EPS_DECOMP * a.frobenius_norm().powi(2).max(1.0);
        assert!(sq.approx_eq(&gram, budget.max(1e-12)));
    }

    #[test]
    fn pseudoinverse_of_diagonal() {
        let a = ComplexMatrix::real_diagonal(&[2.0, 0.0]);
        let p = a.pseudoinverse().unwrap();
        assert!(p.approx_eq(&ComplexMatrix::real_diagonal(&[0.5, 0.0]), 1e-14));
    }

    #[test]
    fn pseudoinverse_of_unitary_is_adjoint() {
        // QR of a generic matrix gives a unitary factor
        let q_mat = demo_matrix(4).inner().clone().qr().q();
        let u = ComplexMatrix::from_inner_unchecked(q_mat);
        let p = u.pseudoinverse().unwrap();
        assert!(p.approx_eq(&u.adjoint(), 1e-12));
    }

    #[test]
    fn penrose_identities_on_rank_deficient() {
        // 4×4 of rank 2 via a product of 4×2 and 2×4 factors
        let f = ComplexMatrix::from_fn(4, 2, |i, j| c((i + j) as f64 * 0.4 - 1.0, i as f64 * 0.2))
            .unwrap();
        let g = ComplexMatrix::from_fn(2, 4, |i, j| c(j as f64 * 0.3, (i * j) as f64 * 0.1 - 0.5))
            .unwrap();
        let a = &f * &g;
        assert_eq!(a.numeric_rank().unwrap(), 2);
        let p = a.pseudoinverse().unwrap();
        let tol = 1e-8 * a.frobenius_norm().max(1.0);
        assert!((&(&a * &p) * &a).approx_eq(&a, tol));
        assert!((&(&p * &a) * &p).approx_eq(&p, tol));
        let ap = &a * &p;
        let pa = &p * &a;
        assert!(ap.adjoint().approx_eq(&ap, tol));
        assert!(pa.adjoint().approx_eq(&pa, tol));
        // AA† projects onto range(A): (AA†)A = A covered above; idempotence:
        assert!((&ap * &ap).approx_eq(&ap, tol));
    }

    #[test]
    fn numeric_rank_thresholds() {
        assert_eq!(ComplexMatrix::zeros(3, 3).numeric_rank().unwrap(), 0);
        let a = ComplexMatrix::real_diagonal(&[1.0, 1e-20]);
        assert_eq!(a.numeric_rank().unwrap(), 1);
        // star graph K_{1,3} adjacency has eigenvalues ±√3, 0, 0
        let star = ComplexMatrix::from_real_rows(
            4,
            4,
            &[
                0., 1., 1., 1., //
                1., 0., 0., 0., //
                1., 0., 0., 0., //
                1., 0., 0., 0.,
            ],
        )
        .unwrap();
        assert_eq!(star.numeric_rank().unwrap(), 2);
    }

    #[test]
    fn spectral_function_sqrt_and_identity() {
        let a = ComplexMatrix::real_diagonal(&[4.0, 9.0]);
        let r = a.spectral_function(f64::sqrt).unwrap();
        assert!(r.approx_eq(&ComplexMatrix::real_diagonal(&[2.0, 3.0]), 1e-12));

        let psd = demo_matrix(4).gram();
        let same = psd.spectral_function(|x| x).unwrap();
        assert!(same.approx_eq(&psd, EPS_DECOMP * psd.frobenius_norm().max(1.0)));
    }

    #[test]
    fn spectral_function_fractional_power() {
        let a = ComplexMatrix::real_diagonal(&[8.0]);
        let r = a.psd_power(2.0 / 3.0).unwrap();
        assert!((r.get(0, 0).re - 4.0).abs() < 1e-12);
    }

    #[test]
    fn psd_power_zero_exponent_gives_identity() {
        let a = ComplexMatrix::real_diagonal(&[2.0, 0.0]);
        let r = a.psd_power(0.0).unwrap();
        assert!(r.approx_eq(&ComplexMatrix::identity(2), 1e-12));
    }

    #[test]
    fn spectral_function_rejects_indefinite() {
        let a = ComplexMatrix::real_diagonal(&[1.0, -0.5]);
        assert!(matches!(
            a.spectral_function(f64::sqrt),
            Err(LinalgError::NotPsd { .. })
        ));
    }

    #[test]
    fn spectral_function_clamps_roundoff_negatives() {
        let a = ComplexMatrix::real_diagonal(&[1.0, -1e-12]);
        let r = a.spectral_function(f64::sqrt).unwrap();
        assert!((r.get(1, 1).re - 0.0).abs() < 1e-12);
    }

    #[test]
    fn hermitian_and_schur_spectra_agree() {
        let h = demo_matrix(5);
        let h = &h + &h.adjoint();
        let eig = h.hermitian_eig(false).unwrap();
        let schur = h.schur(false).unwrap();
        let mut schur_re: Vec<f64> = schur.values.iter().map(|z| z.re).collect();
        schur_re.sort_by(|a, b| b.total_cmp(a));
        let scale = h.frobenius_norm();
        for (a, b) in eig.values.iter().zip(&schur_re) {
            assert!((a - b).abs() <= 1e-8 * scale.max(1.0));
        }
        for z in &schur.values {
            assert!(z.im.abs() <= 1e-8 * scale.max(1.0));
        }
    }
}
