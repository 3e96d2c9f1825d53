//! Seedable, platform-independent random inputs for the verification
//! campaigns. Every generator draws from a caller-supplied ChaCha8 stream so
//! a (seed, check, dim, trial) tuple reproduces its inputs exactly on any
//! machine.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::linalg::ComplexMatrix;

use super::HarnessError;

/// Orthonormality budget for generated orthonormal sets.
pub const EPS_GEN_ORTHO: f64 = 1e-12;

fn gaussian(rng: &mut ChaCha8Rng) -> Complex64 {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    Complex64::new(re, im)
}

/// Dense matrix with i.i.d. standard complex Gaussian entries
/// (re, im ~ N(0,1) independently, so E|entry|² = 2).
pub fn gen_ginibre_rect(rows: usize, cols: usize, rng: &mut ChaCha8Rng) -> ComplexMatrix {
    let entries: Vec<Complex64> = (0..rows * cols).map(|_| gaussian(rng)).collect();
    ComplexMatrix::from_rows(rows, cols, entries).expect("gaussian entries are finite")
}

/// Square Ginibre matrix, the generic input of every campaign.
pub fn gen_ginibre(n: usize, rng: &mut ChaCha8Rng) -> ComplexMatrix {
    gen_ginibre_rect(n, n, rng)
}

/// Hermitian PSD matrix G*G.
pub fn gen_psd(n: usize, rng: &mut ChaCha8Rng) -> ComplexMatrix {
    gen_ginibre(n, rng).gram()
}

/// Rank-r product of n×r and r×n Ginibre factors; the numeric rank is
/// asserted and the draw is retried on the (measure-zero) failures.
pub fn gen_fixed_rank(
    n: usize,
    r: usize,
    rng: &mut ChaCha8Rng,
) -> Result<ComplexMatrix, HarnessError> {
    if r == 0 || r > n {
        return Err(HarnessError::BadRank { n, r });
    }
    for _ in 0..8 {
        let candidate = &gen_ginibre_rect(n, r, rng) * &gen_ginibre_rect(r, n, rng);
        if candidate.numeric_rank().map_err(HarnessError::from)? == r {
            return Ok(candidate);
        }
    }
    Err(HarnessError::Generation {
        message: format!("could not draw a numeric-rank-{r} matrix of size {n}"),
    })
}

/// Unitary factor of the QR decomposition of a Ginibre draw, validated to
/// the generator orthonormality budget.
pub fn gen_unitary(n: usize, rng: &mut ChaCha8Rng) -> Result<ComplexMatrix, HarnessError> {
    let q = gen_ginibre(n, rng).inner().clone().qr().q();
    let q = ComplexMatrix::from_inner(q).map_err(HarnessError::from)?;
    validate_orthonormal(&q)?;
    Ok(q)
}

/// Normal matrix U D U* with a random unitary U and complex Gaussian
/// diagonal D.
pub fn gen_normal(n: usize, rng: &mut ChaCha8Rng) -> Result<ComplexMatrix, HarnessError> {
    let u = gen_unitary(n, rng)?;
    let d = ComplexMatrix::diagonal(&(0..n).map(|_| gaussian(rng)).collect::<Vec<_>>());
    Ok(&(&u * &d) * &u.adjoint())
}

/// Nilpotent shift Jₙ (ones on the superdiagonal).
pub fn gen_nilpotent(n: usize) -> ComplexMatrix {
    ComplexMatrix::from_fn(n, n, |i, j| {
        Complex64::new(if j == i + 1 { 1.0 } else { 0.0 }, 0.0)
    })
    .expect("shift entries are finite")
}

/// Matrix with k orthonormal columns (k ≤ n), Gram-validated to 1e-12.
pub fn gen_orthonormal_set(
    n: usize,
    k: usize,
    rng: &mut ChaCha8Rng,
) -> Result<ComplexMatrix, HarnessError> {
    if k > n || k == 0 {
        return Err(HarnessError::BadSize { n, k });
    }
    let q = gen_ginibre(n, rng).inner().clone().qr().q();
    let cols = ComplexMatrix::from_fn(n, k, |i, j| q[(i, j)]).map_err(HarnessError::from)?;
    validate_orthonormal(&cols)?;
    Ok(cols)
}

fn validate_orthonormal(m: &ComplexMatrix) -> Result<(), HarnessError> {
    let gram = m.gram();
    let k = gram.rows();
    let eye = DMatrix::<Complex64>::identity(k, k);
    let deviation = (gram.inner() - eye).norm();
    if deviation > EPS_GEN_ORTHO {
        return Err(HarnessError::Generation {
            message: format!("orthonormal set deviates by {deviation:.3e}"),
        });
    }
    Ok(())
}

/// Pair (A, B) with AB selfadjoint. Random pairs essentially never satisfy
/// the precondition, so the pairs are built: commuting Hermitians in a
/// shared eigenbasis, an orthogonal-projector pair, or a similarity pair
/// (S, S⁻¹H) with invertible S.
pub fn gen_selfadjoint_product_pair(
    n: usize,
    style: usize,
    rng: &mut ChaCha8Rng,
) -> Result<(ComplexMatrix, ComplexMatrix), HarnessError> {
    match style % 3 {
        0 => {
            let u = gen_unitary(n, rng)?;
            let real_diag = |rng: &mut ChaCha8Rng| {
                let d: Vec<f64> = (0..n).map(|_| rng.sample::<f64, _>(StandardNormal)).collect();
                ComplexMatrix::real_diagonal(&d)
            };
            let a = &(&u * &real_diag(rng)) * &u.adjoint();
            let b = &(&u * &real_diag(rng)) * &u.adjoint();
            Ok((a, b))
        }
        1 => {
            let k = (n / 2).max(1);
            let cols = gen_orthonormal_set(n, k, rng)?;
            let projector = &cols * &cols.adjoint();
            Ok((projector.clone(), projector))
        }
        _ => {
            // diagonally dominant shift keeps S comfortably invertible
            let g = gen_ginibre(n, rng);
            let shift = 4.0 * (n as f64).sqrt() + 4.0;
            let s = &g + &ComplexMatrix::identity(n).scale_re(shift);
            let h = {
                let g = gen_ginibre(n, rng);
                &g + &g.adjoint()
            };
            let b = &s.pseudoinverse().map_err(HarnessError::from)? * &h;
            Ok((s, b))
        }
    }
}

/// Parallel pair: either B = μe^{iφ}A, or two operators sharing a maximizing
/// unit pair (u ↦ v) with strictly subdominant remainders, which makes
/// ‖A + B‖ = ‖A‖ + ‖B‖ exact.
pub fn gen_parallel_pair(
    n: usize,
    style: usize,
    rng: &mut ChaCha8Rng,
) -> Result<(ComplexMatrix, ComplexMatrix), HarnessError> {
    if style.is_multiple_of(2) {
        let a = gen_ginibre(n, rng);
        let mu: f64 = 0.25 + rng.gen::<f64>() * 2.0;
        let phi: f64 = rng.gen::<f64>() * std::f64::consts::TAU;
        let b = a.scale(Complex64::from_polar(mu, phi));
        Ok((a, b))
    } else {
        let u = gen_orthonormal_set(n, 1, rng)?;
        let v = gen_orthonormal_set(n, 1, rng)?;
        let peak = &v * &u.adjoint();
        let make = |rng: &mut ChaCha8Rng, strength: f64| -> Result<ComplexMatrix, HarnessError> {
            let g = gen_ginibre(n, rng);
            // remainder maps u to 0 and avoids v's direction entirely
            let proj_u = &ComplexMatrix::identity(n) - &(&u * &u.adjoint());
            let proj_v = &ComplexMatrix::identity(n) - &(&v * &v.adjoint());
            let rest = &(&proj_v * &g) * &proj_u;
            let rest_norm = crate::norms::operator_norm(&rest).map_err(HarnessError::from)?;
            let scale = if rest_norm > 0.0 {
                0.7 * strength / rest_norm
            } else {
                0.0
            };
            Ok(&peak.scale_re(strength) + &rest.scale_re(scale))
        };
        let strength_a = 1.0 + rng.gen::<f64>();
        let strength_b = 0.5 + rng.gen::<f64>();
        let a = make(rng, strength_a)?;
        let b = make(rng, strength_b)?;
        Ok((a, b))
    }
}

/// Square matrix with ℜ(A)ℑ(A) = 0 exactly: Hermitian blocks on
/// complementary coordinates, A = H₁ ⊕ iH₂ (or a plain Hermitian draw).
pub fn gen_split_real_imag(n: usize, style: usize, rng: &mut ChaCha8Rng) -> ComplexMatrix {
    if style.is_multiple_of(2) || n < 2 {
        let g = gen_ginibre(n, rng);
        return &g + &g.adjoint();
    }
    let k = n / 2;
    let h1 = {
        let g = gen_ginibre(k, rng);
        &g + &g.adjoint()
    };
    let h2 = {
        let g = gen_ginibre(n - k, rng);
        &g + &g.adjoint()
    };
    h1.direct_sum(&h2.scale(Complex64::new(0.0, 1.0)))
}
