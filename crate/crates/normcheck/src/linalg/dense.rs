//! In-crate dense kernels: complex Jacobi eigen/SVD and a shifted-QR Schur.
//!
//! All inputs here are desk-scale (n ≤ 16 in the campaigns), so the kernels
//! favor unconditional robustness over asymptotics: Jacobi sweeps converge on
//! any Hermitian input and reach full relative accuracy on the tiny singular
//! values the rank thresholds depend on, and the Schur iteration carries the
//! deflation floors and exceptional shifts that keep clustered spectra from
//! stalling.

use nalgebra::DMatrix;
use num_complex::Complex64;

type C = Complex64;
type M = DMatrix<C>;

const MAX_JACOBI_SWEEPS: usize = 64;

fn czero() -> C {
    C::new(0.0, 0.0)
}

/// tan of the inner Jacobi angle for the real symmetric block [[a, g], [g, d]]
/// with g > 0: the root of g·x² + (a − d)·x − g = 0 with |x| ≤ 1.
fn jacobi_tangent(a: f64, d: f64, g: f64) -> f64 {
    let zeta = (d - a) / (2.0 * g);
    if zeta >= 0.0 {
        -1.0 / (zeta + (1.0 + zeta * zeta).sqrt())
    } else {
        1.0 / (-zeta + (1.0 + zeta * zeta).sqrt())
    }
}

/// Two-sided Jacobi eigendecomposition of a Hermitian matrix.
///
/// Returns eigenvalues in descending order and the matching unitary
/// eigenvector columns. The input's strict upper triangle and real diagonal
/// are trusted; the lower triangle is ignored.
pub(crate) fn hermitian_jacobi(h: &M, want_vectors: bool) -> (Vec<f64>, Option<M>) {
    let n = h.nrows();
    let mut a = h.clone();
    // enforce exact hermiticity of the working copy
    for i in 0..n {
        a[(i, i)] = C::new(a[(i, i)].re, 0.0);
        for j in 0..i {
            a[(i, j)] = a[(j, i)].conj();
        }
    }
    let mut v = want_vectors.then(|| M::identity(n, n));

    let scale = a.norm().max(f64::MIN_POSITIVE);
    for _ in 0..MAX_JACOBI_SWEEPS {
        let mut rotated = false;
        for p in 0..n.saturating_sub(1) {
            for q in p + 1..n {
                let b = a[(p, q)];
                let g = b.norm();
                if g <= f64::EPSILON * scale {
                    continue;
                }
                rotated = true;
                let phase = b / g; // e^{iβ}
                let app = a[(p, p)].re;
                let aqq = a[(q, q)].re;
                let x = jacobi_tangent(app, aqq, g);
                let c = 1.0 / (1.0 + x * x).sqrt();
                let s = c * x;
                // unitary block J = [[c, −s·e^{iβ}], [s·e^{−iβ}, c]]
                let spos = phase.scale(s);
                // A ← J* A J: columns then rows
                for i in 0..n {
                    let aip = a[(i, p)];
                    let aiq = a[(i, q)];
                    a[(i, p)] = aip.scale(c) + aiq * spos.conj();
                    a[(i, q)] = -aip * spos + aiq.scale(c);
                }
                for j in 0..n {
                    let apj = a[(p, j)];
                    let aqj = a[(q, j)];
                    a[(p, j)] = apj.scale(c) + aqj * spos;
                    a[(q, j)] = -apj * spos.conj() + aqj.scale(c);
                }
                a[(p, q)] = a[(q, p)].conj();
                a[(p, p)] = C::new(a[(p, p)].re, 0.0);
                a[(q, q)] = C::new(a[(q, q)].re, 0.0);
                if let Some(v) = v.as_mut() {
                    for i in 0..n {
                        let vip = v[(i, p)];
                        let viq = v[(i, q)];
                        v[(i, p)] = vip.scale(c) + viq * spos.conj();
                        v[(i, q)] = -vip * spos + viq.scale(c);
                    }
                }
            }
        }
        if !rotated {
            break;
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(j, j)].re.total_cmp(&a[(i, i)].re));
    let values: Vec<f64> = order.iter().map(|&i| a[(i, i)].re).collect();
    let vectors = v.map(|v| M::from_fn(n, n, |i, j| v[(i, order[j])]));
    (values, vectors)
}

/// Largest eigenvalue of a Hermitian matrix; closed forms for n ≤ 2, Jacobi
/// sweeps (values only) above.
pub(crate) fn top_hermitian_eigenvalue(h: &M) -> f64 {
    match h.nrows() {
        0 => 0.0,
        1 => h[(0, 0)].re,
        2 => {
            let a = h[(0, 0)].re;
            let d = h[(1, 1)].re;
            let mid = 0.5 * (a + d);
            let off = 0.5 * (a - d);
            mid + (off * off + h[(0, 1)].norm_sqr()).sqrt()
        }
        _ => hermitian_jacobi(h, false).0[0],
    }
}

/// One-sided complex Jacobi SVD: A = U Σ V* with k = min(m, n) columns in
/// U and V and descending singular values.
///
/// Column pairs of the working matrix are rotated until mutually orthogonal;
/// the rotations accumulate into V, the surviving column norms are the
/// singular values, and null columns of U are completed to an orthonormal
/// set. Works on A* instead when m < n.
pub(crate) fn jacobi_svd(a: &M) -> (Vec<f64>, M, M) {
    let (m, n) = (a.nrows(), a.ncols());
    if m < n {
        let (s, u, v) = jacobi_svd(&a.adjoint());
        return (s, v, u);
    }
    let mut w = a.clone();
    let mut v = M::identity(n, n);

    for _ in 0..MAX_JACOBI_SWEEPS {
        let mut rotated = false;
        for p in 0..n.saturating_sub(1) {
            for q in p + 1..n {
                let mut hpp = 0.0;
                let mut hqq = 0.0;
                let mut hpq = czero();
                for i in 0..m {
                    hpp += w[(i, p)].norm_sqr();
                    hqq += w[(i, q)].norm_sqr();
                    hpq += w[(i, p)].conj() * w[(i, q)];
                }
                let g = hpq.norm();
                if g <= f64::EPSILON * (hpp * hqq).sqrt() || g == 0.0 {
                    continue;
                }
                rotated = true;
                let phase = hpq / g;
                let x = jacobi_tangent(hpp, hqq, g);
                let c = 1.0 / (1.0 + x * x).sqrt();
                let s = c * x;
                let spos = phase.scale(s);
                for i in 0..m {
                    let wip = w[(i, p)];
                    let wiq = w[(i, q)];
                    w[(i, p)] = wip.scale(c) + wiq * spos.conj();
                    w[(i, q)] = -wip * spos + wiq.scale(c);
                }
                for i in 0..n {
                    let vip = v[(i, p)];
                    let viq = v[(i, q)];
                    v[(i, p)] = vip.scale(c) + viq * spos.conj();
                    v[(i, q)] = -vip * spos + viq.scale(c);
                }
            }
        }
        if !rotated {
            break;
        }
    }

    let mut svals: Vec<f64> = (0..n).map(|j| w.column(j).norm()).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| svals[j].total_cmp(&svals[i]));
    svals = order.iter().map(|&j| svals[j]).collect();
    let v = M::from_fn(n, n, |i, j| v[(i, order[j])]);
    let mut u = M::from_fn(m, n, |i, j| w[(i, order[j])]);

    // normalize the nonzero columns; complete the null ones to orthonormal
    let cutoff = svals.first().copied().unwrap_or(0.0) * f64::EPSILON * (m.max(n) as f64);
    let mut null_start = n;
    for j in 0..n {
        if svals[j] > cutoff && svals[j] > 0.0 {
            let inv = 1.0 / svals[j];
            for i in 0..m {
                u[(i, j)] = u[(i, j)].scale(inv);
            }
        } else {
            null_start = null_start.min(j);
        }
    }
    for j in null_start..n {
        // Gram-Schmidt a canonical vector against the columns so far
        let mut filled = false;
        for seed in 0..m {
            let mut col: Vec<C> = (0..m)
                .map(|i| if i == seed { C::new(1.0, 0.0) } else { czero() })
                .collect();
            for prev in 0..j {
                let mut proj = czero();
                for i in 0..m {
                    proj += u[(i, prev)].conj() * col[i];
                }
                for i in 0..m {
                    col[i] -= u[(i, prev)] * proj;
                }
            }
            let norm = col.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
            if norm > 0.5 / (m as f64) {
                let inv = 1.0 / norm;
                for i in 0..m {
                    u[(i, j)] = col[i].scale(inv);
                }
                filled = true;
                break;
            }
        }
        if !filled {
            // cannot happen for j < m, but keep the column sane
            u[(0, j)] = C::new(1.0, 0.0);
        }
    }

    (svals, u, v)
}

/// Complex Givens pair (c real, s) with [[c, s], [−s̄, c]]·(f, g)ᵀ = (r, 0)ᵀ.
fn givens(f: C, g: C) -> (f64, C) {
    if g.norm() == 0.0 {
        return (1.0, czero());
    }
    if f.norm() == 0.0 {
        return (0.0, g.conj() / g.norm());
    }
    let fa = f.norm();
    let r = (fa * fa + g.norm_sqr()).sqrt();
    let c = fa / r;
    let s = (f / fa) * g.conj() / r;
    (c, s)
}

/// Schur decomposition A = Q T Q* of a square complex matrix via Householder
/// Hessenberg reduction and implicit single-shift QR with Wilkinson shifts.
///
/// Returns `None` when the iteration budget (30 per eigenvalue) is exhausted,
/// which signals non-convergence to the caller.
pub(crate) fn complex_schur(a: &M) -> Option<(M, M)> {
    let n = a.nrows();
    let mut h = a.clone();
    let mut q = M::identity(n, n);
    if n <= 1 {
        return Some((q, h));
    }

    // Householder reduction to upper Hessenberg form
    for k in 0..n.saturating_sub(2) {
        let norm_x: f64 = (k + 1..n).map(|i| h[(i, k)].norm_sqr()).sum::<f64>().sqrt();
        if norm_x == 0.0 {
            continue;
        }
        let x0 = h[(k + 1, k)];
        let phase = if x0.norm() == 0.0 {
            C::new(1.0, 0.0)
        } else {
            x0 / x0.norm()
        };
        let alpha = -phase.scale(norm_x);
        let mut v: Vec<C> = (k + 1..n).map(|i| h[(i, k)]).collect();
        v[0] -= alpha;
        let vnorm_sq: f64 = v.iter().map(|z| z.norm_sqr()).sum();
        if vnorm_sq == 0.0 {
            continue;
        }
        let beta = 2.0 / vnorm_sq;
        // H ← P H, P = I − β v v*
        for j in 0..n {
            let mut dot = czero();
            for (idx, i) in (k + 1..n).enumerate() {
                dot += v[idx].conj() * h[(i, j)];
            }
            let dot = dot.scale(beta);
            for (idx, i) in (k + 1..n).enumerate() {
                h[(i, j)] -= v[idx] * dot;
            }
        }
        // H ← H P, Q ← Q P
        for i in 0..n {
            let mut dot = czero();
            for (idx, jj) in (k + 1..n).enumerate() {
                dot += h[(i, jj)] * v[idx];
            }
            let dot = dot.scale(beta);
            for (idx, jj) in (k + 1..n).enumerate() {
                h[(i, jj)] -= dot * v[idx].conj();
            }
        }
        for i in 0..n {
            let mut dot = czero();
            for (idx, jj) in (k + 1..n).enumerate() {
                dot += q[(i, jj)] * v[idx];
            }
            let dot = dot.scale(beta);
            for (idx, jj) in (k + 1..n).enumerate() {
                q[(i, jj)] -= dot * v[idx].conj();
            }
        }
        for i in k + 2..n {
            h[(i, k)] = czero();
        }
        h[(k + 1, k)] = alpha;
    }

    let frob = h.norm().max(f64::MIN_POSITIVE);
    let deflate = |h: &mut M, i: usize| -> bool {
        let tst = h[(i, i)].norm() + h[(i + 1, i + 1)].norm();
        let tst = if tst == 0.0 { frob } else { tst };
        if h[(i + 1, i)].norm() <= f64::EPSILON * tst {
            h[(i + 1, i)] = czero();
            true
        } else {
            false
        }
    };

    let mut hi = n - 1;
    let mut budget = 30 * n;
    let mut stall = 0usize;
    'outer: loop {
        for i in 0..n - 1 {
            deflate(&mut h, i);
        }
        while hi > 0 && h[(hi, hi - 1)].norm() == 0.0 {
            hi -= 1;
            stall = 0;
        }
        if hi == 0 {
            break 'outer;
        }
        let mut lo = hi;
        while lo > 0 && h[(lo, lo - 1)].norm() != 0.0 {
            lo -= 1;
        }

        if budget == 0 {
            return None;
        }
        budget -= 1;
        stall += 1;

        // Wilkinson shift from the trailing 2×2; exceptional shift on stalls
        let mu = if stall.is_multiple_of(12) {
            h[(hi, hi)] + C::new(0.75 * h[(hi, hi - 1)].norm(), 0.0)
        } else {
            let a11 = h[(hi - 1, hi - 1)];
            let a12 = h[(hi - 1, hi)];
            let a21 = h[(hi, hi - 1)];
            let a22 = h[(hi, hi)];
            let mean = (a11 + a22).scale(0.5);
            let disc = ((a11 - a22).scale(0.5).powi(2) + a12 * a21).sqrt();
            let l1 = mean + disc;
            let l2 = mean - disc;
            if (l1 - a22).norm() <= (l2 - a22).norm() {
                l1
            } else {
                l2
            }
        };

        // implicit single-shift QR sweep on [lo, hi]
        let (mut c, mut s) = givens(h[(lo, lo)] - mu, h[(lo + 1, lo)]);
        for k in lo..hi {
            if k > lo {
                let (c2, s2) = givens(h[(k, k - 1)], h[(k + 1, k - 1)]);
                c = c2;
                s = s2;
            }
            // rows k, k+1
            let jmin = k.saturating_sub(1).max(lo);
            for j in jmin..n {
                let a1 = h[(k, j)];
                let a2 = h[(k + 1, j)];
                h[(k, j)] = a1.scale(c) + s * a2;
                h[(k + 1, j)] = -s.conj() * a1 + a2.scale(c);
            }
            // columns k, k+1
            let imax = (k + 2).min(hi) + 1;
            for i in 0..imax {
                let a1 = h[(i, k)];
                let a2 = h[(i, k + 1)];
                h[(i, k)] = a1.scale(c) + a2 * s.conj();
                h[(i, k + 1)] = -a1 * s + a2.scale(c);
            }
            for i in 0..n {
                let a1 = q[(i, k)];
                let a2 = q[(i, k + 1)];
                q[(i, k)] = a1.scale(c) + a2 * s.conj();
                q[(i, k + 1)] = -a1 * s + a2.scale(c);
            }
            if k > lo {
                h[(k + 1, k - 1)] = czero();
            }
        }
    }

    // clean the strict lower triangle
    for i in 0..n {
        for j in 0..i {
            h[(i, j)] = czero();
        }
    }
    Some((q, h))
}

/// Singular values only (descending), skipping factor accumulation.
pub(crate) fn singular_values_only(a: &M) -> Vec<f64> {
    let (m, n) = (a.nrows(), a.ncols());
    if m < n {
        return singular_values_only(&a.adjoint());
    }
    let mut w = a.clone();
    for _ in 0..MAX_JACOBI_SWEEPS {
        let mut rotated = false;
        for p in 0..n.saturating_sub(1) {
            for q in p + 1..n {
                let mut hpp = 0.0;
                let mut hqq = 0.0;
                let mut hpq = czero();
                for i in 0..m {
                    hpp += w[(i, p)].norm_sqr();
                    hqq += w[(i, q)].norm_sqr();
                    hpq += w[(i, p)].conj() * w[(i, q)];
                }
                let g = hpq.norm();
                if g <= f64::EPSILON * (hpp * hqq).sqrt() || g == 0.0 {
                    continue;
                }
                rotated = true;
                let phase = hpq / g;
                let x = jacobi_tangent(hpp, hqq, g);
                let c = 1.0 / (1.0 + x * x).sqrt();
                let s = c * x;
                let spos = phase.scale(s);
                for i in 0..m {
                    let wip = w[(i, p)];
                    let wiq = w[(i, q)];
                    w[(i, p)] = wip.scale(c) + wiq * spos.conj();
                    w[(i, q)] = -wip * spos + wiq.scale(c);
                }
            }
        }
        if !rotated {
            break;
        }
    }
    let mut svals: Vec<f64> = (0..n).map(|j| w.column(j).norm()).collect();
    svals.sort_by(|a, b| b.total_cmp(a));
    svals
}

/// Largest singular value.
pub(crate) fn top_singular_value(a: &M) -> f64 {
    singular_values_only(a).first().copied().unwrap_or(0.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn splitmix(state: &mut u64) -> f64 {
        *state = state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = *state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z = z ^ (z >> 31);
        (z >> 11) as f64 / (1u64 << 53) as f64 * 2.0 - 1.0
    }

    fn rmat(rows: usize, cols: usize, salt: u64) -> M {
        let mut state = salt.wrapping_mul(0x2545f4914f6cdd1d) ^ 0xdeadbeef;
        M::from_fn(rows, cols, |_, _| {
            let re = splitmix(&mut state);
            let im = splitmix(&mut state);
            C::new(re, im)
        })
    }

    fn unitarity(m: &M) -> f64 {
        (m.adjoint() * m - M::identity(m.ncols(), m.ncols())).norm()
    }

    #[test]
    fn jacobi_eig_reconstructs() {
        for n in [1, 2, 3, 5, 8, 12] {
            let g = rmat(n, n, n as u64);
            let h = (&g + &g.adjoint()).map(|z| z * 0.5);
            let (values, vectors) = hermitian_jacobi(&h, true);
            let v = vectors.unwrap();
            assert!(unitarity(&v) < 1e-13, "n={n}");
            let lambda = M::from_fn(n, n, |i, j| {
                if i == j { C::new(values[i], 0.0) } else { czero() }
            });
            let res = (&h - &v * lambda * v.adjoint()).norm() / h.norm().max(1e-300);
            assert!(res < 1e-13, "n={n} residual {res:.3e}");
            for w in values.windows(2) {
                assert!(w[0] >= w[1]);
            }
        }
    }

    #[test]
    fn jacobi_svd_reconstructs_and_is_unitary() {
        for (m, n, salt) in [(4, 4, 1), (5, 3, 2), (3, 5, 3), (8, 8, 4), (1, 1, 5)] {
            let a = rmat(m, n, salt);
            let (svals, u, v) = jacobi_svd(&a);
            let k = m.min(n);
            assert_eq!(svals.len(), k);
            assert!(unitarity(&u) < 1e-13, "{m}x{n} u");
            assert!(unitarity(&v) < 1e-13, "{m}x{n} v");
            let sigma = M::from_fn(k, k, |i, j| {
                if i == j { C::new(svals[i], 0.0) } else { czero() }
            });
            let res = (&a - &u * sigma * v.adjoint()).norm() / a.norm();
            assert!(res < 1e-13, "{m}x{n} residual {res:.3e}");
        }
    }

    #[test]
    fn jacobi_svd_rank_one_exact() {
        let a = &rmat(4, 1, 17) * &rmat(1, 4, 116);
        let (svals, u, v) = jacobi_svd(&a);
        let frob = a.norm();
        // rank-1: s₁ equals the Frobenius norm, everything else is noise
        assert!((svals[0] - frob).abs() < 1e-12 * frob);
        assert!(svals[1] < 1e-14 * frob);
        assert!(unitarity(&u) < 1e-12);
        assert!(unitarity(&v) < 1e-12);
    }

    #[test]
    fn jacobi_svd_zero_matrix() {
        let z = M::zeros(3, 2);
        let (svals, u, v) = jacobi_svd(&z);
        assert!(svals.iter().all(|&s| s == 0.0));
        assert!(unitarity(&u) < 1e-13);
        assert!(unitarity(&v) < 1e-13);
    }

    #[test]
    fn schur_reconstructs_generic() {
        for n in [1, 2, 3, 5, 8, 12] {
            let a = rmat(n, n, 100 + n as u64);
            let (q, t) = complex_schur(&a).expect("converges");
            assert!(unitarity(&q) < 1e-12, "n={n}");
            let mut lower: f64 = 0.0;
            for i in 0..n {
                for j in 0..i {
                    lower = lower.max(t[(i, j)].norm());
                }
            }
            assert_eq!(lower, 0.0);
            let res = (&a - &q * &t * q.adjoint()).norm() / a.norm();
            assert!(res < 1e-12, "n={n} residual {res:.3e}");
        }
    }

    #[test]
    fn schur_handles_identity_and_near_identity() {
        let i4 = M::identity(4, 4);
        let (q, t) = complex_schur(&i4).unwrap();
        assert!((&i4 - &q * &t * q.adjoint()).norm() < 1e-13);

        let p = &i4 + &rmat(4, 4, 777).map(|z| z * C::new(1e-5, 0.0));
        let (q, t) = complex_schur(&p).unwrap();
        let res = (&p - &q * &t * q.adjoint()).norm() / p.norm();
        assert!(res < 1e-12, "residual {res:.3e}");
    }

    #[test]
    fn schur_handles_transposed_shift() {
        // ones on the subdiagonal: the classic stall case for unshifted QR
        for n in [2, 3, 6, 9] {
            let a = M::from_fn(n, n, |i, j| {
                if i == j + 1 { C::new(1.0, 0.0) } else { czero() }
            });
            let (q, t) = complex_schur(&a).expect("converges");
            let res = (&a - &q * &t * q.adjoint()).norm() / a.norm();
            assert!(res < 1e-12, "n={n} residual {res:.3e}");
            for i in 0..n {
                assert!(t[(i, i)].norm() < 1e-10, "nilpotent eigenvalues");
            }
        }
    }

    #[test]
    fn schur_psd_product_case() {
        // the defective-cluster products that break naive iterations
        let g = rmat(4, 4, 61);
        let (_, u, v) = jacobi_svd(&g);
        let p = &(&v * v.adjoint()) * &(&u * u.adjoint());
        let (q, t) = complex_schur(&p).unwrap();
        let res = (&p - &q * &t * q.adjoint()).norm() / p.norm();
        assert!(res < 1e-12, "residual {res:.3e}");
    }

    #[test]
    fn schur_repeated_eigenvalue_jordan_structure() {
        // J(2)⊕J(2) with eigenvalue 3: defective, repeated, nonzero
        let mut a = M::identity(4, 4).map(|z| z * C::new(3.0, 0.0));
        a[(0, 1)] = C::new(1.0, 0.0);
        a[(2, 3)] = C::new(1.0, 0.0);
        // rotate into a dense basis
        let g = rmat(4, 4, 31);
        let q = g.qr().q();
        let a = &q * a * q.adjoint();
        let (qq, t) = complex_schur(&a).expect("converges");
        let res = (&a - &qq * &t * qq.adjoint()).norm() / a.norm();
        assert!(res < 1e-12, "residual {res:.3e}");
        for i in 0..4 {
            assert!((t[(i, i)] - C::new(3.0, 0.0)).norm() < 1e-6);
        }
    }

    #[test]
    fn kernels_are_scale_invariant() {
        for exp in [-8i32, 8] {
            let scale = 10f64.powi(exp);
            let a = rmat(5, 5, 77).map(|z| z * C::new(scale, 0.0));
            let (svals, u, v) = jacobi_svd(&a);
            let k = 5;
            let sigma = M::from_fn(k, k, |i, j| {
                if i == j { C::new(svals[i], 0.0) } else { czero() }
            });
            let res = (&a - &u * sigma * v.adjoint()).norm() / a.norm();
            assert!(res < 1e-13, "svd at 1e{exp}: {res:.3e}");

            let (q, t) = complex_schur(&a).expect("converges");
            let res = (&a - &q * &t * q.adjoint()).norm() / a.norm();
            assert!(res < 1e-12, "schur at 1e{exp}: {res:.3e}");

            let h = (&a + &a.adjoint()).map(|z| z * 0.5);
            let (values, vectors) = hermitian_jacobi(&h, true);
            let vv = vectors.unwrap();
            let lambda = M::from_fn(k, k, |i, j| {
                if i == j { C::new(values[i], 0.0) } else { czero() }
            });
            let res = (&h - &vv * lambda * vv.adjoint()).norm() / h.norm();
            assert!(res < 1e-13, "eig at 1e{exp}: {res:.3e}");
        }
    }

    #[test]
    fn schur_psd_product_sweep() {
        // products S·T of random PSD pairs carry clustered nonnegative
        // spectra; a sweep over sizes and salts guards the iteration budget
        for n in [2usize, 4, 6, 9] {
            for salt in 0..6u64 {
                let g1 = rmat(n, n, 500 + salt);
                let g2 = rmat(n, n, 600 + salt);
                let p = &(g1.adjoint() * &g1) * &(g2.adjoint() * &g2);
                let (q, t) = complex_schur(&p).expect("converges");
                let res = (&p - &q * &t * q.adjoint()).norm() / p.norm();
                assert!(res < 1e-11, "n={n} salt={salt}: {res:.3e}");
                // spectrum of a PSD product is real and nonnegative
                for i in 0..n {
                    assert!(t[(i, i)].im.abs() < 1e-8 * p.norm());
                    assert!(t[(i, i)].re > -1e-8 * p.norm());
                }
            }
        }
    }

    #[test]
    fn svd_of_tiny_singular_value_gap() {
        // diag(1, 1e-13, 0) rotated: accurate small values matter for rank
        let d = M::from_fn(3, 3, |i, j| {
            if i != j {
                czero()
            } else {
                C::new([1.0, 1e-13, 0.0][i], 0.0)
            }
        });
        let q1 = rmat(3, 3, 41).qr().q();
        let q2 = rmat(3, 3, 42).qr().q();
        let a = &q1 * &d * q2.adjoint();
        let (svals, _, _) = jacobi_svd(&a);
        assert!((svals[0] - 1.0).abs() < 1e-13);
        assert!((svals[1] - 1e-13).abs() < 1e-15, "got {:.3e}", svals[1]);
        assert!(svals[2] < 1e-14);
    }

    #[test]
    fn top_eigenvalue_closed_forms() {
        let h = M::from_fn(2, 2, |i, j| match (i, j) {
            (0, 0) => C::new(1.0, 0.0),
            (1, 1) => C::new(-2.0, 0.0),
            (0, 1) => C::new(0.5, 1.0),
            _ => C::new(0.5, -1.0),
        });
        let fast = top_hermitian_eigenvalue(&h);
        let (values, _) = hermitian_jacobi(&h, false);
        assert!((fast - values[0]).abs() < 1e-14);
    }
}
