//! Schatten-norm bounds built on orthonormal sets: rank-refined norm
//! comparisons, diagonal-sum bounds through power pairs, the eigenvalue-sum
//! refinement chain, and the two-sided monotonicity of p ↦ ‖A‖_p.

use num_complex::Complex64;

use crate::linalg::ComplexMatrix;
use crate::norms::{
    check_orthonormal, schatten_from_singular_values, schatten_norm, SchattenP,
};

use super::{BoundReport, CheckError, Reporter, TolerancePolicy};

fn finite_ge(p: SchattenP, min: f64, name: &'static str) -> Result<f64, CheckError> {
    match p.finite_value() {
        Some(v) if v >= min => Ok(v),
        _ => Err(CheckError::BadExponents {
            message: format!("{name} must be finite and ≥ {min}, got {p}"),
        }),
    }
}

fn sp(v: f64) -> SchattenP {
    SchattenP::new(v).expect("positive order")
}

/// Rank-refined reversals of the Schatten monotonicity, all driven by one
/// pair of exponents with 1/r = 1/p + 1/q.
pub fn check_rank_schatten(
    a: &ComplexMatrix,
    p: SchattenP,
    q: SchattenP,
    policy: &TolerancePolicy,
) -> Result<Vec<BoundReport>, CheckError> {
    let pv = finite_ge(p, 1.0, "p")?;
    let qv = finite_ge(q, 1.0, "q")?;
    let rv = 1.0 / (1.0 / pv + 1.0 / qv);
    let rank = a.numeric_rank()? as f64;

    let mut rep = Reporter::new(policy, &[a]);
    rep.param("p", pv).param("q", qv).param("rank", rank as usize);

    let svd = a.svd(false)?;
    let norm_at = |order: f64| schatten_from_singular_values(&svd.singular_values, sp(order));
    // 0^e = 0 for e > 0 keeps the zero matrix exact
    let rank_pow = |e: f64| if rank == 0.0 { 0.0 } else { rank.powf(e) };

    let chain_lo = rank_pow(1.0 / (2.0 * pv)) * norm_at(2.0 * pv);
    let chain_hi = rank_pow((2.0 * pv - 1.0) / (2.0 * pv * pv)) * norm_at(2.0 * pv * pv);

    Ok(vec![
        rep.le(
            "thm-rank-schatten",
            norm_at(2.0 * rv),
            rank_pow(1.0 / (2.0 * qv)) * norm_at(2.0 * pv),
        ),
        rep.le("thm-rank-schatten-pp", norm_at(pv), chain_lo),
        rep.le(
            "thm-rank-schatten2",
            norm_at(2.0 * pv * rv),
            rank_pow(1.0 / (2.0 * pv * qv)) * norm_at(2.0 * pv * pv),
        ),
        rep.le(
            "thm-rank-schatten2-r1",
            norm_at(2.0 * pv),
            rank_pow((pv - 1.0) / (2.0 * pv * pv)) * norm_at(2.0 * pv * pv),
        ),
        rep.le("cor-rank-chain", chain_lo, chain_hi),
    ])
}

/// Diagonal and paired orthonormal-sum bounds.
///
/// For p, q ≥ 2 (and r ≥ 1) the power-pair family applies to Σ|⟨Axₙ,xₙ⟩|^{2r};
/// for p, q ≥ 1 the finite-rank family bounds Σ|⟨Axₙ,yₙ⟩|^{2r}. Forms that
/// are only defined for α ∈ (0,1) are skipped at the endpoints.
pub fn check_orthonormal_sums(
    a: &ComplexMatrix,
    x: &ComplexMatrix,
    y: &ComplexMatrix,
    alpha: f64,
    p: SchattenP,
    q: SchattenP,
    policy: &TolerancePolicy,
) -> Result<Vec<BoundReport>, CheckError> {
    a.require_square().map_err(CheckError::Linalg)?;
    if !(0.0..=1.0).contains(&alpha) {
        return Err(CheckError::BadExponents {
            message: format!("alpha must lie in [0,1], got {alpha}"),
        });
    }
    let pv = finite_ge(p, 1.0, "p")?;
    let qv = finite_ge(q, 1.0, "q")?;
    let rv = 1.0 / (1.0 / pv + 1.0 / qv);
    check_orthonormal(x, "X")?;
    check_orthonormal(y, "Y")?;
    if x.cols() != y.cols() {
        return Err(CheckError::BadExponents {
            message: format!("X has {} columns, Y has {}", x.cols(), y.cols()),
        });
    }

    let mut rep = Reporter::new(policy, &[a, x, y]);
    rep.param("p", pv).param("q", qv).param("alpha", alpha);

    let svd = a.svd(true)?;
    let svals = &svd.singular_values;
    let u = svd.left.as_ref().expect("vectors requested");
    let v = svd.right.as_ref().expect("vectors requested");
    let norm_at = |order: f64| schatten_from_singular_values(svals, sp(order));
    // |A| = VΣV*, |A*| = UΣU*; powers reuse the singular triplet
    let abs_pow = |basis: &ComplexMatrix, e: f64| {
        let vals: Vec<f64> = svals.iter().map(|&s| s.powf(e)).collect();
        let d = ComplexMatrix::real_diagonal(&vals);
        &(basis * &d) * &basis.adjoint()
    };

    let diag_sum = |expo: f64| -> f64 {
        (0..x.cols())
            .map(|k| a.sandwich(x, k, x, k).norm().powf(expo))
            .sum()
    };
    let pair_sum = |expo: f64| -> f64 {
        (0..x.cols())
            .map(|k| a.sandwich(x, k, y, k).norm().powf(expo))
            .sum()
    };

    let mut out = Vec::new();

    if pv >= 2.0 && qv >= 2.0 {
        // power-pair product term ‖f²(|A|)g²(|A*|)‖_r^r
        let fg = abs_pow(v, 2.0 * alpha).try_mul(&abs_pow(u, 2.0 * (1.0 - alpha)))?;
        let fg_term = schatten_norm(&fg, sp(rv))?.powf(rv);
        let lhs = diag_sum(2.0 * rv);

        // ‖f(|A|)‖_{2p}^{2r} = ‖A‖_{2αp}^{2rα} with the α = 0 case read as
        // ‖I‖_{2p}; both sides computed from the singular values directly
        let f_term = schatten_from_singular_values(
            &svals.iter().map(|&s| s.powf(alpha)).collect::<Vec<_>>(),
            sp(2.0 * pv),
        )
        .powf(2.0 * rv);
        let g_term = schatten_from_singular_values(
            &svals.iter().map(|&s| s.powf(1.0 - alpha)).collect::<Vec<_>>(),
            sp(2.0 * qv),
        )
        .powf(2.0 * rv);
        out.push(rep.le(
            "thm-onsum-powerpair",
            lhs,
            0.5 * f_term * g_term + 0.5 * fg_term,
        ));

        if alpha > 0.0 && alpha < 1.0 {
            let rhs = 0.5
                * norm_at(2.0 * alpha * pv).powf(2.0 * rv * alpha)
                * norm_at(2.0 * (1.0 - alpha) * qv).powf(2.0 * rv * (1.0 - alpha))
                + 0.5 * fg_term;
            out.push(rep.le("cor-onsum-alpha", lhs, rhs));
        }

        // fixed α = ½ members
        let sq = a.try_mul(a)?;
        let sq_term = schatten_norm(&sq, sp(rv))?.powf(rv);
        out.push(rep.le(
            "cor-onsum-half",
            lhs,
            0.5 * norm_at(pv).powf(rv) * norm_at(qv).powf(rv) + 0.5 * sq_term,
        ));

        if (pv - qv).abs() < 1e-12 {
            let lhs_p = diag_sum(pv);
            let half = schatten_norm(&sq, sp(pv / 2.0))?;
            out.push(rep.le(
                "cor-onsum-half-pp",
                lhs_p,
                0.5 * norm_at(pv).powf(pv) + 0.5 * half.powf(pv / 2.0),
            ));
            out.push(rep.le(
                "rem-onsum-half-root",
                lhs_p.powf(1.0 / pv),
                2f64.powf(-1.0 / pv) * (norm_at(pv) + half.sqrt()),
            ));
        }
    }

    // finite-rank paired family, valid for p, q ≥ 1
    let rank = a.numeric_rank()? as f64;
    let rank_pow = |e: f64| if rank == 0.0 { 0.0 } else { rank.powf(e) };
    out.push(rep.le(
        "thm-onsum-pairs",
        pair_sum(2.0 * rv),
        rank_pow(rv / qv) * norm_at(2.0 * pv).powf(2.0 * rv),
    ));
    if (pv - qv).abs() < 1e-12 {
        out.push(rep.le(
            "thm-onsum-pairs-pp",
            pair_sum(pv),
            rank_pow(0.5) * norm_at(2.0 * pv).powf(pv),
        ));
    }

    Ok(out)
}

/// Eigenvalue-sum bounds: the classical p ≥ 1 inequality, its p ≥ 2
/// refinement chain through ‖A²‖_{p/2}, the power-pair generalization over
/// α ∈ {¼, ½, ¾}, and the finite-rank form.
pub fn check_weyl_chain(
    a: &ComplexMatrix,
    p: SchattenP,
    policy: &TolerancePolicy,
) -> Result<Vec<BoundReport>, CheckError> {
    a.require_square().map_err(CheckError::Linalg)?;
    let pv = finite_ge(p, 1.0, "p")?;

    let mut rep = Reporter::new(policy, &[a]);
    rep.param("p", pv);

    let schur = a.schur(false)?;
    let eig_sum: f64 = schur.values.iter().map(|z| z.norm().powf(pv)).sum();

    let svd = a.svd(false)?;
    let svals = &svd.singular_values;
    let norm_p = schatten_from_singular_values(svals, sp(pv));
    let rank = a.numeric_rank()? as f64;
    let rank_half = if rank == 0.0 { 0.0 } else { rank.sqrt() };

    let mut out = vec![rep.le("weyl-classic", eig_sum, norm_p.powf(pv))];

    for alpha in [0.25, 0.5, 0.75] {
        // ½‖|A|^{2α}‖_p^p + ½‖|A*|^{2(1−α)}‖_p^p from the singular values
        let lo: f64 = svals.iter().map(|&s| s.powf(2.0 * alpha * pv)).sum();
        let hi: f64 = svals.iter().map(|&s| s.powf(2.0 * (1.0 - alpha) * pv)).sum();
        out.push(rep.le_with(
            "thm-weyl-gen",
            eig_sum,
            0.5 * lo + 0.5 * hi,
            &[("alpha", alpha.to_string())],
        ));
    }

    out.push(rep.le(
        "cor-weyl-rank",
        eig_sum,
        rank_half * schatten_from_singular_values(svals, sp(2.0 * pv)).powf(pv),
    ));

    if pv >= 2.0 {
        let sq_half = schatten_norm(&a.try_mul(a)?, sp(pv / 2.0))?.powf(pv / 2.0);
        let mid = 0.5 * norm_p.powf(pv) + 0.5 * sq_half;
        out.push(rep.le("cor-weyl-chain", eig_sum, mid));
        out.push(rep.le("prop-square-halfp", sq_half, norm_p.powf(pv)));
        out.push(rep.le("ord-weyl-chain-mid", mid, norm_p.powf(pv)));
    }

    Ok(out)
}

/// Two-sided monotonicity for 1 ≤ p < q ≤ ∞: the classical decrease of
/// ‖A‖_p and the n-scaled reversal (finite q only).
pub fn check_schatten_monotone(
    a: &ComplexMatrix,
    p: SchattenP,
    q: SchattenP,
    policy: &TolerancePolicy,
) -> Result<Vec<BoundReport>, CheckError> {
    let pv = finite_ge(p, 1.0, "p")?;
    let qv = match q {
        SchattenP::Infinity => f64::INFINITY,
        SchattenP::Finite(v) if v >= 1.0 => v,
        other => {
            return Err(CheckError::BadExponents {
                message: format!("q must be ≥ 1, got {other}"),
            })
        }
    };
    if pv >= qv {
        return Err(CheckError::BadExponents {
            message: format!("need p < q, got p = {pv}, q = {qv}"),
        });
    }

    let mut rep = Reporter::new(policy, &[a]);
    rep.param("p", pv).param("q", q);

    let svd = a.svd(false)?;
    let norm_p = schatten_from_singular_values(&svd.singular_values, sp(pv));
    let norm_q = schatten_from_singular_values(&svd.singular_values, q);

    let mut out = vec![rep.le("monotone-classic", norm_q, norm_p)];
    if qv.is_finite() {
        let n = a.rows().min(a.cols()) as f64;
        out.push(rep.le(
            "thm-monotone-rev",
            norm_p,
            n.powf((qv - pv) / (pv * qv)) * norm_q,
        ));
    }
    Ok(out)
}

/// Grid profile of p ↦ n^{−1/p}‖A‖_p: one report per adjacent grid pair,
/// asserting the profile never decreases.
pub fn check_schatten_monotone_profile(
    a: &ComplexMatrix,
    grid: &[SchattenP],
    policy: &TolerancePolicy,
) -> Result<Vec<BoundReport>, CheckError> {
    let mut rep = Reporter::new(policy, &[a]);
    let n = a.rows().min(a.cols()) as f64;
    let svd = a.svd(false)?;

    let scaled = |p: SchattenP| -> Result<f64, CheckError> {
        let norm = schatten_from_singular_values(&svd.singular_values, p);
        Ok(match p.finite_value() {
            Some(v) => n.powf(-1.0 / v) * norm,
            None => norm,
        })
    };

    let mut orders: Vec<(f64, SchattenP)> = grid
        .iter()
        .filter(|p| p.is_norm())
        .map(|&p| (p.finite_value().unwrap_or(f64::INFINITY), p))
        .collect();
    orders.sort_by(|a, b| a.0.total_cmp(&b.0));
    orders.dedup_by(|a, b| a.0 == b.0);

    let mut out = Vec::new();
    for pair in orders.windows(2) {
        let (lo, hi) = (pair[0].1, pair[1].1);
        rep.param("p", lo).param("q", hi);
        out.push(rep.le("monotone-seq", scaled(lo)?, scaled(hi)?));
    }
    Ok(out)
}

/// Extracts k orthonormal columns from the unitary factor of a matrix.
#[cfg(test)]
pub(crate) fn orthonormal_columns(m: &ComplexMatrix, k: usize) -> ComplexMatrix {
    let q = m.inner().clone().qr().q();
    ComplexMatrix::from_fn(q.nrows(), k.min(q.ncols()), |i, j| q[(i, j)])
        .unwrap_or_else(|_| ComplexMatrix::identity(k))
}

#[allow(dead_code)]
fn complex(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}
