//! Operator-norm and numerical-radius bounds: block spectral-radius
//! domination, the positive-sum norm family, the quarter-power numerical
//! radius bounds, refined triangle inequalities, and parallelism detection.

use serde::Serialize;

use crate::linalg::{ComplexMatrix, LinalgError, PsdFactors};
use crate::norms::{
    max_unimodular_norm, numerical_radius, operator_norm, spectral_radius, RadiusEstimate,
};

use super::{wrad, BoundReport, CheckError, Reporter, TolerancePolicy};

/// r([[A, X], [B, Y]]) ≤ r([[‖A‖, ‖X‖], [‖B‖, ‖Y‖]]); the right side is the
/// closed-form spectral radius of a 2×2 non-negative matrix.
pub fn check_block_spectral_radius(
    a: &ComplexMatrix,
    x: &ComplexMatrix,
    b: &ComplexMatrix,
    y: &ComplexMatrix,
    policy: &TolerancePolicy,
) -> Result<BoundReport, CheckError> {
    let block = ComplexMatrix::block2x2(a, x, b, y).map_err(CheckError::Linalg)?;
    block.require_square().map_err(CheckError::Linalg)?;
    let rep = Reporter::new(policy, &[a, x, b, y]);
    let lhs = spectral_radius(&block)?;
    let (na, nx, nb, ny) = (
        operator_norm(a)?,
        operator_norm(x)?,
        operator_norm(b)?,
        operator_norm(y)?,
    );
    let rhs = 0.5 * (na + ny + ((na - ny).powi(2) + 4.0 * nx * nb).sqrt());
    Ok(rep.le("lem-block-radius", lhs, rhs))
}

/// ‖X+Y‖ bounds for PSD X, Y at one (α, t): the off-diagonal numerical-radius
/// form, the closed-form (norm-of-norms) bound, the fixed α = t = ½
/// specialization, and the ordering that makes ½ the tightest grid point.
///
/// The off-diagonal block radius reduces exactly to a unimodular norm scan:
/// `w([[0, M], [N, 0]]) = ½·max_θ ‖M + e^{iθ}N*‖`, because the Hermitian part
/// of the rotated block matrix has eigenvalues ±s_j((e^{iθ}M + e^{−iθ}N*)/2).
pub fn check_positive_sum_norm(
    x: &ComplexMatrix,
    y: &ComplexMatrix,
    alpha: f64,
    t: f64,
    policy: &TolerancePolicy,
) -> Result<Vec<BoundReport>, CheckError> {
    if (x.rows(), x.cols()) != (y.rows(), y.cols()) {
        return Err(CheckError::Linalg(LinalgError::DimensionMismatch {
            context: "positive summands",
            left_rows: x.rows(),
            left_cols: x.cols(),
            right_rows: y.rows(),
            right_cols: y.cols(),
        }));
    }
    let fx = PsdFactors::new(x)?;
    let fy = PsdFactors::new(y)?;
    let mut rep = Reporter::new(policy, &[x, y]);
    rep.param("alpha", alpha).param("t", t);

    let nx = fx.opnorm();
    let ny = fy.opnorm();
    let lhs = operator_norm(&(x + y))?;

    let m = fx.power(1.0 - t).try_mul(&fy.power(1.0 - alpha))?;
    let n = fy.power(alpha).try_mul(&fx.power(t))?;
    let scale = nx.powf(1.0 - t) * ny.powf(1.0 - alpha) + ny.powf(alpha) * nx.powf(t);
    let w_block =
        0.5 * max_unimodular_norm(&m, &n.adjoint(), policy.radius_tol(scale))?.value;

    let norm_m = operator_norm(&m)?;
    let norm_n = operator_norm(&n)?;
    let r11 = 0.5 * (nx + ny + ((nx - ny).powi(2) + 4.0 * norm_m * norm_n).sqrt());

    let half_cross = operator_norm(&fx.power(0.5).try_mul(&fy.power(0.5))?)?;
    let half = 0.5 * (nx + ny + ((nx - ny).powi(2) + 4.0 * half_cross * half_cross).sqrt());

    Ok(vec![
        rep.le("thm-pos-sum-w", lhs, nx.max(ny) + w_block),
        rep.le("thm-pos-sum-r11", lhs, r11),
        rep.le("thm-pos-sum-half", lhs, half),
        rep.le("ord-r11-ge-2002", half, r11),
    ])
}

/// Numerical-radius upper bounds over an (α, t) grid: the quarter-power
/// family, its fixed specializations, the guarantee that the family never
/// exceeds ‖A‖, and the ½‖|A|+|A*|‖ bound.
pub fn check_numrad_bounds(
    a: &ComplexMatrix,
    grid: &[(f64, f64)],
    policy: &TolerancePolicy,
) -> Result<Vec<BoundReport>, CheckError> {
    a.require_square().map_err(CheckError::Linalg)?;
    let rep = Reporter::new(policy, &[a]);

    let svd = a.svd(true)?;
    let svals = svd.singular_values.clone();
    let u = svd.left.expect("vectors requested");
    let v = svd.right.expect("vectors requested");
    let abs_pow = |basis: &ComplexMatrix, e: f64| {
        let vals: Vec<f64> = svals.iter().map(|&s| s.powf(e)).collect();
        let d = ComplexMatrix::real_diagonal(&vals);
        &(basis * &d) * &basis.adjoint()
    };

    let norm_a = svals.first().copied().unwrap_or(0.0);
    let w = numerical_radius(a, policy.radius_tol(norm_a))?.value;

    // r(|A|^{2t}|A*|^{2α}) = λ_max(|A|^t·|A*|^{2α}·|A|^t): r(ST) = r(TS)
    // turns the non-normal PSD product into a Hermitian eigenproblem
    let psd_product_radius = |s_half: &ComplexMatrix,
                              t_full: &ComplexMatrix|
     -> Result<f64, CheckError> {
        let m = &(s_half * t_full) * s_half;
        let eig = m.hermitian_eig(false)?;
        Ok(eig.values.first().copied().unwrap_or(0.0).max(0.0))
    };

    let mut out = Vec::with_capacity(3 + 2 * grid.len());
    for &(alpha, t) in grid {
        let first = psd_product_radius(&abs_pow(&v, t), &abs_pow(&u, 2.0 * alpha))?;
        let second =
            psd_product_radius(&abs_pow(&v, 1.0 - t), &abs_pow(&u, 2.0 * (1.0 - alpha)))?;
        let rhs = 0.5 * norm_a + 0.5 * first.powf(0.25) * second.powf(0.25);
        let extra = [("alpha", alpha.to_string()), ("t", t.to_string())];
        out.push(rep.le_with("thm-numrad-quarter", w, rhs, &extra));
        out.push(rep.le_with("rem-numrad-le-opnorm", rhs, norm_a, &extra));
    }

    let abs_a = abs_pow(&v, 1.0);
    let abs_astar = abs_pow(&u, 1.0);
    let pintu = psd_product_radius(&abs_pow(&v, 0.5), &abs_astar)?;
    out.push(rep.le("thm-numrad-pintu", w, 0.5 * norm_a + 0.5 * pintu.sqrt()));

    let sq_norm = operator_norm(&a.try_mul(a)?)?;
    out.push(rep.le("thm-numrad-kit3", w, 0.5 * norm_a + 0.5 * sq_norm.sqrt()));

    out.push(rep.le(
        "numrad-half-abs-sum",
        w,
        0.5 * operator_norm(&(&abs_a + &abs_astar))?,
    ));

    Ok(out)
}

/// Refined triangle inequalities ‖A ± B‖² ≤ ‖A*A+B*B‖ + 2w(A*B) (and the
/// adjoint twin), their relaxation chains, and — when ℜ(A)ℑ(A) = 0 — the
/// norm equality ‖A‖ = √(½‖A*A+AA*‖) as a paired report.
pub fn check_triangle_refined(
    a: &ComplexMatrix,
    b: &ComplexMatrix,
    policy: &TolerancePolicy,
) -> Result<Vec<BoundReport>, CheckError> {
    if (a.rows(), a.cols()) != (b.rows(), b.cols()) {
        return Err(CheckError::Linalg(LinalgError::DimensionMismatch {
            context: "triangle operands",
            left_rows: a.rows(),
            left_cols: a.cols(),
            right_rows: b.rows(),
            right_cols: b.cols(),
        }));
    }
    let rep = Reporter::new(policy, &[a, b]);

    let norm_a = operator_norm(a)?;
    let norm_b = operator_norm(b)?;
    let sum_norm = operator_norm(&(a + b))?;
    let diff_norm = operator_norm(&(a - b))?;

    let star_cross = a.adjoint().try_mul(b)?;
    let twin_cross = a.try_mul(&b.adjoint())?;
    let star = (operator_norm(&(&a.gram() + &b.gram()))? + 2.0 * wrad(&star_cross, policy)?)
        .max(0.0)
        .sqrt();
    let twin = (operator_norm(&(&a.cogram() + &b.cogram()))? + 2.0 * wrad(&twin_cross, policy)?)
        .max(0.0)
        .sqrt();

    let star_mid =
        (norm_a * norm_a + norm_b * norm_b + 2.0 * operator_norm(&star_cross)?).sqrt();
    let twin_mid =
        (norm_a * norm_a + norm_b * norm_b + 2.0 * operator_norm(&twin_cross)?).sqrt();

    let mut out = vec![
        rep.le("thm-tri-star-plus", sum_norm, star),
        rep.le("thm-tri-star-minus", diff_norm, star),
        rep.le("thm-tri-twin-plus", sum_norm, twin),
        rep.le("thm-tri-twin-minus", diff_norm, twin),
        rep.le("rem-tri-chain-mid", star, star_mid),
        rep.le("rem-tri-chain-sum", star_mid, norm_a + norm_b),
        rep.le("rem-tri-twin-chain-mid", twin, twin_mid),
        rep.le("rem-tri-twin-chain-sum", twin_mid, norm_a + norm_b),
    ];

    if a.is_square() {
        let re = a.real_part()?;
        let im = a.imag_part()?;
        let product = re.try_mul(&im)?.frobenius_norm();
        let scale = a.frobenius_norm();
        if product <= 1e-10 * scale.mul_add(scale, 1.0) {
            let rhs = (0.5 * operator_norm(&(&a.gram() + &a.cogram()))?).sqrt();
            out.extend(rep.eq_pair("cor-tri-herm-eq", norm_a, rhs));
        }
    }

    Ok(out)
}

/// Tri-state parallelism verdict with a tolerance band: slacks within the
/// band are ties, not booleans.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ParallelVerdict {
    Parallel,
    NotParallel,
    Indeterminate,
}

impl ParallelVerdict {
    fn from_slack(slack: f64, tau: f64) -> Self {
        if slack >= -tau {
            ParallelVerdict::Parallel
        } else if slack <= -10.0 * tau {
            ParallelVerdict::NotParallel
        } else {
            ParallelVerdict::Indeterminate
        }
    }
}

impl std::fmt::Display for ParallelVerdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            ParallelVerdict::Parallel => "parallel",
            ParallelVerdict::NotParallel => "not-parallel",
            ParallelVerdict::Indeterminate => "indeterminate",
        };
        write!(f, "{s}")
    }
}

/// Outcome of a parallelism check: the reports plus the three verdicts
/// (certified max-norm criterion, w(A*B) criterion, w(AB*) criterion).
#[derive(Debug, Clone)]
pub struct ParallelismOutcome {
    pub reports: Vec<BoundReport>,
    pub max_norm: RadiusEstimate,
    pub by_max_norm: ParallelVerdict,
    pub by_w_star: ParallelVerdict,
    pub by_w_twin: ParallelVerdict,
}

/// Parallelism A ∥ B: certified max_θ ‖A + e^{iθ}B‖ against ‖A‖ + ‖B‖,
/// agreement with the w(A*B) = ‖A‖‖B‖ and w(AB*) = ‖A‖‖B‖ criteria, and the
/// necessary norm equalities when the pair is parallel.
///
/// Agreement reports encode the two boolean criteria numerically: lhs is the
/// absolute difference of their 0/1 indicators, rhs is 0, so holds keeps its
/// lhs ≤ rhs + τ meaning. Ties inside the tolerance band are surfaced as
/// indeterminate instead of being forced either way.
pub fn check_parallelism(
    a: &ComplexMatrix,
    b: &ComplexMatrix,
    policy: &TolerancePolicy,
) -> Result<ParallelismOutcome, CheckError> {
    if (a.rows(), a.cols()) != (b.rows(), b.cols()) {
        return Err(CheckError::Linalg(LinalgError::DimensionMismatch {
            context: "parallelism operands",
            left_rows: a.rows(),
            left_cols: a.cols(),
            right_rows: b.rows(),
            right_cols: b.cols(),
        }));
    }
    let norm_a = operator_norm(a)?;
    let norm_b = operator_norm(b)?;
    if norm_a == 0.0 {
        return Err(CheckError::ZeroOperand { which: "A" });
    }
    if norm_b == 0.0 {
        return Err(CheckError::ZeroOperand { which: "B" });
    }
    let mut rep = Reporter::new(policy, &[a, b]);

    let sum = norm_a + norm_b;
    let prod = norm_a * norm_b;
    let max_norm = max_unimodular_norm(a, b, policy.radius_tol(sum))?;
    let slack_max = max_norm.value - sum;
    let by_max_norm = ParallelVerdict::from_slack(slack_max, policy.tol_rel * sum.max(1.0));

    let w_star = wrad(&a.adjoint().try_mul(b)?, policy)?;
    let w_twin = wrad(&a.try_mul(&b.adjoint())?, policy)?;
    let by_w_star =
        ParallelVerdict::from_slack(w_star - prod, policy.tol_rel * prod.max(1.0));
    let by_w_twin =
        ParallelVerdict::from_slack(w_twin - prod, policy.tol_rel * prod.max(1.0));

    rep.param("max_norm", max_norm.value)
        .param("norm_sum", sum)
        .param("verdict_max", by_max_norm);

    let mut reports = vec![rep.le("par-max-le-sum", max_norm.value, sum)];

    let indicator = |v: ParallelVerdict| -> f64 {
        if v == ParallelVerdict::Parallel {
            1.0
        } else {
            0.0
        }
    };
    let agreement = |id: &str, w_value: f64, verdict: ParallelVerdict| {
        let mut r = rep.le_with(
            id,
            (indicator(by_max_norm) - indicator(verdict)).abs(),
            0.0,
            &[("w", w_value.to_string()), ("verdict_w", verdict.to_string())],
        );
        if by_max_norm == ParallelVerdict::Indeterminate
            || verdict == ParallelVerdict::Indeterminate
        {
            r.indeterminate = true;
        }
        r
    };
    reports.push(agreement("par-iff-wAstarB", w_star, by_w_star));
    reports.push(agreement("par-iff-wABstar", w_twin, by_w_twin));

    if by_max_norm == ParallelVerdict::Parallel {
        let star = operator_norm(&(&a.gram() + &b.gram()))?;
        let twin = operator_norm(&(&a.cogram() + &b.cogram()))?;
        let target = norm_a * norm_a + norm_b * norm_b;
        reports.extend(rep.eq_pair("par-nec-star", star, target));
        reports.extend(rep.eq_pair("par-nec-twin", twin, target));
    }

    Ok(ParallelismOutcome {
        reports,
        max_norm,
        by_max_norm,
        by_w_star,
        by_w_twin,
    })
}
