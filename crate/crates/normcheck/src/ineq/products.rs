//! Product- and sum-type bounds: the arithmetic-geometric mean inequality,
//! the two-factor sum decomposition ‖(AXB+BYA)⊕0‖, its commutator and
//! Moore–Penrose corollaries, the positive-operator splittings, and the
//! weighted-product family.
//!
//! Direct-sum norms are always combined through
//! [`direct_sum_schatten`](crate::norms::direct_sum_schatten); the 2n×2n
//! matrices are never assembled here.

use crate::linalg::{ComplexMatrix, LinalgError, PsdFactors, EPS_HERM};
use crate::norms::{
    direct_sum_schatten, operator_norm, schatten_from_singular_values, schatten_norm, SchattenP,
};

use super::{require_norm_order, wrad, BoundReport, CheckError, Reporter, TolerancePolicy};

fn require_same_shape(
    a: &ComplexMatrix,
    b: &ComplexMatrix,
    context: &'static str,
) -> Result<(), CheckError> {
    if (a.rows(), a.cols()) != (b.rows(), b.cols()) {
        return Err(CheckError::Linalg(LinalgError::DimensionMismatch {
            context,
            left_rows: a.rows(),
            left_cols: a.cols(),
            right_rows: b.rows(),
            right_cols: b.cols(),
        }));
    }
    Ok(())
}

fn require_square_same(
    mats: &[&ComplexMatrix],
    context: &'static str,
) -> Result<(), CheckError> {
    for m in mats {
        m.require_square().map_err(CheckError::Linalg)?;
    }
    for m in &mats[1..] {
        require_same_shape(mats[0], m, context)?;
    }
    Ok(())
}

/// ‖AB*‖ ≤ ½‖A*A + B*B‖ in the Schatten norm of order `p`.
pub fn check_agm(
    a: &ComplexMatrix,
    b: &ComplexMatrix,
    p: SchattenP,
    policy: &TolerancePolicy,
) -> Result<BoundReport, CheckError> {
    require_norm_order(p)?;
    require_same_shape(a, b, "arithmetic-geometric mean operands")?;
    let mut rep = Reporter::new(policy, &[a, b]);
    rep.param("p", p);
    let lhs = schatten_norm(&a.try_mul(&b.adjoint())?, p)?;
    let rhs = 0.5 * schatten_norm(&(&a.gram() + &b.gram()), p)?;
    Ok(rep.le("lem-agm", lhs, rhs))
}

/// Both bounds on ‖(AXB + BYA) ⊕ 0‖ for square operands of one size.
pub fn check_sum_product(
    a: &ComplexMatrix,
    b: &ComplexMatrix,
    x: &ComplexMatrix,
    y: &ComplexMatrix,
    p: SchattenP,
    policy: &TolerancePolicy,
) -> Result<Vec<BoundReport>, CheckError> {
    require_norm_order(p)?;
    require_square_same(&[a, b, x, y], "sum-product operands")?;
    let mut rep = Reporter::new(policy, &[a, b, x, y]);
    rep.param("p", p);

    let core = &(&(a * x) * b) + &(&(b * y) * a);
    let lhs = direct_sum_schatten(schatten_norm(&core, p)?, 0.0, p);

    let xb = x * b;
    let ya = y * a;
    let diag_a1 = &a.gram() + &xb.cogram();
    let diag_a2 = &b.gram() + &ya.cogram();
    let cross_a = &(&a.adjoint() * b) + &(&xb * &(&a.adjoint() * &y.adjoint()));
    let rhs_a = 0.5
        * direct_sum_schatten(schatten_norm(&diag_a1, p)?, schatten_norm(&diag_a2, p)?, p)
        + 0.5 * {
            let c = schatten_norm(&cross_a, p)?;
            direct_sum_schatten(c, c, p)
        };

    let ax = a * x;
    let diag_b1 = &ax.gram() + &b.cogram();
    let diag_b2 = &ya.cogram() + &b.gram();
    let cross_b = &(&ax.adjoint() * b) + &(&(b * &a.adjoint()) * &y.adjoint());
    let rhs_b = 0.5
        * direct_sum_schatten(schatten_norm(&diag_b1, p)?, schatten_norm(&diag_b2, p)?, p)
        + 0.5 * {
            let c = schatten_norm(&cross_b, p)?;
            direct_sum_schatten(c, c, p)
        };

    Ok(vec![
        rep.le("thm3.1-a", lhs, rhs_a),
        rep.le("thm3.1-b", lhs, rhs_b),
    ])
}

/// Commutator/anti-commutator family for ‖AB ± BA‖: the block form at `p`,
/// the Schatten form at finite `p`, the operator-norm max and product forms,
/// the sharpened scaled-max form, and the ordering between the last two.
pub fn check_commutator_family(
    a: &ComplexMatrix,
    b: &ComplexMatrix,
    sign: i8,
    p: SchattenP,
    policy: &TolerancePolicy,
) -> Result<Vec<BoundReport>, CheckError> {
    require_norm_order(p)?;
    require_square_same(&[a, b], "commutator operands")?;
    let mut rep = Reporter::new(policy, &[a, b]);
    rep.param("p", p).param("sign", if sign >= 0 { "+1" } else { "-1" });

    let s = if sign >= 0 { 1.0 } else { -1.0 };
    let comm = &(a * b) + &(b * a).scale_re(s);
    let cross = &(&a.adjoint() * b) + &(b * &a.adjoint()).scale_re(s);
    let sum1 = &a.gram() + &b.cogram(); // A*A + BB*
    let sum2 = &a.cogram() + &b.gram(); // AA* + B*B

    let mut out = Vec::with_capacity(5);

    let lhs_p = schatten_norm(&comm, p)?;
    let block_rhs = 0.5
        * direct_sum_schatten(schatten_norm(&sum1, p)?, schatten_norm(&sum2, p)?, p)
        + 0.5 * {
            let c = schatten_norm(&cross, p)?;
            direct_sum_schatten(c, c, p)
        };
    out.push(rep.le("cor-comm-block", direct_sum_schatten(lhs_p, 0.0, p), block_rhs));

    if let Some(pv) = p.finite_value() {
        if pv >= 1.0 {
            let rhs = 0.5
                * direct_sum_schatten(schatten_norm(&sum1, p)?, schatten_norm(&sum2, p)?, p)
                + 2f64.powf((1.0 - pv) / pv) * schatten_norm(&cross, p)?;
            out.push(rep.le("cor-comm-schatten", lhs_p, rhs));
        }
    }

    // operator-norm members of the family
    let lhs_op = operator_norm(&comm)?;
    let cross_op = operator_norm(&cross)?;
    let max_op = operator_norm(&sum1)?.max(operator_norm(&sum2)?);
    out.push(rep.le("cor-comm-opmax", lhs_op, 0.5 * max_op + 0.5 * cross_op));

    let norm_a = operator_norm(a)?;
    let norm_b = operator_norm(b)?;
    let rhs_prod = norm_a * norm_b + 0.5 * cross_op;
    out.push(rep.le("prop-comm-prod", lhs_op, rhs_prod));

    if norm_a == 0.0 {
        return Err(CheckError::ZeroOperand { which: "A" });
    }
    if norm_b == 0.0 {
        return Err(CheckError::ZeroOperand { which: "B" });
    }
    let c = norm_b / norm_a;
    let scaled1 = &a.gram().scale_re(c) + &b.cogram().scale_re(1.0 / c);
    let scaled2 = &a.cogram().scale_re(c) + &b.gram().scale_re(1.0 / c);
    let rhs_scaled =
        0.5 * operator_norm(&scaled1)?.max(operator_norm(&scaled2)?) + 0.5 * cross_op;
    out.push(rep.le("cor-comm-scaledmax", lhs_op, rhs_scaled));
    out.push(rep.le("ord-comm-scaled-le-prod", rhs_scaled, rhs_prod));

    Ok(out)
}

/// Square-of-an-operator bounds: the three block inequalities at `p`, plus
/// the operator-norm chain at p = ∞ and the Schatten remarks at finite p ≥ 1.
pub fn check_square_bounds(
    a: &ComplexMatrix,
    p: SchattenP,
    policy: &TolerancePolicy,
) -> Result<Vec<BoundReport>, CheckError> {
    require_norm_order(p)?;
    a.require_square().map_err(CheckError::Linalg)?;
    let mut rep = Reporter::new(policy, &[a]);
    rep.param("p", p);

    let sq = a * a;
    let gram = a.gram();
    let cogram = a.cogram();
    let sum = &gram + &cogram;
    let diff = &gram - &cogram;

    let n_sq = schatten_norm(&sq, p)?;
    let n_gram = schatten_norm(&gram, p)?;
    let n_cogram = schatten_norm(&cogram, p)?;
    let n_sum = schatten_norm(&sum, p)?;
    let n_diff = schatten_norm(&diff, p)?;

    let mut out = vec![
        rep.le(
            "cor-square-block",
            direct_sum_schatten(n_sq, 0.0, p),
            0.5 * direct_sum_schatten(n_sum, n_sum, p),
        ),
        rep.le(
            "cor-square-sum-block",
            direct_sum_schatten(n_sum, 0.0, p),
            direct_sum_schatten(n_gram, n_cogram, p) + direct_sum_schatten(n_sq, n_sq, p),
        ),
        rep.le(
            "cor-square-diff-block",
            direct_sum_schatten(n_diff, 0.0, p),
            direct_sum_schatten(n_gram, n_cogram, p),
        ),
    ];

    match p.finite_value() {
        None => {
            let n_a = operator_norm(a)?;
            out.push(rep.le("rem-square-op-lower", 2.0 * n_sq, n_sum));
            out.push(rep.le("rem-square-op-upper", n_sum, n_sq + n_a * n_a));
            out.push(rep.le("rem-square-op-comm", n_diff, n_a * n_a));
        }
        Some(pv) if pv >= 1.0 => {
            let two_p = SchattenP::new(2.0 * pv).expect("2p > 0");
            let n_a_2p = schatten_norm(a, two_p)?;
            let mid = 2f64.powf((1.0 - pv) / pv) * n_sum;
            let cap = 2f64.powf(1.0 / pv) * n_a_2p * n_a_2p;
            out.push(rep.le("rem-square-p-1", n_sq, mid));
            out.push(rep.le("rem-square-p-2", mid, cap));
            out.push(rep.le(
                "rem-square-p-sum",
                n_sum,
                2f64.powf(1.0 / pv) * (n_a_2p * n_a_2p + n_sq),
            ));
            out.push(rep.le("rem-square-p-comm", n_diff, cap));
        }
        _ => {}
    }

    Ok(out)
}

/// Moore–Penrose bounds on ‖A‖_p: the two block corollaries, the two
/// range-projector forms, and their min combination. The pseudoinverse and
/// both projectors AA†, A†A are formed explicitly.
pub fn check_moore_penrose(
    a: &ComplexMatrix,
    p: SchattenP,
    policy: &TolerancePolicy,
) -> Result<Vec<BoundReport>, CheckError> {
    require_norm_order(p)?;
    let mut rep = Reporter::new(policy, &[a]);
    rep.param("p", p);

    let pinv = a.pseudoinverse()?;
    let proj_range = a.try_mul(&pinv)?; // AA† = P onto range(A)
    let proj_corange = pinv.try_mul(a)?; // A†A = P onto range(A*)

    let n_a = schatten_norm(a, p)?;
    let n_star = schatten_norm(&(&a.gram() + &proj_corange), p)?;
    let n_plain = schatten_norm(&(&a.cogram() + &proj_range), p)?;

    Ok(vec![
        rep.le(
            "cor-mp-block-1",
            direct_sum_schatten(n_a, 0.0, p),
            0.5 * direct_sum_schatten(n_star, n_star, p),
        ),
        rep.le(
            "cor-mp-block-2",
            direct_sum_schatten(n_a, 0.0, p),
            0.25 * direct_sum_schatten(n_plain, n_star, p)
                + 0.5 * direct_sum_schatten(n_a, n_a, p),
        ),
        rep.le("cor-mp-range-1", n_a, 0.5 * n_star),
        rep.le("cor-mp-range-2", n_a, 0.5 * n_plain),
        rep.le("prop-mp-min", n_a, 0.5 * n_star.min(n_plain)),
    ])
}

/// Splitting of ‖(X+Y)⊕0‖ for PSD X, Y through the powers (t, 1−t), (α, 1−α),
/// plus the fixed α = t = ½ specialization.
pub fn check_positive_sum_split(
    x: &ComplexMatrix,
    y: &ComplexMatrix,
    alpha: f64,
    t: f64,
    p: SchattenP,
    policy: &TolerancePolicy,
) -> Result<Vec<BoundReport>, CheckError> {
    require_norm_order(p)?;
    require_square_same(&[x, y], "positive summands")?;
    let mut rep = Reporter::new(policy, &[x, y]);
    rep.param("p", p).param("alpha", alpha).param("t", t);

    let fx = PsdFactors::new(x)?;
    let fy = PsdFactors::new(y)?;
    let pow_norm = |f: &PsdFactors, e: f64, p: SchattenP| {
        let vals: Vec<f64> = f.values().iter().map(|&v| v.powf(e)).collect();
        schatten_from_singular_values(&vals, p)
    };

    let lhs = direct_sum_schatten(schatten_norm(&(x + y), p)?, 0.0, p);

    let cross = &fx.power(t).try_mul(&fy.power(alpha))?
        + &fx.power(1.0 - t).try_mul(&fy.power(1.0 - alpha))?;
    let n_cross = schatten_norm(&cross, p)?;
    let rhs = 0.5 * direct_sum_schatten(pow_norm(&fx, 2.0 * t, p), pow_norm(&fy, 2.0 * alpha, p), p)
        + 0.5
            * direct_sum_schatten(
                pow_norm(&fx, 2.0 * (1.0 - t), p),
                pow_norm(&fy, 2.0 * (1.0 - alpha), p),
                p,
            )
        + 0.5 * direct_sum_schatten(n_cross, n_cross, p);

    let half_cross = schatten_norm(&fx.power(0.5).try_mul(&fy.power(0.5))?, p)?;
    let rhs_half = direct_sum_schatten(pow_norm(&fx, 1.0, p), pow_norm(&fy, 1.0, p), p)
        + direct_sum_schatten(half_cross, half_cross, p);

    Ok(vec![
        rep.le("thm-pos-split", lhs, rhs),
        rep.le("thm-pos-split-half", lhs, rhs_half),
    ])
}

/// Weighted-product family for PSD weights X, Y: the two-term theorem, the
/// Y = 0 corollary in Schatten and operator norms, and the numerical-radius
/// remarks. The PSD-only remarks run on |A|, |B|, which are valid positive
/// instances derived from the operands.
pub fn check_weighted_product(
    a: &ComplexMatrix,
    b: &ComplexMatrix,
    x: &ComplexMatrix,
    y: &ComplexMatrix,
    p: SchattenP,
    policy: &TolerancePolicy,
) -> Result<Vec<BoundReport>, CheckError> {
    require_norm_order(p)?;
    require_square_same(&[a, b, x, y], "weighted-product operands")?;
    let mut rep = Reporter::new(policy, &[a, b, x, y]);
    rep.param("p", p);

    let fx = PsdFactors::new(x)?;
    let fy = PsdFactors::new(y)?;
    let x_half = fx.power(0.5);
    let y_half = fy.power(0.5);

    let mut out = Vec::with_capacity(8);

    // ‖(AXB+BYA)⊕0‖ against the selfadjoint-product-mediated split
    let core = &(&(a * x) * b) + &(&(b * y) * a);
    let lhs = direct_sum_schatten(schatten_norm(&core, p)?, 0.0, p);
    let r1 = x.try_mul(&(&a.gram() + &b.cogram()))?.real_part()?;
    let r2 = y.try_mul(&(&b.gram() + &a.cogram()))?.real_part()?;
    let cross = &(&x_half * &(&(&a.adjoint() * b) + &(b * &a.adjoint()))) * &y_half;
    let n_cross = schatten_norm(&cross, p)?;
    let rhs = 0.5 * direct_sum_schatten(schatten_norm(&r1, p)?, schatten_norm(&r2, p)?, p)
        + 0.5 * direct_sum_schatten(n_cross, n_cross, p);
    out.push(rep.le("thm-weighted", lhs, rhs));

    // Y = 0 corollary on the given X
    let axb = &(a * x) * b;
    let half_r1 = 0.5 * schatten_norm(&r1, p)?;
    match p.finite_value() {
        Some(pv) if pv >= 1.0 => {
            out.push(rep.le("cor-weighted-schatten", schatten_norm(&axb, p)?, half_r1));
        }
        None => {
            let n_axb = operator_norm(&axb)?;
            out.push(rep.le("cor-weighted-op", n_axb, half_r1));
            out.push(rep.le(
                "rem-weighted-w",
                n_axb,
                0.5 * wrad(&x.try_mul(&(&a.gram() + &b.cogram()))?, policy)?,
            ));
            let w_xaa = wrad(&x.try_mul(&a.gram())?, policy)?;
            let w_xbb = wrad(&x.try_mul(&b.cogram())?, policy)?;
            out.push(rep.le("rem-weighted-ww", n_axb * n_axb, w_xaa * w_xbb));

            // PSD instances from the operands
            let p_abs = a.abs_operator()?;
            let q_abs = b.abs_operator()?;
            let p_half = p_abs.psd_factors()?.power(0.5);
            let q_half = q_abs.psd_factors()?.power(0.5);
            let w_px = wrad(&p_abs.try_mul(x)?, policy)?;
            let w_xq = wrad(&x.try_mul(&q_abs)?, policy)?;
            out.push(rep.le(
                "rem-weighted-sqrt",
                operator_norm(&p_half.try_mul(&x_half)?)?,
                w_px.sqrt(),
            ));
            out.push(rep.le(
                "rem-weighted-two-sided",
                operator_norm(&(&(&p_half * x) * &q_half))?,
                w_px.sqrt() * w_xq.sqrt(),
            ));
            let xp_plus_xq = &x.try_mul(&p_abs)? + &x.try_mul(&q_abs)?;
            out.push(rep.le(
                "rem-weighted-op-sum",
                operator_norm(&(&(&p_half * x) * &q_half))?,
                0.5 * wrad(&xp_plus_xq, policy)?,
            ));
        }
        _ => {}
    }

    Ok(out)
}

/// If AB is selfadjoint, ‖AB‖_p ≤ ‖ℜ(BA)‖_p.
pub fn check_selfadjoint_product_lemma(
    a: &ComplexMatrix,
    b: &ComplexMatrix,
    p: SchattenP,
    policy: &TolerancePolicy,
) -> Result<BoundReport, CheckError> {
    require_norm_order(p)?;
    require_square_same(&[a, b], "selfadjoint-product operands")?;
    let ab = a * b;
    let deviation = ab.hermiticity_deviation().map_err(CheckError::Linalg)?;
    let budget = EPS_HERM * ab.frobenius_norm().max(f64::MIN_POSITIVE);
    if deviation > budget {
        return Err(CheckError::NotSelfadjointProduct { deviation, budget });
    }
    let mut rep = Reporter::new(policy, &[a, b]);
    rep.param("p", p);
    let lhs = schatten_norm(&ab, p)?;
    let rhs = schatten_norm(&(b * a).real_part()?, p)?;
    Ok(rep.le("lem-selfadjoint-product", lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{thermitian, tmat, tpsd};

    const POL: TolerancePolicy = TolerancePolicy { tol_rel: 1e-8 };

    fn p_grid() -> Vec<SchattenP> {
        vec![
            SchattenP::new(1.0).unwrap(),
            SchattenP::new(2.0).unwrap(),
            SchattenP::new(3.0).unwrap(),
            SchattenP::Infinity,
        ]
    }

    #[test]
    fn agm_equality_when_b_equals_a() {
        let a = tmat(4, 4, 1);
        for p in p_grid() {
            let r = check_agm(&a, &a, p, &POL).unwrap();
            assert!(r.holds, "{r:?}");
            assert!(r.slack.abs() <= 1e-9 * r.rhs.max(1.0), "{r:?}");
        }
    }

    #[test]
    fn agm_zero_operand() {
        let a = tmat(3, 3, 2);
        let z = ComplexMatrix::zeros(3, 3);
        let r = check_agm(&a, &z, SchattenP::Infinity, &POL).unwrap();
        assert_eq!(r.lhs, 0.0);
        assert!(r.holds);
    }

    #[test]
    fn agm_random_rectangular() {
        let a = tmat(4, 3, 3);
        let b = tmat(4, 3, 4);
        for p in p_grid() {
            assert!(check_agm(&a, &b, p, &POL).unwrap().holds);
        }
    }

    #[test]
    fn quasi_norm_orders_are_rejected() {
        let a = tmat(3, 3, 90);
        let half = SchattenP::new(0.5).unwrap();
        assert!(matches!(
            check_agm(&a, &a, half, &POL),
            Err(CheckError::BadExponents { .. })
        ));
        assert!(check_square_bounds(&a, half, &POL).is_err());
        assert!(check_moore_penrose(&a, half, &POL).is_err());
    }

    #[test]
    fn agm_rejects_shape_mismatch() {
        let a = tmat(3, 3, 5);
        let b = tmat(2, 2, 6);
        assert!(check_agm(&a, &b, SchattenP::Infinity, &POL).is_err());
    }

    #[test]
    fn sum_product_reduces_to_square_block_case() {
        // X = Y = I, B = A makes the core 2A² and both sides collapse to the
        // square-of-an-operator block bound
        let a = tmat(3, 3, 7);
        let i = ComplexMatrix::identity(3);
        for p in p_grid() {
            let rs = check_sum_product(&a, &a, &i, &i, p, &POL).unwrap();
            assert_eq!(rs.len(), 2);
            for r in &rs {
                assert!(r.holds, "{r:?}");
            }
            let square = check_square_bounds(&a, p, &POL).unwrap();
            let block = &square[0];
            // 2·‖A²⊕0‖ vs the sum-product lhs
            assert!((rs[0].lhs - 2.0 * block.lhs).abs() <= 1e-9 * block.lhs.max(1.0));
        }
    }

    #[test]
    fn sum_product_all_zero() {
        let z = ComplexMatrix::zeros(2, 2);
        let rs = check_sum_product(&z, &z, &z, &z, SchattenP::new(2.0).unwrap(), &POL).unwrap();
        for r in rs {
            assert_eq!(r.lhs, 0.0);
            assert!(r.holds);
        }
    }

    #[test]
    fn sum_product_random_quadruple() {
        let (a, b, x, y) = (tmat(3, 3, 8), tmat(3, 3, 9), tmat(3, 3, 10), tmat(3, 3, 11));
        for p in p_grid() {
            for r in check_sum_product(&a, &b, &x, &y, p, &POL).unwrap() {
                assert!(r.holds, "{r:?}");
            }
        }
    }

    #[test]
    fn commutator_family_b_equals_a() {
        let a = tmat(4, 4, 12);
        for p in p_grid() {
            for r in check_commutator_family(&a, &a, 1, p, &POL).unwrap() {
                assert!(r.holds, "{r:?}");
            }
        }
    }

    #[test]
    fn commutator_family_adjoint_difference() {
        // B = A*, sign = − gives ‖A*A − AA*‖ on the left
        let a = tmat(4, 4, 13);
        let b = a.adjoint();
        let rs = check_commutator_family(&a, &b, -1, SchattenP::Infinity, &POL).unwrap();
        let opmax = rs.iter().find(|r| r.check_id == "cor-comm-opmax").unwrap();
        let diff = &a.cogram() - &a.gram(); // AA* − A*A = AB − BA with B = A*
        let expect = operator_norm(&diff).unwrap();
        assert!((opmax.lhs - expect).abs() <= 1e-10 * expect.max(1.0));
        for r in &rs {
            assert!(r.holds, "{r:?}");
        }
        // remark instance: ‖A*A − AA*‖ ≤ ‖A‖²
        let n_a = operator_norm(&a).unwrap();
        assert!(expect <= n_a * n_a + 1e-9);
    }

    #[test]
    fn commutator_scaled_is_no_weaker_than_product_form() {
        let a = tmat(4, 4, 14);
        let b = tmat(4, 4, 15);
        for sign in [1i8, -1] {
            let rs = check_commutator_family(&a, &b, sign, SchattenP::new(2.0).unwrap(), &POL)
                .unwrap();
            let ord = rs
                .iter()
                .find(|r| r.check_id == "ord-comm-scaled-le-prod")
                .unwrap();
            assert!(ord.holds, "{ord:?}");
            for r in &rs {
                assert!(r.holds, "{r:?}");
            }
        }
    }

    #[test]
    fn commutator_rejects_zero_operand() {
        let a = tmat(3, 3, 16);
        let z = ComplexMatrix::zeros(3, 3);
        assert!(matches!(
            check_commutator_family(&a, &z, 1, SchattenP::Infinity, &POL),
            Err(CheckError::ZeroOperand { .. })
        ));
    }

    #[test]
    fn square_bounds_normal_input_saturates_lower() {
        // normal A: A*A = AA*, so 2‖A²‖ = ‖A*A+AA*‖ in the operator norm
        let a = thermitian(4, 17);
        let rs = check_square_bounds(&a, SchattenP::Infinity, &POL).unwrap();
        let lower = rs.iter().find(|r| r.check_id == "rem-square-op-lower").unwrap();
        assert!(lower.slack.abs() <= 1e-8 * lower.rhs.max(1.0), "{lower:?}");
        for r in &rs {
            assert!(r.holds, "{r:?}");
        }
    }

    #[test]
    fn square_bounds_nilpotent_lhs_zero() {
        let j = ComplexMatrix::from_real_rows(2, 2, &[0.0, 1.0, 0.0, 0.0]).unwrap();
        let rs = check_square_bounds(&j, SchattenP::new(2.0).unwrap(), &POL).unwrap();
        assert_eq!(rs[0].lhs, 0.0);
        for r in rs {
            assert!(r.holds);
        }
    }

    #[test]
    fn square_bounds_random_all_orders() {
        let a = tmat(4, 4, 18);
        for p in p_grid() {
            for r in check_square_bounds(&a, p, &POL).unwrap() {
                assert!(r.holds, "{r:?}");
            }
        }
    }

    #[test]
    fn moore_penrose_unitary_is_tight_at_infinity() {
        let u = ComplexMatrix::from_inner_unchecked(tmat(4, 4, 19).inner().clone().qr().q());
        let rs = check_moore_penrose(&u, SchattenP::Infinity, &POL).unwrap();
        for r in &rs {
            assert!(r.holds, "{r:?}");
        }
        let range1 = rs.iter().find(|r| r.check_id == "cor-mp-range-1").unwrap();
        assert!((range1.lhs - 1.0).abs() < 1e-10);
        assert!(range1.slack.abs() <= 1e-8, "{range1:?}");
    }

    #[test]
    fn moore_penrose_zero_matrix() {
        let z = ComplexMatrix::zeros(3, 3);
        for r in check_moore_penrose(&z, SchattenP::new(1.0).unwrap(), &POL).unwrap() {
            assert_eq!(r.lhs, 0.0);
            assert!(r.holds);
        }
    }

    #[test]
    fn moore_penrose_rank_deficient() {
        let f = tmat(4, 2, 20);
        let g = tmat(2, 4, 21);
        let a = &f * &g;
        for p in p_grid() {
            let rs = check_moore_penrose(&a, p, &POL).unwrap();
            assert_eq!(rs.len(), 5);
            for r in rs {
                assert!(r.holds, "{r:?}");
            }
        }
    }

    #[test]
    fn positive_split_identity_saturates() {
        let i = ComplexMatrix::identity(3);
        let rs = check_positive_sum_split(&i, &i, 0.5, 0.5, SchattenP::Infinity, &POL).unwrap();
        // ‖2I‖ = 2 against 1 + 1
        assert!((rs[0].lhs - 2.0).abs() < 1e-12);
        assert!(rs[0].slack.abs() <= 1e-8, "{:?}", rs[0]);
        assert!(rs[1].slack.abs() <= 1e-8, "{:?}", rs[1]);
    }

    #[test]
    fn positive_split_zero_summand_at_half() {
        let x = tpsd(3, 22);
        let z = ComplexMatrix::zeros(3, 3);
        let rs = check_positive_sum_split(&x, &z, 0.5, 0.5, SchattenP::new(2.0).unwrap(), &POL)
            .unwrap();
        // t = ½ collapses the general bound to an equality
        assert!(rs[0].slack.abs() <= 1e-8 * rs[0].rhs.max(1.0), "{:?}", rs[0]);
        assert!(rs[0].holds && rs[1].holds);
    }

    #[test]
    fn positive_split_grid() {
        let x = tpsd(4, 23);
        let y = tpsd(4, 24);
        for &alpha in &[0.0, 0.25, 0.5, 1.0] {
            for &t in &[0.0, 0.25, 0.5, 1.0] {
                for p in p_grid() {
                    for r in check_positive_sum_split(&x, &y, alpha, t, p, &POL).unwrap() {
                        assert!(r.holds, "alpha={alpha} t={t} {r:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn positive_split_rejects_indefinite() {
        let x = thermitian(3, 25); // indefinite almost surely
        let y = tpsd(3, 26);
        assert!(check_positive_sum_split(&x, &y, 0.5, 0.5, SchattenP::Infinity, &POL).is_err());
    }

    #[test]
    fn weighted_product_scalar_equality() {
        // A = diag(4), X = I: ‖A^{1/2}X^{1/2}‖ = 2 = w^{1/2}(AX)
        let a = ComplexMatrix::real_diagonal(&[4.0]);
        let i = ComplexMatrix::identity(1);
        let rs = check_weighted_product(&a, &a, &i, &i, SchattenP::Infinity, &POL).unwrap();
        let sqrt = rs.iter().find(|r| r.check_id == "rem-weighted-sqrt").unwrap();
        assert!((sqrt.lhs - 2.0).abs() < 1e-9);
        assert!(sqrt.slack.abs() <= 1e-8, "{sqrt:?}");
        for r in &rs {
            assert!(r.holds, "{r:?}");
        }
    }

    #[test]
    fn weighted_product_all_identity() {
        let i = ComplexMatrix::identity(3);
        for p in p_grid() {
            for r in check_weighted_product(&i, &i, &i, &i, p, &POL).unwrap() {
                assert!(r.holds, "{r:?}");
                // every member saturates at the operator norm
                if !p.is_finite() {
                    assert!(r.slack.abs() <= 1e-7 * r.rhs.max(1.0), "{r:?}");
                }
            }
        }
    }

    #[test]
    fn weighted_product_random_inputs() {
        let (a, b) = (tmat(3, 3, 27), tmat(3, 3, 28));
        let (x, y) = (tpsd(3, 29), tpsd(3, 30));
        for p in p_grid() {
            for r in check_weighted_product(&a, &b, &x, &y, p, &POL).unwrap() {
                assert!(r.holds, "{r:?}");
            }
        }
    }

    #[test]
    fn weighted_product_rejects_non_psd_weight() {
        let a = tmat(3, 3, 31);
        let x = thermitian(3, 32);
        assert!(check_weighted_product(&a, &a, &x, &x, SchattenP::Infinity, &POL).is_err());
    }

    #[test]
    fn selfadjoint_lemma_commuting_hermitians() {
        // commuting Hermitians have AB = BA selfadjoint, with equality
        let d1 = ComplexMatrix::real_diagonal(&[1.0, -2.0, 0.5]);
        let d2 = ComplexMatrix::real_diagonal(&[3.0, 1.0, -1.0]);
        for p in p_grid() {
            let r = check_selfadjoint_product_lemma(&d1, &d2, p, &POL).unwrap();
            assert!(r.holds);
            assert!(r.slack.abs() <= 1e-9 * r.rhs.max(1.0), "{r:?}");
        }
    }

    #[test]
    fn selfadjoint_lemma_adjoint_pair() {
        // B = A*: AA* selfadjoint, ‖AA*‖_p = ‖ℜ(A*A)‖_p
        let a = tmat(4, 4, 33);
        let b = a.adjoint();
        for p in p_grid() {
            let r = check_selfadjoint_product_lemma(&a, &b, p, &POL).unwrap();
            assert!(r.holds);
            assert!(r.slack.abs() <= 1e-8 * r.rhs.max(1.0), "{r:?}");
        }
    }

    #[test]
    fn selfadjoint_lemma_similarity_pair() {
        // A = S, B = S⁻¹H: AB = H selfadjoint, BA = S⁻¹HS generic
        let s = {
            let g = tmat(4, 4, 34);
            &g + &ComplexMatrix::identity(4).scale_re(8.0)
        };
        let h = thermitian(4, 35);
        let s_inv = s.pseudoinverse().unwrap();
        let b = &s_inv * &h;
        for p in p_grid() {
            let r = check_selfadjoint_product_lemma(&s, &b, p, &POL).unwrap();
            assert!(r.holds, "{r:?}");
        }
    }

    #[test]
    fn selfadjoint_lemma_rejects_generic_pair() {
        let a = tmat(4, 4, 36);
        let b = tmat(4, 4, 37);
        assert!(matches!(
            check_selfadjoint_product_lemma(&a, &b, SchattenP::Infinity, &POL),
            Err(CheckError::NotSelfadjointProduct { .. })
        ));
    }
}
