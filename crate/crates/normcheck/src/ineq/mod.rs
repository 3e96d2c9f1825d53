//! The inequality catalog.
//!
//! Every bound is a *check*: it computes its left- and right-hand sides under
//! the requested norm/parameters and returns a [`BoundReport`] per inequality.
//! A violated inequality is a finding, not an error — reports carry the slack
//! either way, and only malformed inputs (wrong shapes, non-PSD weights, zero
//! operands where a scaling needs to divide) raise [`CheckError`].
//!
//! Check identifiers are stable strings; [`registry_table`] maps each one to
//! the statement it verifies.

mod products;
mod radius_bounds;
mod schatten;

pub use products::{
    check_agm, check_commutator_family, check_moore_penrose, check_positive_sum_split,
    check_selfadjoint_product_lemma, check_square_bounds, check_sum_product,
    check_weighted_product,
};
pub use radius_bounds::{
    check_block_spectral_radius, check_numrad_bounds, check_parallelism,
    check_positive_sum_norm, check_triangle_refined, ParallelVerdict, ParallelismOutcome,
};
pub use schatten::{
    check_orthonormal_sums, check_rank_schatten, check_schatten_monotone,
    check_schatten_monotone_profile, check_weyl_chain,
};

use std::collections::BTreeMap;

use serde::Serialize;
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::linalg::{ComplexMatrix, LinalgError};
use crate::norms::{numerical_radius, operator_norm, NormError};

#[derive(Debug, Error)]
pub enum CheckError {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Norm(#[from] NormError),
    #[error("operand {which} is zero; the scaled form divides by its norm")]
    ZeroOperand { which: &'static str },
    #[error("AB is not selfadjoint: deviation {deviation:.3e} exceeds {budget:.3e}")]
    NotSelfadjointProduct { deviation: f64, budget: f64 },
    #[error("invalid exponents: {message}")]
    BadExponents { message: String },
}

/// Tolerance policy: an inequality holds when lhs ≤ rhs + τ with
/// τ = tol_rel·max(1, |lhs|, |rhs|).
#[derive(Debug, Clone, Copy, Serialize)]
pub struct TolerancePolicy {
    pub tol_rel: f64,
}

impl Default for TolerancePolicy {
    fn default() -> Self {
        TolerancePolicy { tol_rel: 1e-8 }
    }
}

impl TolerancePolicy {
    pub fn tau(&self, lhs: f64, rhs: f64) -> f64 {
        self.tol_rel * lhs.abs().max(rhs.abs()).max(1.0)
    }

    pub fn holds(&self, lhs: f64, rhs: f64) -> bool {
        lhs <= rhs + self.tau(lhs, rhs)
    }

    /// Radii are resolved one order below the check tolerance so the
    /// certification error cannot flip a verdict.
    pub fn radius_tol(&self, scale: f64) -> f64 {
        0.1 * self.tol_rel * scale.max(1.0)
    }
}

/// One inequality evaluation.
#[derive(Debug, Clone, Serialize)]
pub struct BoundReport {
    /// Stable identifier, see [`registry_table`].
    pub check_id: String,
    pub lhs: f64,
    pub rhs: f64,
    /// rhs − lhs; negative slack beyond tolerance means a counterexample.
    pub slack: f64,
    /// lhs ≤ rhs + τ under the policy the check ran with.
    pub holds: bool,
    /// Tolerance tie: the verdict sits inside the gray band and is excluded
    /// from pass/fail accounting. Only parallelism agreement reports set it.
    pub indeterminate: bool,
    pub params: BTreeMap<String, String>,
    /// Truncated SHA-256 over the input matrices; identifies a trial's data.
    pub input_digest: String,
}

/// Hash of the input matrices of one check invocation.
pub fn input_digest(mats: &[&ComplexMatrix]) -> String {
    let mut hasher = Sha256::new();
    for m in mats {
        hasher.update((m.rows() as u64).to_le_bytes());
        hasher.update((m.cols() as u64).to_le_bytes());
        for z in m.entries_row_major() {
            hasher.update(z.re.to_le_bytes());
            hasher.update(z.im.to_le_bytes());
        }
    }
    let out = hasher.finalize();
    out[..8].iter().map(|b| format!("{b:02x}")).collect()
}

/// Builds the reports of one check invocation: shared digest, shared params,
/// one-sided and paired-equality comparisons.
pub(crate) struct Reporter {
    policy: TolerancePolicy,
    digest: String,
    base: BTreeMap<String, String>,
}

impl Reporter {
    pub(crate) fn new(policy: &TolerancePolicy, inputs: &[&ComplexMatrix]) -> Self {
        let mut base = BTreeMap::new();
        if let Some(m) = inputs.first() {
            base.insert("dims".into(), format!("{}x{}", m.rows(), m.cols()));
        }
        Reporter {
            policy: *policy,
            digest: input_digest(inputs),
            base,
        }
    }

    pub(crate) fn param(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.base.insert(key.to_string(), value.to_string());
        self
    }

    /// Report for lhs ≤ rhs.
    pub(crate) fn le(&self, id: &str, lhs: f64, rhs: f64) -> BoundReport {
        self.le_with(id, lhs, rhs, &[])
    }

    pub(crate) fn le_with(
        &self,
        id: &str,
        lhs: f64,
        rhs: f64,
        extra: &[(&str, String)],
    ) -> BoundReport {
        let mut params = self.base.clone();
        for (k, v) in extra {
            params.insert((*k).to_string(), v.clone());
        }
        BoundReport {
            check_id: id.to_string(),
            lhs,
            rhs,
            slack: rhs - lhs,
            holds: self.policy.holds(lhs, rhs),
            indeterminate: false,
            params,
            input_digest: self.digest.clone(),
        }
    }

    /// Equality a = b as the report pair `{id}-le`, `{id}-ge`.
    pub(crate) fn eq_pair(&self, id: &str, a: f64, b: f64) -> [BoundReport; 2] {
        [
            self.le(&format!("{id}-le"), a, b),
            self.le(&format!("{id}-ge"), b, a),
        ]
    }
}

/// Triangle-type checks are stated for genuine norms; quasi-norm orders in
/// (0, 1) are rejected rather than evaluated against inequalities that do
/// not cover them.
pub(crate) fn require_norm_order(p: crate::norms::SchattenP) -> Result<(), CheckError> {
    if p.is_norm() {
        Ok(())
    } else {
        Err(CheckError::BadExponents {
            message: format!("Schatten order {p} is a quasi-norm; checks need p ≥ 1"),
        })
    }
}

/// Numerical radius resolved to the policy's radius tolerance, scaled by the
/// operator norm of the argument.
pub(crate) fn wrad(m: &ComplexMatrix, policy: &TolerancePolicy) -> Result<f64, CheckError> {
    let scale = operator_norm(m)?;
    Ok(numerical_radius(m, policy.radius_tol(scale))?.value)
}

/// Stable check-id registry: identifier, statement verified.
pub fn registry_table() -> Vec<(&'static str, &'static str)> {
    vec![
        ("lem-agm", "‖AB*‖ ≤ ½‖A*A + B*B‖ (arithmetic-geometric mean, any Schatten order)"),
        ("thm3.1-a", "‖(AXB+BYA)⊕0‖ ≤ ½‖(|A|²+|B*X*|²)⊕(|B|²+|A*Y*|²)‖ + ½‖(A*B+XBA*Y*)⊕(A*B+XBA*Y*)‖"),
        ("thm3.1-b", "‖(AXB+BYA)⊕0‖ ≤ ½‖(|AX|²+|B*|²)⊕(|A*Y*|²+|B|²)‖ + ½‖(X*A*B+BA*Y*)⊕(X*A*B+BA*Y*)‖"),
        ("cor-comm-block", "‖(AB±BA)⊕0‖ ≤ ½‖(A*A+BB*)⊕(AA*+B*B)‖ + ½‖(A*B±BA*)⊕(A*B±BA*)‖"),
        ("cor-comm-opmax", "‖AB±BA‖ ≤ ½max(‖A*A+BB*‖, ‖AA*+B*B‖) + ½‖A*B±BA*‖"),
        ("cor-comm-schatten", "‖AB±BA‖_p ≤ ½(‖A*A+BB*‖_pᵖ + ‖AA*+B*B‖_pᵖ)^{1/p} + 2^{(1−p)/p}‖A*B±BA*‖_p"),
        ("prop-comm-prod", "‖AB±BA‖ ≤ ‖A‖‖B‖ + ½‖A*B±BA*‖"),
        ("cor-comm-scaledmax", "‖AB±BA‖ ≤ ½max(‖cA*A+c⁻¹BB*‖, ‖cAA*+c⁻¹B*B‖) + ½‖A*B±BA*‖ at c = ‖B‖/‖A‖"),
        ("ord-comm-scaled-le-prod", "the scaled-max right side never exceeds the ‖A‖‖B‖ right side"),
        ("cor-square-block", "‖A²⊕0‖ ≤ ½‖(A*A+AA*)⊕(A*A+AA*)‖"),
        ("cor-square-sum-block", "‖(A*A+AA*)⊕0‖ ≤ ‖A*A⊕AA*‖ + ‖A²⊕A²‖"),
        ("cor-square-diff-block", "‖(A*A−AA*)⊕0‖ ≤ ‖A*A⊕AA*‖"),
        ("rem-square-op-lower", "2‖A²‖ ≤ ‖A*A+AA*‖ (operator norm)"),
        ("rem-square-op-upper", "‖A*A+AA*‖ ≤ ‖A²‖ + ‖A‖² (operator norm)"),
        ("rem-square-op-comm", "‖A*A−AA*‖ ≤ ‖A‖² (operator norm)"),
        ("rem-square-p-1", "‖A²‖_p ≤ 2^{(1−p)/p}‖A*A+AA*‖_p"),
        ("rem-square-p-2", "2^{(1−p)/p}‖A*A+AA*‖_p ≤ 2^{1/p}‖A‖_{2p}²"),
        ("rem-square-p-sum", "‖A*A+AA*‖_p ≤ 2^{1/p}(‖A‖_{2p}² + ‖A²‖_p)"),
        ("rem-square-p-comm", "‖A*A−AA*‖_p ≤ 2^{1/p}‖A‖_{2p}²"),
        ("cor-mp-block-1", "‖A⊕0‖ ≤ ½‖(A*A+A†A)⊕(A*A+A†A)‖"),
        ("cor-mp-block-2", "‖A⊕0‖ ≤ ¼‖(AA*+AA†)⊕(A*A+A†A)‖ + ½‖A⊕A‖"),
        ("cor-mp-range-1", "‖A‖_p ≤ ½‖A*A+A†A‖_p"),
        ("cor-mp-range-2", "‖A‖_p ≤ ½‖AA*+AA†‖_p"),
        ("prop-mp-min", "‖A‖_p ≤ ½min(‖A*A+P_ran(A*)‖_p, ‖AA*+P_ran(A)‖_p)"),
        ("thm-pos-split", "‖(X+Y)⊕0‖ ≤ ½‖X^{2t}⊕Y^{2α}‖ + ½‖X^{2(1−t)}⊕Y^{2(1−α)}‖ + ½‖(X^tY^α+X^{1−t}Y^{1−α})⊕(same)‖, X,Y ⪰ 0"),
        ("thm-pos-split-half", "‖(X+Y)⊕0‖ ≤ ‖X⊕Y‖ + ‖X^{1/2}Y^{1/2}⊕X^{1/2}Y^{1/2}‖, X,Y ⪰ 0"),
        ("thm-weighted", "‖(AXB+BYA)⊕0‖ ≤ ½‖ℜ(X(|A|²+|B*|²))⊕ℜ(Y(|B|²+|A*|²))‖ + ½‖X^½(A*B+BA*)Y^½⊕(same)‖, X,Y ⪰ 0"),
        ("cor-weighted-schatten", "‖AXB‖_p ≤ ½‖ℜ(X(A*A+BB*))‖_p, X ⪰ 0"),
        ("cor-weighted-op", "‖AXB‖ ≤ ½‖ℜ(X(A*A+BB*))‖, X ⪰ 0"),
        ("rem-weighted-w", "‖AXB‖ ≤ ½w(X(A*A+BB*)), X ⪰ 0"),
        ("rem-weighted-ww", "‖AXB‖² ≤ w(XA*A)·w(XBB*), X ⪰ 0"),
        ("rem-weighted-sqrt", "‖P^{1/2}X^{1/2}‖ ≤ w^{1/2}(PX) for P = |A|, X ⪰ 0"),
        ("rem-weighted-two-sided", "‖P^{1/2}XQ^{1/2}‖ ≤ w^{1/2}(PX)·w^{1/2}(XQ) for P = |A|, Q = |B|"),
        ("rem-weighted-op-sum", "‖P^{1/2}XQ^{1/2}‖ ≤ ½w(XP + XQ) for P = |A|, Q = |B|"),
        ("lem-selfadjoint-product", "AB selfadjoint ⟹ ‖AB‖_p ≤ ‖ℜ(BA)‖_p"),
        ("thm-rank-schatten", "‖A‖_{2r} ≤ (rank A)^{1/2q}‖A‖_{2p}, 1/r = 1/p + 1/q"),
        ("thm-rank-schatten-pp", "‖A‖_p ≤ (rank A)^{1/2p}‖A‖_{2p}"),
        ("thm-rank-schatten2", "‖A‖_{2pr} ≤ (rank A)^{1/2pq}‖A‖_{2p²}, 1/r = 1/p + 1/q"),
        ("thm-rank-schatten2-r1", "‖A‖_{2p} ≤ (rank A)^{(p−1)/2p²}‖A‖_{2p²}"),
        ("cor-rank-chain", "(rank A)^{1/2p}‖A‖_{2p} ≤ (rank A)^{(2p−1)/2p²}‖A‖_{2p²}"),
        ("thm-onsum-powerpair", "Σ|⟨Axₙ,xₙ⟩|^{2r} ≤ ½‖f(|A|)‖_{2p}^{2r}‖g(|A*|)‖_{2q}^{2r} + ½‖f²(|A|)g²(|A*|)‖_rʳ, f = t^α, g = t^{1−α}"),
        ("cor-onsum-alpha", "Σ|⟨Axₙ,xₙ⟩|^{2r} ≤ ½‖A‖_{2αp}^{2rα}‖A‖_{2(1−α)q}^{2r(1−α)} + ½‖|A|^{2α}|A*|^{2(1−α)}‖_rʳ, α ∈ (0,1)"),
        ("cor-onsum-half", "Σ|⟨Axₙ,xₙ⟩|^{2r} ≤ ½‖A‖_pʳ‖A‖_qʳ + ½‖A²‖_rʳ"),
        ("cor-onsum-half-pp", "Σ|⟨Axₙ,xₙ⟩|ᵖ ≤ ½‖A‖_pᵖ + ½‖A²‖_{p/2}^{p/2}"),
        ("rem-onsum-half-root", "(Σ|⟨Axₙ,xₙ⟩|ᵖ)^{1/p} ≤ 2^{−1/p}(‖A‖_p + ‖A²‖_{p/2}^{1/2})"),
        ("thm-onsum-pairs", "Σ|⟨Axₙ,yₙ⟩|^{2r} ≤ (rank A)^{r/q}‖A‖_{2p}^{2r}"),
        ("thm-onsum-pairs-pp", "Σ|⟨Axₙ,yₙ⟩|ᵖ ≤ (rank A)^{1/2}‖A‖_{2p}ᵖ"),
        ("cor-weyl-chain", "Σ|λₙ|ᵖ ≤ ½‖A‖_pᵖ + ½‖A²‖_{p/2}^{p/2}, p ≥ 2"),
        ("weyl-classic", "Σ|λₙ|ᵖ ≤ ‖A‖_pᵖ, p ≥ 1"),
        ("prop-square-halfp", "‖A²‖_{p/2}^{p/2} ≤ ‖A‖_pᵖ, p ≥ 2"),
        ("ord-weyl-chain-mid", "½‖A‖_pᵖ + ½‖A²‖_{p/2}^{p/2} ≤ ‖A‖_pᵖ, p ≥ 2"),
        ("thm-weyl-gen", "Σ|λₙ|ᵖ ≤ ½‖|A|^{2α}‖_pᵖ + ½‖|A*|^{2(1−α)}‖_pᵖ"),
        ("cor-weyl-rank", "Σ|λₙ|ᵖ ≤ (rank A)^{1/2}‖A‖_{2p}ᵖ"),
        ("monotone-classic", "‖A‖_q ≤ ‖A‖_p for p < q"),
        ("thm-monotone-rev", "‖A‖_p ≤ n^{(q−p)/pq}‖A‖_q for p < q < ∞"),
        ("monotone-seq", "p ↦ n^{−1/p}‖A‖_p is non-decreasing along the grid"),
        ("lem-block-radius", "r([[A,X],[B,Y]]) ≤ r([[‖A‖,‖X‖],[‖B‖,‖Y‖]])"),
        ("thm-pos-sum-w", "‖X+Y‖ ≤ max(‖X‖,‖Y‖) + w([[0, X^{1−t}Y^{1−α}],[Y^αX^t, 0]]), X,Y ⪰ 0"),
        ("thm-pos-sum-r11", "‖X+Y‖ ≤ ½(‖X‖+‖Y‖+√((‖X‖−‖Y‖)² + 4‖X^{1−t}Y^{1−α}‖‖X^tY^α‖))"),
        ("thm-pos-sum-half", "‖X+Y‖ ≤ ½(‖X‖+‖Y‖+√((‖X‖−‖Y‖)² + 4‖X^{1/2}Y^{1/2}‖²))"),
        ("ord-r11-ge-2002", "the α=t=½ right side is the tightest of the (α,t) family"),
        ("thm-numrad-quarter", "w(A) ≤ ½‖A‖ + ½r^{1/4}(|A|^{2t}|A*|^{2α})·r^{1/4}(|A|^{2(1−t)}|A*|^{2(1−α)})"),
        ("thm-numrad-pintu", "w(A) ≤ ½‖A‖ + ½r^{1/2}(|A||A*|)"),
        ("thm-numrad-kit3", "w(A) ≤ ½‖A‖ + ½‖A²‖^{1/2}"),
        ("rem-numrad-le-opnorm", "the quarter-power right side never exceeds ‖A‖"),
        ("numrad-half-abs-sum", "w(A) ≤ ½‖|A| + |A*|‖"),
        ("thm-tri-star-plus", "‖A+B‖ ≤ √(‖A*A+B*B‖ + 2w(A*B))"),
        ("thm-tri-star-minus", "‖A−B‖ ≤ √(‖A*A+B*B‖ + 2w(A*B))"),
        ("thm-tri-twin-plus", "‖A+B‖ ≤ √(‖AA*+BB*‖ + 2w(AB*))"),
        ("thm-tri-twin-minus", "‖A−B‖ ≤ √(‖AA*+BB*‖ + 2w(AB*))"),
        ("rem-tri-chain-mid", "√(‖A*A+B*B‖ + 2w(A*B)) ≤ √(‖A‖² + ‖B‖² + 2‖A*B‖)"),
        ("rem-tri-chain-sum", "√(‖A‖² + ‖B‖² + 2‖A*B‖) ≤ ‖A‖ + ‖B‖"),
        ("rem-tri-twin-chain-mid", "√(‖AA*+BB*‖ + 2w(AB*)) ≤ √(‖A‖² + ‖B‖² + 2‖AB*‖)"),
        ("rem-tri-twin-chain-sum", "√(‖A‖² + ‖B‖² + 2‖AB*‖) ≤ ‖A‖ + ‖B‖"),
        ("cor-tri-herm-eq-le", "ℜ(A)ℑ(A) = 0 ⟹ ‖A‖ ≤ √(½‖A*A+AA*‖)"),
        ("cor-tri-herm-eq-ge", "ℜ(A)ℑ(A) = 0 ⟹ √(½‖A*A+AA*‖) ≤ ‖A‖"),
        ("par-max-le-sum", "max_θ ‖A + e^{iθ}B‖ ≤ ‖A‖ + ‖B‖"),
        ("par-iff-wAstarB", "A ∥ B (certified max reaches ‖A‖+‖B‖) agrees with w(A*B) = ‖A‖‖B‖"),
        ("par-iff-wABstar", "A ∥ B agrees with w(AB*) = ‖A‖‖B‖"),
        ("par-nec-star-le", "A ∥ B ⟹ ‖A*A+B*B‖ ≤ ‖A‖² + ‖B‖²"),
        ("par-nec-star-ge", "A ∥ B ⟹ ‖A‖² + ‖B‖² ≤ ‖A*A+B*B‖"),
        ("par-nec-twin-le", "A ∥ B ⟹ ‖AA*+BB*‖ ≤ ‖A‖² + ‖B‖²"),
        ("par-nec-twin-ge", "A ∥ B ⟹ ‖A‖² + ‖B‖² ≤ ‖AA*+BB*‖"),
    ]
}
