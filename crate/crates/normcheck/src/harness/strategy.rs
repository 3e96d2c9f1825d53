//! Check strategies: every inequality family sits behind the
//! [`CheckStrategy`] trait, is registered by name in a [`CheckRegistry`], and
//! is selected at runtime through the campaign config. A strategy draws its
//! own inputs from the trial's RNG stream, logs them for counterexample
//! dumps, and emits the family's reports.

use std::collections::BTreeMap;
use std::sync::Arc;

use rand_chacha::ChaCha8Rng;

use crate::ineq::{self, BoundReport, CheckError, TolerancePolicy};
use crate::linalg::{write_matrix, ComplexMatrix};
use crate::norms::SchattenP;

use super::gen;
use super::HarnessError;

/// Per-trial context: the derived RNG stream, the grids, and the input log
/// that backs counterexample dumps.
pub struct TrialContext<'a> {
    pub rng: ChaCha8Rng,
    pub dim: usize,
    pub trial: usize,
    pub p_grid: &'a [SchattenP],
    pub alpha_t_grid: &'a [(f64, f64)],
    pub policy: TolerancePolicy,
    inputs: Vec<(String, String)>,
}

impl<'a> TrialContext<'a> {
    pub fn new(
        rng: ChaCha8Rng,
        dim: usize,
        trial: usize,
        p_grid: &'a [SchattenP],
        alpha_t_grid: &'a [(f64, f64)],
        policy: TolerancePolicy,
    ) -> Self {
        TrialContext {
            rng,
            dim,
            trial,
            p_grid,
            alpha_t_grid,
            policy,
            inputs: Vec::new(),
        }
    }

    /// Records an input matrix in the text format for later dumps.
    pub fn log(&mut self, label: &str, m: &ComplexMatrix) {
        self.inputs.push((label.to_string(), write_matrix(m)));
    }

    pub fn into_inputs(self) -> BTreeMap<String, String> {
        self.inputs.into_iter().collect()
    }

    fn finite_norm_orders(&self) -> impl Iterator<Item = f64> + '_ {
        self.p_grid
            .iter()
            .filter_map(|p| p.finite_value())
            .filter(|&p| p >= 1.0)
    }
}

/// One interchangeable inequality family.
pub trait CheckStrategy: Send + Sync {
    /// Registry key.
    fn name(&self) -> &'static str;
    /// One-line statement of what the family verifies.
    fn describe(&self) -> &'static str;
    /// Draws inputs from the context and evaluates the family once.
    fn run_trial(&self, ctx: &mut TrialContext) -> Result<Vec<BoundReport>, CheckError>;
}

/// Name-keyed registry of strategies; iteration order is the key order, so
/// campaign output is independent of registration order.
pub struct CheckRegistry {
    entries: BTreeMap<&'static str, Arc<dyn CheckStrategy>>,
}

impl CheckRegistry {
    pub fn empty() -> Self {
        CheckRegistry {
            entries: BTreeMap::new(),
        }
    }

    /// All built-in inequality families.
    pub fn builtin() -> Self {
        let mut reg = CheckRegistry::empty();
        let strategies: Vec<Arc<dyn CheckStrategy>> = vec![
            Arc::new(AgmStrategy),
            Arc::new(SumProductStrategy),
            Arc::new(CommutatorStrategy),
            Arc::new(SquareStrategy),
            Arc::new(MoorePenroseStrategy),
            Arc::new(PositiveSplitStrategy),
            Arc::new(WeightedProductStrategy),
            Arc::new(SelfadjointProductStrategy),
            Arc::new(RankSchattenStrategy),
            Arc::new(OrthonormalSumStrategy),
            Arc::new(WeylChainStrategy),
            Arc::new(MonotoneStrategy),
            Arc::new(PositiveSumNormStrategy),
            Arc::new(NumradStrategy),
            Arc::new(TriangleStrategy),
            Arc::new(ParallelismStrategy),
        ];
        for s in strategies {
            reg.register(s);
        }
        reg
    }

    pub fn register(&mut self, strategy: Arc<dyn CheckStrategy>) {
        self.entries.insert(strategy.name(), strategy);
    }

    pub fn get(&self, name: &str) -> Option<&Arc<dyn CheckStrategy>> {
        self.entries.get(name)
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.entries.keys().copied().collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Arc<dyn CheckStrategy>> {
        self.entries.values()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Restricts to the named strategies, rejecting unknown names.
    pub fn subset(&self, names: &[String]) -> Result<Self, HarnessError> {
        let mut out = CheckRegistry::empty();
        for name in names {
            let entry = self.entries.get(name.as_str()).ok_or_else(|| {
                HarnessError::UnknownCheck {
                    name: name.clone(),
                    known: self.names().join(", "),
                }
            })?;
            out.register(Arc::clone(entry));
        }
        Ok(out)
    }
}

fn err_from(e: HarnessError) -> CheckError {
    match e {
        HarnessError::Check(inner) => inner,
        other => CheckError::BadExponents {
            message: format!("input generation failed: {other}"),
        },
    }
}

struct AgmStrategy;

impl CheckStrategy for AgmStrategy {
    fn name(&self) -> &'static str {
        "agm"
    }
    fn describe(&self) -> &'static str {
        "arithmetic-geometric mean bound ‖AB*‖ ≤ ½‖A*A+B*B‖ over the p-grid"
    }
    fn run_trial(&self, ctx: &mut TrialContext) -> Result<Vec<BoundReport>, CheckError> {
        let a = gen::gen_ginibre(ctx.dim, &mut ctx.rng);
        let b = gen::gen_ginibre(ctx.dim, &mut ctx.rng);
        ctx.log("A", &a);
        ctx.log("B", &b);
        let mut out = Vec::new();
        for &p in ctx.p_grid {
            out.push(ineq::check_agm(&a, &b, p, &ctx.policy)?);
        }
        Ok(out)
    }
}

struct SumProductStrategy;

impl CheckStrategy for SumProductStrategy {
    fn name(&self) -> &'static str {
        "sum-product"
    }
    fn describe(&self) -> &'static str {
        "two-factor decompositions of ‖(AXB+BYA)⊕0‖ over the p-grid"
    }
    fn run_trial(&self, ctx: &mut TrialContext) -> Result<Vec<BoundReport>, CheckError> {
        let a = gen::gen_ginibre(ctx.dim, &mut ctx.rng);
        let b = gen::gen_ginibre(ctx.dim, &mut ctx.rng);
        let x = gen::gen_ginibre(ctx.dim, &mut ctx.rng);
        let y = gen::gen_ginibre(ctx.dim, &mut ctx.rng);
        ctx.log("A", &a);
        ctx.log("B", &b);
        ctx.log("X", &x);
        ctx.log("Y", &y);
        let mut out = Vec::new();
        for &p in ctx.p_grid {
            out.extend(ineq::check_sum_product(&a, &b, &x, &y, p, &ctx.policy)?);
        }
        Ok(out)
    }
}

struct CommutatorStrategy;

impl CheckStrategy for CommutatorStrategy {
    fn name(&self) -> &'static str {
        "commutator"
    }
    fn describe(&self) -> &'static str {
        "commutator/anti-commutator family for ‖AB±BA‖ with the sharpened scaled form"
    }
    fn run_trial(&self, ctx: &mut TrialContext) -> Result<Vec<BoundReport>, CheckError> {
        let a = gen::gen_ginibre(ctx.dim, &mut ctx.rng);
        let b = gen::gen_ginibre(ctx.dim, &mut ctx.rng);
        ctx.log("A", &a);
        ctx.log("B", &b);
        let mut out = Vec::new();
        for sign in [1i8, -1] {
            for &p in ctx.p_grid {
                out.extend(ineq::check_commutator_family(&a, &b, sign, p, &ctx.policy)?);
            }
        }
        Ok(out)
    }
}

struct SquareStrategy;

impl CheckStrategy for SquareStrategy {
    fn name(&self) -> &'static str {
        "square"
    }
    fn describe(&self) -> &'static str {
        "square-of-an-operator bounds around ‖A*A+AA*‖ over the p-grid"
    }
    fn run_trial(&self, ctx: &mut TrialContext) -> Result<Vec<BoundReport>, CheckError> {
        let a = gen::gen_ginibre(ctx.dim, &mut ctx.rng);
        ctx.log("A", &a);
        let mut out = Vec::new();
        for &p in ctx.p_grid {
            out.extend(ineq::check_square_bounds(&a, p, &ctx.policy)?);
        }
        Ok(out)
    }
}

struct MoorePenroseStrategy;

impl CheckStrategy for MoorePenroseStrategy {
    fn name(&self) -> &'static str {
        "moore-penrose"
    }
    fn describe(&self) -> &'static str {
        "pseudoinverse-projector bounds on ‖A‖_p for generic and rank-deficient inputs"
    }
    fn run_trial(&self, ctx: &mut TrialContext) -> Result<Vec<BoundReport>, CheckError> {
        let a = gen::gen_ginibre(ctx.dim, &mut ctx.rng);
        let rank = (ctx.dim / 2).max(1);
        let deficient = gen::gen_fixed_rank(ctx.dim, rank, &mut ctx.rng).map_err(err_from)?;
        ctx.log("A", &a);
        ctx.log("A_deficient", &deficient);
        let mut out = Vec::new();
        for &p in ctx.p_grid {
            out.extend(ineq::check_moore_penrose(&a, p, &ctx.policy)?);
            out.extend(ineq::check_moore_penrose(&deficient, p, &ctx.policy)?);
        }
        Ok(out)
    }
}

struct PositiveSplitStrategy;

impl CheckStrategy for PositiveSplitStrategy {
    fn name(&self) -> &'static str {
        "positive-split"
    }
    fn describe(&self) -> &'static str {
        "power splittings of ‖(X+Y)⊕0‖ for PSD X, Y over the (α,t) and p grids"
    }
    fn run_trial(&self, ctx: &mut TrialContext) -> Result<Vec<BoundReport>, CheckError> {
        let x = gen::gen_psd(ctx.dim, &mut ctx.rng);
        let y = gen::gen_psd(ctx.dim, &mut ctx.rng);
        ctx.log("X", &x);
        ctx.log("Y", &y);
        let mut out = Vec::new();
        for &(alpha, t) in ctx.alpha_t_grid {
            for &p in ctx.p_grid {
                out.extend(ineq::check_positive_sum_split(
                    &x, &y, alpha, t, p, &ctx.policy,
                )?);
            }
        }
        Ok(out)
    }
}

struct WeightedProductStrategy;

impl CheckStrategy for WeightedProductStrategy {
    fn name(&self) -> &'static str {
        "weighted-product"
    }
    fn describe(&self) -> &'static str {
        "PSD-weighted product bounds ‖AXB+BYA‖ and the w-mediated remarks"
    }
    fn run_trial(&self, ctx: &mut TrialContext) -> Result<Vec<BoundReport>, CheckError> {
        let a = gen::gen_ginibre(ctx.dim, &mut ctx.rng);
        let b = gen::gen_ginibre(ctx.dim, &mut ctx.rng);
        let x = gen::gen_psd(ctx.dim, &mut ctx.rng);
        let y = gen::gen_psd(ctx.dim, &mut ctx.rng);
        ctx.log("A", &a);
        ctx.log("B", &b);
        ctx.log("X", &x);
        ctx.log("Y", &y);
        let mut out = Vec::new();
        for &p in ctx.p_grid {
            out.extend(ineq::check_weighted_product(&a, &b, &x, &y, p, &ctx.policy)?);
        }
        Ok(out)
    }
}

struct SelfadjointProductStrategy;

impl CheckStrategy for SelfadjointProductStrategy {
    fn name(&self) -> &'static str {
        "selfadjoint-product"
    }
    fn describe(&self) -> &'static str {
        "‖AB‖ ≤ ‖ℜ(BA)‖ on constructed selfadjoint-product pairs"
    }
    fn run_trial(&self, ctx: &mut TrialContext) -> Result<Vec<BoundReport>, CheckError> {
        let (a, b) = gen::gen_selfadjoint_product_pair(ctx.dim, ctx.trial, &mut ctx.rng)
            .map_err(err_from)?;
        ctx.log("A", &a);
        ctx.log("B", &b);
        let mut out = Vec::new();
        for &p in ctx.p_grid {
            out.push(ineq::check_selfadjoint_product_lemma(&a, &b, p, &ctx.policy)?);
        }
        Ok(out)
    }
}

struct RankSchattenStrategy;

impl CheckStrategy for RankSchattenStrategy {
    fn name(&self) -> &'static str {
        "rank-schatten"
    }
    fn describe(&self) -> &'static str {
        "rank-refined reversals ‖A‖_p ≤ (rank A)^{1/2p}‖A‖_{2p} and the chain"
    }
    fn run_trial(&self, ctx: &mut TrialContext) -> Result<Vec<BoundReport>, CheckError> {
        let rank = 1 + ctx.trial % ctx.dim;
        let a = gen::gen_fixed_rank(ctx.dim, rank, &mut ctx.rng).map_err(err_from)?;
        ctx.log("A", &a);
        let mut out = Vec::new();
        for pv in ctx.finite_norm_orders().collect::<Vec<_>>() {
            let p = SchattenP::new(pv).expect("positive");
            out.extend(ineq::check_rank_schatten(&a, p, p, &ctx.policy)?);
            let q = SchattenP::new(2.0 * pv).expect("positive");
            out.extend(ineq::check_rank_schatten(&a, p, q, &ctx.policy)?);
        }
        Ok(out)
    }
}

struct OrthonormalSumStrategy;

impl CheckStrategy for OrthonormalSumStrategy {
    fn name(&self) -> &'static str {
        "orthonormal-sums"
    }
    fn describe(&self) -> &'static str {
        "diagonal and paired orthonormal-sum bounds through power pairs"
    }
    fn run_trial(&self, ctx: &mut TrialContext) -> Result<Vec<BoundReport>, CheckError> {
        let a = gen::gen_ginibre(ctx.dim, &mut ctx.rng);
        let k = (ctx.dim - 1).max(1);
        let x = gen::gen_orthonormal_set(ctx.dim, k, &mut ctx.rng).map_err(err_from)?;
        let y = gen::gen_orthonormal_set(ctx.dim, k, &mut ctx.rng).map_err(err_from)?;
        ctx.log("A", &a);
        ctx.log("X", &x);
        ctx.log("Y", &y);

        let mut alphas: Vec<f64> = ctx.alpha_t_grid.iter().map(|&(a, _)| a).collect();
        alphas.sort_by(f64::total_cmp);
        alphas.dedup();

        let order_pairs = [(2.0, 2.0), (3.0, 3.0), (2.0, 4.0), (1.5, 1.5)];
        let mut out = Vec::new();
        for &alpha in &alphas {
            for &(pv, qv) in &order_pairs {
                out.extend(ineq::check_orthonormal_sums(
                    &a,
                    &x,
                    &y,
                    alpha,
                    SchattenP::new(pv).expect("positive"),
                    SchattenP::new(qv).expect("positive"),
                    &ctx.policy,
                )?);
            }
        }
        Ok(out)
    }
}

struct WeylChainStrategy;

impl CheckStrategy for WeylChainStrategy {
    fn name(&self) -> &'static str {
        "weyl-chain"
    }
    fn describe(&self) -> &'static str {
        "eigenvalue-sum bounds: the classical inequality and its refinement chain"
    }
    fn run_trial(&self, ctx: &mut TrialContext) -> Result<Vec<BoundReport>, CheckError> {
        let a = gen::gen_ginibre(ctx.dim, &mut ctx.rng);
        ctx.log("A", &a);
        let mut out = Vec::new();
        for pv in ctx.finite_norm_orders().collect::<Vec<_>>() {
            out.extend(ineq::check_weyl_chain(
                &a,
                SchattenP::new(pv).expect("positive"),
                &ctx.policy,
            )?);
        }
        Ok(out)
    }
}

struct MonotoneStrategy;

impl CheckStrategy for MonotoneStrategy {
    fn name(&self) -> &'static str {
        "monotone"
    }
    fn describe(&self) -> &'static str {
        "two-sided Schatten monotonicity and the n^{−1/p}-scaled profile"
    }
    fn run_trial(&self, ctx: &mut TrialContext) -> Result<Vec<BoundReport>, CheckError> {
        let a = gen::gen_ginibre(ctx.dim, &mut ctx.rng);
        ctx.log("A", &a);
        let mut finite: Vec<f64> = ctx.finite_norm_orders().collect();
        finite.sort_by(f64::total_cmp);
        finite.dedup();

        let mut out = Vec::new();
        for pair in finite.windows(2) {
            out.extend(ineq::check_schatten_monotone(
                &a,
                SchattenP::new(pair[0]).expect("positive"),
                SchattenP::new(pair[1]).expect("positive"),
                &ctx.policy,
            )?);
        }
        if let Some(&last) = finite.last() {
            if ctx.p_grid.iter().any(|p| !p.is_finite()) {
                out.extend(ineq::check_schatten_monotone(
                    &a,
                    SchattenP::new(last).expect("positive"),
                    SchattenP::Infinity,
                    &ctx.policy,
                )?);
            }
        }
        out.extend(ineq::check_schatten_monotone_profile(
            &a, ctx.p_grid, &ctx.policy,
        )?);
        Ok(out)
    }
}

struct PositiveSumNormStrategy;

impl CheckStrategy for PositiveSumNormStrategy {
    fn name(&self) -> &'static str {
        "positive-sum-norm"
    }
    fn describe(&self) -> &'static str {
        "operator-norm bounds on ‖X+Y‖ through the (α,t) powers, plus the block lemma"
    }
    fn run_trial(&self, ctx: &mut TrialContext) -> Result<Vec<BoundReport>, CheckError> {
        let x = gen::gen_psd(ctx.dim, &mut ctx.rng);
        let y = gen::gen_psd(ctx.dim, &mut ctx.rng);
        ctx.log("X", &x);
        ctx.log("Y", &y);
        let mut out = Vec::new();
        for &(alpha, t) in ctx.alpha_t_grid {
            out.extend(ineq::check_positive_sum_norm(&x, &y, alpha, t, &ctx.policy)?);
        }
        let qa = gen::gen_ginibre(ctx.dim, &mut ctx.rng);
        let qx = gen::gen_ginibre(ctx.dim, &mut ctx.rng);
        let qb = gen::gen_ginibre(ctx.dim, &mut ctx.rng);
        let qy = gen::gen_ginibre(ctx.dim, &mut ctx.rng);
        ctx.log("block_A", &qa);
        ctx.log("block_X", &qx);
        ctx.log("block_B", &qb);
        ctx.log("block_Y", &qy);
        out.push(ineq::check_block_spectral_radius(
            &qa, &qx, &qb, &qy, &ctx.policy,
        )?);
        Ok(out)
    }
}

struct NumradStrategy;

impl CheckStrategy for NumradStrategy {
    fn name(&self) -> &'static str {
        "numrad"
    }
    fn describe(&self) -> &'static str {
        "numerical-radius upper bounds through quarter powers of |A|, |A*|"
    }
    fn run_trial(&self, ctx: &mut TrialContext) -> Result<Vec<BoundReport>, CheckError> {
        let a = gen::gen_ginibre(ctx.dim, &mut ctx.rng);
        ctx.log("A", &a);
        ineq::check_numrad_bounds(&a, ctx.alpha_t_grid, &ctx.policy)
    }
}

struct TriangleStrategy;

impl CheckStrategy for TriangleStrategy {
    fn name(&self) -> &'static str {
        "triangle"
    }
    fn describe(&self) -> &'static str {
        "refined triangle inequalities and the ℜ(A)ℑ(A) = 0 equality case"
    }
    fn run_trial(&self, ctx: &mut TrialContext) -> Result<Vec<BoundReport>, CheckError> {
        let a = gen::gen_ginibre(ctx.dim, &mut ctx.rng);
        let b = gen::gen_ginibre(ctx.dim, &mut ctx.rng);
        ctx.log("A", &a);
        ctx.log("B", &b);
        let mut out = ineq::check_triangle_refined(&a, &b, &ctx.policy)?;

        let split = gen::gen_split_real_imag(ctx.dim, ctx.trial, &mut ctx.rng);
        let partner = gen::gen_ginibre(ctx.dim, &mut ctx.rng);
        ctx.log("A_split", &split);
        ctx.log("B_split", &partner);
        out.extend(ineq::check_triangle_refined(&split, &partner, &ctx.policy)?);
        Ok(out)
    }
}

struct ParallelismStrategy;

impl CheckStrategy for ParallelismStrategy {
    fn name(&self) -> &'static str {
        "parallelism"
    }
    fn describe(&self) -> &'static str {
        "parallelism detection: certified max norm vs the w(A*B) criterion"
    }
    fn run_trial(&self, ctx: &mut TrialContext) -> Result<Vec<BoundReport>, CheckError> {
        let (pa, pb) =
            gen::gen_parallel_pair(ctx.dim, ctx.trial, &mut ctx.rng).map_err(err_from)?;
        ctx.log("A_parallel", &pa);
        ctx.log("B_parallel", &pb);
        let mut out = ineq::check_parallelism(&pa, &pb, &ctx.policy)?.reports;

        let a = gen::gen_ginibre(ctx.dim, &mut ctx.rng);
        let b = gen::gen_ginibre(ctx.dim, &mut ctx.rng);
        ctx.log("A_random", &a);
        ctx.log("B_random", &b);
        out.extend(ineq::check_parallelism(&a, &b, &ctx.policy)?.reports);
        Ok(out)
    }
}

/// Fault-injection strategy for harness self-tests: evaluates the AGM family
/// with the right side halved, which every generic pair violates.
pub struct BrokenAgmStrategy;

impl CheckStrategy for BrokenAgmStrategy {
    fn name(&self) -> &'static str {
        "broken-agm"
    }
    fn describe(&self) -> &'static str {
        "deliberately falsified AGM bound (harness self-test)"
    }
    fn run_trial(&self, ctx: &mut TrialContext) -> Result<Vec<BoundReport>, CheckError> {
        let a = gen::gen_ginibre(ctx.dim, &mut ctx.rng);
        let b = gen::gen_ginibre(ctx.dim, &mut ctx.rng);
        ctx.log("A", &a);
        ctx.log("B", &b);
        let mut report = ineq::check_agm(&a, &b, SchattenP::Infinity, &ctx.policy)?;
        report.check_id = "broken-agm".to_string();
        report.rhs *= 0.5;
        report.slack = report.rhs - report.lhs;
        report.holds = ctx.policy.holds(report.lhs, report.rhs);
        Ok(vec![report])
    }
}
