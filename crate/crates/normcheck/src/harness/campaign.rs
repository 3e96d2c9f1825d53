//! Campaign orchestration: configuration, deterministic trial scheduling,
//! per-check aggregation, counterexample capture, and JSON/CSV reporting.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::ineq::{BoundReport, TolerancePolicy};
use crate::norms::SchattenP;

use super::strategy::{CheckRegistry, CheckStrategy, TrialContext};
use super::HarnessError;

pub const RESULT_SCHEMA_VERSION: u32 = 1;
/// At most this many counterexample dumps are kept per strategy.
const MAX_DUMPS_PER_CHECK: usize = 5;

/// Randomized-verification parameters. The JSON config file mirrors this
/// struct field for field; `p_grid` entries are numbers or the string "inf".
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CampaignConfig {
    pub seed: u64,
    pub trials_per_check: usize,
    pub dims: Vec<usize>,
    pub p_grid: Vec<SchattenP>,
    pub alpha_t_grid: Vec<(f64, f64)>,
    pub tol_rel: f64,
    #[serde(default)]
    pub output_path: Option<PathBuf>,
    /// Optional registry filter; all built-in checks when absent.
    #[serde(default)]
    pub checks: Option<Vec<String>>,
}

impl Default for CampaignConfig {
    fn default() -> Self {
        let steps = [0.0, 0.25, 0.5, 0.75, 1.0];
        CampaignConfig {
            seed: 0xC0FFEE,
            trials_per_check: 200,
            dims: vec![2, 3, 4, 6, 8],
            p_grid: vec![
                SchattenP::Finite(1.0),
                SchattenP::Finite(1.5),
                SchattenP::Finite(2.0),
                SchattenP::Finite(3.0),
                SchattenP::Finite(4.0),
                SchattenP::Infinity,
            ],
            alpha_t_grid: steps
                .iter()
                .flat_map(|&a| steps.iter().map(move |&t| (a, t)))
                .collect(),
            tol_rel: 1e-8,
            output_path: None,
            checks: None,
        }
    }
}

impl CampaignConfig {
    pub fn validate(&self) -> Result<(), HarnessError> {
        let bad = |message: String| Err(HarnessError::BadConfig { message });
        if self.trials_per_check == 0 {
            return bad("trials_per_check must be ≥ 1".into());
        }
        if self.dims.is_empty() || self.dims.iter().any(|&d| d < 2) {
            return bad("dims must be nonempty with every dimension ≥ 2".into());
        }
        if self.p_grid.is_empty() {
            return bad("p_grid must be nonempty".into());
        }
        if !self.tol_rel.is_finite() || self.tol_rel <= 0.0 {
            return bad(format!("tol_rel must be positive, got {}", self.tol_rel));
        }
        if self
            .alpha_t_grid
            .iter()
            .any(|&(a, t)| !(0.0..=1.0).contains(&a) || !(0.0..=1.0).contains(&t))
        {
            return bad("alpha_t_grid entries must lie in [0,1]²".into());
        }
        Ok(())
    }

    pub fn from_json(text: &str) -> Result<Self, HarnessError> {
        let config: CampaignConfig =
            serde_json::from_str(text).map_err(|e| HarnessError::BadConfig {
                message: format!("config JSON: {e}"),
            })?;
        config.validate()?;
        Ok(config)
    }

    pub fn from_json_file(path: &Path) -> Result<Self, HarnessError> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }
}

/// Per-check-id tallies across the whole campaign.
#[derive(Debug, Clone, Serialize)]
pub struct CheckAggregate {
    pub reports: u64,
    pub pass: u64,
    pub fail: u64,
    pub indeterminate: u64,
    /// Least rhs − lhs observed (tightest instance).
    pub min_slack: f64,
    /// Largest relative violation among failures, 0 when none.
    pub max_rel_violation: f64,
}

impl CheckAggregate {
    fn new() -> Self {
        CheckAggregate {
            reports: 0,
            pass: 0,
            fail: 0,
            indeterminate: 0,
            min_slack: f64::INFINITY,
            max_rel_violation: 0.0,
        }
    }

    fn absorb(&mut self, report: &BoundReport) {
        self.reports += 1;
        self.min_slack = self.min_slack.min(report.slack);
        if report.indeterminate {
            self.indeterminate += 1;
        } else if report.holds {
            self.pass += 1;
        } else {
            self.fail += 1;
            let scale = report.lhs.abs().max(report.rhs.abs()).max(1.0);
            self.max_rel_violation = self.max_rel_violation.max(-report.slack / scale);
        }
    }
}

/// A failing trial, replayable from (seed, check, dim, trial) and readable
/// from the embedded matrix-text inputs.
#[derive(Debug, Clone, Serialize)]
pub struct Counterexample {
    pub check: String,
    pub dim: usize,
    pub trial: usize,
    pub seed: u64,
    pub inputs: BTreeMap<String, String>,
    pub failing: Vec<BoundReport>,
}

#[derive(Debug, Serialize)]
pub struct CampaignResult {
    pub schema_version: u32,
    pub config: CampaignConfig,
    pub checks: BTreeMap<String, CheckAggregate>,
    pub counterexamples: Vec<Counterexample>,
    pub wall_time_ms: u64,
}

impl CampaignResult {
    pub fn all_hold(&self) -> bool {
        self.checks.values().all(|agg| agg.fail == 0)
    }

    /// Deterministic pretty JSON; wall_time_ms is the only field that varies
    /// between identical runs.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("result serializes")
    }

    /// One line per check id: id, reports, pass, fail, indeterminate,
    /// min_slack, max_rel_violation.
    pub fn summary_csv(&self) -> String {
        let mut out =
            String::from("check_id,reports,pass,fail,indeterminate,min_slack,max_rel_violation\n");
        for (id, agg) in &self.checks {
            out.push_str(&format!(
                "{},{},{},{},{},{:e},{:e}\n",
                id,
                agg.reports,
                agg.pass,
                agg.fail,
                agg.indeterminate,
                agg.min_slack,
                agg.max_rel_violation
            ));
        }
        out
    }

    /// Writes `results.json` and `summary.csv` under the directory.
    pub fn write_to(&self, dir: &Path) -> Result<(), HarnessError> {
        std::fs::create_dir_all(dir)?;
        std::fs::write(dir.join("results.json"), self.to_json())?;
        std::fs::write(dir.join("summary.csv"), self.summary_csv())?;
        Ok(())
    }
}

/// ChaCha8 stream for one (seed, check, dim, trial) cell; hashed so streams
/// are independent and platform-stable.
pub fn trial_rng(seed: u64, check: &str, dim: usize, trial: usize) -> ChaCha8Rng {
    let mut hasher = Sha256::new();
    hasher.update(seed.to_le_bytes());
    hasher.update(check.as_bytes());
    hasher.update((dim as u64).to_le_bytes());
    hasher.update((trial as u64).to_le_bytes());
    let digest = hasher.finalize();
    let mut key = [0u8; 32];
    key.copy_from_slice(&digest[..32]);
    ChaCha8Rng::from_seed(key)
}

struct TrialOutcome {
    dim: usize,
    trial: usize,
    reports: Vec<BoundReport>,
    inputs: BTreeMap<String, String>,
}

fn run_one_trial(
    strategy: &dyn CheckStrategy,
    config: &CampaignConfig,
    dim: usize,
    trial: usize,
) -> Result<TrialOutcome, HarnessError> {
    let rng = trial_rng(config.seed, strategy.name(), dim, trial);
    let mut ctx = TrialContext::new(
        rng,
        dim,
        trial,
        &config.p_grid,
        &config.alpha_t_grid,
        TolerancePolicy {
            tol_rel: config.tol_rel,
        },
    );
    let reports =
        strategy
            .run_trial(&mut ctx)
            .map_err(|source| HarnessError::TrialFailed {
                check: strategy.name().to_string(),
                dim,
                trial,
                message: source.to_string(),
            })?;
    Ok(TrialOutcome {
        dim,
        trial,
        reports,
        inputs: ctx.into_inputs(),
    })
}

/// Runs every registered check over the full (dim × trial) grid. Trials run
/// in parallel; results are merged in (check, dim, trial) order so the
/// payload is identical however the work was scheduled.
pub fn run_campaign_with(
    registry: &CheckRegistry,
    config: &CampaignConfig,
) -> Result<CampaignResult, HarnessError> {
    config.validate()?;
    let started = Instant::now();

    let selected: Vec<_> = match &config.checks {
        Some(names) => {
            let sub = registry.subset(names)?;
            sub.names()
                .into_iter()
                .map(|n| registry.get(n).expect("subset verified").clone())
                .collect()
        }
        None => registry.iter().cloned().collect(),
    };
    if selected.is_empty() {
        return Err(HarnessError::BadConfig {
            message: "no checks selected".into(),
        });
    }

    let mut checks: BTreeMap<String, CheckAggregate> = BTreeMap::new();
    let mut counterexamples = Vec::new();

    for strategy in &selected {
        let cells: Vec<(usize, usize)> = config
            .dims
            .iter()
            .flat_map(|&dim| (0..config.trials_per_check).map(move |trial| (dim, trial)))
            .collect();
        let outcomes: Vec<Result<TrialOutcome, HarnessError>> = cells
            .par_iter()
            .map(|&(dim, trial)| run_one_trial(strategy.as_ref(), config, dim, trial))
            .collect();

        let mut dumps_for_check = 0usize;
        for outcome in outcomes {
            let outcome = outcome?;
            for report in &outcome.reports {
                checks
                    .entry(report.check_id.clone())
                    .or_insert_with(CheckAggregate::new)
                    .absorb(report);
            }
            let failing: Vec<BoundReport> = outcome
                .reports
                .iter()
                .filter(|r| !r.holds && !r.indeterminate)
                .cloned()
                .collect();
            if !failing.is_empty() && dumps_for_check < MAX_DUMPS_PER_CHECK {
                dumps_for_check += 1;
                counterexamples.push(Counterexample {
                    check: strategy.name().to_string(),
                    dim: outcome.dim,
                    trial: outcome.trial,
                    seed: config.seed,
                    inputs: outcome.inputs,
                    failing,
                });
            }
        }
    }

    Ok(CampaignResult {
        schema_version: RESULT_SCHEMA_VERSION,
        config: config.clone(),
        checks,
        counterexamples,
        wall_time_ms: started.elapsed().as_millis() as u64,
    })
}

/// Runs the built-in registry (optionally filtered by the config).
pub fn run_campaign(config: &CampaignConfig) -> Result<CampaignResult, HarnessError> {
    run_campaign_with(&CheckRegistry::builtin(), config)
}

/// Re-executes the trial a counterexample came from and returns its reports;
/// the dump is reproducible exactly because the trial stream is derived from
/// (seed, check, dim, trial).
pub fn replay(
    registry: &CheckRegistry,
    config: &CampaignConfig,
    dump: &Counterexample,
) -> Result<Vec<BoundReport>, HarnessError> {
    let strategy = registry
        .get(&dump.check)
        .ok_or_else(|| HarnessError::UnknownCheck {
            name: dump.check.clone(),
            known: registry.names().join(", "),
        })?;
    let mut replay_config = config.clone();
    replay_config.seed = dump.seed;
    Ok(run_one_trial(strategy.as_ref(), &replay_config, dump.dim, dump.trial)?.reports)
}
