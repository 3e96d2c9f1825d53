//! Campaign harness: seedable input generators, the check-strategy registry,
//! campaign orchestration with JSON/CSV reporting, and the anchored
//! self-check suite.

pub mod campaign;
pub mod gen;
mod selfcheck;
pub mod strategy;

pub use campaign::{
    replay, run_campaign, run_campaign_with, trial_rng, CampaignConfig, CampaignResult,
    CheckAggregate, Counterexample, RESULT_SCHEMA_VERSION,
};
pub use gen::{
    gen_fixed_rank, gen_ginibre, gen_ginibre_rect, gen_nilpotent, gen_normal,
    gen_orthonormal_set, gen_parallel_pair, gen_psd, gen_selfadjoint_product_pair,
    gen_split_real_imag, gen_unitary,
};
pub use selfcheck::{selfcheck, SelfCheckItem};
pub use strategy::{BrokenAgmStrategy, CheckRegistry, CheckStrategy, TrialContext};

use thiserror::Error;

use crate::ineq::CheckError;
use crate::linalg::LinalgError;
use crate::norms::NormError;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("invalid campaign config: {message}")]
    BadConfig { message: String },
    #[error("rank {r} is invalid for dimension {n}")]
    BadRank { n: usize, r: usize },
    #[error("cannot draw {k} orthonormal columns in dimension {n}")]
    BadSize { n: usize, k: usize },
    #[error("generator failure: {message}")]
    Generation { message: String },
    #[error("unknown check {name:?}; registered checks: {known}")]
    UnknownCheck { name: String, known: String },
    #[error("check {check} failed at dim {dim}, trial {trial}: {message}")]
    TrialFailed {
        check: String,
        dim: usize,
        trial: usize,
        message: String,
    },
    #[error(transparent)]
    Check(#[from] CheckError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Norm(#[from] NormError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
