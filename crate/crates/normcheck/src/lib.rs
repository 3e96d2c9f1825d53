//! Numerical verification of operator-norm, Schatten-norm and numerical-radius
//! inequalities on dense complex matrices.
//!
//! The crate is organized in five layers:
//!
//! * [`linalg`] — the `ComplexMatrix` value type plus the decompositions every
//!   bound is computed from (Hermitian eigen, SVD, Schur, Moore–Penrose
//!   pseudoinverse, PSD spectral functions).
//! * [`norms`] — Schatten p-norms, operator norm, spectral radius, and the
//!   certified circle scans behind the numerical radius and the maximal
//!   unimodular combination ‖A + e^{iθ}B‖.
//! * [`ineq`] — the inequality catalog: each bound is a predicate that returns
//!   a [`ineq::BoundReport`] with LHS, RHS, slack and a tolerance verdict.
//! * [`apps`] — end-user computations: zero-sum bounds for monic complex
//!   polynomials via the companion matrix, and rank-refined energy bounds for
//!   simple graphs.
//! * [`harness`] — seedable input generators, the check-strategy registry, and
//!   the randomized verification campaign with JSON/CSV reporting.

pub mod apps;
pub mod harness;
pub mod ineq;
pub mod linalg;
pub mod norms;

pub use linalg::ComplexMatrix;
pub use norms::SchattenP;
