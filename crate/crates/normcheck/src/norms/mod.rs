//! Norm-like functionals: Schatten p-norms (p ∈ (0, ∞], quasi-norms included),
//! operator norm, spectral radius, variational orthonormal-pair sums, and the
//! certified scans for the numerical radius and max_θ ‖A + e^{iθ}B‖.

mod radius;

pub use radius::{default_radius_tol, max_unimodular_norm, numerical_radius, RadiusEstimate};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::{ComplexMatrix, LinalgError};

/// Orthonormality tolerance for variational-sum inputs.
pub const EPS_ORTHO: f64 = 1e-10;

#[derive(Debug, Error)]
pub enum NormError {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("invalid Schatten order {p}: p must be positive")]
    InvalidOrder { p: f64 },
    #[error("operation requires {requirement}, got p = {p}")]
    UnsupportedOrder { requirement: &'static str, p: String },
    #[error("columns of {which} are not orthonormal: Gram deviation {deviation:.3e}")]
    NotOrthonormal { which: &'static str, deviation: f64 },
    #[error("column counts differ: {left} vs {right}")]
    ColumnCountMismatch { left: usize, right: usize },
    #[error("tolerance must be positive, got {tol}")]
    BadTolerance { tol: f64 },
    #[error("certified scan failed to reach tolerance {tol:.3e} (reached {reached:.3e})")]
    ScanStalled { tol: f64, reached: f64 },
}

/// Schatten norm order: a finite p > 0 or ∞ (the operator norm).
///
/// p = ∞ is an explicit variant, never approximated by a large finite p.
/// Orders in (0, 1) are quasi-norms; [`SchattenP::is_norm`] distinguishes
/// them where triangle-type reasoning is required.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SchattenP {
    Finite(f64),
    Infinity,
}

impl SchattenP {
    pub fn new(p: f64) -> Result<Self, NormError> {
        if p.is_finite() && p > 0.0 {
            Ok(SchattenP::Finite(p))
        } else if p.is_infinite() && p > 0.0 {
            Ok(SchattenP::Infinity)
        } else {
            Err(NormError::InvalidOrder { p })
        }
    }

    pub const fn infinity() -> Self {
        SchattenP::Infinity
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, SchattenP::Finite(_))
    }

    /// True for p ≥ 1 (including ∞), where ‖·‖_p is a genuine norm.
    pub fn is_norm(&self) -> bool {
        match self {
            SchattenP::Finite(p) => *p >= 1.0,
            SchattenP::Infinity => true,
        }
    }

    pub fn finite_value(&self) -> Option<f64> {
        match self {
            SchattenP::Finite(p) => Some(*p),
            SchattenP::Infinity => None,
        }
    }
}

impl std::fmt::Display for SchattenP {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SchattenP::Finite(p) => write!(f, "{p}"),
            SchattenP::Infinity => write!(f, "inf"),
        }
    }
}

impl Serialize for SchattenP {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            SchattenP::Finite(p) => s.serialize_f64(*p),
            SchattenP::Infinity => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for SchattenP {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(f64),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Num(p) => SchattenP::new(p).map_err(D::Error::custom),
            Raw::Text(t) if t.eq_ignore_ascii_case("inf") || t == "∞" => {
                Ok(SchattenP::Infinity)
            }
            Raw::Text(t) => Err(D::Error::custom(format!("invalid Schatten order {t:?}"))),
        }
    }
}

/// ℓ^p combination of a non-negative value list; scales out the maximum so
/// large orders do not overflow.
fn lp_combine(values: &[f64], p: f64) -> f64 {
    let top = values.iter().fold(0.0f64, |m, &v| m.max(v));
    if top == 0.0 {
        return 0.0;
    }
    let sum: f64 = values.iter().map(|&v| (v / top).powf(p)).sum();
    top * sum.powf(1.0 / p)
}

/// Schatten p-norm ‖A‖_p = (Σ sⱼᵖ)^{1/p}; the operator norm s₁ for p = ∞.
pub fn schatten_norm(a: &ComplexMatrix, p: SchattenP) -> Result<f64, NormError> {
    let svd = a.svd(false)?;
    Ok(schatten_from_singular_values(&svd.singular_values, p))
}

/// Schatten combination of an already-known singular value list.
pub fn schatten_from_singular_values(singular_values: &[f64], p: SchattenP) -> f64 {
    match p {
        SchattenP::Infinity => singular_values.iter().fold(0.0f64, |m, &v| m.max(v)),
        SchattenP::Finite(p) => lp_combine(singular_values, p),
    }
}

/// Operator (spectral) norm, s₁(A).
pub fn operator_norm(a: &ComplexMatrix) -> Result<f64, NormError> {
    schatten_norm(a, SchattenP::Infinity)
}

/// Spectral radius r(A) = max |λ| over the eigenvalues.
pub fn spectral_radius(a: &ComplexMatrix) -> Result<f64, NormError> {
    a.require_square().map_err(NormError::Linalg)?;
    let schur = a.schur(false)?;
    Ok(schur.values.first().map(|z| z.norm()).unwrap_or(0.0))
}

/// ‖A⊕B‖_p from the norms of the blocks: (‖A‖_pᵖ + ‖B‖_pᵖ)^{1/p}, max for ∞.
pub fn direct_sum_schatten(norm_a: f64, norm_b: f64, p: SchattenP) -> f64 {
    match p {
        SchattenP::Infinity => norm_a.max(norm_b),
        SchattenP::Finite(p) => lp_combine(&[norm_a, norm_b], p),
    }
}

pub(crate) fn check_orthonormal(m: &ComplexMatrix, which: &'static str) -> Result<(), NormError> {
    let gram = m.gram();
    let k = gram.rows();
    let deviation = (0..k)
        .flat_map(|i| (0..k).map(move |j| (i, j)))
        .map(|(i, j)| {
            let expected = if i == j { 1.0 } else { 0.0 };
            (m_entry(&gram, i, j) - expected).abs().max(gram.get(i, j).im.abs())
        })
        .fold(0.0f64, f64::max);
    if deviation > EPS_ORTHO {
        return Err(NormError::NotOrthonormal { which, deviation });
    }
    Ok(())
}

fn m_entry(m: &ComplexMatrix, i: usize, j: usize) -> f64 {
    m.get(i, j).re
}

/// Variational sum (Σₖ |⟨Axₖ, yₖ⟩|ᵖ)^{1/p} over paired orthonormal columns of
/// X and Y. The supremum over all such pairs is ‖A‖_p (attained by the
/// singular vectors); any admissible pair gives a lower bound.
pub fn orthonormal_pair_sum(
    a: &ComplexMatrix,
    x: &ComplexMatrix,
    y: &ComplexMatrix,
    p: SchattenP,
) -> Result<f64, NormError> {
    let p = match p {
        SchattenP::Finite(p) if p >= 1.0 => p,
        other => {
            return Err(NormError::UnsupportedOrder {
                requirement: "a finite p ≥ 1",
                p: other.to_string(),
            })
        }
    };
    if x.cols() != y.cols() {
        return Err(NormError::ColumnCountMismatch {
            left: x.cols(),
            right: y.cols(),
        });
    }
    check_orthonormal(x, "X")?;
    check_orthonormal(y, "Y")?;
    let terms: Vec<f64> = (0..x.cols())
        .map(|k| a.sandwich(x, k, y, k).norm())
        .collect();
    Ok(lp_combine(&terms, p))
}
