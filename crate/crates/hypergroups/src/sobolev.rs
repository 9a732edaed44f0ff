//! Spectrally weighted Sobolev norms on bi-invariant functions, and the
//! embedding inequalities they satisfy.
//!
//! Given a weight `γ: dual → ℝ₊` and an exponent `s > 0`, the Sobolev norm
//! is `‖f‖ = (Σ_φ π(φ) (1 + γ(φ)²)^s |f̂(φ)|²)^{1/2}`; with `γ ≡ 0` it
//! collapses to the bi-invariant `L²` norm by the Plancherel identity. On a
//! finite pair every bi-invariant function has finite norm, so membership
//! is automatic and only the quantitative inequalities carry content:
//!
//! - `‖f‖_{L²} ≤ ‖f‖_{H^s,γ}` (the weight is ≥ 1);
//! - `‖f‖_{H^σ,γ} ≤ ‖f‖_{H^s,γ}` for `s > σ > 0` (monotone weights);
//! - `‖f‖_∞ ≤ C(γ,s) ‖f‖_{H^s,γ}` with the Cauchy–Schwarz constant
//!   `C(γ,s) = M (Σ_φ π(φ)(1+γ(φ)²)^{−s})^{1/2}`, `M = max |φ|`;
//! - the oscillation bound `max |f(x) − f(a)| ≤ ε ‖f‖ ‖(1+γ²)^{−s/2}‖`
//!   with `ε` the worst character oscillation.
//!
//! Each check returns an [`EmbeddingReport`] carrying both sides of the
//! inequality and the margin; `slack` absorbs floating-point noise and is
//! scaled by the right-hand side so large random inputs are judged fairly.

use num_complex::Complex64;
use serde::Serialize;
use thiserror::Error;

use crate::gelfand::GelfandPair;
use crate::hypergroup::PointFunction;
use crate::spectral::{self, DualData, SpectralError};

#[derive(Debug, Error)]
pub enum SobolevError {
    #[error("smoothness exponent must be positive, got {s}")]
    BadExponent { s: f64 },
    #[error("need s > sigma > 0, got s = {s}, sigma = {sigma}")]
    BadOrdering { s: f64, sigma: f64 },
    #[error("gamma weights must be nonnegative and finite, entry {index} is {value}")]
    BadGamma { index: usize, value: f64 },
    #[error("gamma has {got} entries, expected {want}")]
    GammaLen { got: usize, want: usize },
    #[error(transparent)]
    Spectral(#[from] SpectralError),
}

/// Smoothness exponent `s > 0` and per-character weights `γ(φ) ≥ 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct SobolevParams {
    pub s: f64,
    pub gamma: Vec<f64>,
}

impl SobolevParams {
    pub fn new(s: f64, gamma: Vec<f64>) -> Result<Self, SobolevError> {
        if !s.is_finite() || s <= 0.0 {
            return Err(SobolevError::BadExponent { s });
        }
        for (index, &value) in gamma.iter().enumerate() {
            if !value.is_finite() || value < 0.0 {
                return Err(SobolevError::BadGamma { index, value });
            }
        }
        Ok(SobolevParams { s, gamma })
    }

    fn check_len(&self, want: usize) -> Result<(), SobolevError> {
        if self.gamma.len() != want {
            Err(SobolevError::GammaLen { got: self.gamma.len(), want })
        } else {
            Ok(())
        }
    }

    /// The spectral weight `(1 + γ(φ)²)^s` for dual index `i`.
    fn weight(&self, i: usize) -> f64 {
        (1.0 + self.gamma[i] * self.gamma[i]).powf(self.s)
    }
}

/// Built-in choices for `γ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GammaPreset {
    /// `γ ≡ 0`: the Sobolev norm degenerates to the `L²` norm.
    Zero,
    /// `γ(φ_k) = k` in the canonical character order.
    Index,
    /// `γ(φ) = 1 − Re φ(a₁)`, the spectral gap of the first non-neutral
    /// translation operator (zero when the dual is trivial).
    SpectralGap,
}

impl GammaPreset {
    pub fn parse(name: &str) -> Option<Self> {
        match name {
            "zero" => Some(GammaPreset::Zero),
            "index" => Some(GammaPreset::Index),
            "spectral-gap" => Some(GammaPreset::SpectralGap),
            _ => None,
        }
    }
}

/// Materialize a preset against a computed dual.
pub fn gamma_preset(dual: &DualData, preset: GammaPreset) -> Vec<f64> {
    let m = dual.len();
    match preset {
        GammaPreset::Zero => vec![0.0; m],
        GammaPreset::Index => (0..m).map(|k| k as f64).collect(),
        GammaPreset::SpectralGap => dual
            .characters
            .iter()
            .map(|phi| {
                if phi.values.len() > 1 {
                    (1.0 - phi.values[1].re).max(0.0)
                } else {
                    0.0
                }
            })
            .collect(),
    }
}

/// Outcome of one embedding inequality: `lhs ≤ rhs` up to slack.
#[derive(Debug, Clone, Serialize)]
pub struct EmbeddingReport {
    pub lhs: f64,
    pub rhs: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub constant: Option<f64>,
    pub margin: f64,
    pub pass: bool,
}

impl EmbeddingReport {
    fn judge(lhs: f64, rhs: f64, constant: Option<f64>, slack: f64) -> Self {
        let margin = rhs - lhs;
        EmbeddingReport {
            lhs,
            rhs,
            constant,
            margin,
            pass: margin >= -slack * rhs.abs().max(1.0),
        }
    }
}

/// `‖f‖_{H^{s,♮}_γ} = (Σ_φ π(φ)(1+γ(φ)²)^s |f̂(φ)|²)^{1/2}`.
pub fn sobolev_norm(
    pair: &GelfandPair,
    dual: &DualData,
    f: &PointFunction,
    params: &SobolevParams,
) -> Result<f64, SobolevError> {
    params.check_len(dual.len())?;
    let coeffs = spectral::fourier(pair, dual, f)?;
    let sum: f64 = dual
        .plancherel
        .iter()
        .enumerate()
        .zip(&coeffs.values)
        .map(|((i, &pi), c)| pi * params.weight(i) * c.norm_sqr())
        .sum();
    Ok(sum.sqrt())
}

/// `⟨f, g⟩ = Σ_φ π(φ)(1+γ(φ)²)^s f̂(φ) conj(ĝ(φ))`; sesquilinear, with
/// `⟨f, f⟩ = ‖f‖²`.
pub fn sobolev_inner(
    pair: &GelfandPair,
    dual: &DualData,
    f: &PointFunction,
    g: &PointFunction,
    params: &SobolevParams,
) -> Result<Complex64, SobolevError> {
    params.check_len(dual.len())?;
    let fc = spectral::fourier(pair, dual, f)?;
    let gc = spectral::fourier(pair, dual, g)?;
    Ok(dual
        .plancherel
        .iter()
        .enumerate()
        .zip(fc.values.iter().zip(&gc.values))
        .map(|((i, &pi), (a, b))| pi * params.weight(i) * a * b.conj())
        .sum())
}

/// Embedding into `L²`: `‖f‖_{L²,♮} ≤ ‖f‖_{H^{s,♮}_γ}`.
pub fn check_l2_embedding(
    pair: &GelfandPair,
    dual: &DualData,
    f: &PointFunction,
    params: &SobolevParams,
    slack: f64,
) -> Result<EmbeddingReport, SobolevError> {
    let lhs = pair.base().l2_norm(f);
    let rhs = sobolev_norm(pair, dual, f, params)?;
    Ok(EmbeddingReport::judge(lhs, rhs, None, slack))
}

/// Monotone embedding: for `s > σ > 0`, `‖f‖_{H^σ} ≤ ‖f‖_{H^s}`.
pub fn check_monotone_embedding(
    pair: &GelfandPair,
    dual: &DualData,
    f: &PointFunction,
    s: f64,
    sigma: f64,
    gamma: &[f64],
    slack: f64,
) -> Result<EmbeddingReport, SobolevError> {
    if !(s > sigma && sigma > 0.0) {
        return Err(SobolevError::BadOrdering { s, sigma });
    }
    let low = SobolevParams::new(sigma, gamma.to_vec())?;
    let high = SobolevParams::new(s, gamma.to_vec())?;
    let lhs = sobolev_norm(pair, dual, f, &low)?;
    let rhs = sobolev_norm(pair, dual, f, &high)?;
    Ok(EmbeddingReport::judge(lhs, rhs, None, slack))
}

/// The sup-norm embedding constant
/// `C(γ,s) = M · (Σ_φ π(φ)(1+γ(φ)²)^{−s})^{1/2}` with `M = max |φ|`,
/// finite unconditionally for a finite dual.
pub fn supnorm_constant(dual: &DualData, params: &SobolevParams) -> Result<f64, SobolevError> {
    params.check_len(dual.len())?;
    let m = spectral::max_character_abs(dual);
    Ok(m * dual_weight_l2(dual, params))
}

/// `(Σ_φ π(φ)(1+γ(φ)²)^{−s})^{1/2}`, the `L²(π)` norm of `(1+γ²)^{−s/2}`.
fn dual_weight_l2(dual: &DualData, params: &SobolevParams) -> f64 {
    dual.plancherel
        .iter()
        .enumerate()
        .map(|(i, &pi)| pi / params.weight(i))
        .sum::<f64>()
        .sqrt()
}

/// Sup-norm embedding: `‖f‖_∞ ≤ C(γ,s) ‖f‖_{H^{s,♮}_γ}`.
pub fn check_supnorm_embedding(
    pair: &GelfandPair,
    dual: &DualData,
    f: &PointFunction,
    params: &SobolevParams,
    slack: f64,
) -> Result<EmbeddingReport, SobolevError> {
    let constant = supnorm_constant(dual, params)?;
    let lhs = f.sup_norm();
    let rhs = constant * sobolev_norm(pair, dual, f, params)?;
    Ok(EmbeddingReport::judge(lhs, rhs, Some(constant), slack))
}

/// The quantitative continuity bound
/// `ε · ‖f‖_{H^{s,♮}_γ} · (Σ_φ π(φ)(1+γ(φ)²)^{−s})^{1/2}`.
///
/// With `ε` the worst character oscillation this dominates every
/// oscillation `|f(x) − f(a)|`; continuity itself is vacuous on a finite
/// space, only this bound is checkable.
pub fn modulus_bound(
    pair: &GelfandPair,
    dual: &DualData,
    f: &PointFunction,
    params: &SobolevParams,
    eps: f64,
) -> Result<f64, SobolevError> {
    params.check_len(dual.len())?;
    Ok(eps * sobolev_norm(pair, dual, f, params)? * dual_weight_l2(dual, params))
}

/// Oscillation check: `max_{x,a} |f(x) − f(a)|` against [`modulus_bound`]
/// with `ε = max_{φ,B,B'} |φ(B) − φ(B')|`.
pub fn check_modulus_bound(
    pair: &GelfandPair,
    dual: &DualData,
    f: &PointFunction,
    params: &SobolevParams,
    slack: f64,
) -> Result<EmbeddingReport, SobolevError> {
    let eps = spectral::character_oscillation(dual);
    let lhs = f.max_oscillation();
    let rhs = modulus_bound(pair, dual, f, params, eps)?;
    Ok(EmbeddingReport::judge(lhs, rhs, Some(eps), slack))
}
