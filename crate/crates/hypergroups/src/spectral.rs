//! The dual of a Gelfand pair: characters, Plancherel weights, and the
//! spherical Fourier transform.
//!
//! A character of the pair is a K-bi-invariant function `φ` with
//! `φ(e) = 1`, the product rule `∫_K φ(x ∗ k ∗ y) dk = φ(x) φ(y)`, and
//! `φ(x⋄) = conj(φ(x))`. On the double-coset quotient with structure
//! constants `c_q` this says exactly that `φ` is a simultaneous eigenvector
//! of the translation matrices `(A_a)[b][d] = c_q[a][b][d]`, with
//! eigenvalue `φ(a)` for `A_a`.
//!
//! For a Gelfand pair the `A_a` commute, and conjugating by the square
//! root of the quotient Haar weights turns transposition into the
//! involution: `B_a = S A_a S^{-1}` satisfies `B_aᵀ = B_{a⋄}` (a direct
//! consequence of `h(b) c[a][b][d] = h(d) c[a⋄][d][b]`). A random real
//! combination of the symmetric parts plus `i` times a random combination
//! of the antisymmetric parts is therefore a Hermitian member of the same
//! commutative algebra; its eigenvectors, computed by a standard Hermitian
//! eigendecomposition and pulled back through `S`, are the characters.
//! Degenerate eigenvalues are handled by redrawing the combination from
//! the next seed, a bounded number of times, and every returned character
//! is verified against the defining conditions.

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::gelfand::{GelfandError, GelfandPair};
use crate::hypergroup::{HypergroupError, PointFunction};
use crate::report::ValidationReport;

/// Seed for the random combination of translation matrices.
pub const DUAL_SEED: u64 = 0xC0FFEE;
/// Bound on redraws when the combined spectrum is degenerate.
pub const MAX_DUAL_RETRIES: usize = 16;
/// Eigenvalues closer than this are treated as colliding.
const EIG_GAP_TOL: f64 = 1e-8;
/// Relative bi-invariance tolerance for strict transforms.
const BIINVARIANCE_RTOL: f64 = 1e-9;

#[derive(Debug, Error)]
pub enum SpectralError {
    #[error("not a Gelfand pair (commutativity residual {residual:.3e})")]
    NotGelfandPair { residual: f64 },
    #[error("degenerate spectrum after {retries} seeded attempts")]
    DegenerateSpectrum { retries: usize },
    #[error("computed eigenvector fails dual-set condition `{name}` (residual {residual:.3e})")]
    InconsistentCharacter { name: String, residual: f64 },
    #[error("function is not K-bi-invariant (residual {residual:.3e}); project it first")]
    NotBiInvariant { residual: f64 },
    #[error("expected {want} dual coefficients, got {got}")]
    LengthMismatch { got: usize, want: usize },
    #[error(transparent)]
    Gelfand(#[from] GelfandError),
    #[error(transparent)]
    Hypergroup(#[from] HypergroupError),
}

/// A character, stored by its values on the double-coset blocks.
#[derive(Debug, Clone, PartialEq)]
pub struct Character {
    pub values: Vec<Complex64>,
}

impl Character {
    pub fn new(values: Vec<Complex64>) -> Self {
        Character { values }
    }

    /// The trivial character, constantly one.
    pub fn trivial(m: usize) -> Self {
        Character { values: vec![Complex64::ONE; m] }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Extend to a function on all of `G`, constant on each block.
    pub fn lift(&self, pair: &GelfandPair) -> PointFunction {
        pair.lift(&self.values).expect("character length matches block count")
    }
}

/// The full dual: all characters, ordered deterministically (trivial
/// character first, then ascending lexicographically by values rounded to
/// nine decimals), with their Plancherel weights.
#[derive(Debug, Clone)]
pub struct DualData {
    pub characters: Vec<Character>,
    pub plancherel: Vec<f64>,
}

impl DualData {
    /// Number of dual objects (= number of double cosets).
    pub fn len(&self) -> usize {
        self.characters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.characters.is_empty()
    }
}

/// Fourier coefficients `f̂(φ)`, aligned with the dual's character order.
#[derive(Debug, Clone, PartialEq)]
pub struct FourierCoefficients {
    pub values: Vec<Complex64>,
}

/// Compute the dual of the pair with the default seed.
pub fn compute_dual(pair: &GelfandPair, tol: f64) -> Result<DualData, SpectralError> {
    compute_dual_seeded(pair, tol, DUAL_SEED)
}

/// Compute the dual, drawing the random matrix combination from `seed`.
/// The result is independent of the seed up to numerical noise; the seed
/// only controls degeneracy-breaking.
pub fn compute_dual_seeded(
    pair: &GelfandPair,
    tol: f64,
    seed: u64,
) -> Result<DualData, SpectralError> {
    let residual = pair.commutativity_residual();
    if residual > tol {
        return Err(SpectralError::NotGelfandPair { residual });
    }
    let q = pair.quotient();
    let m = q.order();
    let sqrt_h: Vec<f64> = q.haar_weights().iter().map(|&h| h.sqrt()).collect();

    let mut eigenvectors = None;
    for attempt in 0..MAX_DUAL_RETRIES {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(attempt as u64));
        let mut z = DMatrix::<Complex64>::zeros(m, m);
        for a in 0..m {
            let r: f64 = rng.random_range(-1.0..1.0);
            let s: f64 = rng.random_range(-1.0..1.0);
            for b in 0..m {
                for d in 0..m {
                    // B_a in the Haar-weighted basis and its transpose entry
                    let v = sqrt_h[b] * q.mass(a, b, d) / sqrt_h[d];
                    let vt = sqrt_h[d] * q.mass(a, d, b) / sqrt_h[b];
                    z[(b, d)] += Complex64::new(r * 0.5 * (v + vt), s * 0.5 * (v - vt));
                }
            }
        }
        let eig = SymmetricEigen::new(z);
        let mut order: Vec<usize> = (0..m).collect();
        order.sort_by(|&i, &j| eig.eigenvalues[i].total_cmp(&eig.eigenvalues[j]));
        let collision = order
            .windows(2)
            .any(|w| (eig.eigenvalues[w[1]] - eig.eigenvalues[w[0]]).abs() < EIG_GAP_TOL);
        if collision {
            continue;
        }
        // pull back through S and anchor the neutral-block entry at 1
        let mut chars = Vec::with_capacity(m);
        let mut anchored = true;
        for k in 0..m {
            let col = eig.eigenvectors.column(k);
            let sup = col.iter().map(|v| v.norm()).fold(0.0, f64::max);
            if col[0].norm() <= 1e-10 * sup {
                anchored = false;
                break;
            }
            let denom = col[0] / sqrt_h[0];
            let values = (0..m).map(|b| col[b] / sqrt_h[b] / denom).collect();
            chars.push(Character::new(values));
        }
        if anchored {
            eigenvectors = Some(chars);
            break;
        }
    }
    let mut characters = eigenvectors
        .ok_or(SpectralError::DegenerateSpectrum { retries: MAX_DUAL_RETRIES })?;

    for phi in &characters {
        let report = verify_character(pair, phi, tol);
        if let Some(worst) = report.checks.iter().max_by(|a, b| a.residual.total_cmp(&b.residual))
        {
            if !report.pass() {
                return Err(SpectralError::InconsistentCharacter {
                    name: worst.name.clone(),
                    residual: worst.residual,
                });
            }
        }
    }

    sort_characters(&mut characters);
    let plancherel = plancherel_weights(pair, &characters);
    Ok(DualData { characters, plancherel })
}

/// Trivial character first, then ascending lexicographic order on the
/// value tuples rounded to nine decimals. Stable across runs and seeds.
fn sort_characters(chars: &mut [Character]) {
    fn round9(x: f64) -> f64 {
        let r = (x * 1e9).round() / 1e9;
        if r == 0.0 {
            0.0
        } else {
            r
        }
    }
    chars.sort_by(|u, v| {
        let tu = u.values.iter().map(|c| (round9(c.re), round9(c.im)));
        let tv = v.values.iter().map(|c| (round9(c.re), round9(c.im)));
        for ((ur, ui), (vr, vi)) in tu.zip(tv) {
            match ur.total_cmp(&vr).then(ui.total_cmp(&vi)) {
                std::cmp::Ordering::Equal => continue,
                other => return other,
            }
        }
        std::cmp::Ordering::Equal
    });
    if let Some(pos) = chars.iter().position(|phi| {
        phi.values
            .iter()
            .all(|v| (v - Complex64::ONE).norm() <= 1e-7)
    }) {
        chars[..=pos].rotate_right(1);
    }
}

/// Check the dual-set conditions for a candidate character: constancy on
/// blocks is structural here, so the report covers normalization
/// `φ(e) = 1`, multiplicativity against the quotient convolution, and
/// conjugate symmetry under the involution.
pub fn verify_character(pair: &GelfandPair, phi: &Character, tol: f64) -> ValidationReport {
    let q = pair.quotient();
    let m = q.order();
    let mut report = ValidationReport::new(tol);
    report.push("biinvariance", 0.0, None);

    if phi.values.len() != m {
        // wrong arity can only happen through manual construction
        report.push("normalization", f64::INFINITY, None);
        return report;
    }
    report.push("normalization", (phi.values[0] - Complex64::ONE).norm(), None);

    let mut worst = 0.0f64;
    let mut witness = None;
    for a in 0..m {
        for b in 0..m {
            let mut lhs = Complex64::ZERO;
            for d in 0..m {
                lhs += q.mass(a, b, d) * phi.values[d];
            }
            let r = (lhs - phi.values[a] * phi.values[b]).norm();
            if r > worst {
                worst = r;
                witness = Some(vec![a, b]);
            }
        }
    }
    report.push("multiplicativity", worst, witness);

    let mut worst = 0.0f64;
    let mut witness = None;
    for a in 0..m {
        let r = (phi.values[pair.involute_block(a)] - phi.values[a].conj()).norm();
        if r > worst {
            worst = r;
            witness = Some(vec![a]);
        }
    }
    report.push("conjugation", worst, witness);
    report
}

/// Plancherel weights `π(φ) = (Σ_B H(B) |φ(B)|²)^{-1}`, the reciprocal
/// squared `L²(G)` norms of the characters.
pub fn plancherel_weights(pair: &GelfandPair, characters: &[Character]) -> Vec<f64> {
    let block_haar = pair.block_haar();
    characters
        .iter()
        .map(|phi| {
            let norm_sq: f64 = block_haar
                .iter()
                .zip(&phi.values)
                .map(|(&h, v)| h * v.norm_sqr())
                .sum();
            1.0 / norm_sq
        })
        .collect()
}

fn transform_unchecked(
    pair: &GelfandPair,
    dual: &DualData,
    f: &PointFunction,
) -> FourierCoefficients {
    let base = pair.base();
    let h = base.haar_weights();
    let block_of = &pair.partition().block_of;
    let values = dual
        .characters
        .iter()
        .map(|phi| {
            (0..base.order())
                .map(|x| h[x] * phi.values[block_of[base.involute(x)]] * f.values[x])
                .sum()
        })
        .collect();
    FourierCoefficients { values }
}

/// The spherical Fourier transform `f̂(φ) = Σ_x h(x) φ(x⋄) f(x)`.
///
/// `f` must be K-bi-invariant (up to a small relative residual); use
/// [`fourier_projected`] to average arbitrary functions first.
pub fn fourier(
    pair: &GelfandPair,
    dual: &DualData,
    f: &PointFunction,
) -> Result<FourierCoefficients, SpectralError> {
    let residual = pair.biinvariance_residual(f)?;
    if residual > BIINVARIANCE_RTOL * f.sup_norm().max(1.0) {
        return Err(SpectralError::NotBiInvariant { residual });
    }
    Ok(transform_unchecked(pair, dual, f))
}

/// Project `f` onto the bi-invariant functions, then transform.
pub fn fourier_projected(
    pair: &GelfandPair,
    dual: &DualData,
    f: &PointFunction,
) -> Result<FourierCoefficients, SpectralError> {
    let projected = pair.project(f)?;
    Ok(transform_unchecked(pair, dual, &projected))
}

/// The inverse transform `f(x) = Σ_φ π(φ) φ(x) f̂(φ)`, lifted to `G`.
pub fn inverse_fourier(
    pair: &GelfandPair,
    dual: &DualData,
    coeffs: &FourierCoefficients,
) -> Result<PointFunction, SpectralError> {
    if coeffs.values.len() != dual.len() {
        return Err(SpectralError::LengthMismatch { got: coeffs.values.len(), want: dual.len() });
    }
    let block_values: Vec<Complex64> = (0..dual.len())
        .map(|b| {
            dual.characters
                .iter()
                .zip(&dual.plancherel)
                .zip(&coeffs.values)
                .map(|((phi, &pi), c)| pi * phi.values[b] * c)
                .sum()
        })
        .collect();
    Ok(pair.lift(&block_values)?)
}

/// Relative defect of the Plancherel identity for `f`:
/// `|Σ_x h(x)|f(x)|² − Σ_φ π(φ)|f̂(φ)|²| / max(1, Σ_x h(x)|f(x)|²)`.
pub fn plancherel_residual(pair: &GelfandPair, dual: &DualData, f: &PointFunction) -> f64 {
    let lhs: f64 = pair
        .base()
        .haar_weights()
        .iter()
        .zip(&f.values)
        .map(|(&h, v)| h * v.norm_sqr())
        .sum();
    let coeffs = transform_unchecked(pair, dual, f);
    let rhs: f64 = dual
        .plancherel
        .iter()
        .zip(&coeffs.values)
        .map(|(&pi, c)| pi * c.norm_sqr())
        .sum();
    (lhs - rhs).abs() / lhs.max(1.0)
}

/// Largest character magnitude `M = max_{φ,B} |φ(B)|`; at most 1 for a
/// true hypergroup dual, and exactly 1 at the neutral block.
pub fn max_character_abs(dual: &DualData) -> f64 {
    dual.characters
        .iter()
        .flat_map(|phi| phi.values.iter())
        .map(|v| v.norm())
        .fold(0.0, f64::max)
}

/// Largest character oscillation `ε = max_{φ} max_{B,B'} |φ(B) − φ(B')|`.
pub fn character_oscillation(dual: &DualData) -> f64 {
    dual.characters
        .iter()
        .map(|phi| {
            let mut worst = 0.0f64;
            for (i, a) in phi.values.iter().enumerate() {
                for b in &phi.values[i + 1..] {
                    worst = worst.max((a - b).norm());
                }
            }
            worst
        })
        .fold(0.0, f64::max)
}
