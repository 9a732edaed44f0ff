//! Left Haar weights via the invariance system.
//!
//! The weights solve `Σ_x h(x) c[y][x][z] = h(z)` for every `y, z`, with
//! the normalization `h(e) = 1`. We stack all `n²` equations into one
//! homogeneous system and take its null space by SVD; a valid hypergroup
//! gives a one-dimensional, strictly positive solution line.
//!
//! Canonical examples have small rational weights (class sizes, binomial
//! coefficients). After solving we attempt to snap each weight to a nearby
//! small rational and keep the snapped vector only if it satisfies the
//! invariance system at least to the verification tolerance; otherwise the
//! floating-point solution is returned unchanged.

use nalgebra::DMatrix;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HaarError {
    /// The system has no strictly positive solution.
    #[error("no strictly positive invariant weight vector (not unimodular, or invalid input)")]
    NotUnimodularOrInvalid,
    /// The solution space is not one-dimensional.
    #[error("invariant weight vector is not unique (null space dimension {dim})")]
    Ambiguous { dim: usize },
}

const RANK_TOL: f64 = 1e-10;
const SNAP_MAX_DEN: u64 = 1 << 16;
// Snap candidates must sit within a few hundred ulps of the float solution;
// anything looser would start "recovering" rationals that were never there.
const SNAP_REL_TOL: f64 = 1e-11;
const SNAP_VERIFY_TOL: f64 = 1e-12;

/// Solve the stacked invariance system for the tensor `c` (flat, n³).
pub fn solve_invariant_weights(c: &[f64], n: usize, e: usize) -> Result<Vec<f64>, HaarError> {
    let at = |x: usize, y: usize, z: usize| c[(x * n + y) * n + z];

    // Row (y, z): Σ_x (c[y][x][z] − [x = z]) h(x) = 0.
    let mut m = DMatrix::<f64>::zeros(n * n, n);
    for y in 0..n {
        for z in 0..n {
            for x in 0..n {
                let mut v = at(y, x, z);
                if x == z {
                    v -= 1.0;
                }
                m[(y * n + z, x)] = v;
            }
        }
    }

    let svd = m.svd(false, true);
    let v_t = svd.v_t.as_ref().expect("requested V^T");
    let smax = svd.singular_values.iter().cloned().fold(0.0, f64::max);
    let thresh = RANK_TOL * smax.max(1.0);
    let null_indices: Vec<usize> = svd
        .singular_values
        .iter()
        .enumerate()
        .filter(|(_, &s)| s <= thresh)
        .map(|(i, _)| i)
        .collect();
    match null_indices.len() {
        0 => return Err(HaarError::NotUnimodularOrInvalid),
        1 => {}
        dim => return Err(HaarError::Ambiguous { dim }),
    }

    let row = v_t.row(null_indices[0]);
    let scale = row[e];
    let sup = row.iter().map(|v| v.abs()).fold(0.0, f64::max);
    if scale.abs() <= 1e-12 * sup {
        return Err(HaarError::NotUnimodularOrInvalid);
    }
    let h: Vec<f64> = row.iter().map(|v| v / scale).collect();
    if h.iter().any(|&w| w <= 0.0) {
        return Err(HaarError::NotUnimodularOrInvalid);
    }

    // Prefer an exactly rational solution when one verifiably exists.
    if let Some(snapped) = snap_all(&h) {
        if invariance_residual(c, n, &snapped)
            <= SNAP_VERIFY_TOL * snapped.iter().cloned().fold(1.0, f64::max)
        {
            return Ok(snapped);
        }
    }
    Ok(h)
}

/// Worst violation of `Σ_x h(x) c[y][x][z] = h(z)`.
pub fn invariance_residual(c: &[f64], n: usize, h: &[f64]) -> f64 {
    let at = |x: usize, y: usize, z: usize| c[(x * n + y) * n + z];
    let mut worst = 0.0f64;
    for y in 0..n {
        for z in 0..n {
            let lhs: f64 = (0..n).map(|x| h[x] * at(y, x, z)).sum();
            worst = worst.max((lhs - h[z]).abs());
        }
    }
    worst
}

fn snap_all(h: &[f64]) -> Option<Vec<f64>> {
    h.iter().map(|&w| snap_rational(w)).collect()
}

/// Nearest small rational by continued fractions, if any convergent with a
/// bounded denominator lies within the relative tolerance.
fn snap_rational(x: f64) -> Option<f64> {
    if !x.is_finite() {
        return None;
    }
    let tol = SNAP_REL_TOL * x.abs().max(1.0);
    let (mut p0, mut q0, mut p1, mut q1) = (1i64, 0i64, x.floor() as i64, 1i64);
    let mut frac = x - x.floor();
    for _ in 0..64 {
        let approx = p1 as f64 / q1 as f64;
        if (approx - x).abs() <= tol {
            return Some(approx);
        }
        if frac.abs() < f64::EPSILON {
            break;
        }
        let r = 1.0 / frac;
        let a = r.floor();
        frac = r - a;
        let a = a as i64;
        let p2 = a.checked_mul(p1)?.checked_add(p0)?;
        let q2 = a.checked_mul(q1)?.checked_add(q0)?;
        if q2 as u64 > SNAP_MAX_DEN {
            break;
        }
        (p0, q0, p1, q1) = (p1, q1, p2, q2);
    }
    None
}
