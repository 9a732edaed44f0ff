//! Finite hypergroups as structure-constant tensors.
//!
//! A finite hypergroup on indices `0..n` is given by a tensor `c[x][y][z]`
//! holding the mass that the convolution `δ_x ∗ δ_y` places on `z`, an
//! involution `x ↦ x⋄`, a neutral element `e`, and left Haar weights
//! `h(x) > 0` normalized to `h(e) = 1`. Groups are the special case where
//! every `δ_x ∗ δ_y` is again a point mass.
//!
//! Six axioms tie the data together:
//!
//! 1. probability — every `c[x][y][·]` is a probability vector;
//! 2. neutrality — `δ_x ∗ δ_e = δ_e ∗ δ_x = δ_x`;
//! 3. involution — `inv` is an involutive permutation with
//!    `c[x][y][z] = c[y⋄][x⋄][z⋄]`;
//! 4. support symmetry — `z ∈ supp(δ_x ∗ δ_y) ⟺ x ∈ supp(δ_z ∗ δ_{y⋄})`;
//! 5. associativity — `(δ_w ∗ δ_x) ∗ δ_y = δ_w ∗ (δ_x ∗ δ_y)`;
//! 6. Haar invariance — `Σ_x h(x) c[y][x][z] = h(z)`.
//!
//! [`HypergroupData`] is the raw, unvalidated form; [`FiniteHypergroup`] is
//! produced only after the axioms pass, so downstream code may assume a
//! valid structure throughout.

use num_complex::Complex64;
use thiserror::Error;

use crate::report::ValidationReport;

mod haar;
mod validate;

pub use haar::HaarError;

/// Errors from constructing or operating on a hypergroup.
///
/// Structural problems (wrong dimensions, bad indices) are distinct from
/// axiom failures, which carry the full residual report.
#[derive(Debug, Error)]
pub enum HypergroupError {
    #[error("tensor has {got} entries, expected n^3 = {want}")]
    TensorSize { got: usize, want: usize },
    #[error("involution must be a permutation of 0..{n}")]
    BadInvolution { n: usize },
    #[error("identity index {e} out of range for {n} elements")]
    BadIdentity { e: usize, n: usize },
    #[error("labels must be distinct; `{label}` repeats")]
    DuplicateLabel { label: String },
    #[error("expected {want} labels, got {got}")]
    LabelCount { got: usize, want: usize },
    #[error("haar weight list has {got} entries, expected {want}")]
    HaarLen { got: usize, want: usize },
    #[error("element index {index} out of range for {n} elements")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("vector length {got} does not match hypergroup order {want}")]
    LengthMismatch { got: usize, want: usize },
    #[error("subset is empty")]
    EmptySubset,
    #[error("hypergroup axioms fail: {}", .0.failed_names().join(", "))]
    AxiomFailure(Box<ValidationReport>),
    #[error(transparent)]
    Haar(#[from] HaarError),
}

/// A complex-valued function on the elements of a hypergroup.
#[derive(Debug, Clone, PartialEq)]
pub struct PointFunction {
    pub values: Vec<Complex64>,
}

impl PointFunction {
    pub fn new(values: Vec<Complex64>) -> Self {
        PointFunction { values }
    }

    pub fn zero(n: usize) -> Self {
        PointFunction { values: vec![Complex64::ZERO; n] }
    }

    pub fn constant(n: usize, v: Complex64) -> Self {
        PointFunction { values: vec![v; n] }
    }

    /// Indicator of a single element.
    pub fn indicator(n: usize, x: usize) -> Self {
        let mut values = vec![Complex64::ZERO; n];
        values[x] = Complex64::ONE;
        PointFunction { values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Largest absolute value, `‖f‖_∞`.
    pub fn sup_norm(&self) -> f64 {
        self.values.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    /// Largest pairwise oscillation `max_{x,a} |f(x) − f(a)|`.
    pub fn max_oscillation(&self) -> f64 {
        let mut worst = 0.0f64;
        for (i, a) in self.values.iter().enumerate() {
            for b in &self.values[i + 1..] {
                worst = worst.max((a - b).norm());
            }
        }
        worst
    }
}

/// A finitely supported complex measure `μ = Σ_x μ_x δ_x`.
#[derive(Debug, Clone, PartialEq)]
pub struct Measure {
    pub masses: Vec<Complex64>,
}

impl Measure {
    pub fn new(masses: Vec<Complex64>) -> Self {
        Measure { masses }
    }

    pub fn zero(n: usize) -> Self {
        Measure { masses: vec![Complex64::ZERO; n] }
    }

    /// The point mass `δ_x`.
    pub fn point(n: usize, x: usize) -> Self {
        let mut masses = vec![Complex64::ZERO; n];
        masses[x] = Complex64::ONE;
        Measure { masses }
    }

    pub fn len(&self) -> usize {
        self.masses.len()
    }

    pub fn is_empty(&self) -> bool {
        self.masses.is_empty()
    }

    /// Integrate a function against this measure, `μ(f) = Σ_x μ_x f(x)`.
    pub fn integrate(&self, f: &PointFunction) -> Complex64 {
        self.masses.iter().zip(&f.values).map(|(m, v)| m * v).sum()
    }

    /// Pushforward under the involution, `μ^⋄`.
    pub fn involute(&self, inv: &[usize]) -> Measure {
        let mut masses = vec![Complex64::ZERO; self.masses.len()];
        for (x, m) in self.masses.iter().enumerate() {
            masses[inv[x]] = *m;
        }
        Measure { masses }
    }
}

/// Raw hypergroup data prior to axiom validation.
///
/// `haar` may be omitted, in which case [`HypergroupData::build`] solves the
/// left-invariance system for the weights; when supplied, the weights are
/// verified rather than trusted.
#[derive(Debug, Clone)]
pub struct HypergroupData {
    pub labels: Vec<String>,
    /// Flat tensor, `c[x][y][z]` at index `(x*n + y)*n + z`.
    pub c: Vec<f64>,
    pub inv: Vec<usize>,
    pub e: usize,
    pub haar: Option<Vec<f64>>,
}

impl HypergroupData {
    /// Structural sanity: dimensions, permutation, index ranges.
    ///
    /// These are errors, not axiom failures; a report is only meaningful
    /// for structurally well-formed data.
    pub fn check_structure(&self) -> Result<(), HypergroupError> {
        let n = self.labels.len();
        if self.c.len() != n * n * n {
            return Err(HypergroupError::TensorSize { got: self.c.len(), want: n * n * n });
        }
        if self.inv.len() != n || !is_permutation(&self.inv) {
            return Err(HypergroupError::BadInvolution { n });
        }
        if self.e >= n {
            return Err(HypergroupError::BadIdentity { e: self.e, n });
        }
        for (i, a) in self.labels.iter().enumerate() {
            if self.labels[..i].contains(a) {
                return Err(HypergroupError::DuplicateLabel { label: a.clone() });
            }
        }
        if let Some(h) = &self.haar {
            if h.len() != n {
                return Err(HypergroupError::HaarLen { got: h.len(), want: n });
            }
        }
        Ok(())
    }

    /// Run all axiom checks at tolerance `tol` and report residuals.
    ///
    /// Haar invariance is only checked when weights are present.
    pub fn validate_axioms(&self, tol: f64) -> Result<ValidationReport, HypergroupError> {
        self.check_structure()?;
        Ok(validate::run_axiom_checks(self, tol))
    }

    /// Solve the left-invariance system for Haar weights without touching
    /// any stored weights. Meaningful once the other axioms hold.
    pub fn solve_haar(&self) -> Result<Vec<f64>, HaarError> {
        haar::solve_invariant_weights(&self.c, self.labels.len(), self.e)
    }

    /// Validate and, on pass, promote to a usable [`FiniteHypergroup`].
    ///
    /// Missing Haar weights are computed from the invariance system.
    pub fn build(mut self, tol: f64) -> Result<FiniteHypergroup, HypergroupError> {
        let report = self.validate_axioms(tol)?;
        if !report.pass() {
            return Err(HypergroupError::AxiomFailure(Box::new(report)));
        }
        if self.haar.is_none() {
            let n = self.labels.len();
            self.haar = Some(haar::solve_invariant_weights(&self.c, n, self.e)?);
        }
        Ok(FiniteHypergroup {
            n: self.labels.len(),
            labels: self.labels,
            c: self.c,
            inv: self.inv,
            e: self.e,
            haar: self.haar.unwrap(),
        })
    }
}

/// A validated finite hypergroup.
///
/// Immutable after construction; all operations are pure, so values may be
/// shared freely across threads.
#[derive(Debug, Clone, PartialEq)]
pub struct FiniteHypergroup {
    n: usize,
    labels: Vec<String>,
    c: Vec<f64>,
    inv: Vec<usize>,
    e: usize,
    haar: Vec<f64>,
}

impl FiniteHypergroup {
    /// Validate raw parts at tolerance `tol` and construct.
    pub fn new(
        labels: Vec<String>,
        c: Vec<f64>,
        inv: Vec<usize>,
        e: usize,
        haar: Option<Vec<f64>>,
        tol: f64,
    ) -> Result<Self, HypergroupError> {
        HypergroupData { labels, c, inv, e, haar }.build(tol)
    }

    /// Number of elements.
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn identity(&self) -> usize {
        self.e
    }

    pub fn involution(&self) -> &[usize] {
        &self.inv
    }

    pub fn involute(&self, x: usize) -> usize {
        self.inv[x]
    }

    pub fn haar_weights(&self) -> &[f64] {
        &self.haar
    }

    /// Total Haar mass `Σ_x h(x)`.
    pub fn haar_total(&self) -> f64 {
        self.haar.iter().sum()
    }

    #[inline]
    fn idx(&self, x: usize, y: usize, z: usize) -> usize {
        (x * self.n + y) * self.n + z
    }

    /// Structure constant `c[x][y][z] = (δ_x ∗ δ_y)({z})`.
    #[inline]
    pub fn mass(&self, x: usize, y: usize, z: usize) -> f64 {
        self.c[self.idx(x, y, z)]
    }

    /// The probability vector `(δ_x ∗ δ_y)(·)` as a slice over `z`.
    #[inline]
    pub fn row(&self, x: usize, y: usize) -> &[f64] {
        let base = (x * self.n + y) * self.n;
        &self.c[base..base + self.n]
    }

    pub fn tensor(&self) -> &[f64] {
        &self.c
    }

    /// Raw parts, for serialization.
    pub fn to_data(&self) -> HypergroupData {
        HypergroupData {
            labels: self.labels.clone(),
            c: self.c.clone(),
            inv: self.inv.clone(),
            e: self.e,
            haar: Some(self.haar.clone()),
        }
    }

    /// Re-run the axiom checks (including Haar invariance) at `tol`.
    pub fn validate_axioms(&self, tol: f64) -> ValidationReport {
        validate::run_axiom_checks(
            &HypergroupData {
                labels: self.labels.clone(),
                c: self.c.clone(),
                inv: self.inv.clone(),
                e: self.e,
                haar: Some(self.haar.clone()),
            },
            tol,
        )
    }

    fn check_index(&self, x: usize) -> Result<(), HypergroupError> {
        if x >= self.n {
            Err(HypergroupError::IndexOutOfRange { index: x, n: self.n })
        } else {
            Ok(())
        }
    }

    fn check_len(&self, got: usize) -> Result<(), HypergroupError> {
        if got != self.n {
            Err(HypergroupError::LengthMismatch { got, want: self.n })
        } else {
            Ok(())
        }
    }

    /// `δ_x ∗ δ_y` as a measure.
    pub fn convolve_points(&self, x: usize, y: usize) -> Result<Measure, HypergroupError> {
        self.check_index(x)?;
        self.check_index(y)?;
        Ok(Measure {
            masses: self.row(x, y).iter().map(|&m| Complex64::new(m, 0.0)).collect(),
        })
    }

    /// Convolution of measures, `(μ ∗ ν)_z = Σ_{x,y} μ_x ν_y c[x][y][z]`.
    pub fn convolve_measures(&self, mu: &Measure, nu: &Measure) -> Result<Measure, HypergroupError> {
        self.check_len(mu.len())?;
        self.check_len(nu.len())?;
        let mut out = vec![Complex64::ZERO; self.n];
        for (x, mx) in mu.masses.iter().enumerate() {
            if *mx == Complex64::ZERO {
                continue;
            }
            for (y, ny) in nu.masses.iter().enumerate() {
                let w = mx * ny;
                if w == Complex64::ZERO {
                    continue;
                }
                for (z, o) in out.iter_mut().enumerate() {
                    *o += w * self.mass(x, y, z);
                }
            }
        }
        Ok(Measure { masses: out })
    }

    /// The translated value `f(x ∗ y) = (δ_x ∗ δ_y)(f) = Σ_z c[x][y][z] f(z)`.
    pub fn translate_value(
        &self,
        f: &PointFunction,
        x: usize,
        y: usize,
    ) -> Result<Complex64, HypergroupError> {
        self.check_index(x)?;
        self.check_index(y)?;
        self.check_len(f.len())?;
        Ok(self
            .row(x, y)
            .iter()
            .zip(&f.values)
            .map(|(&m, v)| m * v)
            .sum())
    }

    /// The triple translate `f(k1 ∗ x ∗ k2) = (δ_{k1} ∗ δ_x ∗ δ_{k2})(f)`,
    /// evaluated by two tensor contractions left to right; associativity
    /// makes the grouping irrelevant.
    pub fn translate3_value(
        &self,
        f: &PointFunction,
        k1: usize,
        x: usize,
        k2: usize,
    ) -> Result<Complex64, HypergroupError> {
        self.check_index(k1)?;
        self.check_index(x)?;
        self.check_index(k2)?;
        self.check_len(f.len())?;
        // (δ_k1 ∗ δ_x) first, then integrate f against (· ∗ δ_k2).
        let mid = self.row(k1, x);
        let mut acc = Complex64::ZERO;
        for (u, &m) in mid.iter().enumerate() {
            if m == 0.0 {
                continue;
            }
            let inner: Complex64 = self
                .row(u, k2)
                .iter()
                .zip(&f.values)
                .map(|(&w, v)| w * v)
                .sum();
            acc += m * inner;
        }
        Ok(acc)
    }

    /// Haar-weighted convolution of functions:
    /// `(f ∗ g)(z) = Σ_{x,y} h(x) h(y) f(x) g(y) c[x][y][z] / h(z)`.
    ///
    /// This is the function-level convolution for which the transform turns
    /// products into pointwise products on bi-invariant inputs.
    pub fn haar_convolution(
        &self,
        f: &PointFunction,
        g: &PointFunction,
    ) -> Result<PointFunction, HypergroupError> {
        self.check_len(f.len())?;
        self.check_len(g.len())?;
        let mut out = vec![Complex64::ZERO; self.n];
        for x in 0..self.n {
            let fx = self.haar[x] * f.values[x];
            if fx == Complex64::ZERO {
                continue;
            }
            for y in 0..self.n {
                let w = fx * (self.haar[y] * g.values[y]);
                if w == Complex64::ZERO {
                    continue;
                }
                for (z, o) in out.iter_mut().enumerate() {
                    *o += w * self.mass(x, y, z);
                }
            }
        }
        for (z, o) in out.iter_mut().enumerate() {
            *o /= self.haar[z];
        }
        Ok(PointFunction { values: out })
    }

    /// Integral against the Haar measure, `∫ f dh = Σ_x h(x) f(x)`.
    pub fn haar_integral(&self, f: &PointFunction) -> Complex64 {
        self.haar
            .iter()
            .zip(&f.values)
            .map(|(&h, v)| h * v)
            .sum()
    }

    /// `L²(h)` inner product `Σ_x h(x) f(x) conj(g(x))`.
    pub fn l2_inner(&self, f: &PointFunction, g: &PointFunction) -> Complex64 {
        self.haar
            .iter()
            .zip(f.values.iter().zip(&g.values))
            .map(|(&h, (a, b))| h * a * b.conj())
            .sum()
    }

    /// `L²(h)` norm.
    pub fn l2_norm(&self, f: &PointFunction) -> f64 {
        self.haar
            .iter()
            .zip(&f.values)
            .map(|(&h, v)| h * v.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// Support of `δ_x ∗ δ_y` above the mass threshold `eps`.
    pub fn support(&self, x: usize, y: usize, eps: f64) -> Vec<usize> {
        self.row(x, y)
            .iter()
            .enumerate()
            .filter(|(_, &m)| m > eps)
            .map(|(z, _)| z)
            .collect()
    }

    /// True iff `s` is nonempty, closed under the involution, and closed
    /// under convolution supports.
    pub fn is_subhypergroup(&self, s: &[usize]) -> Result<bool, HypergroupError> {
        if s.is_empty() {
            return Err(HypergroupError::EmptySubset);
        }
        for &x in s {
            self.check_index(x)?;
        }
        let member = {
            let mut m = vec![false; self.n];
            for &x in s {
                m[x] = true;
            }
            m
        };
        for &x in s {
            if !member[self.inv[x]] {
                return Ok(false);
            }
            for &y in s {
                for z in 0..self.n {
                    if self.mass(x, y, z) > 0.0 && !member[z] {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// Solve the left-invariance system for the Haar weights from scratch,
    /// ignoring the stored weights.
    pub fn recompute_haar(&self) -> Result<Vec<f64>, HaarError> {
        haar::solve_invariant_weights(&self.c, self.n, self.e)
    }

    /// Worst violation of left invariance for a candidate weight vector.
    pub fn haar_residual(&self, weights: &[f64]) -> f64 {
        haar::invariance_residual(&self.c, self.n, weights)
    }
}

fn is_permutation(p: &[usize]) -> bool {
    let n = p.len();
    let mut seen = vec![false; n];
    for &v in p {
        if v >= n || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    true
}
