//! Double cosets, bi-invariant projection, and the quotient hypergroup.
//!
//! For a subhypergroup `K` of `G`, the double coset of `x` is the union of
//! the supports of `δ_{k1} ∗ δ_x ∗ δ_{k2}` over `k1, k2 ∈ K`. The cosets
//! partition `G`; functions constant on them are the K-bi-invariant
//! functions, the image of the averaging projection
//! `f^♮(x) = ∫_K ∫_K f(k1 ∗ x ∗ k2) dk1 dk2` against the normalized Haar
//! measure of `K`.
//!
//! Convolving the normalized Haar-weighted block measures against each
//! other closes on blocks and yields a hypergroup structure on the coset
//! space itself — the finite realization of the algebra of bi-invariant
//! measures. The pair `(G, K)` is a Gelfand pair exactly when that quotient
//! is commutative.

use num_complex::Complex64;
use thiserror::Error;

use crate::hypergroup::{FiniteHypergroup, HypergroupData, HypergroupError, PointFunction};

/// Masses at or below this threshold are treated as zero when collecting
/// convolution supports.
const SUPPORT_EPS: f64 = 1e-12;

#[derive(Debug, Error)]
pub enum GelfandError {
    #[error("K = {0:?} is not a subhypergroup")]
    NotSubhypergroup(Vec<usize>),
    #[error("double cosets of blocks {a} and {b} overlap without being equal")]
    NotPartition { a: usize, b: usize },
    #[error("involution does not permute the double cosets (element {x})")]
    InvolutionMismatch { x: usize },
    #[error("quotient fails hypergroup axioms on {failed:?}; input is inconsistent")]
    QuotientInvalid { failed: Vec<String> },
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error(transparent)]
    Hypergroup(#[from] HypergroupError),
}

/// The partition of `{0..n−1}` into double cosets `KxK`.
///
/// Block 0 is always the coset of the neutral element, which equals `K`
/// itself; the remaining blocks are ordered by their lowest member, and
/// each block's representative is that lowest member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoubleCosetPartition {
    pub blocks: Vec<Vec<usize>>,
    pub representatives: Vec<usize>,
    pub block_of: Vec<usize>,
}

impl DoubleCosetPartition {
    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }
}

/// Compute the double-coset partition of `base` with respect to `k`.
///
/// Each block is grown by closure iteration: repeatedly replace a set `S`
/// by the union of supports of `δ_{k1} ∗ δ_y ∗ δ_{k2}` over `y ∈ S` until
/// stable. The blocks are verified to be pairwise equal-or-disjoint.
pub fn double_cosets(
    base: &FiniteHypergroup,
    k: &[usize],
) -> Result<DoubleCosetPartition, GelfandError> {
    if !base.is_subhypergroup(k)? {
        return Err(GelfandError::NotSubhypergroup(k.to_vec()));
    }
    let n = base.order();
    let coset_of = |x: usize| -> Vec<usize> {
        let mut member = vec![false; n];
        member[x] = true;
        loop {
            let mut grew = false;
            let current: Vec<usize> =
                (0..n).filter(|&y| member[y]).collect();
            for &y in &current {
                for &k1 in k {
                    for &k2 in k {
                        // supp(δ_k1 ∗ δ_y ∗ δ_k2) via two contractions
                        for (u, &mu) in base.row(k1, y).iter().enumerate() {
                            if mu <= SUPPORT_EPS {
                                continue;
                            }
                            for (w, &mw) in base.row(u, k2).iter().enumerate() {
                                if mw > SUPPORT_EPS && !member[w] {
                                    member[w] = true;
                                    grew = true;
                                }
                            }
                        }
                    }
                }
            }
            if !grew {
                break;
            }
        }
        (0..n).filter(|&y| member[y]).collect()
    };

    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut block_of = vec![usize::MAX; n];
    for x in 0..n {
        if block_of[x] != usize::MAX {
            continue;
        }
        let members = coset_of(x);
        for &m in &members {
            if block_of[m] != usize::MAX {
                return Err(GelfandError::NotPartition { a: block_of[m], b: blocks.len() });
            }
            block_of[m] = blocks.len();
        }
        blocks.push(members);
    }

    // neutral block first, the rest stay ordered by lowest member
    let e_block = block_of[base.identity()];
    if e_block != 0 {
        let moved = blocks.remove(e_block);
        blocks.insert(0, moved);
        for (idx, members) in blocks.iter().enumerate() {
            for &m in members {
                block_of[m] = idx;
            }
        }
    }
    let representatives = blocks.iter().map(|b| b[0]).collect();
    Ok(DoubleCosetPartition { blocks, representatives, block_of })
}

/// A hypergroup together with a compact (here: any) subhypergroup, its
/// double-coset partition, and the quotient hypergroup on the blocks.
#[derive(Debug, Clone)]
pub struct GelfandPair {
    base: FiniteHypergroup,
    k: Vec<usize>,
    omega: Vec<f64>,
    partition: DoubleCosetPartition,
    quotient: FiniteHypergroup,
}

impl GelfandPair {
    /// Validate `k`, partition `base` into double cosets, and build the
    /// quotient hypergroup; `tol` governs the quotient's axiom check.
    pub fn new(
        base: FiniteHypergroup,
        k: &[usize],
        tol: f64,
    ) -> Result<Self, GelfandError> {
        let mut k: Vec<usize> = k.to_vec();
        k.sort_unstable();
        k.dedup();
        let partition = double_cosets(&base, &k)?;
        let k_total: f64 = k.iter().map(|&x| base.haar_weights()[x]).sum();
        let omega = k.iter().map(|&x| base.haar_weights()[x] / k_total).collect();
        let quotient = build_quotient(&base, &partition, tol)?;
        Ok(GelfandPair { base, k, omega, partition, quotient })
    }

    /// Construct with `k` given by element labels.
    pub fn from_labels(
        base: FiniteHypergroup,
        labels: &[String],
        tol: f64,
    ) -> Result<Self, GelfandError> {
        let mut k = Vec::with_capacity(labels.len());
        for l in labels {
            k.push(
                base.index_of(l)
                    .ok_or_else(|| GelfandError::UnknownLabel(l.clone()))?,
            );
        }
        GelfandPair::new(base, &k, tol)
    }

    pub fn base(&self) -> &FiniteHypergroup {
        &self.base
    }

    pub fn subhypergroup(&self) -> &[usize] {
        &self.k
    }

    /// Normalized Haar weights of `K`, aligned with [`Self::subhypergroup`].
    pub fn k_weights(&self) -> &[f64] {
        &self.omega
    }

    pub fn partition(&self) -> &DoubleCosetPartition {
        &self.partition
    }

    pub fn quotient(&self) -> &FiniteHypergroup {
        &self.quotient
    }

    pub fn block_count(&self) -> usize {
        self.partition.blocks.len()
    }

    /// Summed base Haar weight per block, `H(B) = Σ_{x∈B} h(x)`.
    pub fn block_haar(&self) -> Vec<f64> {
        self.partition
            .blocks
            .iter()
            .map(|b| b.iter().map(|&x| self.base.haar_weights()[x]).sum())
            .collect()
    }

    /// Worst non-commutativity of the quotient convolution.
    pub fn commutativity_residual(&self) -> f64 {
        let q = &self.quotient;
        let m = q.order();
        let mut worst = 0.0f64;
        for a in 0..m {
            for b in 0..m {
                for d in 0..m {
                    worst = worst.max((q.mass(a, b, d) - q.mass(b, a, d)).abs());
                }
            }
        }
        worst
    }

    /// Is `(G, K)` a Gelfand pair, i.e. is the bi-invariant convolution
    /// algebra commutative?
    pub fn is_gelfand(&self, tol: f64) -> bool {
        self.commutativity_residual() <= tol
    }

    /// The bi-invariant averaging `f^♮(x) = Σ_{k1,k2} ω(k1) ω(k2) f(k1 ∗ x ∗ k2)`.
    pub fn project(&self, f: &PointFunction) -> Result<PointFunction, GelfandError> {
        let n = self.base.order();
        let mut out = vec![Complex64::ZERO; n];
        for (x, o) in out.iter_mut().enumerate() {
            let mut acc = Complex64::ZERO;
            for (i, &k1) in self.k.iter().enumerate() {
                for (j, &k2) in self.k.iter().enumerate() {
                    let w = self.omega[i] * self.omega[j];
                    acc += w * self.base.translate3_value(f, k1, x, k2)?;
                }
            }
            *o = acc;
        }
        Ok(PointFunction::new(out))
    }

    /// Worst deviation of `f` from constancy on the double cosets.
    pub fn biinvariance_residual(&self, f: &PointFunction) -> Result<f64, GelfandError> {
        if f.len() != self.base.order() {
            return Err(HypergroupError::LengthMismatch {
                got: f.len(),
                want: self.base.order(),
            }
            .into());
        }
        let mut worst = 0.0f64;
        for block in &self.partition.blocks {
            let rep = f.values[block[0]];
            for &x in block {
                worst = worst.max((f.values[x] - rep).norm());
            }
        }
        Ok(worst)
    }

    /// Values of a bi-invariant function on block representatives.
    pub fn restrict(&self, f: &PointFunction) -> Result<Vec<Complex64>, GelfandError> {
        if f.len() != self.base.order() {
            return Err(HypergroupError::LengthMismatch {
                got: f.len(),
                want: self.base.order(),
            }
            .into());
        }
        Ok(self
            .partition
            .representatives
            .iter()
            .map(|&r| f.values[r])
            .collect())
    }

    /// Extend block values to a function on `G`, constant per coset.
    pub fn lift(&self, block_values: &[Complex64]) -> Result<PointFunction, GelfandError> {
        if block_values.len() != self.block_count() {
            return Err(HypergroupError::LengthMismatch {
                got: block_values.len(),
                want: self.block_count(),
            }
            .into());
        }
        let values = self
            .partition
            .block_of
            .iter()
            .map(|&b| block_values[b])
            .collect();
        Ok(PointFunction::new(values))
    }

    /// Image of block `a` under the involution of the base.
    pub fn involute_block(&self, a: usize) -> usize {
        let rep = self.partition.representatives[a];
        self.partition.block_of[self.base.involute(rep)]
    }
}

/// Quotient convolution: `c_q[a][b][d]` is the mass the convolution of the
/// normalized Haar-weighted block measures `ω_a ∗ ω_b` assigns to block `d`.
/// Quotient Haar weights are recomputed from the invariance system rather
/// than inherited.
fn build_quotient(
    base: &FiniteHypergroup,
    partition: &DoubleCosetPartition,
    tol: f64,
) -> Result<FiniteHypergroup, GelfandError> {
    let m = partition.blocks.len();
    let h = base.haar_weights();
    let block_mass: Vec<f64> = partition
        .blocks
        .iter()
        .map(|b| b.iter().map(|&x| h[x]).sum())
        .collect();

    let mut c = vec![0.0; m * m * m];
    for (a, block_a) in partition.blocks.iter().enumerate() {
        for (b, block_b) in partition.blocks.iter().enumerate() {
            let base_idx = (a * m + b) * m;
            for &x in block_a {
                for &y in block_b {
                    let w = (h[x] / block_mass[a]) * (h[y] / block_mass[b]);
                    for (z, &mass) in base.row(x, y).iter().enumerate() {
                        if mass > 0.0 {
                            c[base_idx + partition.block_of[z]] += w * mass;
                        }
                    }
                }
            }
        }
    }

    let mut inv = vec![0usize; m];
    for (a, members) in partition.blocks.iter().enumerate() {
        let target = partition.block_of[base.involute(members[0])];
        for &x in members {
            if partition.block_of[base.involute(x)] != target {
                return Err(GelfandError::InvolutionMismatch { x });
            }
        }
        inv[a] = target;
    }

    let labels = partition
        .representatives
        .iter()
        .map(|&r| base.label(r).to_string())
        .collect();
    let data = HypergroupData { labels, c, inv, e: 0, haar: None };
    data.build(tol).map_err(|err| match err {
        HypergroupError::AxiomFailure(report) => GelfandError::QuotientInvalid {
            failed: report.failed_names().iter().map(|s| s.to_string()).collect(),
        },
        other => GelfandError::Hypergroup(other),
    })
}
