//! Harmonic analysis on finite hypergroups and hypergroup Gelfand pairs.
//!
//! A finite hypergroup generalizes a finite group: the convolution of two
//! point masses is a probability measure rather than another point mass.
//! The complete data is a structure-constant tensor `c[x][y][z]` giving the
//! mass of `δ_x ∗ δ_y` at `z`, together with an involution, a neutral
//! element, and left Haar weights.
//!
//! The crate provides, in layers:
//!
//! - [`hypergroup`]: the tensor representation, axiom validation, Haar
//!   weight computation, and convolution primitives;
//! - [`gelfand`]: double cosets with respect to a subhypergroup `K`,
//!   bi-invariant projection, the quotient hypergroup on double cosets,
//!   and the Gelfand-pair commutativity test;
//! - [`spectral`]: characters of the commutative quotient, Plancherel
//!   weights, and the forward/inverse spherical Fourier transforms;
//! - [`sobolev`]: spectrally weighted Sobolev norms `H^{s,♮}_γ` and
//!   numeric checks of the embedding inequalities into `L²`, into
//!   lower-exponent spaces, and into bounded functions;
//! - [`constructors`]: canonical families (cyclic groups, conjugacy-class
//!   hypergroups, Hamming distance hypergroups, double-coset pairs) and
//!   the JSON file format.
//!
//! Everything is desk-scale by design (at most 64 elements); all measures
//! are dense complex vectors and all integrals are finite sums.

pub mod constructors;
pub mod format;
pub mod gelfand;
pub mod hypergroup;
pub mod report;
pub mod sampling;
pub mod sobolev;
pub mod spectral;

pub use gelfand::{DoubleCosetPartition, GelfandError, GelfandPair};
pub use hypergroup::{
    FiniteHypergroup, HaarError, HypergroupData, HypergroupError, Measure, PointFunction,
};
pub use report::{CheckEntry, ValidationReport};
pub use sobolev::{EmbeddingReport, SobolevError, SobolevParams};
pub use spectral::{Character, DualData, FourierCoefficients, SpectralError};
