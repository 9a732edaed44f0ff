//! Seeded random inputs for property sweeps.
//!
//! Everything random in the crate flows through a ChaCha8 stream cipher
//! keyed by an explicit seed, so identical seeds give identical trials on
//! every platform.

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::gelfand::GelfandPair;
use crate::hypergroup::{Measure, PointFunction};

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn complex_normal(rng: &mut ChaCha8Rng) -> Complex64 {
    let re: f64 = StandardNormal.sample(rng);
    let im: f64 = StandardNormal.sample(rng);
    Complex64::new(re, im)
}

/// A random K-bi-invariant function: an independent standard complex
/// Gaussian per double coset, lifted to `G`.
pub fn random_biinvariant(pair: &GelfandPair, rng: &mut ChaCha8Rng) -> PointFunction {
    let block_values: Vec<Complex64> =
        (0..pair.block_count()).map(|_| complex_normal(rng)).collect();
    pair.lift(&block_values).expect("block count matches")
}

/// A random complex Gaussian function on all of `G`.
pub fn random_function(n: usize, rng: &mut ChaCha8Rng) -> PointFunction {
    PointFunction::new((0..n).map(|_| complex_normal(rng)).collect())
}

/// A random complex Gaussian measure.
pub fn random_measure(n: usize, rng: &mut ChaCha8Rng) -> Measure {
    Measure::new((0..n).map(|_| complex_normal(rng)).collect())
}
