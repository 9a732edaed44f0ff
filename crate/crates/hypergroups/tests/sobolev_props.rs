//! Norm and inner-product structure of the spectrally weighted spaces,
//! plus the embedding inequalities on random bi-invariant inputs.

mod common;

use num_complex::Complex64;

use hypergroups::hypergroup::PointFunction;
use hypergroups::sampling::{random_biinvariant, seeded_rng};
use hypergroups::sobolev::{
    check_l2_embedding, check_modulus_bound, check_monotone_embedding, check_supnorm_embedding,
    gamma_preset, sobolev_inner, sobolev_norm, GammaPreset, SobolevParams,
};
use hypergroups::spectral::compute_dual;

fn scale(f: &PointFunction, lambda: Complex64) -> PointFunction {
    PointFunction::new(f.values.iter().map(|v| lambda * v).collect())
}

fn add(f: &PointFunction, g: &PointFunction) -> PointFunction {
    PointFunction::new(
        f.values
            .iter()
            .zip(&g.values)
            .map(|(a, b)| a + b)
            .collect(),
    )
}

fn sub(f: &PointFunction, g: &PointFunction) -> PointFunction {
    PointFunction::new(
        f.values
            .iter()
            .zip(&g.values)
            .map(|(a, b)| a - b)
            .collect(),
    )
}

#[test]
fn norm_axioms_hold() {
    let mut rng = seeded_rng(11);
    for (name, pair) in common::gelfand_pairs() {
        let dual = compute_dual(&pair, 1e-9).unwrap();
        let params = SobolevParams::new(1.5, gamma_preset(&dual, GammaPreset::Index)).unwrap();
        for _ in 0..50 {
            let f = random_biinvariant(&pair, &mut rng);
            let g = random_biinvariant(&pair, &mut rng);
            let nf = sobolev_norm(&pair, &dual, &f, &params).unwrap();
            let ng = sobolev_norm(&pair, &dual, &g, &params).unwrap();

            let lambda = Complex64::new(-2.25, 1.5);
            let nsf = sobolev_norm(&pair, &dual, &scale(&f, lambda), &params).unwrap();
            assert!(
                (nsf - lambda.norm() * nf).abs() <= 1e-12 * nf.max(1.0) * lambda.norm(),
                "{name}: homogeneity"
            );

            let nsum = sobolev_norm(&pair, &dual, &add(&f, &g), &params).unwrap();
            assert!(nsum <= nf + ng + 1e-10, "{name}: triangle inequality");
        }
    }
}

#[test]
fn hilbert_structure() {
    let mut rng = seeded_rng(13);
    for (name, pair) in common::gelfand_pairs() {
        let dual = compute_dual(&pair, 1e-9).unwrap();
        let params =
            SobolevParams::new(2.0, gamma_preset(&dual, GammaPreset::SpectralGap)).unwrap();
        let zero = PointFunction::zero(pair.base().order());
        for _ in 0..50 {
            let f = random_biinvariant(&pair, &mut rng);
            let g = random_biinvariant(&pair, &mut rng);

            // ⟨f,f⟩ = ‖f‖² and ⟨f,0⟩ = 0
            let n = sobolev_norm(&pair, &dual, &f, &params).unwrap();
            let self_inner = sobolev_inner(&pair, &dual, &f, &f, &params).unwrap();
            assert!((self_inner.re - n * n).abs() <= 1e-12 * (n * n).max(1.0), "{name}");
            assert!(self_inner.im.abs() <= 1e-12 * (n * n).max(1.0));
            let z = sobolev_inner(&pair, &dual, &f, &zero, &params).unwrap();
            assert_eq!(z, Complex64::ZERO, "{name}: ⟨f,0⟩");

            // parallelogram law
            let np = sobolev_norm(&pair, &dual, &add(&f, &g), &params).unwrap();
            let nm = sobolev_norm(&pair, &dual, &sub(&f, &g), &params).unwrap();
            let ng = sobolev_norm(&pair, &dual, &g, &params).unwrap();
            let lhs = np * np + nm * nm;
            let rhs = 2.0 * (n * n + ng * ng);
            assert!(
                (lhs - rhs).abs() <= 1e-10 * rhs.max(1.0),
                "{name}: parallelogram law ({lhs} vs {rhs})"
            );
        }
    }
}

#[test]
fn zero_gamma_collapses_to_l2() {
    let mut rng = seeded_rng(17);
    for (name, pair) in common::gelfand_pairs() {
        let dual = compute_dual(&pair, 1e-9).unwrap();
        let gamma = gamma_preset(&dual, GammaPreset::Zero);
        for &s in &[0.5, 1.0, 2.0, 4.0] {
            let params = SobolevParams::new(s, gamma.clone()).unwrap();
            for _ in 0..25 {
                let f = random_biinvariant(&pair, &mut rng);
                let sob = sobolev_norm(&pair, &dual, &f, &params).unwrap();
                let l2 = pair.base().l2_norm(&f);
                assert!(
                    (sob - l2).abs() <= 1e-12 * l2.max(1.0),
                    "{name}: γ≡0 collapse at s={s}"
                );
                // polarized version through the inner product
                let g = random_biinvariant(&pair, &mut rng);
                let si = sobolev_inner(&pair, &dual, &f, &g, &params).unwrap();
                let li = pair.base().l2_inner(&f, &g);
                assert!((si - li).norm() <= 1e-10 * li.norm().max(1.0), "{name}");
            }
        }
    }
}

#[test]
fn norm_is_monotone_in_the_exponent() {
    let grid = [0.5, 1.0, 2.0, 4.0];
    let mut rng = seeded_rng(19);
    for (name, pair) in common::gelfand_pairs() {
        let dual = compute_dual(&pair, 1e-9).unwrap();
        let gamma = gamma_preset(&dual, GammaPreset::Index);
        for _ in 0..25 {
            let f = random_biinvariant(&pair, &mut rng);
            let norms: Vec<f64> = grid
                .iter()
                .map(|&s| {
                    let params = SobolevParams::new(s, gamma.clone()).unwrap();
                    sobolev_norm(&pair, &dual, &f, &params).unwrap()
                })
                .collect();
            for w in norms.windows(2) {
                assert!(
                    w[0] <= w[1] + 1e-12 * w[1].max(1.0),
                    "{name}: ‖f‖ not monotone in s ({norms:?})"
                );
            }
        }
    }
}

#[test]
fn embeddings_hold_on_random_sweeps() {
    let mut rng = seeded_rng(23);
    for (name, pair) in common::gelfand_pairs() {
        let dual = compute_dual(&pair, 1e-9).unwrap();
        for preset in [GammaPreset::Zero, GammaPreset::Index, GammaPreset::SpectralGap] {
            let gamma = gamma_preset(&dual, preset);
            let params = SobolevParams::new(1.0, gamma.clone()).unwrap();
            for _ in 0..50 {
                let f = random_biinvariant(&pair, &mut rng);
                let l2 = check_l2_embedding(&pair, &dual, &f, &params, 1e-12).unwrap();
                assert!(l2.pass, "{name} {preset:?}: L² embedding {l2:?}");
                let mono =
                    check_monotone_embedding(&pair, &dual, &f, 2.0, 1.0, &gamma, 1e-12).unwrap();
                assert!(mono.pass, "{name} {preset:?}: monotone embedding {mono:?}");
                let sup = check_supnorm_embedding(&pair, &dual, &f, &params, 1e-12).unwrap();
                assert!(sup.pass, "{name} {preset:?}: sup-norm embedding {sup:?}");
                let osc = check_modulus_bound(&pair, &dual, &f, &params, 1e-12).unwrap();
                assert!(osc.pass, "{name} {preset:?}: modulus bound {osc:?}");
            }
        }
        // γ ≡ 0 is the equality case of the L² embedding
        let zero = SobolevParams::new(1.0, gamma_preset(&dual, GammaPreset::Zero)).unwrap();
        let f = random_biinvariant(&pair, &mut rng);
        let report = check_l2_embedding(&pair, &dual, &f, &zero, 1e-12).unwrap();
        assert!(report.margin.abs() <= 1e-12 * report.rhs.max(1.0), "{name}: equality case");
    }
}
