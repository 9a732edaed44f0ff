//! Hamming hypergroup oracles: intersection numbers by direct enumeration
//! over the binary cube, and characters two independent ways (Krawtchouk
//! polynomials, and averaged cube characters).

use num_complex::Complex64;

use hypergroups::constructors::{self, hamming};
use hypergroups::spectral::compute_dual;
use hypergroups::GelfandPair;

fn binom(n: usize, k: usize) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as f64
}

/// Count vertices of the d-cube at distance `i` from 0 and `j` from `z`.
fn counted_intersection(d: usize, i: usize, j: usize, z: u32) -> usize {
    (0u32..1 << d)
        .filter(|y| y.count_ones() as usize == i && (y ^ z).count_ones() as usize == j)
        .count()
}

#[test]
fn tensor_matches_cube_enumeration() {
    for d in 1..=5 {
        let h = hamming(d).unwrap();
        for k in 0..=d {
            // any weight-k basepoint works; distance-regularity itself is
            // implicitly exercised by the axiom checks
            let z: u32 = (1 << k) - 1;
            for i in 0..=d {
                for j in 0..=d {
                    let p = counted_intersection(d, i, j, z) as f64;
                    let expected = p * binom(d, k) / (binom(d, i) * binom(d, j));
                    assert_eq!(
                        h.mass(i, j, k),
                        expected,
                        "hamming({d}) entry ({i},{j},{k})"
                    );
                }
            }
        }
    }
}

/// Binary Krawtchouk polynomial `K_k(j) = Σ_t (−1)^t C(j,t) C(d−j,k−t)`.
fn krawtchouk(d: usize, k: usize, j: usize) -> f64 {
    (0..=k)
        .map(|t| {
            let sign = if t % 2 == 0 { 1.0 } else { -1.0 };
            sign * binom(j, t) * binom(d - j, k - t)
        })
        .sum()
}

#[test]
fn characters_are_normalized_krawtchouk_values() {
    for d in 1..=5 {
        let h = hamming(d).unwrap();
        let pair = GelfandPair::new(h, &[0], 1e-9).unwrap();
        let dual = compute_dual(&pair, 1e-9).unwrap();
        assert_eq!(dual.len(), d + 1);
        let mut used = vec![false; d + 1];
        for k in 0..=d {
            let oracle: Vec<f64> = (0..=d)
                .map(|j| krawtchouk(d, k, j) / binom(d, k))
                .collect();
            let hit = dual
                .characters
                .iter()
                .enumerate()
                .filter(|(_, phi)| {
                    phi.values
                        .iter()
                        .zip(&oracle)
                        .all(|(v, w)| (v - Complex64::new(*w, 0.0)).norm() < 1e-10)
                })
                .map(|(i, _)| i)
                .collect::<Vec<_>>();
            assert_eq!(hit.len(), 1, "hamming({d}) Krawtchouk k={k}");
            assert!(!used[hit[0]]);
            used[hit[0]] = true;
        }
    }
}

#[test]
fn characters_match_averaged_cube_characters() {
    // For S ⊆ coordinates with |S| = k, the group character
    // χ_S(x) = (−1)^{|S∩x|} of Z₂³ averaged over each distance sphere
    // gives the spherical function profile. Brute force on the 8-vertex
    // cube.
    let d = 3usize;
    let h = hamming(d).unwrap();
    let pair = GelfandPair::new(h, &[0], 1e-9).unwrap();
    let dual = compute_dual(&pair, 1e-9).unwrap();
    for k in 0..=d {
        let s: u32 = (1 << k) - 1;
        let profile: Vec<f64> = (0..=d)
            .map(|j| {
                let (mut sum, mut count) = (0.0f64, 0usize);
                for x in 0u32..1 << d {
                    if x.count_ones() as usize == j {
                        sum += if (x & s).count_ones() % 2 == 0 { 1.0 } else { -1.0 };
                        count += 1;
                    }
                }
                sum / count as f64
            })
            .collect();
        let found = dual.characters.iter().any(|phi| {
            phi.values
                .iter()
                .zip(&profile)
                .all(|(v, w)| (v - Complex64::new(*w, 0.0)).norm() < 1e-10)
        });
        assert!(found, "no computed character matches averaged χ_S for |S|={k}");
    }
}

#[test]
fn hamming_one_is_the_two_element_group() {
    let h = hamming(1).unwrap();
    let c2 = constructors::cyclic(2).unwrap();
    assert_eq!(h.tensor(), c2.tensor());
    assert_eq!(h.haar_weights(), c2.haar_weights());
}
