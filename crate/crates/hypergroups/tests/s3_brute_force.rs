//! Brute-force oracles over the symmetric group on three letters.
//!
//! Everything here is derived by direct enumeration over permutation
//! arrays — no structure constants, no quotient machinery — and then
//! compared against the library's constructions.

use num_complex::Complex64;

use hypergroups::constructors;
use hypergroups::gelfand::{double_cosets, GelfandPair};
use hypergroups::hypergroup::PointFunction;
use hypergroups::spectral::{compute_dual, plancherel_weights, Character};

/// The six permutations of {0,1,2} in label order e, (12), (13), (23),
/// (123), (132); `PERMS[i][x]` is the image of `x`.
const PERMS: [[usize; 3]; 6] = [
    [0, 1, 2],
    [1, 0, 2],
    [2, 1, 0],
    [0, 2, 1],
    [1, 2, 0],
    [2, 0, 1],
];

fn compose(i: usize, j: usize) -> usize {
    // apply j first, then i
    let r = [
        PERMS[i][PERMS[j][0]],
        PERMS[i][PERMS[j][1]],
        PERMS[i][PERMS[j][2]],
    ];
    PERMS.iter().position(|&p| p == r).unwrap()
}

/// Conjugacy classes by enumeration: {e}, transpositions, 3-cycles.
fn classes() -> Vec<Vec<usize>> {
    vec![vec![0], vec![1, 2, 3], vec![4, 5]]
}

fn class_of(x: usize) -> usize {
    classes().iter().position(|c| c.contains(&x)).unwrap()
}

#[test]
fn cayley_table_matches_constructor() {
    let table = constructors::s3_cayley_table();
    for i in 0..6 {
        for j in 0..6 {
            assert_eq!(table[i][j], compose(i, j));
        }
    }
}

#[test]
fn s3_group_hypergroup_validates_exactly() {
    let h = constructors::s3().unwrap();
    let report = h.validate_axioms(1e-10);
    assert!(report.pass());
    assert_eq!(report.worst_residual(), 0.0);
}

#[test]
fn class_products_by_enumeration() {
    // c[A][B][D] = #{(a,b) ∈ A×B : ab ∈ D} / (|A||B|)
    let h = constructors::s3_classes().unwrap();
    let cls = classes();
    for (a, ca) in cls.iter().enumerate() {
        for (b, cb) in cls.iter().enumerate() {
            let mut counts = [0usize; 3];
            for &x in ca {
                for &y in cb {
                    counts[class_of(compose(x, y))] += 1;
                }
            }
            for (d, &count) in counts.iter().enumerate() {
                let expected = count as f64 / (ca.len() * cb.len()) as f64;
                assert_eq!(h.mass(a, b, d), expected, "class product ({a},{b},{d})");
            }
        }
    }
}

#[test]
fn class_hypergroup_haar_is_class_size() {
    let h = constructors::s3_classes().unwrap();
    assert_eq!(h.recompute_haar().unwrap(), vec![1.0, 3.0, 2.0]);
    assert!(h.haar_residual(&[1.0, 3.0, 2.0]) <= 1e-15);
}

#[test]
fn double_cosets_by_enumeration() {
    // KxK = {k1 · x · k2} for K = {e, (12)}
    let k = [0usize, 1];
    let mut expected: Vec<Vec<usize>> = Vec::new();
    for x in 0..6 {
        let mut coset: Vec<usize> = k
            .iter()
            .flat_map(|&k1| k.iter().map(move |&k2| compose(compose(k1, x), k2)))
            .collect();
        coset.sort_unstable();
        coset.dedup();
        if !expected.contains(&coset) {
            expected.push(coset);
        }
    }
    expected.sort_by_key(|c| c[0]);

    let g = constructors::s3().unwrap();
    let partition = double_cosets(&g, &k).unwrap();
    assert_eq!(partition.blocks, expected);
    assert_eq!(partition.blocks[0].len(), 2);
    assert_eq!(partition.blocks[1].len(), 4);
}

#[test]
fn biinvariant_projection_by_double_sum() {
    // f^♮(x) = (1/|K|²) Σ_{k1,k2} f(k1 x k2) for the group pair
    let g = constructors::s3().unwrap();
    let pair = GelfandPair::new(g, &[0, 1], 1e-9).unwrap();
    let f = PointFunction::new(
        (0..6)
            .map(|x| Complex64::new((x * x) as f64 - 2.0, 1.5 * x as f64))
            .collect(),
    );
    let projected = pair.project(&f).unwrap();
    for x in 0..6 {
        let mut acc = Complex64::ZERO;
        for &k1 in &[0usize, 1] {
            for &k2 in &[0usize, 1] {
                acc += f.values[compose(compose(k1, x), k2)];
            }
        }
        let expected = acc / 4.0;
        assert!(
            (projected.values[x] - expected).norm() < 1e-12,
            "projection mismatch at {x}"
        );
    }
}

#[test]
fn quotient_by_convolving_coset_measures() {
    // uniform measures on the two cosets, convolved in the group algebra
    let g = constructors::s3().unwrap();
    let pair = GelfandPair::new(g, &[0, 1], 1e-9).unwrap();
    let blocks = pair.partition().blocks.clone();
    let q = pair.quotient();
    for (a, block_a) in blocks.iter().enumerate() {
        for (b, block_b) in blocks.iter().enumerate() {
            let mut mass = vec![0.0f64; blocks.len()];
            for &x in block_a {
                for &y in block_b {
                    let block_of_product = blocks
                        .iter()
                        .position(|blk| blk.contains(&compose(x, y)))
                        .unwrap();
                    mass[block_of_product] += 1.0 / (block_a.len() * block_b.len()) as f64;
                }
            }
            for (d, &expected) in mass.iter().enumerate() {
                assert!(
                    (q.mass(a, b, d) - expected).abs() < 1e-14,
                    "quotient mass ({a},{b},{d})"
                );
            }
        }
    }
    // in particular the big coset squared returns to K with mass 1/2
    assert!((q.mass(1, 1, 0) - 0.5).abs() < 1e-15);
}

#[test]
fn spherical_functions_from_quadratic() {
    // multiplicativity on the 2-block quotient: φ² = c[1][1][0] + c[1][1][1] φ,
    // i.e. 2φ² − φ − 1 = 0 with roots 1 and −1/2
    let g = constructors::s3().unwrap();
    let pair = GelfandPair::new(g, &[0, 1], 1e-9).unwrap();
    let q = pair.quotient();
    let (c0, c1) = (q.mass(1, 1, 0), q.mass(1, 1, 1));
    let disc = (c1 * c1 + 4.0 * c0).sqrt();
    let mut roots = [(c1 + disc) / 2.0, (c1 - disc) / 2.0];
    roots.sort_by(f64::total_cmp);
    assert!((roots[0] + 0.5).abs() < 1e-15);
    assert!((roots[1] - 1.0).abs() < 1e-15);

    let dual = compute_dual(&pair, 1e-9).unwrap();
    assert_eq!(dual.len(), 2);
    let expected = [
        [Complex64::ONE, Complex64::ONE],
        [Complex64::ONE, Complex64::new(-0.5, 0.0)],
    ];
    for (phi, want) in dual.characters.iter().zip(expected.iter()) {
        for (v, w) in phi.values.iter().zip(want.iter()) {
            assert!((v - w).norm() < 1e-10);
        }
    }

    // Plancherel by summing |φ|² over all six group elements
    for (i, phi) in dual.characters.iter().enumerate() {
        let lifted = phi.lift(&pair);
        let total: f64 = lifted.values.iter().map(|v| v.norm_sqr()).sum();
        assert!((dual.plancherel[i] - 1.0 / total).abs() < 1e-12);
    }
    assert!((dual.plancherel[0] - 1.0 / 6.0).abs() < 1e-12);
    assert!((dual.plancherel[1] - 1.0 / 3.0).abs() < 1e-12);
}

#[test]
fn class_characters_from_character_table() {
    // normalized irreducible characters χ/χ(e) of S₃ on (E, T, C)
    let classes_h = constructors::s3_classes().unwrap();
    let pair = GelfandPair::new(classes_h, &[0], 1e-9).unwrap();
    let dual = compute_dual(&pair, 1e-9).unwrap();
    assert_eq!(dual.len(), 3);
    let expected = [
        [1.0, 1.0, 1.0],
        [1.0, -1.0, 1.0],
        [1.0, 0.0, -0.5],
    ];
    for (phi, want) in dual.characters.iter().zip(expected.iter()) {
        for (v, w) in phi.values.iter().zip(want.iter()) {
            assert!((v - Complex64::new(*w, 0.0)).norm() < 1e-10);
        }
    }
    let pi = plancherel_weights(&pair, &dual.characters);
    // cross-check against χ(e)²/|G| for dimensions (1, 1, 2)
    let expected_pi = [1.0 / 6.0, 1.0 / 6.0, 4.0 / 6.0];
    for (got, want) in pi.iter().zip(expected_pi.iter()) {
        assert!((got - want).abs() < 1e-12);
    }
}

#[test]
fn fourier_of_three_cycle_indicator() {
    // f̂ over (E, T, C) characters: f = 1 on the 3-cycle class, h(C) = 2
    let classes_h = constructors::s3_classes().unwrap();
    let pair = GelfandPair::new(classes_h, &[0], 1e-9).unwrap();
    let dual = compute_dual(&pair, 1e-9).unwrap();
    let f = PointFunction::indicator(3, 2);
    let coeffs = hypergroups::spectral::fourier(&pair, &dual, &f).unwrap();
    let expected = [2.0, 2.0, -1.0];
    for (c, want) in coeffs.values.iter().zip(expected.iter()) {
        assert!((c - Complex64::new(*want, 0.0)).norm() < 1e-10);
    }
    // Parseval: Σ h|f|² = 2 and Σ π|f̂|² = 4/6 + 4/6 + 2/3 = 2
    let residual = hypergroups::spectral::plancherel_residual(&pair, &dual, &f);
    assert!(residual < 1e-14);
}

#[test]
fn verify_character_accepts_table_rows() {
    let classes_h = constructors::s3_classes().unwrap();
    let pair = GelfandPair::new(classes_h, &[0], 1e-9).unwrap();
    let good = Character::new(vec![
        Complex64::ONE,
        Complex64::new(-1.0, 0.0),
        Complex64::ONE,
    ]);
    let report = hypergroups::spectral::verify_character(&pair, &good, 1e-9);
    assert!(report.pass(), "sign character should verify: {report:?}");

    // dimension-2 character without normalization fails condition (2)
    let bad = Character::new(vec![
        Complex64::new(2.0, 0.0),
        Complex64::ZERO,
        Complex64::new(-1.0, 0.0),
    ]);
    let report = hypergroups::spectral::verify_character(&pair, &bad, 1e-9);
    assert!(!report.check("normalization").unwrap().pass);
}
