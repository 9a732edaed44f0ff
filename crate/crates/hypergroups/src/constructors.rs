//! Canonical hypergroups and Gelfand pairs built from finite-group data.
//!
//! Groups enter as explicit Cayley tables (arrays of element indices), never
//! through a general group-theory engine. From a table we can form the group
//! hypergroup itself (point-mass convolution), its conjugacy-class
//! hypergroup (normalized class-sum products, the standard commutative
//! example), or a double-coset Gelfand pair against a subgroup. Two further
//! families need no table: the cyclic groups and the Hamming distance
//! hypergroups of the binary cube, whose characters are normalized
//! Krawtchouk values.

use thiserror::Error;

use crate::gelfand::{GelfandError, GelfandPair};
use crate::hypergroup::{FiniteHypergroup, HypergroupData, HypergroupError};

/// Tolerance used to cross-check constructor outputs; every family here is
/// exact up to floating-point rounding.
const CONSTRUCTOR_TOL: f64 = 1e-10;

#[derive(Debug, Error)]
pub enum ConstructorError {
    #[error("order must be at least 1")]
    ZeroOrder,
    #[error("deformation parameter must lie in [0, 1/2), got {t}")]
    BadDeformation { t: f64 },
    #[error(transparent)]
    Group(#[from] GroupTableError),
    #[error(transparent)]
    Hypergroup(#[from] HypergroupError),
    #[error(transparent)]
    Gelfand(#[from] GelfandError),
}

/// Why a table of indices is not a group Cayley table.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum GroupTableError {
    #[error("table must be square over 0..{n}, row {row} is malformed")]
    Shape { n: usize, row: usize },
    #[error("expected {want} labels for the table, got {got}")]
    LabelCount { got: usize, want: usize },
    #[error("no two-sided identity element")]
    NoIdentity,
    #[error("element {x} has no inverse")]
    NoInverse { x: usize },
    #[error("associativity fails at ({x}, {y}, {z})")]
    NotAssociative { x: usize, y: usize, z: usize },
}

/// The cyclic group of order `n` as a hypergroup: `c[x][y][z] = [x+y ≡ z]`,
/// involution `x ↦ −x`, counting Haar measure.
pub fn cyclic(n: usize) -> Result<FiniteHypergroup, ConstructorError> {
    if n == 0 {
        return Err(ConstructorError::ZeroOrder);
    }
    let labels = (0..n).map(|x| x.to_string()).collect();
    let mut c = vec![0.0; n * n * n];
    for x in 0..n {
        for y in 0..n {
            c[(x * n + y) * n + (x + y) % n] = 1.0;
        }
    }
    let inv = (0..n).map(|x| (n - x) % n).collect();
    let data = HypergroupData { labels, c, inv, e: 0, haar: Some(vec![1.0; n]) };
    Ok(data.build(CONSTRUCTOR_TOL)?)
}

/// Verify that `table[x][y]` is a group law and return the identity and
/// inverse map. The witness in the error pinpoints the first violation.
pub fn check_group_table(table: &[Vec<usize>]) -> Result<(usize, Vec<usize>), GroupTableError> {
    let n = table.len();
    for (row, r) in table.iter().enumerate() {
        if r.len() != n || r.iter().any(|&v| v >= n) {
            return Err(GroupTableError::Shape { n, row });
        }
    }
    let e = (0..n)
        .find(|&e| (0..n).all(|y| table[e][y] == y && table[y][e] == y))
        .ok_or(GroupTableError::NoIdentity)?;
    let mut inv = vec![usize::MAX; n];
    for x in 0..n {
        inv[x] = (0..n)
            .find(|&y| table[x][y] == e && table[y][x] == e)
            .ok_or(GroupTableError::NoInverse { x })?;
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if table[table[x][y]][z] != table[x][table[y][z]] {
                    return Err(GroupTableError::NotAssociative { x, y, z });
                }
            }
        }
    }
    Ok((e, inv))
}

/// A finite group, given by its Cayley table, as a hypergroup with
/// point-mass convolution.
pub fn from_cayley_table(
    labels: Vec<String>,
    table: &[Vec<usize>],
) -> Result<FiniteHypergroup, ConstructorError> {
    let n = table.len();
    if labels.len() != n {
        return Err(GroupTableError::LabelCount { got: labels.len(), want: n }.into());
    }
    let (e, inv) = check_group_table(table)?;
    let mut c = vec![0.0; n * n * n];
    for x in 0..n {
        for y in 0..n {
            c[(x * n + y) * n + table[x][y]] = 1.0;
        }
    }
    let data = HypergroupData { labels, c, inv, e, haar: Some(vec![1.0; n]) };
    Ok(data.build(CONSTRUCTOR_TOL)?)
}

/// The conjugacy-class hypergroup of a finite group.
///
/// Elements are the conjugacy classes; `δ_A ∗ δ_B` distributes mass to the
/// class of each product `ab`, averaged over `A × B`. Haar weights are the
/// class sizes. The result is always commutative.
pub fn conjugacy_class_hypergroup(
    labels: Vec<String>,
    table: &[Vec<usize>],
) -> Result<FiniteHypergroup, ConstructorError> {
    let n = table.len();
    if labels.len() != n {
        return Err(GroupTableError::LabelCount { got: labels.len(), want: n }.into());
    }
    let (e, inv) = check_group_table(table)?;

    // conjugacy classes, identity class first, then by least member
    let mut classes: Vec<Vec<usize>> = Vec::new();
    {
        let mut seen = vec![false; n];
        for x in 0..n {
            if seen[x] {
                continue;
            }
            let mut members: Vec<usize> = (0..n).map(|g| table[table[g][x]][inv[g]]).collect();
            members.sort_unstable();
            members.dedup();
            for &m in &members {
                seen[m] = true;
            }
            classes.push(members);
        }
    }
    classes.sort_by_key(|members| (!members.contains(&e), members[0]));
    let mut class_of = vec![usize::MAX; n];
    for (idx, members) in classes.iter().enumerate() {
        for &m in members {
            class_of[m] = idx;
        }
    }

    let m = classes.len();
    let mut c = vec![0.0; m * m * m];
    for (a, ca) in classes.iter().enumerate() {
        for (b, cb) in classes.iter().enumerate() {
            // exact pair counts, divided once
            let mut counts = vec![0usize; m];
            for &x in ca {
                for &y in cb {
                    counts[class_of[table[x][y]]] += 1;
                }
            }
            let total = (ca.len() * cb.len()) as f64;
            for (d, &count) in counts.iter().enumerate() {
                c[(a * m + b) * m + d] = count as f64 / total;
            }
        }
    }
    let class_labels = classes
        .iter()
        .map(|members| labels[members[0]].clone())
        .collect();
    let class_inv = classes.iter().map(|members| class_of[inv[members[0]]]).collect();
    let haar = classes.iter().map(|members| members.len() as f64).collect();
    let data = HypergroupData { labels: class_labels, c, inv: class_inv, e: 0, haar: Some(haar) };
    Ok(data.build(CONSTRUCTOR_TOL)?)
}

/// The Gelfand pair of a group hypergroup against a subgroup `K`.
pub fn double_coset_pair(
    labels: Vec<String>,
    table: &[Vec<usize>],
    subgroup: &[usize],
) -> Result<GelfandPair, ConstructorError> {
    let base = from_cayley_table(labels, table)?;
    Ok(GelfandPair::new(base, subgroup, CONSTRUCTOR_TOL)?)
}

/// The Hamming distance hypergroup on `{0, .., d}`: the distance classes of
/// the binary `d`-cube, convolved through the scheme's intersection numbers
/// `p^k_{ij} = C(k, (i+k−j)/2) · C(d−k, (i+j−k)/2)`. Haar weights are the
/// sphere sizes `C(d, k)`.
pub fn hamming(d: usize) -> Result<FiniteHypergroup, ConstructorError> {
    if d == 0 {
        return Err(ConstructorError::ZeroOrder);
    }
    let n = d + 1;
    let labels = (0..n).map(|x| x.to_string()).collect();
    let mut c = vec![0.0; n * n * n];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let p = intersection_number(d, i, j, k);
                if p > 0.0 {
                    c[(i * n + j) * n + k] = p * binomial(d, k) / (binomial(d, i) * binomial(d, j));
                }
            }
        }
    }
    let haar = (0..n).map(|k| binomial(d, k)).collect();
    let data = HypergroupData { labels, c, inv: (0..n).collect(), e: 0, haar: Some(haar) };
    Ok(data.build(CONSTRUCTOR_TOL)?)
}

fn intersection_number(d: usize, i: usize, j: usize, k: usize) -> f64 {
    // #y with d(x,y) = i and d(y,z) = j, given d(x,z) = k: flip a of the k
    // separating coordinates and i−a of the remaining d−k.
    if (i + k).abs_diff(j) % 2 == 1 {
        return 0.0;
    }
    let twice_a = (i + k).checked_sub(j);
    match twice_a {
        Some(t) => {
            let a = t / 2;
            if a > k || a > i || i - a > d - k {
                0.0
            } else {
                binomial(k, a) * binomial(d - k, i - a)
            }
        }
        None => 0.0,
    }
}

pub(crate) fn binomial(n: usize, k: usize) -> f64 {
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

/// A one-parameter commutative deformation of the order-3 cyclic group,
/// with involution swapping the two non-identity elements:
///
/// ```text
/// δ_a ∗ δ_a = t δ_a + (1−t) δ_b
/// δ_a ∗ δ_b = (1−2t) δ_e + t δ_a + t δ_b
/// δ_b ∗ δ_b = (1−t) δ_a + t δ_b
/// ```
///
/// Valid for `t ∈ [0, 1/2)`; `t = 0` recovers `cyclic(3)`. The convolution
/// algebra is generated by `δ_a`, so associativity is exact by construction,
/// and the Haar weights are `(1, 1/(1−2t), 1/(1−2t))`. A useful specimen:
/// commutative but not hermitian, with genuinely complex characters and
/// fat convolution supports.
pub fn deformed_cyclic3(t: f64) -> Result<FiniteHypergroup, ConstructorError> {
    if !(0.0..0.5).contains(&t) {
        return Err(ConstructorError::BadDeformation { t });
    }
    let labels = vec!["e".to_string(), "a".to_string(), "b".to_string()];
    let n = 3;
    let mut c = vec![0.0; 27];
    let mut set = |x: usize, y: usize, row: [f64; 3]| {
        c[(x * n + y) * n..(x * n + y) * n + 3].copy_from_slice(&row);
    };
    for x in 0..3 {
        let mut ex = [0.0; 3];
        ex[x] = 1.0;
        set(0, x, ex);
        set(x, 0, ex);
    }
    set(1, 1, [0.0, t, 1.0 - t]);
    set(1, 2, [1.0 - 2.0 * t, t, t]);
    set(2, 1, [1.0 - 2.0 * t, t, t]);
    set(2, 2, [0.0, 1.0 - t, t]);
    let h = 1.0 / (1.0 - 2.0 * t);
    let data = HypergroupData {
        labels,
        c,
        inv: vec![0, 2, 1],
        e: 0,
        haar: Some(vec![1.0, h, h]),
    };
    Ok(data.build(CONSTRUCTOR_TOL)?)
}

/// Labels of the symmetric group on three letters, identity first.
pub fn s3_labels() -> Vec<String> {
    ["e", "(12)", "(13)", "(23)", "(123)", "(132)"]
        .iter()
        .map(|s| s.to_string())
        .collect()
}

/// Cayley table of S₃ under `table[i][j] = σ_i ∘ σ_j` (apply `σ_j` first).
pub fn s3_cayley_table() -> Vec<Vec<usize>> {
    // images of 0,1,2 under each permutation, in label order
    let perms: [[usize; 3]; 6] = [
        [0, 1, 2], // e
        [1, 0, 2], // (12)
        [2, 1, 0], // (13)
        [0, 2, 1], // (23)
        [1, 2, 0], // (123)
        [2, 0, 1], // (132)
    ];
    let compose = |p: [usize; 3], q: [usize; 3]| [p[q[0]], p[q[1]], p[q[2]]];
    let index = |r: [usize; 3]| perms.iter().position(|&p| p == r).unwrap();
    (0..6)
        .map(|i| (0..6).map(|j| index(compose(perms[i], perms[j]))).collect())
        .collect()
}

/// S₃ as a group hypergroup.
pub fn s3() -> Result<FiniteHypergroup, ConstructorError> {
    from_cayley_table(s3_labels(), &s3_cayley_table())
}

/// The three-element conjugacy-class hypergroup of S₃.
pub fn s3_classes() -> Result<FiniteHypergroup, ConstructorError> {
    conjugacy_class_hypergroup(s3_labels(), &s3_cayley_table())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_rejects_zero() {
        assert!(matches!(cyclic(0), Err(ConstructorError::ZeroOrder)));
    }

    #[test]
    fn cyclic_small_cases() {
        let h1 = cyclic(1).unwrap();
        assert_eq!(h1.order(), 1);
        let h2 = cyclic(2).unwrap();
        assert_eq!(h2.involution(), &[0, 1]);
        let h6 = cyclic(6).unwrap();
        assert_eq!(h6.validate_axioms(0.0).worst_residual(), 0.0);
    }

    #[test]
    fn permutation_table_is_s3() {
        let t = s3_cayley_table();
        // (12)(13) applies (13) first: 1→3→3, 3→1→2, 2→2→1, i.e. (132)
        assert_eq!(t[1][2], 5);
        assert_eq!(t[2][1], 4);
        for i in 0..6 {
            assert_eq!(t[0][i], i);
            assert_eq!(t[i][0], i);
        }
    }

    #[test]
    fn broken_table_reports_witness() {
        let mut t = s3_cayley_table();
        t[4][4] = 4; // (123)(123) ≠ (123)
        let err = from_cayley_table(s3_labels(), &t).unwrap_err();
        match err {
            ConstructorError::Group(GroupTableError::NotAssociative { .. })
            | ConstructorError::Group(GroupTableError::NoInverse { .. }) => {}
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn z3_table_equals_cyclic3() {
        let table = vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]];
        let labels = vec!["0".into(), "1".into(), "2".into()];
        let g = from_cayley_table(labels, &table).unwrap();
        assert_eq!(g.tensor(), cyclic(3).unwrap().tensor());
    }

    #[test]
    fn s3_classes_structure() {
        let h = s3_classes().unwrap();
        assert_eq!(h.order(), 3);
        assert_eq!(h.haar_weights(), &[1.0, 3.0, 2.0]);
        // transposition class squared: (1/3) at identity, (2/3) at 3-cycles
        assert_eq!(h.row(1, 1), &[1.0 / 3.0, 0.0, 2.0 / 3.0]);
        assert_eq!(h.label(1), "(12)");
        assert_eq!(h.label(2), "(123)");
    }

    #[test]
    fn abelian_classes_are_singletons() {
        let table = vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]];
        let labels = vec!["0".into(), "1".into(), "2".into()];
        let h = conjugacy_class_hypergroup(labels, &table).unwrap();
        assert_eq!(h.order(), 3);
        assert_eq!(h.tensor(), cyclic(3).unwrap().tensor());
    }

    #[test]
    fn hamming_matches_small_cases() {
        let h1 = hamming(1).unwrap();
        assert_eq!(h1.tensor(), cyclic(2).unwrap().tensor());
        let h3 = hamming(3).unwrap();
        assert_eq!(h3.haar_weights(), &[1.0, 3.0, 3.0, 1.0]);
    }

    #[test]
    fn hamming_is_commutative_and_self_involutive() {
        for d in 1..=6 {
            let h = hamming(d).unwrap();
            assert!(h.involution().iter().enumerate().all(|(i, &v)| i == v));
            for x in 0..h.order() {
                for y in 0..h.order() {
                    for z in 0..h.order() {
                        assert!((h.mass(x, y, z) - h.mass(y, x, z)).abs() <= 1e-14);
                    }
                }
            }
        }
    }

    #[test]
    fn deformation_limits() {
        assert_eq!(
            deformed_cyclic3(0.0).unwrap().tensor(),
            cyclic(3).unwrap().tensor()
        );
        assert!(deformed_cyclic3(0.5).is_err());
        assert!(deformed_cyclic3(-0.1).is_err());
        let h = deformed_cyclic3(0.2).unwrap();
        assert!(h.validate_axioms(1e-12).pass());
    }
}
