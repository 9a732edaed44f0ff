//! Shared fixtures for the integration suites.

#![allow(dead_code)] // each test binary uses a different slice of these fixtures

use hypergroups::constructors;
use hypergroups::GelfandPair;

pub const TOL: f64 = 1e-9;

/// Every bundled Gelfand pair: the commutative families against the
/// trivial subhypergroup, plus the two genuinely nontrivial pairs.
pub fn gelfand_pairs() -> Vec<(String, GelfandPair)> {
    let mut pairs = Vec::new();
    for n in 2..=8 {
        let h = constructors::cyclic(n).unwrap();
        pairs.push((format!("cyclic({n})"), GelfandPair::new(h, &[0], TOL).unwrap()));
    }
    for d in 2..=5 {
        let h = constructors::hamming(d).unwrap();
        pairs.push((format!("hamming({d})"), GelfandPair::new(h, &[0], TOL).unwrap()));
    }
    let classes = constructors::s3_classes().unwrap();
    pairs.push(("s3-classes".into(), GelfandPair::new(classes, &[0], TOL).unwrap()));
    let deformed = constructors::deformed_cyclic3(0.2).unwrap();
    pairs.push(("deformed-z3(0.2)".into(), GelfandPair::new(deformed, &[0], TOL).unwrap()));
    let s3 = constructors::s3().unwrap();
    pairs.push(("(s3, s2)".into(), GelfandPair::new(s3, &[0, 1], TOL).unwrap()));
    let z4 = constructors::cyclic(4).unwrap();
    pairs.push(("(z4, {0,2})".into(), GelfandPair::new(z4, &[0, 2], TOL).unwrap()));
    pairs
}
