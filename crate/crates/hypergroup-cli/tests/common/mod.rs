//! Helpers shared by the CLI and acceptance suites: the bundled data
//! corpus and the Gelfand pairs built from it.

#![allow(dead_code)] // each test binary uses a different slice of these fixtures

use std::path::{Path, PathBuf};

use hypergroups::{format, FiniteHypergroup, GelfandPair};

pub const TOL: f64 = 1e-9;

pub fn data_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data")
}

pub fn data_path(name: &str) -> PathBuf {
    data_dir().join(name)
}

pub fn load(name: &str) -> FiniteHypergroup {
    let path = data_path(name);
    let text = std::fs::read_to_string(&path)
        .unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    format::parse(&text, TOL).unwrap_or_else(|e| panic!("{name}: {e}"))
}

pub fn pair(file: &str, k: &[&str]) -> GelfandPair {
    let base = load(file);
    let labels: Vec<String> = k.iter().map(|s| s.to_string()).collect();
    GelfandPair::from_labels(base, &labels, TOL).unwrap_or_else(|e| panic!("{file}: {e}"))
}

/// All bundled hypergroup files that must validate.
pub fn valid_files() -> Vec<&'static str> {
    vec![
        "cyclic2.json",
        "cyclic3.json",
        "cyclic4.json",
        "cyclic5.json",
        "cyclic6.json",
        "cyclic7.json",
        "cyclic8.json",
        "hamming2.json",
        "hamming3.json",
        "hamming4.json",
        "hamming5.json",
        "s3.json",
        "s3_classes.json",
        "z3_deformed.json",
    ]
}

/// The corrupted files and the single axiom each must fail.
pub fn corrupted_files() -> Vec<(&'static str, &'static str)> {
    vec![
        ("broken_probability.json", "probability"),
        ("broken_neutrality.json", "neutrality"),
        ("broken_involution.json", "involution"),
        ("broken_support.json", "support"),
        ("broken_associativity.json", "associativity"),
    ]
}

/// Every bundled Gelfand pair, loaded from the data files.
pub fn gelfand_pairs() -> Vec<(String, GelfandPair)> {
    let mut pairs = Vec::new();
    for n in 2..=8 {
        pairs.push((format!("cyclic{n}"), pair(&format!("cyclic{n}.json"), &["0"])));
    }
    for d in 2..=5 {
        pairs.push((format!("hamming{d}"), pair(&format!("hamming{d}.json"), &["0"])));
    }
    pairs.push(("s3_classes".into(), pair("s3_classes.json", &["e"])));
    pairs.push(("z3_deformed".into(), pair("z3_deformed.json", &["e"])));
    pairs.push(("(s3, s2)".into(), pair("s3.json", &["e", "(12)"])));
    pairs.push(("(z4, {0,2})".into(), pair("cyclic4.json", &["0", "2"])));
    pairs
}
