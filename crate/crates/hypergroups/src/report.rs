//! Validation reports: named residual checks with pass/fail flags.

use serde::{Deserialize, Serialize};

/// One named check: a nonnegative residual, the tolerance verdict, and an
/// optional witness (index tuple) locating the worst violation.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckEntry {
    pub name: String,
    pub pass: bool,
    pub residual: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
}

impl CheckEntry {
    pub fn new(name: &str, residual: f64, tol: f64, witness: Option<Vec<usize>>) -> Self {
        CheckEntry {
            name: name.to_string(),
            pass: residual <= tol,
            residual,
            witness,
        }
    }
}

/// A bundle of named checks evaluated against a common tolerance.
///
/// The report passes iff every individual residual is within tolerance.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ValidationReport {
    pub tol: f64,
    pub checks: Vec<CheckEntry>,
}

impl ValidationReport {
    pub fn new(tol: f64) -> Self {
        ValidationReport { tol, checks: Vec::new() }
    }

    pub fn push(&mut self, name: &str, residual: f64, witness: Option<Vec<usize>>) {
        self.checks.push(CheckEntry::new(name, residual, self.tol, witness));
    }

    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    /// Largest residual across all checks.
    pub fn worst_residual(&self) -> f64 {
        self.checks.iter().map(|c| c.residual).fold(0.0, f64::max)
    }

    pub fn check(&self, name: &str) -> Option<&CheckEntry> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// Names of the checks that exceeded tolerance.
    pub fn failed_names(&self) -> Vec<&str> {
        self.checks.iter().filter(|c| !c.pass).map(|c| c.name.as_str()).collect()
    }
}
