//! Axiom residuals for raw hypergroup data.

use super::HypergroupData;
use crate::report::ValidationReport;

pub const AXIOM_PROBABILITY: &str = "probability";
pub const AXIOM_NEUTRALITY: &str = "neutrality";
pub const AXIOM_INVOLUTION: &str = "involution";
pub const AXIOM_SUPPORT: &str = "support";
pub const AXIOM_ASSOCIATIVITY: &str = "associativity";
pub const AXIOM_HAAR: &str = "haar";

/// Evaluate every axiom residual. Haar invariance is included only when
/// weights are present in the data.
pub fn run_axiom_checks(data: &HypergroupData, tol: f64) -> ValidationReport {
    let n = data.labels.len();
    let c = |x: usize, y: usize, z: usize| data.c[(x * n + y) * n + z];
    let mut report = ValidationReport::new(tol);

    // probability: rows sum to 1 with nonnegative masses
    {
        let mut worst = 0.0f64;
        let mut witness = None;
        for x in 0..n {
            for y in 0..n {
                let mut sum = 0.0;
                let mut neg = 0.0f64;
                for z in 0..n {
                    let m = c(x, y, z);
                    sum += m;
                    neg = neg.max(-m);
                }
                let r = (sum - 1.0).abs().max(neg);
                if r > worst {
                    worst = r;
                    witness = Some(vec![x, y]);
                }
            }
        }
        report.push(AXIOM_PROBABILITY, worst, witness);
    }

    // neutrality: δ_x ∗ δ_e = δ_e ∗ δ_x = δ_x
    {
        let e = data.e;
        let mut worst = 0.0f64;
        let mut witness = None;
        for x in 0..n {
            for z in 0..n {
                let want = if z == x { 1.0 } else { 0.0 };
                let r = (c(x, e, z) - want).abs().max((c(e, x, z) - want).abs());
                if r > worst {
                    worst = r;
                    witness = Some(vec![x, z]);
                }
            }
        }
        report.push(AXIOM_NEUTRALITY, worst, witness);
    }

    // involution: inv is involutive and c[x][y][z] = c[y⋄][x⋄][z⋄]
    {
        let inv = &data.inv;
        let mut worst = 0.0f64;
        let mut witness = None;
        for (x, &ix) in inv.iter().enumerate() {
            if inv[ix] != x {
                worst = 1.0;
                witness = Some(vec![x]);
            }
        }
        if worst == 0.0 {
            for x in 0..n {
                for y in 0..n {
                    for z in 0..n {
                        let r = (c(x, y, z) - c(inv[y], inv[x], inv[z])).abs();
                        if r > worst {
                            worst = r;
                            witness = Some(vec![x, y, z]);
                        }
                    }
                }
            }
        }
        report.push(AXIOM_INVOLUTION, worst, witness);
    }

    // support symmetry: z ∈ supp(δ_x ∗ δ_y) ⟺ x ∈ supp(δ_z ∗ δ_{y⋄}),
    // with masses below tol treated as zero
    {
        let inv = &data.inv;
        let mut worst = 0.0f64;
        let mut witness = None;
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let a = c(x, y, z);
                    let b = c(z, inv[y], x);
                    if (a > tol) != (b > tol) {
                        let r = a.max(b);
                        if r > worst {
                            worst = r;
                            witness = Some(vec![x, y, z]);
                        }
                    }
                }
            }
        }
        report.push(AXIOM_SUPPORT, worst, witness);
    }

    // associativity: (δ_w ∗ δ_x) ∗ δ_y = δ_w ∗ (δ_x ∗ δ_y)
    {
        let mut worst = 0.0f64;
        let mut witness = None;
        for w in 0..n {
            for x in 0..n {
                for y in 0..n {
                    for z in 0..n {
                        let mut lhs = 0.0;
                        let mut rhs = 0.0;
                        for u in 0..n {
                            lhs += c(w, x, u) * c(u, y, z);
                            rhs += c(x, y, u) * c(w, u, z);
                        }
                        let r = (lhs - rhs).abs();
                        if r > worst {
                            worst = r;
                            witness = Some(vec![w, x, y]);
                        }
                    }
                }
            }
        }
        report.push(AXIOM_ASSOCIATIVITY, worst, witness);
    }

    // Haar left-invariance: Σ_x h(x) c[y][x][z] = h(z), h > 0, h(e) = 1
    if let Some(h) = &data.haar {
        let mut worst = (h[data.e] - 1.0).abs();
        let mut witness = None;
        for (x, &hx) in h.iter().enumerate() {
            if hx <= 0.0 {
                worst = worst.max(1.0 - hx);
                witness = Some(vec![x]);
            }
        }
        for y in 0..n {
            for z in 0..n {
                let lhs: f64 = (0..n).map(|x| h[x] * c(y, x, z)).sum();
                let r = (lhs - h[z]).abs();
                if r > worst {
                    worst = r;
                    witness = Some(vec![y, z]);
                }
            }
        }
        report.push(AXIOM_HAAR, worst, witness);
    }

    report
}
