//! The hypergroup definition file format.
//!
//! A definition is a UTF-8 JSON document:
//!
//! ```json
//! {
//!   "labels": ["e", "a", "b"],
//!   "identity": "e",
//!   "involution": { "e": "e", "a": "b", "b": "a" },
//!   "convolution": {
//!     "a|a": { "a": 0.2, "b": 0.8 },
//!     "a|b": { "e": "3/5", "a": 0.2, "b": 0.2 }
//!   },
//!   "haar": { "e": 1, "a": "5/3", "b": "5/3" }
//! }
//! ```
//!
//! `labels` fixes the element order. `convolution` is keyed `"x|y"`; masses
//! omitted inside a pair are zero, and pairs omitted entirely are zero
//! rows (the identity rows are normally written out). Masses and weights
//! are JSON numbers or exact-rational `"p/q"` strings, converted at parse
//! time. `haar` is optional: absent weights are computed from the
//! invariance system, present ones are verified.
//!
//! Serialization emits every pair with its nonzero masses under sorted
//! keys; floats print in shortest round-trip form, so parse ∘ serialize
//! is the identity on the tensor bit for bit.
//!
//! Function files reuse the label-keyed convention with complex values
//! written as `[re, im]` (plain numbers mean real values).

use num_complex::Complex64;
use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::hypergroup::{FiniteHypergroup, HypergroupData, HypergroupError, PointFunction};
use crate::report::ValidationReport;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("schema violation at {path}: {message}")]
    Schema { path: String, message: String },
    #[error("hypergroup axioms fail ({}), worst residual {:.3e}",
            .report.failed_names().join(", "), .report.worst_residual())]
    Axioms { report: Box<ValidationReport> },
    #[error(transparent)]
    Structure(#[from] HypergroupError),
}

fn schema(path: impl Into<String>, message: impl Into<String>) -> FormatError {
    FormatError::Schema { path: path.into(), message: message.into() }
}

/// Parse a definition document into raw, unvalidated data.
pub fn parse_data(text: &str) -> Result<HypergroupData, FormatError> {
    let doc: Value = serde_json::from_str(text)?;
    let obj = doc
        .as_object()
        .ok_or_else(|| schema("$", "document must be an object"))?;

    let labels: Vec<String> = obj
        .get("labels")
        .ok_or_else(|| schema("$.labels", "missing"))?
        .as_array()
        .ok_or_else(|| schema("$.labels", "must be an array of strings"))?
        .iter()
        .enumerate()
        .map(|(i, v)| {
            v.as_str()
                .map(str::to_string)
                .ok_or_else(|| schema(format!("$.labels[{i}]"), "must be a string"))
        })
        .collect::<Result<_, _>>()?;
    if labels.is_empty() {
        return Err(schema("$.labels", "must be nonempty"));
    }
    let n = labels.len();
    let index_of = |label: &str, path: &str| -> Result<usize, FormatError> {
        labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| schema(path, format!("unknown label `{label}`")))
    };

    let identity = obj
        .get("identity")
        .ok_or_else(|| schema("$.identity", "missing"))?
        .as_str()
        .ok_or_else(|| schema("$.identity", "must be a label string"))?;
    let e = index_of(identity, "$.identity")?;

    let inv_obj = obj
        .get("involution")
        .ok_or_else(|| schema("$.involution", "missing"))?
        .as_object()
        .ok_or_else(|| schema("$.involution", "must be an object label → label"))?;
    let mut inv = vec![usize::MAX; n];
    for (from, to) in inv_obj {
        let path = format!("$.involution.{from}");
        let x = index_of(from, &path)?;
        let to = to
            .as_str()
            .ok_or_else(|| schema(&path, "must be a label string"))?;
        inv[x] = index_of(to, &path)?;
    }
    if let Some(missing) = inv.iter().position(|&v| v == usize::MAX) {
        return Err(schema(
            "$.involution",
            format!("no image for label `{}`", labels[missing]),
        ));
    }

    let conv = obj
        .get("convolution")
        .ok_or_else(|| schema("$.convolution", "missing"))?
        .as_object()
        .ok_or_else(|| schema("$.convolution", "must be an object keyed \"x|y\""))?;
    let mut c = vec![0.0; n * n * n];
    for (key, row) in conv {
        let path = format!("$.convolution.{key}");
        let (xl, yl) = key
            .split_once('|')
            .ok_or_else(|| schema(&path, "key must be \"x|y\""))?;
        let x = index_of(xl, &path)?;
        let y = index_of(yl, &path)?;
        let row = row
            .as_object()
            .ok_or_else(|| schema(&path, "must be an object label → mass"))?;
        for (zl, mass) in row {
            let path = format!("{path}.{zl}");
            let z = index_of(zl, &path)?;
            c[(x * n + y) * n + z] = parse_real(mass, &path)?;
        }
    }

    let haar = match obj.get("haar") {
        None => None,
        Some(v) => {
            let map = v
                .as_object()
                .ok_or_else(|| schema("$.haar", "must be an object label → weight"))?;
            let mut h = vec![f64::NAN; n];
            for (l, w) in map {
                let path = format!("$.haar.{l}");
                h[index_of(l, &path)?] = parse_real(w, &path)?;
            }
            if let Some(missing) = h.iter().position(|v| v.is_nan()) {
                return Err(schema(
                    "$.haar",
                    format!("no weight for label `{}`", labels[missing]),
                ));
            }
            Some(h)
        }
    };

    Ok(HypergroupData { labels, c, inv, e, haar })
}

/// Parse, validate at `tol`, and build. Axiom failures carry the report.
pub fn parse(text: &str, tol: f64) -> Result<FiniteHypergroup, FormatError> {
    let data = parse_data(text)?;
    match data.build(tol) {
        Ok(h) => Ok(h),
        Err(HypergroupError::AxiomFailure(report)) => Err(FormatError::Axioms { report }),
        Err(other) => Err(FormatError::Structure(other)),
    }
}

/// Serialize a hypergroup as a definition document.
pub fn serialize(h: &FiniteHypergroup) -> String {
    let n = h.order();
    let mut conv = Map::new();
    for x in 0..n {
        for y in 0..n {
            let mut row = Map::new();
            for (z, &mass) in h.row(x, y).iter().enumerate() {
                if mass != 0.0 {
                    row.insert(h.label(z).to_string(), json!(mass));
                }
            }
            conv.insert(format!("{}|{}", h.label(x), h.label(y)), Value::Object(row));
        }
    }
    let involution: Map<String, Value> = (0..n)
        .map(|x| (h.label(x).to_string(), json!(h.label(h.involute(x)))))
        .collect();
    let haar: Map<String, Value> = (0..n)
        .map(|x| (h.label(x).to_string(), json!(h.haar_weights()[x])))
        .collect();
    let doc = json!({
        "labels": h.labels(),
        "identity": h.label(h.identity()),
        "involution": involution,
        "convolution": conv,
        "haar": haar,
    });
    serde_json::to_string_pretty(&doc).expect("serializable document")
}

/// A JSON number, or an exact rational written `"p/q"`.
pub fn parse_real(v: &Value, path: &str) -> Result<f64, FormatError> {
    match v {
        Value::Number(x) => x
            .as_f64()
            .ok_or_else(|| schema(path, "number out of range")),
        Value::String(s) => {
            let (p, q) = s
                .split_once('/')
                .ok_or_else(|| schema(path, "string masses must be rational \"p/q\""))?;
            let p: i64 = p
                .trim()
                .parse()
                .map_err(|_| schema(path, "numerator must be an integer"))?;
            let q: i64 = q
                .trim()
                .parse()
                .map_err(|_| schema(path, "denominator must be an integer"))?;
            if q == 0 {
                return Err(schema(path, "denominator must be nonzero"));
            }
            Ok(p as f64 / q as f64)
        }
        _ => Err(schema(path, "must be a number or \"p/q\" string")),
    }
}

/// A complex value: a real number, `"p/q"`, or a `[re, im]` pair.
pub fn parse_complex(v: &Value, path: &str) -> Result<Complex64, FormatError> {
    match v {
        Value::Array(parts) => {
            if parts.len() != 2 {
                return Err(schema(path, "complex values are [re, im]"));
            }
            let re = parse_real(&parts[0], &format!("{path}[0]"))?;
            let im = parse_real(&parts[1], &format!("{path}[1]"))?;
            Ok(Complex64::new(re, im))
        }
        other => Ok(Complex64::new(parse_real(other, path)?, 0.0)),
    }
}

/// Parse a label-keyed function file against a hypergroup's labels.
/// Missing labels are zero.
pub fn parse_function(text: &str, h: &FiniteHypergroup) -> Result<PointFunction, FormatError> {
    let doc: Value = serde_json::from_str(text)?;
    let obj = doc
        .as_object()
        .ok_or_else(|| schema("$", "function file must be an object label → value"))?;
    let mut values = vec![Complex64::ZERO; h.order()];
    for (label, v) in obj {
        let path = format!("$.{label}");
        let x = h
            .index_of(label)
            .ok_or_else(|| schema(&path, format!("unknown label `{label}`")))?;
        values[x] = parse_complex(v, &path)?;
    }
    Ok(PointFunction::new(values))
}

/// Serialize a function in the label-keyed convention.
pub fn serialize_function(h: &FiniteHypergroup, f: &PointFunction) -> String {
    let map: Map<String, Value> = h
        .labels()
        .iter()
        .zip(&f.values)
        .map(|(l, v)| (l.clone(), json!([v.re, v.im])))
        .collect();
    serde_json::to_string_pretty(&Value::Object(map)).expect("serializable function")
}

/// Parse a dual-coefficient array (one complex value per character).
pub fn parse_coefficients(text: &str, want: usize) -> Result<Vec<Complex64>, FormatError> {
    let doc: Value = serde_json::from_str(text)?;
    let arr = doc
        .as_array()
        .ok_or_else(|| schema("$", "coefficient file must be an array"))?;
    if arr.len() != want {
        return Err(schema("$", format!("expected {want} entries, got {}", arr.len())));
    }
    arr.iter()
        .enumerate()
        .map(|(i, v)| parse_complex(v, &format!("$[{i}]")))
        .collect()
}

/// Parse a gamma weight file: an array of nonnegative reals.
pub fn parse_gamma(text: &str, want: usize) -> Result<Vec<f64>, FormatError> {
    let doc: Value = serde_json::from_str(text)?;
    let arr = doc
        .as_array()
        .ok_or_else(|| schema("$", "gamma file must be an array"))?;
    if arr.len() != want {
        return Err(schema("$", format!("expected {want} entries, got {}", arr.len())));
    }
    arr.iter()
        .enumerate()
        .map(|(i, v)| parse_real(v, &format!("$[{i}]")))
        .collect()
}

/// Parse a Cayley table document: an array of label rows whose first row
/// lists the elements in order (so the first element is the identity).
pub fn parse_cayley(text: &str) -> Result<(Vec<String>, Vec<Vec<usize>>), FormatError> {
    let doc: Value = serde_json::from_str(text)?;
    let rows = doc
        .as_array()
        .ok_or_else(|| schema("$", "table must be an array of label rows"))?;
    let labels: Vec<String> = rows
        .first()
        .ok_or_else(|| schema("$", "table must be nonempty"))?
        .as_array()
        .ok_or_else(|| schema("$[0]", "rows must be arrays of labels"))?
        .iter()
        .enumerate()
        .map(|(j, v)| {
            v.as_str()
                .map(str::to_string)
                .ok_or_else(|| schema(format!("$[0][{j}]"), "must be a label string"))
        })
        .collect::<Result<_, _>>()?;
    let n = labels.len();
    if rows.len() != n {
        return Err(schema("$", format!("expected {n} rows, got {}", rows.len())));
    }
    {
        let mut sorted = labels.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != n {
            return Err(schema("$[0]", "first row must list distinct elements"));
        }
    }
    let mut table = Vec::with_capacity(n);
    for (i, row) in rows.iter().enumerate() {
        let row = row
            .as_array()
            .ok_or_else(|| schema(format!("$[{i}]"), "rows must be arrays of labels"))?;
        if row.len() != n {
            return Err(schema(format!("$[{i}]"), format!("expected {n} entries")));
        }
        let mut out = Vec::with_capacity(n);
        for (j, v) in row.iter().enumerate() {
            let path = format!("$[{i}][{j}]");
            let l = v
                .as_str()
                .ok_or_else(|| schema(&path, "must be a label string"))?;
            out.push(
                labels
                    .iter()
                    .position(|x| x == l)
                    .ok_or_else(|| schema(&path, format!("unknown label `{l}`")))?,
            );
        }
        table.push(out);
    }
    Ok((labels, table))
}
