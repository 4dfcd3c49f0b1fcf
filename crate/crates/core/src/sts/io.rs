//! Structure-constant files.
//!
//! ```json
//! {
//!   "dim": 2,
//!   "omega": [["0", "1"], ["-1", "0"]],
//!   "triple": [[0, 0, 1, 0, "2"], [0, 1, 0, 0, {"re": "1", "im": "0"}]],
//!   "label": "symplectic(n=1)"
//! }
//! ```
//!
//! A `triple` entry `[i, j, k, l, c]` says that `[e_i, e_j, e_k]` has
//! coefficient `c` on `e_l` (0-indexed). Scalars are strings in the form
//! `p/q`, `p/qi` or `a+bi`, or objects with `re` and `im` strings. Plain JSON
//! integers are also accepted. Fractions are reduced on input.

use std::path::Path;

use serde_json::{json, Map, Value};

use super::SymplecticTripleSystem;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Rational, Scalar};

fn parse_err(location: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Parse { location: location.into(), message: message.into() }
}

fn parse_rational(v: &Value, at: &str) -> Result<Rational> {
    match v {
        Value::String(s) => s.parse().map_err(|e| parse_err(at, format!("{e}"))),
        Value::Number(n) => n
            .as_i64()
            .map(Rational::from_int)
            .ok_or_else(|| parse_err(at, "numbers must be integers; write fractions as strings")),
        _ => Err(parse_err(at, "expected a rational string")),
    }
}

fn parse_scalar(v: &Value, at: &str) -> Result<Scalar> {
    match v {
        Value::String(s) => s.parse().map_err(|e| parse_err(at, format!("{e}"))),
        Value::Number(_) => parse_rational(v, at).map(Scalar::from_rational),
        Value::Object(o) => {
            for key in o.keys() {
                if key != "re" && key != "im" {
                    return Err(parse_err(format!("{at}.{key}"), "unknown field"));
                }
            }
            let part = |k: &str| -> Result<Rational> {
                o.get(k).map_or(Ok(Rational::zero()), |x| parse_rational(x, &format!("{at}.{k}")))
            };
            Ok(Scalar::new(part("re")?, part("im")?))
        }
        _ => Err(parse_err(at, "expected a scalar string or {\"re\", \"im\"} object")),
    }
}

fn parse_index(v: &Value, at: &str, dim: usize) -> Result<usize> {
    let k = v.as_u64().ok_or_else(|| parse_err(at, "expected a non-negative integer index"))?;
    let k = usize::try_from(k).map_err(|_| parse_err(at, "index too large"))?;
    if k >= dim {
        return Err(parse_err(at, format!("index {k} out of range for dim {dim}")));
    }
    Ok(k)
}

/// Parses a structure-constant document.
///
/// Syntax errors carry line and column; structural errors carry the field path.
/// A form that is not skew-symmetric is a validation error.
pub fn read_sts(text: &str) -> Result<SymplecticTripleSystem> {
    let doc: Value = serde_json::from_str(text).map_err(|e| {
        parse_err(format!("line {}, column {}", e.line(), e.column()), e.to_string())
    })?;
    let obj = doc.as_object().ok_or_else(|| parse_err("$", "expected an object"))?;
    for key in obj.keys() {
        if !matches!(key.as_str(), "dim" | "omega" | "triple" | "label") {
            return Err(parse_err(format!("$.{key}"), "unknown field"));
        }
    }
    let field = |k: &str| obj.get(k).ok_or_else(|| parse_err(format!("$.{k}"), "missing field"));

    let dim = field("dim")?
        .as_u64()
        .and_then(|d| usize::try_from(d).ok())
        .filter(|&d| d > 0)
        .ok_or_else(|| parse_err("$.dim", "expected a positive integer"))?;
    let label = match obj.get("label") {
        None => String::new(),
        Some(Value::String(s)) => s.clone(),
        Some(_) => return Err(parse_err("$.label", "expected a string")),
    };

    let rows = field("omega")?.as_array().ok_or_else(|| parse_err("$.omega", "expected an array"))?;
    if rows.len() != dim {
        return Err(parse_err("$.omega", format!("expected {dim} rows, found {}", rows.len())));
    }
    let mut omega = Matrix::zeros(dim, dim);
    for (i, row) in rows.iter().enumerate() {
        let at = format!("$.omega[{i}]");
        let row = row.as_array().ok_or_else(|| parse_err(&at, "expected an array"))?;
        if row.len() != dim {
            return Err(parse_err(&at, format!("expected {dim} entries, found {}", row.len())));
        }
        for (j, x) in row.iter().enumerate() {
            omega[(i, j)] = parse_scalar(x, &format!("{at}[{j}]"))?;
        }
    }
    if !omega.is_skew() {
        return Err(Error::Validation("omega is not skew-symmetric".into()));
    }

    let list = field("triple")?.as_array().ok_or_else(|| parse_err("$.triple", "expected an array"))?;
    let mut entries = Vec::with_capacity(list.len());
    for (n, e) in list.iter().enumerate() {
        let at = format!("$.triple[{n}]");
        let e = e.as_array().filter(|e| e.len() == 5).ok_or_else(|| {
            parse_err(&at, "expected [i, j, k, l, coefficient]")
        })?;
        let mut idx = [0usize; 4];
        for (p, slot) in idx.iter_mut().enumerate() {
            *slot = parse_index(&e[p], &format!("{at}[{p}]"), dim)?;
        }
        let c = parse_scalar(&e[4], &format!("{at}[4]"))?;
        entries.push((idx[0], idx[1], idx[2], idx[3], c));
    }
    SymplecticTripleSystem::from_entries(omega, entries, label)
}

/// Serializes to the structure-constant format (pretty-printed, entries in index order).
pub fn write_sts(t: &SymplecticTripleSystem) -> String {
    let d = t.dim();
    let omega: Vec<Value> = (0..d)
        .map(|i| Value::Array((0..d).map(|j| Value::String(t.omega()[(i, j)].to_string())).collect()))
        .collect();
    let triple: Vec<Value> = t
        .entries()
        .map(|(i, j, k, l, c)| json!([i, j, k, l, c.to_string()]))
        .collect();
    let mut obj = Map::new();
    obj.insert("dim".into(), json!(d));
    obj.insert("omega".into(), Value::Array(omega));
    obj.insert("triple".into(), Value::Array(triple));
    obj.insert("label".into(), Value::String(t.label().to_string()));
    let mut s = serde_json::to_string_pretty(&Value::Object(obj)).expect("JSON values serialize");
    s.push('\n');
    s
}

pub fn load_sts(path: impl AsRef<Path>) -> Result<SymplecticTripleSystem> {
    read_sts(&std::fs::read_to_string(path)?)
}

pub fn save_sts(t: &SymplecticTripleSystem, path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path, write_sts(t))?;
    Ok(())
}
