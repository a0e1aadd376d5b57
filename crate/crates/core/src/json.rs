//! Canonical JSON encoding of the library's types, plus parsers for the
//! textual forms used on the command line (field specs like
//! `p=7,b=2,mod=x^2+2`, elements like `1+2*t`, the `inf` token).
//!
//! Emitted JSON always sorts object keys and contains integers only, so that
//! byte-for-byte comparisons of round-tripped output are meaningful.

use std::fmt;

use serde_json::{json, Map, Value};

use crate::code::ClassificationReport;
use crate::field::{Field, FieldElement};
use crate::gtrs::{GtrsSpec, Hook, Recognition};
use crate::linalg::{EvalPoint, Matrix};
use crate::poly::Polynomial;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError(pub String);

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error: {}", self.0)
    }
}

impl std::error::Error for ParseError {}

fn err<T>(msg: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError(msg.into()))
}

// ---------------------------------------------------------------------------
// Field specs.
// ---------------------------------------------------------------------------

/// Parses `p=7` | `p=7,b=2,mod=x^2+2` | `p=11,b=13`.
pub fn parse_field_spec(spec: &str) -> Result<Field, ParseError> {
    let mut p: Option<u64> = None;
    let mut b: usize = 1;
    let mut modulus: Option<String> = None;
    for part in spec.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let (key, value) = part
            .split_once('=')
            .ok_or_else(|| ParseError(format!("bad field spec component '{part}'")))?;
        match key.trim() {
            "p" => {
                p = Some(
                    value
                        .trim()
                        .parse()
                        .map_err(|_| ParseError(format!("bad p '{value}'")))?,
                )
            }
            "b" => {
                b = value
                    .trim()
                    .parse()
                    .map_err(|_| ParseError(format!("bad b '{value}'")))?
            }
            "mod" => modulus = Some(value.trim().to_string()),
            other => return err(format!("unknown field spec key '{other}'")),
        }
    }
    let p = p.ok_or_else(|| ParseError("field spec needs p=".into()))?;
    let prime = Field::prime(p).map_err(|e| ParseError(e.to_string()))?;
    let modulus_poly = match &modulus {
        Some(text) => Some(parse_modulus(&prime, text)?),
        None => None,
    };
    Field::new(p, b, modulus_poly.as_ref()).map_err(|e| ParseError(e.to_string()))
}

/// Canonical field spec string for a field.
pub fn field_spec_string(field: &Field) -> String {
    match field.modulus_coeffs() {
        None => format!("p={}", field.characteristic()),
        Some(coeffs) => format!(
            "p={},b={},mod={}",
            field.characteristic(),
            field.extension_degree(),
            modulus_string(coeffs)
        ),
    }
}

/// Modulus polynomial in `x^2+2` style, highest degree first.
pub fn modulus_string(coeffs: &[u64]) -> String {
    let mut terms = Vec::new();
    for (i, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        terms.push(match (i, c) {
            (0, c) => format!("{c}"),
            (1, 1) => "x".to_string(),
            (1, c) => format!("{c}*x"),
            (i, 1) => format!("x^{i}"),
            (i, c) => format!("{c}*x^{i}"),
        });
    }
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join("+")
    }
}

/// Parses a polynomial over the prime field from `x^2+2` style text.
fn parse_modulus(prime: &Field, text: &str) -> Result<Polynomial, ParseError> {
    let mut coeffs: Vec<u64> = Vec::new();
    for term in text.split('+') {
        let (c, d) = parse_term(term.trim(), 'x')?;
        if coeffs.len() <= d {
            coeffs.resize(d + 1, 0);
        }
        coeffs[d] += c;
    }
    Ok(Polynomial::from_u64_coeffs(prime, &coeffs))
}

/// One monomial `c`, `x`, `c*x`, `x^k`, `c*x^k` (asterisk optional).
fn parse_term(term: &str, var: char) -> Result<(u64, usize), ParseError> {
    if term.is_empty() {
        return err("empty term");
    }
    match term.find(var) {
        None => {
            let c = term
                .parse()
                .map_err(|_| ParseError(format!("bad coefficient '{term}'")))?;
            Ok((c, 0))
        }
        Some(pos) => {
            let head = term[..pos].trim().trim_end_matches('*').trim();
            let c = if head.is_empty() {
                1
            } else {
                head.parse()
                    .map_err(|_| ParseError(format!("bad coefficient '{head}'")))?
            };
            let tail = &term[pos + var.len_utf8()..];
            let d = if tail.is_empty() {
                1
            } else {
                let exp = tail
                    .strip_prefix('^')
                    .ok_or_else(|| ParseError(format!("bad exponent '{tail}'")))?;
                exp.parse()
                    .map_err(|_| ParseError(format!("bad exponent '{exp}'")))?
            };
            Ok((c, d))
        }
    }
}

// ---------------------------------------------------------------------------
// Elements and evaluation points.
// ---------------------------------------------------------------------------

/// Element as a JSON array of base-p coordinates, low degree first.
pub fn element_to_json(e: &FieldElement) -> Value {
    Value::Array(e.coeffs().iter().map(|&c| json!(c)).collect())
}

/// Accepts an integer, a coordinate array, or a textual form like `1+2*t`.
pub fn element_from_json(field: &Field, v: &Value) -> Result<FieldElement, ParseError> {
    match v {
        Value::Number(n) => {
            let c = n
                .as_u64()
                .ok_or_else(|| ParseError(format!("bad element {n}")))?;
            Ok(field.from_u64(c))
        }
        Value::Array(items) => {
            let coeffs: Result<Vec<u64>, ParseError> = items
                .iter()
                .map(|x| {
                    x.as_u64()
                        .ok_or_else(|| ParseError(format!("bad coordinate {x}")))
                })
                .collect();
            field
                .element(&coeffs?)
                .map_err(|e| ParseError(e.to_string()))
        }
        Value::String(s) => parse_element(field, s),
        other => err(format!("bad element encoding {other}")),
    }
}

/// Parses `3`, `t`, `2*t`, `1+t`, `3+2*t+t^2`, or a coordinate list `3,0`.
pub fn parse_element(field: &Field, text: &str) -> Result<FieldElement, ParseError> {
    let text = text.trim();
    if text.contains(',') {
        let coeffs: Result<Vec<u64>, ParseError> = text
            .split(',')
            .map(|c| {
                c.trim()
                    .parse()
                    .map_err(|_| ParseError(format!("bad coordinate '{c}'")))
            })
            .collect();
        return field
            .element(&coeffs?)
            .map_err(|e| ParseError(e.to_string()));
    }
    let mut coeffs: Vec<u64> = Vec::new();
    for term in text.split('+') {
        let (c, d) = parse_term(term.trim(), 't')?;
        if coeffs.len() <= d {
            coeffs.resize(d + 1, 0);
        }
        coeffs[d] += c;
    }
    field
        .element(&coeffs)
        .map_err(|e| ParseError(e.to_string()))
}

/// Evaluation point: an element encoding or the token `inf`.
pub fn eval_point_from_json(field: &Field, v: &Value) -> Result<EvalPoint, ParseError> {
    if let Value::String(s) = v {
        if s.trim() == "inf" {
            return Ok(EvalPoint::Infinity);
        }
    }
    Ok(EvalPoint::Finite(element_from_json(field, v)?))
}

pub fn eval_point_to_json(pt: &EvalPoint) -> Value {
    match pt {
        EvalPoint::Infinity => json!("inf"),
        EvalPoint::Finite(a) => element_to_json(a),
    }
}

/// Parses a comma-separated list of points, `inf` allowed: `1,2,3,inf`.
pub fn parse_point_list(field: &Field, text: &str) -> Result<Vec<EvalPoint>, ParseError> {
    text.split(',')
        .map(|part| {
            let part = part.trim();
            if part == "inf" {
                Ok(EvalPoint::Infinity)
            } else {
                Ok(EvalPoint::Finite(parse_element(field, part)?))
            }
        })
        .collect()
}

/// Parses a comma-separated list of finite elements.
pub fn parse_element_list(field: &Field, text: &str) -> Result<Vec<FieldElement>, ParseError> {
    text.split(',')
        .map(|part| parse_element(field, part.trim()))
        .collect()
}

// ---------------------------------------------------------------------------
// Matrices and codes.
// ---------------------------------------------------------------------------

pub fn matrix_to_json(m: &Matrix) -> Value {
    let entries: Vec<Value> = m.entries().iter().map(element_to_json).collect();
    json!({
        "cols": m.cols(),
        "entries": entries,
        "field": field_spec_string(m.field()),
        "rows": m.rows(),
    })
}

pub fn matrix_from_json(v: &Value) -> Result<Matrix, ParseError> {
    let obj = v
        .as_object()
        .ok_or_else(|| ParseError("matrix must be an object".into()))?;
    let field_spec = obj
        .get("field")
        .and_then(Value::as_str)
        .ok_or_else(|| ParseError("matrix needs a field spec".into()))?;
    let field = parse_field_spec(field_spec)?;
    let rows = obj
        .get("rows")
        .and_then(Value::as_u64)
        .ok_or_else(|| ParseError("matrix needs rows".into()))? as usize;
    let cols = obj
        .get("cols")
        .and_then(Value::as_u64)
        .ok_or_else(|| ParseError("matrix needs cols".into()))? as usize;
    let entries = obj
        .get("entries")
        .and_then(Value::as_array)
        .ok_or_else(|| ParseError("matrix needs entries".into()))?;
    if entries.len() != rows * cols {
        return err(format!(
            "matrix has {} entries, expected {}",
            entries.len(),
            rows * cols
        ));
    }
    let data = entries
        .iter()
        .map(|e| element_from_json(&field, e))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Matrix::new(&field, rows, cols, data))
}

/// Polynomial matrix: entries are coefficient arrays (low degree first) of
/// element encodings.
pub fn poly_matrix_to_json(m: &crate::linalg::PolyMatrix) -> Value {
    let mut entries = Vec::with_capacity(m.rows() * m.cols());
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            let coeffs: Vec<Value> = m.at(i, j).coeffs().iter().map(element_to_json).collect();
            entries.push(Value::Array(coeffs));
        }
    }
    json!({
        "cols": m.cols(),
        "entries": entries,
        "field": field_spec_string(m.field()),
        "rows": m.rows(),
    })
}

pub fn poly_matrix_from_json(v: &Value) -> Result<crate::linalg::PolyMatrix, ParseError> {
    let obj = v
        .as_object()
        .ok_or_else(|| ParseError("polynomial matrix must be an object".into()))?;
    let field = parse_field_spec(
        obj.get("field")
            .and_then(Value::as_str)
            .ok_or_else(|| ParseError("polynomial matrix needs a field spec".into()))?,
    )?;
    let rows = obj
        .get("rows")
        .and_then(Value::as_u64)
        .ok_or_else(|| ParseError("polynomial matrix needs rows".into()))? as usize;
    let cols = obj
        .get("cols")
        .and_then(Value::as_u64)
        .ok_or_else(|| ParseError("polynomial matrix needs cols".into()))? as usize;
    let entries = obj
        .get("entries")
        .and_then(Value::as_array)
        .ok_or_else(|| ParseError("polynomial matrix needs entries".into()))?;
    if entries.len() != rows * cols {
        return err(format!(
            "polynomial matrix has {} entries, expected {}",
            entries.len(),
            rows * cols
        ));
    }
    let data = entries
        .iter()
        .map(|entry| {
            let coeffs = entry
                .as_array()
                .ok_or_else(|| ParseError("polynomial entry must be a coefficient array".into()))?
                .iter()
                .map(|c| element_from_json(&field, c))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(Polynomial::from_coeffs(&field, coeffs))
        })
        .collect::<Result<Vec<_>, ParseError>>()?;
    Ok(crate::linalg::PolyMatrix::new(&field, rows, cols, data))
}

/// Code document: a named matrix, with optional provenance passthrough.
pub fn code_to_json(name: &str, generator: &Matrix, provenance: Option<Value>) -> Value {
    let mut obj = matrix_to_json(generator);
    let map = obj.as_object_mut().expect("matrix JSON is an object");
    map.insert("name".into(), json!(name));
    if let Some(p) = provenance {
        map.insert("provenance".into(), p);
    }
    obj
}

pub fn code_from_json(v: &Value) -> Result<(String, Matrix), ParseError> {
    let name = v
        .get("name")
        .and_then(Value::as_str)
        .unwrap_or("unnamed")
        .to_string();
    Ok((name, matrix_from_json(v)?))
}

// ---------------------------------------------------------------------------
// Reports and GTRS specs.
// ---------------------------------------------------------------------------

fn opt_usize(v: Option<usize>) -> Value {
    match v {
        Some(x) => json!(x),
        None => Value::Null,
    }
}

pub fn report_to_json(report: &ClassificationReport) -> Value {
    json!({
        "branch": report.grs_branch.map(|b| b.to_string()),
        "dual_square_dim": opt_usize(report.dual_square_dim),
        "grs_verdict": report.grs_verdict.map(|v| v.to_string()),
        "gtrs_recognized": report
            .gtrs_recognized
            .as_ref()
            .map(gtrs_spec_to_json)
            .unwrap_or(Value::Null),
        "is_mds": report.is_mds,
        "square_dim": opt_usize(report.square_dim),
        "witness": report
            .witness
            .as_ref()
            .map(|w| json!(w))
            .unwrap_or(Value::Null),
    })
}

pub fn gtrs_spec_to_json(spec: &GtrsSpec) -> Value {
    let hooks: Vec<Value> = spec
        .hooks()
        .iter()
        .map(|h| json!([h.h, h.t, element_to_json(&h.eta)]))
        .collect();
    json!({
        "alpha": spec.alpha().iter().map(element_to_json).collect::<Vec<_>>(),
        "field": field_spec_string(spec.field()),
        "hooks": hooks,
        "k": spec.k(),
        "v": spec.v().iter().map(element_to_json).collect::<Vec<_>>(),
    })
}

pub fn gtrs_spec_from_json(v: &Value) -> Result<GtrsSpec, ParseError> {
    let field_spec = v
        .get("field")
        .and_then(Value::as_str)
        .ok_or_else(|| ParseError("GTRS spec needs a field".into()))?;
    let field = parse_field_spec(field_spec)?;
    let alpha = v
        .get("alpha")
        .and_then(Value::as_array)
        .ok_or_else(|| ParseError("GTRS spec needs alpha".into()))?
        .iter()
        .map(|x| element_from_json(&field, x))
        .collect::<Result<Vec<_>, _>>()?;
    let vv = v
        .get("v")
        .and_then(Value::as_array)
        .ok_or_else(|| ParseError("GTRS spec needs v".into()))?
        .iter()
        .map(|x| element_from_json(&field, x))
        .collect::<Result<Vec<_>, _>>()?;
    let k = v
        .get("k")
        .and_then(Value::as_u64)
        .ok_or_else(|| ParseError("GTRS spec needs k".into()))? as usize;
    let hooks = v
        .get("hooks")
        .and_then(Value::as_array)
        .map(|items| {
            items
                .iter()
                .map(|item| {
                    let triple = item
                        .as_array()
                        .ok_or_else(|| ParseError("hook must be [h, t, eta]".into()))?;
                    if triple.len() != 3 {
                        return err("hook must be [h, t, eta]");
                    }
                    let h = triple[0]
                        .as_u64()
                        .ok_or_else(|| ParseError("bad hook h".into()))?
                        as usize;
                    let t = triple[1]
                        .as_u64()
                        .ok_or_else(|| ParseError("bad hook t".into()))?
                        as usize;
                    let eta = element_from_json(&field, &triple[2])?;
                    Ok(Hook { h, t, eta })
                })
                .collect::<Result<Vec<_>, ParseError>>()
        })
        .transpose()?
        .unwrap_or_default();
    GtrsSpec::new(&field, alpha, vv, k, hooks).map_err(|e| ParseError(e.to_string()))
}

pub fn recognition_to_json(rec: &Recognition) -> Value {
    json!({
        "a": matrix_to_json(&rec.a),
        "a_inv": matrix_to_json(&rec.transform),
        "b": matrix_to_json(&rec.b),
        "canonical": matrix_to_json(&rec.canonical),
        "recognized": true,
        "spec": gtrs_spec_to_json(&rec.spec),
        "twist": matrix_to_json(&crate::gtrs::twist_matrix(&rec.spec)),
    })
}

/// Serializes any value with sorted keys and no extra whitespace; parsing and
/// re-serializing the output is byte-stable.
pub fn to_canonical_string(v: &Value) -> String {
    serde_json::to_string(v).expect("JSON serialization cannot fail")
}

/// Sorted-key object from key/value pairs; useful for ad-hoc documents.
pub fn object(pairs: Vec<(&str, Value)>) -> Value {
    let mut map = Map::new();
    for (k, v) in pairs {
        map.insert(k.to_string(), v);
    }
    Value::Object(map)
}
