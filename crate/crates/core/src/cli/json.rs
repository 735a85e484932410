//! JSON encoding of cones, pseudo-cones, faces and measures. Rationals are
//! written as `"p/q"` strings; inputs may also use JSON integers or
//! decimal strings.

use std::sync::Arc;

use serde_json::{json, Map, Value};

use crate::cone::PolyCone;
use crate::copolarity::FaceClass;
use crate::error::Error;
use crate::linalg::{format_rational, parse_rational, Halfspace, QVec, Rational};
use crate::minkowski::{AtomicMeasure, SolverState};
use crate::polyhedra::{Face, HRep};
use crate::pseudocone::PseudoCone;

pub const SCHEMA_VERSION: u64 = 1;

/// Failure while reading input.
#[derive(Debug)]
pub enum InputError {
    /// Unreadable or structurally malformed JSON.
    Malformed(String),
    /// Well-formed input violating a geometric invariant.
    Invalid(Error),
}

impl From<Error> for InputError {
    fn from(e: Error) -> Self {
        InputError::Invalid(e)
    }
}

pub type InputResult<T> = std::result::Result<T, InputError>;

fn malformed(msg: impl Into<String>) -> InputError {
    InputError::Malformed(msg.into())
}

pub fn rational(x: &Rational) -> Value {
    Value::String(format_rational(x))
}

pub fn vector(v: &QVec) -> Value {
    Value::Array(v.iter().map(rational).collect())
}

pub fn vectors(vs: &[QVec]) -> Value {
    Value::Array(vs.iter().map(vector).collect())
}

pub fn floats(v: &[f64]) -> Value {
    json!(v)
}

pub fn halfspace(h: &Halfspace) -> Value {
    json!({"normal": vector(&h.normal), "offset": rational(&h.offset)})
}

pub fn cone(c: &PolyCone) -> Value {
    json!({"generators": vectors(c.generators())})
}

/// Full description: cone, facets, vertices and rays.
pub fn pseudocone(k: &PseudoCone) -> Value {
    json!({
        "v": SCHEMA_VERSION,
        "cone": cone(k.cone()),
        "halfspaces": Value::Array(k.facets().iter().map(halfspace).collect()),
        "vertices": vectors(k.vertices()),
        "rays": vectors(k.rays()),
    })
}

pub fn face(index: usize, f: &Face, class: FaceClass) -> Value {
    json!({
        "index": index,
        "dim": f.dim,
        "bounded": f.bounded,
        "class": class.tag(),
        "vertices": vectors(&f.vertices),
        "rays": vectors(&f.rays),
    })
}

pub fn measure(m: &AtomicMeasure) -> Value {
    Value::Array(
        m.atoms()
            .iter()
            .map(|a| json!({"dir": a.direction, "weight": a.weight}))
            .collect(),
    )
}

pub fn solver_state(s: &SolverState) -> Value {
    json!({
        "normals": s.normals,
        "hbar": s.hbar,
        "volume": s.volume,
        "facet_areas": s.facet_areas,
        "lambda": s.lambda,
        "iterations": s.iterations,
        "residual": s.residual,
    })
}

/// The `diagnostics` block attached to measure, volume and solver outputs.
pub fn diagnostics(
    iterations: Option<usize>,
    residual: Option<f64>,
    lambda: Option<f64>,
    volume: Option<f64>,
) -> Value {
    json!({
        "iterations": iterations,
        "residual": residual,
        "lambda": lambda,
        "volume": volume.map(finite_or_string),
    })
}

/// JSON has no infinity; unbounded values are written as the string `"inf"`.
pub fn finite_or_string(x: f64) -> Value {
    if x.is_finite() {
        json!(x)
    } else {
        json!("inf")
    }
}

pub fn parse(text: &str) -> InputResult<Value> {
    serde_json::from_str(text).map_err(|e| malformed(format!("invalid JSON: {e}")))
}

fn field<'a>(obj: &'a Value, key: &str) -> InputResult<&'a Value> {
    obj.get(key)
        .ok_or_else(|| malformed(format!("missing field \"{key}\"")))
}

fn check_version(obj: &Value) -> InputResult<()> {
    match obj.get("v") {
        None => Ok(()),
        Some(v) if v.as_u64() == Some(SCHEMA_VERSION) => Ok(()),
        Some(v) => Err(malformed(format!("unsupported schema version {v}"))),
    }
}

pub fn parse_rational_value(v: &Value) -> InputResult<Rational> {
    let text = match v {
        Value::String(s) => s.clone(),
        Value::Number(n) => n.to_string(),
        _ => return Err(malformed(format!("expected a number, got {v}"))),
    };
    parse_rational(&text).ok_or_else(|| malformed(format!("not a rational number: {text}")))
}

pub fn parse_vector(v: &Value) -> InputResult<QVec> {
    let items = v
        .as_array()
        .ok_or_else(|| malformed(format!("expected an array, got {v}")))?;
    Ok(QVec::new(
        items
            .iter()
            .map(parse_rational_value)
            .collect::<InputResult<_>>()?,
    ))
}

pub fn parse_vectors(v: &Value) -> InputResult<Vec<QVec>> {
    let items = v
        .as_array()
        .ok_or_else(|| malformed(format!("expected an array, got {v}")))?;
    items.iter().map(parse_vector).collect()
}

/// Comma-separated rationals, as given on the command line.
pub fn parse_vector_arg(s: &str) -> InputResult<QVec> {
    let coords = s
        .split(',')
        .map(|c| parse_rational(c).ok_or_else(|| malformed(format!("not a rational number: {c}"))))
        .collect::<InputResult<Vec<_>>>()?;
    Ok(QVec::new(coords))
}

/// `{"generators": [[...], ...]}`.
pub fn parse_cone(v: &Value) -> InputResult<PolyCone> {
    check_version(v)?;
    let gens = parse_vectors(field(v, "generators")?)?;
    Ok(PolyCone::new(gens)?)
}

/// `{"cone": ..., "halfspaces": [{"normal": [...], "offset": "p/q"}]}` or
/// `{"cone": ..., "points": [...]}`. Any `vertices` and `rays` present in
/// the input are ignored; they are recomputed.
pub fn parse_pseudocone(v: &Value) -> InputResult<PseudoCone> {
    check_version(v)?;
    let c = Arc::new(parse_cone(field(v, "cone")?)?);
    if let Some(hs) = v.get("halfspaces") {
        let items = hs
            .as_array()
            .ok_or_else(|| malformed("\"halfspaces\" must be an array"))?;
        let halfspaces = items
            .iter()
            .map(|h| {
                Ok(Halfspace::new(
                    parse_vector(field(h, "normal")?)?,
                    parse_rational_value(field(h, "offset")?)?,
                ))
            })
            .collect::<InputResult<Vec<_>>>()?;
        let h = HRep::new(c.dim(), halfspaces)?;
        return Ok(PseudoCone::validate(c, &h)?);
    }
    if let Some(points) = v.get("points") {
        return Ok(PseudoCone::from_points(c, parse_vectors(points)?)?);
    }
    Err(malformed("pseudo-cone needs \"halfspaces\" or \"points\""))
}

/// `{"atoms": [{"dir": [floats], "weight": float}]}`.
pub fn parse_measure(c: &PolyCone, v: &Value) -> InputResult<AtomicMeasure> {
    check_version(v)?;
    let items = field(v, "atoms")?
        .as_array()
        .ok_or_else(|| malformed("\"atoms\" must be an array"))?;
    let mut atoms = Vec::with_capacity(items.len());
    for a in items {
        let dir = field(a, "dir")?
            .as_array()
            .ok_or_else(|| malformed("\"dir\" must be an array"))?
            .iter()
            .map(|x| {
                x.as_f64()
                    .ok_or_else(|| malformed(format!("not a number: {x}")))
            })
            .collect::<InputResult<Vec<f64>>>()?;
        let weight = field(a, "weight")?
            .as_f64()
            .ok_or_else(|| malformed("\"weight\" must be a number"))?;
        atoms.push((dir, weight));
    }
    Ok(AtomicMeasure::new(c, atoms)?)
}

/// Instances from `{"instances": [...]}` or a bare array.
pub fn parse_instances(v: &Value) -> InputResult<Vec<PseudoCone>> {
    check_version(v)?;
    let items = match v {
        Value::Array(a) => a,
        _ => field(v, "instances")?
            .as_array()
            .ok_or_else(|| malformed("\"instances\" must be an array"))?,
    };
    items.iter().map(parse_pseudocone).collect()
}

/// Object with the schema version and the given entries.
pub fn versioned(entries: Vec<(&str, Value)>) -> Value {
    let mut m = Map::new();
    m.insert("v".into(), json!(SCHEMA_VERSION));
    for (k, v) in entries {
        m.insert(k.into(), v);
    }
    Value::Object(m)
}
