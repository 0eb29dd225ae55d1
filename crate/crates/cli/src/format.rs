//! JSON structure files: sorted keys, rationals as canonical strings, LF
//! line endings, `format_version` "1".

use std::fs;
use std::path::Path;
use std::sync::Arc;

use entwine_core::{
    BilinearForm, DoubleQuantumGroup, Element, EntwinedModule, EntwiningMap, Error, Functional, HopfAlgebraData,
    Matrix, Rat, Vector,
};
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

pub const FORMAT_VERSION: &str = "1";

/// A loaded structure file.
#[derive(Clone, Debug)]
pub enum Structure {
    Hopf(Arc<HopfAlgebraData>),
    Entwining(Arc<EntwiningMap>),
    Dqg(DoubleQuantumGroup),
    Module(EntwinedModule),
    Morphism(Matrix),
    Element(Element),
    Functional(Functional),
    Form(BilinearForm),
}

impl Structure {
    pub fn kind(&self) -> &'static str {
        match self {
            Structure::Hopf(_) => "hopf",
            Structure::Entwining(_) => "entwining",
            Structure::Dqg(_) => "dqg",
            Structure::Module(_) => "module",
            Structure::Morphism(_) => "morphism",
            Structure::Element(_) => "element",
            Structure::Functional(_) => "functional",
            Structure::Form(_) => "form",
        }
    }
}

/// Optional provenance carried alongside a structure.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Metadata {
    pub construction: Option<String>,
    pub source_sha256: Option<String>,
}

fn perr(path: &str, msg: impl std::fmt::Display) -> Error {
    Error::Parse(format!("field `{path}`: {msg}"))
}

fn rat_json(x: &Rat) -> Value {
    Value::String(x.to_string())
}

fn rat_from(v: &Value, path: &str) -> Result<Rat, Error> {
    let s = v.as_str().ok_or_else(|| perr(path, "expected a rational string"))?;
    Rat::parse_canonical(s).map_err(|e| perr(path, e))
}

pub fn vector_json(v: &[Rat]) -> Value {
    Value::Array(v.iter().map(rat_json).collect())
}

fn vector_from(v: &Value, path: &str) -> Result<Vec<Rat>, Error> {
    let arr = v.as_array().ok_or_else(|| perr(path, "expected an array"))?;
    arr.iter().enumerate().map(|(i, x)| rat_from(x, &format!("{path}[{i}]"))).collect()
}

pub fn matrix_json(m: &Matrix) -> Value {
    let rows: Vec<Value> = (0..m.rows()).map(|i| Value::Array((0..m.cols()).map(|j| rat_json(m.get(i, j))).collect())).collect();
    json!({ "rows": m.rows(), "cols": m.cols(), "entries": rows })
}

fn usize_from(v: &Value, path: &str) -> Result<usize, Error> {
    v.as_u64().map(|x| x as usize).ok_or_else(|| perr(path, "expected a non-negative integer"))
}

fn field<'a>(obj: &'a Map<String, Value>, key: &str, path: &str) -> Result<&'a Value, Error> {
    obj.get(key).ok_or_else(|| perr(&join(path, key), "missing"))
}

fn join(path: &str, key: &str) -> String {
    if path.is_empty() {
        key.to_string()
    } else {
        format!("{path}.{key}")
    }
}

fn matrix_from(v: &Value, path: &str) -> Result<Matrix, Error> {
    let obj = v.as_object().ok_or_else(|| perr(path, "expected a matrix object"))?;
    let rows = usize_from(field(obj, "rows", path)?, &join(path, "rows"))?;
    let cols = usize_from(field(obj, "cols", path)?, &join(path, "cols"))?;
    let ep = join(path, "entries");
    let entries = field(obj, "entries", path)?.as_array().ok_or_else(|| perr(&ep, "expected an array of rows"))?;
    if entries.len() != rows {
        return Err(Error::DimensionMismatch(format!("`{ep}` has {} rows, declared {rows}", entries.len())));
    }
    let mut flat = Vec::with_capacity(rows * cols);
    for (i, row) in entries.iter().enumerate() {
        let r = vector_from(row, &format!("{ep}[{i}]"))?;
        if r.len() != cols {
            return Err(Error::DimensionMismatch(format!("`{ep}[{i}]` has {} entries, declared {cols}", r.len())));
        }
        flat.extend(r);
    }
    Ok(Matrix::from_entries(rows, cols, flat))
}

fn hopf_json(h: &HopfAlgebraData) -> Value {
    json!({
        "name": h.name(),
        "dim": h.dim(),
        "basis": h.basis_names(),
        "mult": matrix_json(h.mult()),
        "unit": vector_json(h.unit().coords()),
        "comult": matrix_json(h.comult()),
        "counit": matrix_json(h.counit()),
        "antipode": matrix_json(h.antipode()),
    })
}

fn hopf_from(v: &Value, path: &str) -> Result<HopfAlgebraData, Error> {
    let obj = v.as_object().ok_or_else(|| perr(path, "expected an object"))?;
    let name = field(obj, "name", path)?.as_str().ok_or_else(|| perr(&join(path, "name"), "expected a string"))?;
    let dim = usize_from(field(obj, "dim", path)?, &join(path, "dim"))?;
    let bp = join(path, "basis");
    let basis: Vec<String> = field(obj, "basis", path)?
        .as_array()
        .ok_or_else(|| perr(&bp, "expected an array"))?
        .iter()
        .map(|x| x.as_str().map(String::from).ok_or_else(|| perr(&bp, "expected strings")))
        .collect::<Result<_, _>>()?;
    if basis.len() != dim {
        return Err(Error::DimensionMismatch(format!("`{bp}` has {} names, declared dim {dim}", basis.len())));
    }
    let m = |k: &str| matrix_from(field(obj, k, path)?, &join(path, k));
    let unit = Vector::new(vector_from(field(obj, "unit", path)?, &join(path, "unit"))?);
    let h = HopfAlgebraData::new(name, basis, m("mult")?, unit, m("comult")?, m("counit")?, m("antipode")?)?;
    Ok(h)
}

fn entwining_json(e: &EntwiningMap) -> Value {
    json!({
        "name": e.name(),
        "coalgebra": hopf_json(e.c()),
        "algebra": hopf_json(e.a()),
        "phi": matrix_json(e.phi()),
    })
}

fn entwining_from(v: &Value, path: &str) -> Result<EntwiningMap, Error> {
    let obj = v.as_object().ok_or_else(|| perr(path, "expected an object"))?;
    let c = Arc::new(hopf_from(field(obj, "coalgebra", path)?, &join(path, "coalgebra"))?);
    let a = Arc::new(hopf_from(field(obj, "algebra", path)?, &join(path, "algebra"))?);
    let phi = matrix_from(field(obj, "phi", path)?, &join(path, "phi"))?;
    let mut e = EntwiningMap::new(c, a, phi)?;
    if let Some(n) = obj.get("name").and_then(Value::as_str) {
        e = e.with_name(n);
    }
    Ok(e)
}

fn dqg_json(q: &DoubleQuantumGroup) -> Value {
    json!({ "datum": entwining_json(q.datum()), "r": matrix_json(q.rmap()) })
}

fn dqg_from(v: &Value, path: &str) -> Result<DoubleQuantumGroup, Error> {
    let obj = v.as_object().ok_or_else(|| perr(path, "expected an object"))?;
    let d = entwining_from(field(obj, "datum", path)?, &join(path, "datum"))?;
    let r = matrix_from(field(obj, "r", path)?, &join(path, "r"))?;
    DoubleQuantumGroup::new(Arc::new(d), r)
}

/// SHA-256 of the canonical serialization of a value.
pub fn digest(v: &Value) -> String {
    hex::encode(Sha256::digest(render(v).as_bytes()))
}

/// Body of a structure, without the envelope.
fn body(s: &Structure) -> Value {
    match s {
        Structure::Hopf(h) => hopf_json(h),
        Structure::Entwining(e) => entwining_json(e),
        Structure::Dqg(q) => dqg_json(q),
        Structure::Module(m) => {
            let datum = entwining_json(m.datum());
            json!({
                "datum_sha256": digest(&datum),
                "datum": datum,
                "dim": m.dim(),
                "action": matrix_json(m.action()),
                "coaction": matrix_json(m.coaction()),
            })
        }
        Structure::Morphism(g) => json!({ "map": matrix_json(g) }),
        Structure::Element(x) => json!({ "host": hopf_json(&x.host), "coords": vector_json(x.coords.coords()) }),
        Structure::Functional(f) => json!({ "host": hopf_json(&f.host), "coords": vector_json(f.coords.entries()) }),
        Structure::Form(b) => json!({
            "left": hopf_json(&b.host_left),
            "right": hopf_json(&b.host_right),
            "coords": vector_json(b.coords.entries()),
        }),
    }
}

pub fn to_value(s: &Structure, meta: &Metadata) -> Value {
    let mut obj = match body(s) {
        Value::Object(o) => o,
        _ => unreachable!("bodies are objects"),
    };
    obj.insert("format_version".into(), json!(FORMAT_VERSION));
    obj.insert("kind".into(), json!(s.kind()));
    let mut m = Map::new();
    if let Some(c) = &meta.construction {
        m.insert("construction".into(), json!(c));
    }
    if let Some(h) = &meta.source_sha256 {
        m.insert("source_sha256".into(), json!(h));
    }
    if !m.is_empty() {
        obj.insert("metadata".into(), Value::Object(m));
    }
    Value::Object(obj)
}

/// Pretty JSON with a trailing newline. Keys come out sorted because
/// `serde_json::Map` is ordered.
pub fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

pub fn from_value(v: &Value) -> Result<(Structure, Metadata), Error> {
    let obj = v.as_object().ok_or_else(|| Error::Parse("top level must be an object".into()))?;
    let version = field(obj, "format_version", "")?.as_str();
    if version != Some(FORMAT_VERSION) {
        return Err(perr("format_version", format!("expected \"{FORMAT_VERSION}\"")));
    }
    let kind = field(obj, "kind", "")?.as_str().ok_or_else(|| perr("kind", "expected a string"))?;
    let s = match kind {
        "hopf" => Structure::Hopf(Arc::new(hopf_from(v, "")?)),
        "entwining" => Structure::Entwining(Arc::new(entwining_from(v, "")?)),
        "dqg" => Structure::Dqg(dqg_from(v, "")?),
        "module" => {
            let dv = field(obj, "datum", "")?;
            if let Some(h) = obj.get("datum_sha256") {
                if h.as_str() != Some(digest(dv).as_str()) {
                    return Err(perr("datum_sha256", "does not match the embedded datum"));
                }
            }
            let d = Arc::new(entwining_from(dv, "datum")?);
            let dim = usize_from(field(obj, "dim", "")?, "dim")?;
            let action = matrix_from(field(obj, "action", "")?, "action")?;
            let coaction = matrix_from(field(obj, "coaction", "")?, "coaction")?;
            Structure::Module(EntwinedModule::new(d, dim, action, coaction)?)
        }
        "morphism" => Structure::Morphism(matrix_from(field(obj, "map", "")?, "map")?),
        "element" => {
            let host = Arc::new(hopf_from(field(obj, "host", "")?, "host")?);
            let coords = Vector::new(vector_from(field(obj, "coords", "")?, "coords")?);
            Structure::Element(Element::new(host, coords)?)
        }
        "functional" => {
            let host = Arc::new(hopf_from(field(obj, "host", "")?, "host")?);
            let coords = vector_from(field(obj, "coords", "")?, "coords")?;
            Structure::Functional(Functional::new(host, Matrix::row_vector(&coords))?)
        }
        "form" => {
            let l = Arc::new(hopf_from(field(obj, "left", "")?, "left")?);
            let r = Arc::new(hopf_from(field(obj, "right", "")?, "right")?);
            let coords = vector_from(field(obj, "coords", "")?, "coords")?;
            Structure::Form(BilinearForm::new(l, r, Matrix::row_vector(&coords))?)
        }
        other => return Err(perr("kind", format!("unknown kind {other:?}"))),
    };
    let mut meta = Metadata::default();
    if let Some(m) = obj.get("metadata").and_then(Value::as_object) {
        meta.construction = m.get("construction").and_then(Value::as_str).map(String::from);
        meta.source_sha256 = m.get("source_sha256").and_then(Value::as_str).map(String::from);
    }
    Ok((s, meta))
}

pub fn parse(text: &str) -> Result<(Structure, Metadata), Error> {
    let v: Value = serde_json::from_str(text)
        .map_err(|e| Error::Parse(format!("line {}, column {}: {e}", e.line(), e.column())))?;
    from_value(&v)
}

pub fn load(path: &Path) -> Result<(Structure, Metadata), Error> {
    let text = fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    parse(&text).map_err(|e| match e {
        Error::Parse(m) => Error::Parse(format!("{}: {m}", path.display())),
        other => other,
    })
}

pub fn save(s: &Structure, meta: &Metadata, path: &Path) -> std::io::Result<()> {
    fs::write(path, render(&to_value(s, meta)))
}
