use serde_json::{json, Value};

use super::{Body, ChainMap, Complex, ComplexSes, Link, Term, Witness};
use crate::algebra::{ModMap, Module};
use crate::error::{Error, Result};
use crate::exactlin::{Field, Mat};

fn bad(what: &str) -> Error {
    Error::Other(format!("malformed witness JSON: {what}"))
}

pub fn mat_to_json(m: &Mat) -> Value {
    json!({
        "rows": m.rows(),
        "cols": m.cols(),
        "entries": m.entries().iter().map(|s| s.to_string()).collect::<Vec<_>>(),
    })
}

pub fn mat_from_json(v: &Value, field: Field) -> Result<Mat> {
    let rows = v["rows"].as_u64().ok_or_else(|| bad("matrix rows"))? as usize;
    let cols = v["cols"].as_u64().ok_or_else(|| bad("matrix cols"))? as usize;
    let entries = v["entries"].as_array().ok_or_else(|| bad("matrix entries"))?;
    if entries.len() != rows * cols {
        return Err(bad("matrix entry count"));
    }
    let data = entries
        .iter()
        .map(|e| field.parse_scalar(e.as_str().ok_or_else(|| bad("matrix entry"))?))
        .collect::<Result<Vec<_>>>()?;
    Ok(Mat::from_vec(field, rows, cols, data))
}

pub fn module_to_json(m: &Module) -> Value {
    json!({ "dims": m.dims, "maps": m.maps.iter().map(mat_to_json).collect::<Vec<_>>() })
}

pub fn module_from_json(v: &Value, field: Field) -> Result<Module> {
    let dims = v["dims"]
        .as_array()
        .ok_or_else(|| bad("module dims"))?
        .iter()
        .map(|d| d.as_u64().map(|d| d as usize).ok_or_else(|| bad("module dim")))
        .collect::<Result<Vec<_>>>()?;
    let maps = list(&v["maps"], "module maps")?.iter().map(|m| mat_from_json(m, field)).collect::<Result<_>>()?;
    Ok(Module { field, dims, maps })
}

fn list<'v>(v: &'v Value, what: &str) -> Result<&'v Vec<Value>> {
    v.as_array().ok_or_else(|| bad(what))
}

fn map_to_json(m: &ModMap) -> Value {
    Value::Array(m.blocks.iter().map(mat_to_json).collect())
}

fn map_from_json(v: &Value, field: Field) -> Result<ModMap> {
    Ok(ModMap { blocks: list(v, "map blocks")?.iter().map(|b| mat_from_json(b, field)).collect::<Result<_>>()? })
}

pub fn complex_to_json(x: &Complex) -> Value {
    json!({
        "lo": x.lo,
        "objects": x.objects.iter().map(module_to_json).collect::<Vec<_>>(),
        "diffs": x.diffs.iter().map(map_to_json).collect::<Vec<_>>(),
    })
}

pub fn complex_from_json(v: &Value, field: Field) -> Result<Complex> {
    let lo = v["lo"].as_i64().ok_or_else(|| bad("complex lo"))?;
    let objects = list(&v["objects"], "objects")?.iter().map(|m| module_from_json(m, field)).collect::<Result<_>>()?;
    let diffs = list(&v["diffs"], "diffs")?.iter().map(|m| map_from_json(m, field)).collect::<Result<_>>()?;
    Complex::new(lo, objects, diffs)
}

fn chain_to_json(m: &ChainMap) -> Value {
    json!({ "lo": m.lo, "maps": m.maps.iter().map(map_to_json).collect::<Vec<_>>() })
}

fn chain_from_json(v: &Value, field: Field) -> Result<ChainMap> {
    let lo = v["lo"].as_i64().ok_or_else(|| bad("chain map lo"))?;
    let maps = list(&v["maps"], "chain maps")?.iter().map(|m| map_from_json(m, field)).collect::<Result<_>>()?;
    Ok(ChainMap { lo, maps })
}

fn link_to_json(l: &Link) -> Value {
    match l {
        Link::Equal => json!({ "kind": "equal" }),
        Link::Qiso { from } => json!({ "kind": "qiso", "from": chain_to_json(from) }),
        Link::Retract { to, from } => {
            json!({ "kind": "retract", "to": chain_to_json(to), "from": chain_to_json(from) })
        }
    }
}

fn link_from_json(v: &Value, field: Field) -> Result<Link> {
    match v["kind"].as_str() {
        Some("equal") => Ok(Link::Equal),
        Some("qiso") => Ok(Link::Qiso { from: chain_from_json(&v["from"], field)? }),
        Some("retract") => {
            Ok(Link::Retract { to: chain_from_json(&v["to"], field)?, from: chain_from_json(&v["from"], field)? })
        }
        _ => Err(bad("link kind")),
    }
}

/// A deterministic JSON tree: `leaf` nodes carry `(degree, summand,
/// multiplicity)` lists, `node`s carry their sequence, every matrix is stored
/// with its shape and row-major entries.
pub fn witness_to_json(w: &Witness) -> Value {
    let mut out = match &w.body {
        Body::Leaf(terms) => json!({
            "kind": "leaf",
            "terms": terms
                .iter()
                .map(|t| json!({ "degree": t.degree, "summand": t.summand, "multiplicity": t.multiplicity }))
                .collect::<Vec<_>>(),
        }),
        Body::Node { ses, left, right } => json!({
            "kind": "node",
            "ses": {
                "a": complex_to_json(&ses.a),
                "b": complex_to_json(&ses.b),
                "c": complex_to_json(&ses.c),
                "f": chain_to_json(&ses.f),
                "g": chain_to_json(&ses.g),
                "section": chain_to_json(&ses.section),
            },
            "left": witness_to_json(left),
            "right": witness_to_json(right),
        }),
        Body::Wrap(inner) => json!({ "kind": "wrap", "inner": witness_to_json(inner) }),
    };
    out["depth"] = json!(w.depth());
    out["target"] = complex_to_json(&w.target);
    out["link"] = link_to_json(&w.link);
    out
}

pub fn witness_from_json(v: &Value, field: Field) -> Result<Witness> {
    let target = complex_from_json(&v["target"], field)?;
    let link = link_from_json(&v["link"], field)?;
    let body = match v["kind"].as_str() {
        Some("leaf") => Body::Leaf(
            list(&v["terms"], "terms")?
                .iter()
                .map(|t| {
                    Ok(Term {
                        degree: t["degree"].as_i64().ok_or_else(|| bad("term degree"))?,
                        summand: t["summand"].as_u64().ok_or_else(|| bad("term summand"))? as usize,
                        multiplicity: t["multiplicity"].as_u64().ok_or_else(|| bad("term multiplicity"))? as usize,
                    })
                })
                .collect::<Result<_>>()?,
        ),
        Some("node") => {
            let s = &v["ses"];
            let ses = ComplexSes {
                a: complex_from_json(&s["a"], field)?,
                b: complex_from_json(&s["b"], field)?,
                c: complex_from_json(&s["c"], field)?,
                f: chain_from_json(&s["f"], field)?,
                g: chain_from_json(&s["g"], field)?,
                section: chain_from_json(&s["section"], field)?,
            };
            Body::Node {
                ses: Box::new(ses),
                left: Box::new(witness_from_json(&v["left"], field)?),
                right: Box::new(witness_from_json(&v["right"], field)?),
            }
        }
        Some("wrap") => Body::Wrap(Box::new(witness_from_json(&v["inner"], field)?)),
        _ => return Err(bad("witness kind")),
    };
    Ok(Witness { target, body, link })
}
