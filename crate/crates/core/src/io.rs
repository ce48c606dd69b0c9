//! JSON formats for hypergraphs, complexes, and construction scripts.
//!
//! Hypergraph: `{"n": 5, "d": 3, "edges": [[0,1,2], ...]}` on vertices
//! `0..n`. Complex: `{"ground": 4, "facets": [[0,1], ...], "void": false}`
//! on `0..ground`. Either may carry `"vertices"` (a proper subset of the
//! range, as produced by `induced` or `link`) and `"labels"` (one name per id
//! in `0..n`). Every vertex list must be strictly ascending.

use serde::Deserialize;
use serde_json::{json, Map, Value};

use crate::chordality::ConstructionScript;
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::vertex_set::{VertexSet, MAX_VERTICES};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypergraphDoc {
    pub hypergraph: Hypergraph,
    pub labels: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexDoc {
    pub complex: SimplicialComplex,
    pub labels: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Document {
    Hypergraph(HypergraphDoc),
    Complex(ComplexDoc),
    Script(ConstructionScript),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawHypergraph {
    n: usize,
    d: usize,
    edges: Vec<Vec<usize>>,
    vertices: Option<Vec<usize>>,
    labels: Option<Vec<String>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawComplex {
    ground: usize,
    facets: Vec<Vec<usize>>,
    void: bool,
    vertices: Option<Vec<usize>>,
    labels: Option<Vec<String>>,
}

fn input_error(e: serde_json::Error) -> Error {
    Error::Input(e.to_string())
}

/// Checks ascending order and range, in that order.
fn parse_list(list: &[usize], bound: usize) -> Result<VertexSet> {
    if list.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::NotAscending { list: list.to_vec() });
    }
    if let Some(&v) = list.iter().find(|&&v| v >= bound) {
        return Err(Error::VertexOutOfRange { vertex: v, bound });
    }
    Ok(list.iter().copied().collect())
}

fn parse_ground(n: usize, vertices: Option<&[usize]>) -> Result<VertexSet> {
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices { n });
    }
    match vertices {
        None => VertexSet::range(n),
        Some(list) => parse_list(list, n),
    }
}

fn check_labels(labels: &Option<Vec<String>>, n: usize) -> Result<()> {
    match labels {
        Some(l) if l.len() != n => Err(Error::Input(format!("{} labels given for {n} vertex ids", l.len()))),
        _ => Ok(()),
    }
}

pub fn hypergraph_from_value(v: Value) -> Result<HypergraphDoc> {
    let raw: RawHypergraph = serde_json::from_value(v).map_err(input_error)?;
    let vertices = parse_ground(raw.n, raw.vertices.as_deref())?;
    check_labels(&raw.labels, raw.n)?;
    if raw.d == 0 {
        return Err(Error::ZeroUniformity);
    }
    let mut edges = Vec::with_capacity(raw.edges.len());
    for list in &raw.edges {
        let e = parse_list(list, raw.n)?;
        if e.len() != raw.d {
            return Err(Error::EdgeCardinality { edge: list.clone(), expected: raw.d, found: list.len() });
        }
        if let Some(v) = e.difference(vertices).min() {
            return Err(Error::VertexOutOfRange { vertex: v, bound: raw.n });
        }
        edges.push(e);
    }
    let hypergraph = Hypergraph::new(vertices, raw.d, edges)?;
    Ok(HypergraphDoc { hypergraph, labels: raw.labels })
}

pub fn complex_from_value(v: Value) -> Result<ComplexDoc> {
    let raw: RawComplex = serde_json::from_value(v).map_err(input_error)?;
    let ground = parse_ground(raw.ground, raw.vertices.as_deref())?;
    check_labels(&raw.labels, raw.ground)?;
    if raw.void != raw.facets.is_empty() {
        return Err(Error::VoidMismatch { void: raw.void, facets: raw.facets.len() });
    }
    let facets = raw.facets.iter().map(|f| parse_list(f, raw.ground)).collect::<Result<Vec<_>>>()?;
    for (k, f) in facets.iter().enumerate() {
        if facets[..k].contains(f) {
            return Err(Error::Input(format!("facet {f} is listed twice")));
        }
    }
    let complex = SimplicialComplex::new(ground, facets)?;
    Ok(ComplexDoc { complex, labels: raw.labels })
}

pub fn script_from_value(v: Value) -> Result<ConstructionScript> {
    serde_json::from_value(v).map_err(input_error)
}

/// Picks the format by its distinguishing key: `edges`, `facets`, or `moves`.
pub fn document_from_value(v: Value) -> Result<Document> {
    let obj = v.as_object().ok_or_else(|| Error::Input("expected a JSON object".into()))?;
    if obj.contains_key("edges") {
        hypergraph_from_value(v).map(Document::Hypergraph)
    } else if obj.contains_key("facets") {
        complex_from_value(v).map(Document::Complex)
    } else if obj.contains_key("moves") {
        script_from_value(v).map(Document::Script)
    } else {
        Err(Error::Input("unrecognized document: expected an \"edges\", \"facets\", or \"moves\" key".into()))
    }
}

pub fn parse_document(text: &str) -> Result<Document> {
    document_from_value(serde_json::from_str(text).map_err(input_error)?)
}

pub fn set_to_value(v: VertexSet) -> Value {
    Value::from(v.to_vec())
}

fn extras(out: &mut Map<String, Value>, ground: VertexSet, n: usize, labels: Option<&[String]>) {
    if ground != VertexSet::range(n).expect("bound is at most 64") {
        out.insert("vertices".into(), set_to_value(ground));
    }
    if let Some(l) = labels {
        let mut l = l.to_vec();
        l.resize(n.max(l.len()), String::new());
        out.insert("labels".into(), json!(l));
    }
}

pub fn hypergraph_to_value(h: &Hypergraph, labels: Option<&[String]>) -> Value {
    let n = labels.map_or(0, |l| l.len()).max(h.vertices().label_bound());
    let mut out = Map::new();
    out.insert("n".into(), json!(n));
    out.insert("d".into(), json!(h.d()));
    out.insert("edges".into(), Value::from(h.edges().iter().map(|&e| set_to_value(e)).collect::<Vec<_>>()));
    extras(&mut out, h.vertices(), n, labels);
    Value::Object(out)
}

pub fn complex_to_value(c: &SimplicialComplex, labels: Option<&[String]>) -> Value {
    let n = labels.map_or(0, |l| l.len()).max(c.ground().label_bound());
    let mut out = Map::new();
    out.insert("ground".into(), json!(n));
    out.insert("facets".into(), Value::from(c.facets().iter().map(|&f| set_to_value(f)).collect::<Vec<_>>()));
    out.insert("void".into(), json!(c.is_void()));
    extras(&mut out, c.ground(), n, labels);
    Value::Object(out)
}
