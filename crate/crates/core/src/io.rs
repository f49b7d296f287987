//! JSON documents for complexes and graphs.
//!
//! Complex: `{"n":4,"facets":[[1,2],[3,4]]}`; the void complex adds
//! `"void":true` to an empty facet list. Graph: `{"n":3,"edges":[[1,2],[2,3]]}`.
//! Writers emit compact JSON with facets in canonical order, so equal
//! instances produce identical bytes.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Serialize, Deserialize)]
struct ComplexDoc {
    n: usize,
    facets: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    void: bool,
}

#[derive(Serialize, Deserialize)]
struct GraphDoc {
    n: usize,
    edges: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Document {
    Complex(SimplicialComplex),
    Graph(Graph),
}

impl Document {
    pub fn to_json(&self) -> String {
        match self {
            Document::Complex(c) => complex_to_json(c),
            Document::Graph(g) => graph_to_json(g),
        }
    }
}

fn strictly_increasing(v: &[usize]) -> bool {
    v.windows(2).all(|w| w[0] < w[1])
}

/// Parses a complex or graph document, telling them apart by the `facets`
/// or `edges` field.
pub fn parse_document(text: &str) -> Result<Document> {
    let value: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let has = |k: &str| value.get(k).is_some();
    match (has("facets"), has("edges")) {
        (true, false) => parse_complex_value(value).map(Document::Complex),
        (false, true) => parse_graph_value(value).map(Document::Graph),
        (true, true) => Err(Error::Parse(
            "document has both `facets` and `edges`".into(),
        )),
        (false, false) => Err(Error::Parse(
            "document needs a `facets` or `edges` field".into(),
        )),
    }
}

pub fn parse_complex(text: &str) -> Result<SimplicialComplex> {
    match parse_document(text)? {
        Document::Complex(c) => Ok(c),
        Document::Graph(_) => Err(Error::Parse("expected a complex document".into())),
    }
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    match parse_document(text)? {
        Document::Graph(g) => Ok(g),
        Document::Complex(_) => Err(Error::Parse("expected a graph document".into())),
    }
}

fn parse_complex_value(value: Value) -> Result<SimplicialComplex> {
    let doc: ComplexDoc = serde_json::from_value(value).map_err(|e| Error::Parse(e.to_string()))?;
    if doc.void {
        if !doc.facets.is_empty() {
            return Err(Error::Parse("a void complex has no facets".into()));
        }
        return SimplicialComplex::void(doc.n);
    }
    if let Some(bad) = doc.facets.iter().find(|f| !strictly_increasing(f)) {
        return Err(Error::Parse(format!(
            "facet {bad:?} is not strictly increasing"
        )));
    }
    if doc.facets.is_empty() {
        return SimplicialComplex::irrelevant(doc.n);
    }
    SimplicialComplex::from_vertex_lists(doc.n, &doc.facets)
}

fn parse_graph_value(value: Value) -> Result<Graph> {
    let doc: GraphDoc = serde_json::from_value(value).map_err(|e| Error::Parse(e.to_string()))?;
    let mut edges = Vec::with_capacity(doc.edges.len());
    for e in &doc.edges {
        match e.as_slice() {
            [a, b] if a < b => edges.push((*a, *b)),
            _ => {
                return Err(Error::Parse(format!(
                    "edge {e:?} must be an increasing pair"
                )))
            }
        }
    }
    Graph::new(doc.n, &edges)
}

pub fn complex_to_json(complex: &SimplicialComplex) -> String {
    let facets = if complex.is_irrelevant() {
        Vec::new()
    } else {
        complex.facet_vertex_lists()
    };
    let doc = ComplexDoc {
        n: complex.n(),
        facets,
        void: complex.is_void(),
    };
    serde_json::to_string(&doc).expect("documents serialize")
}

pub fn graph_to_json(graph: &Graph) -> String {
    let doc = GraphDoc {
        n: graph.n(),
        edges: graph.edges().into_iter().map(|(a, b)| vec![a, b]).collect(),
    };
    serde_json::to_string(&doc).expect("documents serialize")
}
