//! Sequence and graph file formats.
//!
//! Sequences travel either as a plain text line of whitespace-separated
//! integers or as a JSON document `{"degrees": [..]}`. Graphs serialize
//! through serde as `{"n", "edges", "loops"}` (with bipartite and multigraph
//! variants) and parse back with full validation; DOT output is export-only,
//! with loops rendered as self-edges.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graphs::{BipartiteGraph, GraphWithLoops, LoopMultigraph};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("invalid integer {token:?}")]
    BadInteger { token: String },
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
}

/// JSON sequence document.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceDoc {
    pub degrees: Vec<i64>,
}

/// Parses a plain text line of whitespace-separated integers.
pub fn parse_sequence_text(text: &str) -> Result<Vec<i64>, FormatError> {
    text.split_whitespace()
        .map(|token| token.parse::<i64>().map_err(|_| FormatError::BadInteger { token: token.to_string() }))
        .collect()
}

/// Reads a sequence document: JSON when the content starts with `{`,
/// plain text otherwise.
pub fn read_sequence_document(content: &str) -> Result<Vec<i64>, FormatError> {
    if content.trim_start().starts_with('{') {
        let doc: SequenceDoc = serde_json::from_str(content)?;
        Ok(doc.degrees)
    } else {
        parse_sequence_text(content)
    }
}

pub fn graph_from_json(content: &str) -> Result<GraphWithLoops, FormatError> {
    Ok(serde_json::from_str(content)?)
}

pub fn bipartite_from_json(content: &str) -> Result<BipartiteGraph, FormatError> {
    Ok(serde_json::from_str(content)?)
}

pub fn multigraph_from_json(content: &str) -> Result<LoopMultigraph, FormatError> {
    Ok(serde_json::from_str(content)?)
}

pub fn graph_to_dot(g: &GraphWithLoops) -> String {
    let mut out = String::from("graph g {\n");
    for v in 0..g.n() {
        out.push_str(&format!("  {v};\n"));
    }
    for (a, b) in g.edges() {
        out.push_str(&format!("  {a} -- {b};\n"));
    }
    for v in g.loops() {
        out.push_str(&format!("  {v} -- {v};\n"));
    }
    out.push_str("}\n");
    out
}

pub fn bipartite_to_dot(b: &BipartiteGraph) -> String {
    let mut out = String::from("graph g {\n  rankdir=LR;\n");
    out.push_str("  subgraph cluster_left {\n");
    for l in 0..b.n_left() {
        out.push_str(&format!("    l{l};\n"));
    }
    out.push_str("  }\n  subgraph cluster_right {\n");
    for r in 0..b.n_right() {
        out.push_str(&format!("    r{r};\n"));
    }
    out.push_str("  }\n");
    for (l, r) in b.edges() {
        out.push_str(&format!("  l{l} -- r{r};\n"));
    }
    out.push_str("}\n");
    out
}

/// Parallel edges are written once per unit of multiplicity, which DOT
/// renders natively.
pub fn multigraph_to_dot(m: &LoopMultigraph) -> String {
    let mut out = String::from("graph g {\n");
    for v in 0..m.n() {
        out.push_str(&format!("  {v};\n"));
    }
    for (a, b, mult) in m.edges() {
        for _ in 0..mult {
            out.push_str(&format!("  {a} -- {b};\n"));
        }
    }
    out.push_str("}\n");
    out
}
