//! Browser bindings for the interactive demo page.
//!
//! Every export takes strings and returns a JSON envelope string:
//! `{"ok": true, ...}` on success, `{"ok": false, "error": ...}` otherwise
//! (with the full check report attached when a sequence is infeasible).
//! Keeping the surface JSON-in/JSON-out means the page needs no generated
//! classes and the bindings test like ordinary Rust.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use loopgraphs::graphs::DegreeConvention;
use loopgraphs::io::{graph_from_json, parse_sequence_text};
use loopgraphs::realize::{
    realize_loops_double, realize_loops_reduced, realize_simple, RealizeError,
};
use loopgraphs::sequences::{
    check_erdos_gallai, check_gale_ryser_symmetric, check_loops_double, check_loops_reduced,
    DegreeSequence,
};
use loopgraphs::transforms::{tensor_double_cover, topological_double_cover};
use loopgraphs::verify_realization;

fn envelope(result: Result<Value, Value>) -> String {
    let body = match result {
        Ok(mut v) => {
            v["ok"] = json!(true);
            v
        }
        Err(mut v) => {
            v["ok"] = json!(false);
            v
        }
    };
    body.to_string()
}

fn plain_error(message: impl std::fmt::Display) -> Value {
    json!({ "error": message.to_string() })
}

fn parse_degrees(input: &str) -> Result<DegreeSequence, Value> {
    let raw = parse_sequence_text(input).map_err(plain_error)?;
    // the demo always sorts; the strict-order entry point is the CLI
    DegreeSequence::new(&raw, true).map_err(plain_error)
}

/// All four checks for one sequence.
#[wasm_bindgen]
pub fn analyze(input: &str) -> String {
    envelope(parse_degrees(input).map(|d| {
        json!({
            "degrees": d,
            "checks": {
                "erdos_gallai": check_erdos_gallai(&d),
                "loops_double": check_loops_double(&d),
                "loops_reduced": check_loops_reduced(&d),
                "gale_ryser": check_gale_ryser_symmetric(&d),
            },
        })
    }))
}

/// Constructs a realization; `mode` is `simple`, `loops-double` or
/// `loops-reduced`.
#[wasm_bindgen]
pub fn realize(input: &str, mode: &str) -> String {
    envelope(realize_impl(input, mode))
}

fn realize_impl(input: &str, mode: &str) -> Result<Value, Value> {
    let d = parse_degrees(input)?;
    let (graph, trace, convention) = match mode {
        "simple" => match realize_simple(&d) {
            Ok(g) => (g, None, DegreeConvention::Double),
            Err(e) => return Err(realize_error(e)),
        },
        "loops-double" => match realize_loops_double(&d) {
            Ok((g, t)) => (g, Some(t), DegreeConvention::Double),
            Err(e) => return Err(realize_error(e)),
        },
        "loops-reduced" => match realize_loops_reduced(&d) {
            Ok((g, t)) => (g, Some(t), DegreeConvention::Reduced),
            Err(e) => return Err(realize_error(e)),
        },
        other => return Err(plain_error(format!("unknown mode {other:?}"))),
    };
    let verified = verify_realization(&graph, &d, convention);
    Ok(json!({
        "degrees": d,
        "graph": graph,
        "trace": trace,
        "verified": verified,
        "degrees_double": graph.degrees_double(),
        "degrees_reduced": graph.degrees_reduced(),
    }))
}

fn realize_error(e: RealizeError) -> Value {
    match e {
        RealizeError::Infeasible { report } => json!({
            "error": "sequence is not realizable in this mode",
            "report": report,
        }),
        other => plain_error(other),
    }
}

/// Builds a double cover of a graph JSON document; `kind` is `tensor` or
/// `topological`.
#[wasm_bindgen]
pub fn cover(graph_json: &str, kind: &str) -> String {
    envelope(cover_impl(graph_json, kind))
}

fn cover_impl(graph_json: &str, kind: &str) -> Result<Value, Value> {
    let g = graph_from_json(graph_json).map_err(plain_error)?;
    match kind {
        "tensor" => {
            let cover = tensor_double_cover(&g);
            let (left, right) = cover.part_degrees();
            Ok(json!({
                "kind": "tensor",
                "cover": cover,
                "left_degrees": left,
                "right_degrees": right,
            }))
        }
        "topological" => {
            let cover = topological_double_cover(&g);
            Ok(json!({
                "kind": "topological",
                "cover": cover,
                "degrees": cover.degrees(),
            }))
        }
        other => Err(plain_error(format!("unknown cover kind {other:?}"))),
    }
}
