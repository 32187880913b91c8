//! The two double-cover constructions, graph complement within the complete
//! graph-with-loops, and the symmetric bipartite realization pipeline.

use thiserror::Error;

use crate::graphs::{BipartiteGraph, GraphWithLoops, LoopMultigraph};
use crate::realize::{realize_loops_reduced, RealizeError};
use crate::sequences::{check_gale_ryser_symmetric, DegreeSequence};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransformError {
    #[error("parts have different sizes ({n_left} vs {n_right})")]
    PartSizeMismatch { n_left: usize, n_right: usize },
}

/// Tensor product with a single edge: parts are two copies of the vertex
/// set, each non-loop edge `{a, b}` contributes the crossing pair
/// `(a, b')` and `(b, a')`, and each loop at `a` contributes the one edge
/// `(a, a')`. Both part degree sequences equal the reduced degrees.
pub fn tensor_double_cover(g: &GraphWithLoops) -> BipartiteGraph {
    let n = g.n();
    let mut cover = BipartiteGraph::new(n, n);
    for (a, b) in g.edges() {
        cover.add_edge(a, b).expect("lift of a distinct pair");
        cover.add_edge(b, a).expect("lift of a distinct pair");
    }
    for v in g.loops() {
        cover.add_edge(v, v).expect("lift of a loop");
    }
    cover
}

/// Two-fold cover in the covering-space sense: vertices are two fibre copies
/// (`v` and `v + n`), each non-loop edge lifts to two crossing edges and each
/// loop lifts to a parallel pair between the two copies of its vertex. Fibre
/// degrees equal the doubled-convention degrees of the base.
pub fn topological_double_cover(g: &GraphWithLoops) -> LoopMultigraph {
    let n = g.n();
    let mut cover = LoopMultigraph::new(2 * n);
    for (a, b) in g.edges() {
        cover.add_edge(a, b + n, 1).expect("lift of a distinct pair");
        cover.add_edge(b, a + n, 1).expect("lift of a distinct pair");
    }
    for v in g.loops() {
        cover.add_edge(v, v + n, 2).expect("lift of a loop");
    }
    cover
}

/// Complement within the complete graph-with-loops on the same vertices:
/// edges and loops are both flipped.
pub fn complement_graph(g: &GraphWithLoops) -> GraphWithLoops {
    let n = g.n();
    let mut c = GraphWithLoops::new(n);
    for a in 0..n {
        for b in a + 1..n {
            if !g.has_edge(a, b) {
                c.add_edge(a, b).expect("fresh edge in an empty graph");
            }
        }
        if !g.has_loop(a) {
            c.add_loop(a).expect("fresh loop in an empty graph");
        }
    }
    c
}

/// Realizes `(d, d)` as the part degrees of a bipartite graph by realizing
/// `d` under the reduced convention and taking the tensor cover. The output
/// is symmetric: swapping the parts along the identity is an automorphism.
pub fn symmetric_bipartite_realization(d: &DegreeSequence) -> Result<BipartiteGraph, RealizeError> {
    let report = check_gale_ryser_symmetric(d);
    if !report.passed {
        return Err(RealizeError::Infeasible { report });
    }
    let (g, _) = realize_loops_reduced(d)?;
    Ok(tensor_double_cover(&g))
}

/// Whether swapping left index `i` with right index `i` is an automorphism,
/// i.e. `(i, j)` is an edge exactly when `(j, i)` is.
pub fn involution_check(b: &BipartiteGraph) -> Result<bool, TransformError> {
    if b.n_left() != b.n_right() {
        return Err(TransformError::PartSizeMismatch { n_left: b.n_left(), n_right: b.n_right() });
    }
    Ok(b.edges().all(|(l, r)| b.has_edge(r, l)))
}
