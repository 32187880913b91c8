//! Constructive realizers.
//!
//! A feasible sequence is realized in two phases. The descent repeatedly
//! strips trailing zeros and applies [`choudum_reduce`] until the all-zero
//! floor, recording each level. The rebuild then walks the levels in reverse,
//! starting from the edgeless graph: at each level the head and tail
//! positions must gain one degree, and one of a small set of local rewrites
//! always applies. The rewrites never look past degrees, loop flags and
//! adjacency, so any degree-respecting assignment of sequence positions to
//! vertices is valid; we pick the smallest-id assignment to keep the output
//! deterministic.
//!
//! The one piece of bookkeeping the descent/rebuild split makes explicit is
//! that re-sorting a reduced sequence loses track of which vertex plays which
//! role. [`assign_roles`] restores a position-to-vertex map at every level by
//! greedy degree matching, which is exactly as much as the rewrites need.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graphs::{DegreeConvention, GraphError, GraphWithLoops};
use crate::sequences::{
    check_erdos_gallai, check_loops_double, check_loops_reduced, choudum_reduce, CheckReport,
    DegreeSequence, SequenceError,
};

/// One local rewrite applied at a rebuild level.
///
/// `head` and `tail` are the vertices standing in for the largest and the
/// smallest positive entry of the level's sequence; `via` and `donor` are the
/// auxiliary vertices some rewrites route through. Vertex ids are stable
/// across levels, so replaying the recorded cases from an edgeless graph
/// reproduces the realization exactly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PatchCase {
    /// Join head and tail.
    AddEdge { head: usize, tail: usize },
    /// Put a loop on the only vertex; the single-vertex base case.
    LoopAtTail { tail: usize },
    /// Replace the head-tail edge by loops at both ends (doubled degrees).
    SwapEdgeForTwoLoops { head: usize, tail: usize },
    /// Keep the head-tail edge and add loops at both ends (reduced degrees).
    AddTwoLoops { head: usize, tail: usize },
    /// Remove the via-donor edge, connect head-via and donor-tail.
    ThreeVertexReroute { head: usize, via: usize, donor: usize, tail: usize },
    /// Bring a loop onto the tail through the via vertex: under the doubled
    /// convention the via-tail edge is consumed, under the reduced convention
    /// the loop at via is.
    LoopTransferViaEdge { head: usize, via: usize, tail: usize },
    /// Replace the loop at via by the two edges head-via and via-tail.
    LoopSplitToTwoEdges { head: usize, via: usize, tail: usize },
    /// Rewire around a loop that sits only on the tail; `donor` is present
    /// exactly in the reduced-convention variant, where the tail loop moves
    /// to the head and the via-donor edge is split towards the tail.
    TailLoopReroute { head: usize, via: usize, donor: Option<usize>, tail: usize },
}

/// One descent step: a positive sorted sequence and its reduction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionStep {
    pub original: DegreeSequence,
    pub reduced_sorted: DegreeSequence,
    /// 1-based pivot returned by [`choudum_reduce`].
    pub pivot_m: usize,
    /// Length of `original`, the tail position of the step.
    pub tail_index: usize,
}

/// The full descent to the all-zero floor.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionTrace {
    pub steps: Vec<ReductionStep>,
    /// Final reduced sequence before stripping; all zeros (empty when the
    /// input was already all-zero or ended in the single-loop base case).
    pub terminal: DegreeSequence,
}

/// Everything needed to audit or replay a realization.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealizationTrace {
    /// Vertex count of the realized graph, trailing zeros included.
    pub n: usize,
    pub convention: DegreeConvention,
    pub reductions: ReductionTrace,
    pub rebuild_steps: Vec<PatchCase>,
}

impl RealizationTrace {
    /// Replays the recorded rewrites from an edgeless graph on `n` vertices.
    pub fn replay(&self) -> Result<GraphWithLoops, RealizeError> {
        let mut g = GraphWithLoops::new(self.n);
        for &step in &self.rebuild_steps {
            replay_case(&mut g, step, self.convention)?;
        }
        Ok(g)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RealizeError {
    /// The sequence fails its feasibility check; the report shows where.
    #[error("sequence is not realizable{}", violation_suffix(.report))]
    Infeasible { report: CheckReport },
    /// No rewrite case applied. This signals a bug in the realizer, not bad
    /// input; the exhaustive suites assert it never happens.
    #[error("internal patch failure: {0}")]
    InternalPatchFailure(String),
    #[error(transparent)]
    Sequence(#[from] SequenceError),
}

fn violation_suffix(report: &CheckReport) -> String {
    match report.first_violation {
        Some(k) => format!(" (first violation at k = {k})"),
        None => " (odd degree sum)".to_string(),
    }
}

fn internal(msg: impl Into<String>) -> RealizeError {
    RealizeError::InternalPatchFailure(msg.into())
}

fn apply(op: Result<(), GraphError>) -> Result<(), RealizeError> {
    op.map_err(|e| internal(e.to_string()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Mode {
    Simple,
    Double,
    Reduced,
}

impl Mode {
    fn convention(self) -> DegreeConvention {
        match self {
            Mode::Simple | Mode::Double => DegreeConvention::Double,
            Mode::Reduced => DegreeConvention::Reduced,
        }
    }
}

/// Realizes `d` as the doubled-convention degrees of a graph-with-loops.
pub fn realize_loops_double(
    d: &DegreeSequence,
) -> Result<(GraphWithLoops, RealizationTrace), RealizeError> {
    let report = check_loops_double(d);
    if !report.passed {
        return Err(RealizeError::Infeasible { report });
    }
    realize_core(d, Mode::Double)
}

/// Realizes `d` as the reduced-convention degrees of a graph-with-loops.
pub fn realize_loops_reduced(
    d: &DegreeSequence,
) -> Result<(GraphWithLoops, RealizationTrace), RealizeError> {
    let report = check_loops_reduced(d);
    if !report.passed {
        return Err(RealizeError::Infeasible { report });
    }
    realize_core(d, Mode::Reduced)
}

/// Realizes `d` as a loop-free simple graph. Same descent, but only the
/// edge rewrites are allowed.
pub fn realize_simple(d: &DegreeSequence) -> Result<GraphWithLoops, RealizeError> {
    let report = check_erdos_gallai(d);
    if !report.passed {
        return Err(RealizeError::Infeasible { report });
    }
    realize_core(d, Mode::Simple).map(|(g, _)| g)
}

/// Whether [`choudum_reduce`] preserves the convention's feasibility check.
/// The realizers depend on this descending feasibility, so it is exposed for
/// independent testing; it must return `true` on every reducible input that
/// passes the check.
pub fn feasibility_descends(
    d: &DegreeSequence,
    convention: DegreeConvention,
) -> Result<bool, RealizeError> {
    let check = match convention {
        DegreeConvention::Double => check_loops_double,
        DegreeConvention::Reduced => check_loops_reduced,
    };
    let report = check(d);
    if !report.passed {
        return Err(RealizeError::Infeasible { report });
    }
    let (reduced, _) = choudum_reduce(d)?;
    Ok(check(&reduced).passed)
}

fn realize_core(
    d: &DegreeSequence,
    mode: Mode,
) -> Result<(GraphWithLoops, RealizationTrace), RealizeError> {
    let full_n = d.len();
    let mut levels: Vec<DegreeSequence> = Vec::new();
    let mut steps: Vec<ReductionStep> = Vec::new();
    let mut cur = d.strip_trailing_zeros();
    while !cur.is_empty() {
        levels.push(cur.clone());
        if mode == Mode::Reduced && cur.len() == 1 {
            if cur.values()[0] == 1 {
                // single-loop base; the reduction step would underflow
                cur = DegreeSequence::empty();
                continue;
            }
            return Err(internal(format!(
                "single-vertex sequence {cur} survived the reduced check"
            )));
        }
        let tail_index = cur.len();
        let (reduced, pivot_m) = choudum_reduce(&cur)?;
        steps.push(ReductionStep {
            original: cur.clone(),
            reduced_sorted: reduced.clone(),
            pivot_m,
            tail_index,
        });
        cur = reduced.strip_trailing_zeros();
    }
    let terminal = steps.last().map(|s| s.reduced_sorted.clone()).unwrap_or_default();

    let mut g = GraphWithLoops::new(0);
    let mut rebuild_steps = Vec::with_capacity(levels.len());
    for seq in levels.iter().rev() {
        g.grow_to(seq.len());
        rebuild_steps.push(apply_patch(&mut g, seq, mode)?);
    }
    g.grow_to(full_n);

    debug_assert!(crate::graphs::verify_realization(&g, d, mode.convention()));
    let trace = RealizationTrace {
        n: full_n,
        convention: mode.convention(),
        reductions: ReductionTrace { steps, terminal },
        rebuild_steps,
    };
    Ok((g, trace))
}

/// Maps sequence positions to distinct vertices of matching degree, smallest
/// vertex id first. The graph realizes the wanted degrees as a multiset, so
/// the greedy scan always succeeds on correct input.
fn assign_roles(
    g: &GraphWithLoops,
    wanted: &[u64],
    convention: DegreeConvention,
) -> Result<Vec<usize>, RealizeError> {
    let deg = g.degree_vector(convention);
    let mut used = vec![false; deg.len()];
    let mut roles = Vec::with_capacity(wanted.len());
    for (position, &want) in wanted.iter().enumerate() {
        let v = (0..deg.len())
            .find(|&v| !used[v] && deg[v] == want)
            .ok_or_else(|| {
                internal(format!("no unused vertex of degree {want} for position {position}"))
            })?;
        used[v] = true;
        roles.push(v);
    }
    Ok(roles)
}

fn find_smallest(
    g: &GraphWithLoops,
    pred: impl Fn(usize) -> bool,
    what: &str,
) -> Result<usize, RealizeError> {
    (0..g.n()).find(|&v| pred(v)).ok_or_else(|| internal(format!("no vertex found: {what}")))
}

/// Raises the degrees of the head and tail roles of `seq` by one (the head by
/// two when they coincide) with a single rewrite.
fn apply_patch(
    g: &mut GraphWithLoops,
    seq: &DegreeSequence,
    mode: Mode,
) -> Result<PatchCase, RealizeError> {
    let n = seq.len();
    let conv = mode.convention();

    if n == 1 {
        // the graph holds exactly this level's vertices, so the lone vertex
        // is id 0 with degree 0 and the level target is one loop
        if mode == Mode::Simple {
            return Err(internal("positive degree on a single vertex in loop-free mode"));
        }
        let expect = match mode {
            Mode::Double => 2,
            Mode::Reduced => 1,
            Mode::Simple => unreachable!(),
        };
        if seq.values()[0] != expect || g.n() != 1 || g.has_loop(0) {
            return Err(internal(format!("unexpected single-vertex level {seq}")));
        }
        apply(g.add_loop(0))?;
        return Ok(PatchCase::LoopAtTail { tail: 0 });
    }

    let mut wanted: Vec<u64> = seq.values().to_vec();
    wanted[0] -= 1;
    wanted[n - 1] -= 1;
    let roles = assign_roles(g, &wanted, conv)?;
    let head = roles[0];
    let tail = roles[n - 1];

    if !g.has_edge(head, tail) {
        apply(g.add_edge(head, tail))?;
        return Ok(PatchCase::AddEdge { head, tail });
    }

    if mode == Mode::Simple {
        let via = find_smallest(g, |v| v != head && !g.has_edge(head, v), "vertex off the head")?;
        ensure_degree_order(g, conv, via, tail)?;
        let donor = find_donor(g, via, tail)?;
        apply(g.remove_edge(via, donor))?;
        apply(g.add_edge(head, via))?;
        apply(g.add_edge(donor, tail))?;
        return Ok(PatchCase::ThreeVertexReroute { head, via, donor, tail });
    }

    let loop_head = g.has_loop(head);
    let loop_tail = g.has_loop(tail);

    if !loop_head && !loop_tail {
        return match mode {
            Mode::Double => {
                apply(g.remove_edge(head, tail))?;
                apply(g.add_loop(head))?;
                apply(g.add_loop(tail))?;
                Ok(PatchCase::SwapEdgeForTwoLoops { head, tail })
            }
            Mode::Reduced => {
                apply(g.add_loop(head))?;
                apply(g.add_loop(tail))?;
                Ok(PatchCase::AddTwoLoops { head, tail })
            }
            Mode::Simple => unreachable!(),
        };
    }

    if loop_head {
        // the head has spare room: its degree is below the level bound, so
        // some vertex is not adjacent to it (the tail is, hence excluded)
        let via = find_smallest(g, |v| v != head && !g.has_edge(head, v), "vertex off the head")?;
        ensure_degree_order(g, conv, via, tail)?;
        let loop_via = g.has_loop(via);
        if loop_tail || !loop_via {
            let donor = find_donor(g, via, tail)?;
            apply(g.remove_edge(via, donor))?;
            apply(g.add_edge(head, via))?;
            apply(g.add_edge(donor, tail))?;
            return Ok(PatchCase::ThreeVertexReroute { head, via, donor, tail });
        }
        // no loop on the tail, loop on via
        return match mode {
            Mode::Double => {
                if g.has_edge(via, tail) {
                    apply(g.remove_edge(via, tail))?;
                    apply(g.add_edge(head, via))?;
                    apply(g.add_loop(tail))?;
                    Ok(PatchCase::LoopTransferViaEdge { head, via, tail })
                } else {
                    apply(g.remove_loop(via))?;
                    apply(g.add_edge(head, via))?;
                    apply(g.add_edge(via, tail))?;
                    Ok(PatchCase::LoopSplitToTwoEdges { head, via, tail })
                }
            }
            Mode::Reduced => {
                apply(g.remove_loop(via))?;
                apply(g.add_edge(head, via))?;
                apply(g.add_loop(tail))?;
                Ok(PatchCase::LoopTransferViaEdge { head, via, tail })
            }
            Mode::Simple => unreachable!(),
        };
    }

    // loop only on the tail: the head has more non-loop edges than the tail,
    // so some neighbor of the head avoids the tail
    let via = find_smallest(
        g,
        |v| v != tail && g.has_edge(head, v) && !g.has_edge(v, tail),
        "head neighbor avoiding the tail",
    )?;
    match mode {
        Mode::Double => {
            apply(g.remove_edge(head, via))?;
            apply(g.add_edge(via, tail))?;
            apply(g.add_loop(head))?;
            Ok(PatchCase::TailLoopReroute { head, via, donor: None, tail })
        }
        Mode::Reduced => {
            ensure_degree_order(g, conv, via, tail)?;
            let donor = find_donor(g, via, tail)?;
            apply(g.remove_loop(tail))?;
            apply(g.remove_edge(via, donor))?;
            apply(g.add_edge(donor, tail))?;
            apply(g.add_edge(via, tail))?;
            apply(g.add_loop(head))?;
            Ok(PatchCase::TailLoopReroute { head, via, donor: Some(donor), tail })
        }
        Mode::Simple => unreachable!(),
    }
}

/// A via neighbor whose edge can be redirected to the tail.
fn find_donor(g: &GraphWithLoops, via: usize, tail: usize) -> Result<usize, RealizeError> {
    find_smallest(
        g,
        |v| v != tail && g.has_edge(via, v) && !g.has_edge(v, tail),
        "via neighbor avoiding the tail",
    )
}

/// The rewrites rely on the via vertex outranking the tail; violation means
/// the role assignment or the descent went wrong.
fn ensure_degree_order(
    g: &GraphWithLoops,
    conv: DegreeConvention,
    via: usize,
    tail: usize,
) -> Result<(), RealizeError> {
    let dv = g.degree_of(via, conv);
    let dt = g.degree_of(tail, conv);
    if dv > dt {
        Ok(())
    } else {
        Err(internal(format!("degree order violated: deg({via}) = {dv} <= deg({tail}) = {dt}")))
    }
}

fn replay_case(
    g: &mut GraphWithLoops,
    case: PatchCase,
    convention: DegreeConvention,
) -> Result<(), RealizeError> {
    match case {
        PatchCase::AddEdge { head, tail } => apply(g.add_edge(head, tail)),
        PatchCase::LoopAtTail { tail } => apply(g.add_loop(tail)),
        PatchCase::SwapEdgeForTwoLoops { head, tail } => {
            apply(g.remove_edge(head, tail))?;
            apply(g.add_loop(head))?;
            apply(g.add_loop(tail))
        }
        PatchCase::AddTwoLoops { head, tail } => {
            apply(g.add_loop(head))?;
            apply(g.add_loop(tail))
        }
        PatchCase::ThreeVertexReroute { head, via, donor, tail } => {
            apply(g.remove_edge(via, donor))?;
            apply(g.add_edge(head, via))?;
            apply(g.add_edge(donor, tail))
        }
        PatchCase::LoopTransferViaEdge { head, via, tail } => {
            match convention {
                DegreeConvention::Double => apply(g.remove_edge(via, tail))?,
                DegreeConvention::Reduced => apply(g.remove_loop(via))?,
            }
            apply(g.add_edge(head, via))?;
            apply(g.add_loop(tail))
        }
        PatchCase::LoopSplitToTwoEdges { head, via, tail } => {
            apply(g.remove_loop(via))?;
            apply(g.add_edge(head, via))?;
            apply(g.add_edge(via, tail))
        }
        PatchCase::TailLoopReroute { head, via, donor: None, tail } => {
            apply(g.remove_edge(head, via))?;
            apply(g.add_edge(via, tail))?;
            apply(g.add_loop(head))
        }
        PatchCase::TailLoopReroute { head, via, donor: Some(donor), tail } => {
            apply(g.remove_loop(tail))?;
            apply(g.remove_edge(via, donor))?;
            apply(g.add_edge(donor, tail))?;
            apply(g.add_edge(via, tail))?;
            apply(g.add_loop(head))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::verify_realization;
    use crate::oracle::sequence_space;
    use crate::sequences::DegreeSequence;

    fn ds(v: &[i64]) -> DegreeSequence {
        DegreeSequence::new(v, false).unwrap()
    }

    #[test]
    fn realize_double_complete_with_loops() {
        let (g, trace) = realize_loops_double(&ds(&[4, 4, 4])).unwrap();
        // forced on three vertices: all edges and all loops
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.loop_count(), 3);
        assert!(verify_realization(&g, &ds(&[4, 4, 4]), DegreeConvention::Double));
        assert_eq!(trace.rebuild_steps.len(), trace.reductions.steps.len());
    }

    #[test]
    fn realize_double_single_loop() {
        let (g, trace) = realize_loops_double(&ds(&[2])).unwrap();
        assert_eq!(g.n(), 1);
        assert!(g.has_loop(0));
        assert_eq!(trace.rebuild_steps, vec![PatchCase::LoopAtTail { tail: 0 }]);
    }

    #[test]
    fn realize_double_larger_example() {
        let d = ds(&[5, 5, 4, 4, 2, 2]);
        let (g, _) = realize_loops_double(&d).unwrap();
        assert!(verify_realization(&g, &d, DegreeConvention::Double));
    }

    #[test]
    fn realize_reduced_examples() {
        let (g, _) = realize_loops_reduced(&ds(&[3, 3, 3])).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.loop_count(), 3);

        let (g, trace) = realize_loops_reduced(&ds(&[1])).unwrap();
        assert!(g.has_loop(0));
        assert!(trace.reductions.steps.is_empty());

        let d = ds(&[3, 3, 1, 1]);
        let (g, _) = realize_loops_reduced(&d).unwrap();
        assert!(verify_realization(&g, &d, DegreeConvention::Reduced));
    }

    #[test]
    fn realize_simple_examples() {
        let g = realize_simple(&ds(&[2, 2, 2])).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.loop_count(), 0);

        let g = realize_simple(&ds(&[0, 0])).unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(g.edge_count(), 0);

        let d = ds(&[3, 3, 2, 2, 2]);
        let g = realize_simple(&d).unwrap();
        assert_eq!(g.loop_count(), 0);
        assert!(verify_realization(&g, &d, DegreeConvention::Double));
    }

    #[test]
    fn trailing_zeros_become_isolated_vertices() {
        let d = ds(&[2, 2, 2, 0, 0]);
        let (g, trace) = realize_loops_double(&d).unwrap();
        assert_eq!(g.n(), 5);
        assert!(verify_realization(&g, &d, DegreeConvention::Double));
        assert_eq!(trace.n, 5);
        assert_eq!(trace.replay().unwrap(), g);
    }

    #[test]
    fn infeasible_inputs_are_rejected_with_reports() {
        match realize_loops_double(&ds(&[3])) {
            Err(RealizeError::Infeasible { report }) => assert!(!report.parity_ok),
            other => panic!("unexpected {other:?}"),
        }
        match realize_loops_reduced(&ds(&[2])) {
            Err(RealizeError::Infeasible { report }) => {
                assert_eq!(report.first_violation, Some(1));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            realize_simple(&ds(&[3, 3, 1, 1])),
            Err(RealizeError::Infeasible { .. })
        ));
    }

    #[test]
    fn realizers_are_deterministic() {
        for d in [ds(&[5, 5, 4, 4, 2, 2]), ds(&[4, 3, 3, 2, 2, 2])] {
            let (g1, t1) = realize_loops_double(&d).unwrap();
            let (g2, t2) = realize_loops_double(&d).unwrap();
            assert_eq!(g1, g2);
            assert_eq!(t1, t2);
        }
    }

    #[test]
    fn feasibility_descends_examples() {
        assert_eq!(feasibility_descends(&ds(&[4, 4, 4]), DegreeConvention::Double), Ok(true));
        assert_eq!(feasibility_descends(&ds(&[3, 3, 1, 1]), DegreeConvention::Reduced), Ok(true));
        assert_eq!(feasibility_descends(&ds(&[2, 2]), DegreeConvention::Double), Ok(true));

        // the reduction of (3,3,1,1) re-sorts to (3,2,1,0)
        let (reduced, m) = choudum_reduce(&ds(&[3, 3, 1, 1])).unwrap();
        assert_eq!(reduced, ds(&[3, 2, 1, 0]));
        assert_eq!(m, 2);

        assert!(matches!(
            feasibility_descends(&ds(&[3]), DegreeConvention::Double),
            Err(RealizeError::Infeasible { .. })
        ));
        assert!(matches!(
            feasibility_descends(&ds(&[2, 0]), DegreeConvention::Double),
            Err(RealizeError::Sequence(SequenceError::ZeroEntry { index: 1 }))
        ));
    }

    #[test]
    fn exhaustive_small_double() {
        for n in 0..=4 {
            for d in sequence_space(n, n as u64 + 1) {
                let feasible = check_loops_double(&d).passed;
                match realize_loops_double(&d) {
                    Ok((g, trace)) => {
                        assert!(feasible, "realized infeasible {d}");
                        assert!(verify_realization(&g, &d, DegreeConvention::Double), "bad graph for {d}");
                        assert_eq!(trace.replay().unwrap(), g, "replay mismatch for {d}");
                    }
                    Err(RealizeError::Infeasible { .. }) => assert!(!feasible, "rejected feasible {d}"),
                    Err(other) => panic!("internal failure on {d}: {other}"),
                }
            }
        }
    }

    #[test]
    fn exhaustive_small_reduced() {
        for n in 0..=4 {
            for d in sequence_space(n, n as u64) {
                let feasible = check_loops_reduced(&d).passed;
                match realize_loops_reduced(&d) {
                    Ok((g, trace)) => {
                        assert!(feasible, "realized infeasible {d}");
                        assert!(verify_realization(&g, &d, DegreeConvention::Reduced), "bad graph for {d}");
                        assert_eq!(trace.replay().unwrap(), g, "replay mismatch for {d}");
                    }
                    Err(RealizeError::Infeasible { .. }) => assert!(!feasible, "rejected feasible {d}"),
                    Err(other) => panic!("internal failure on {d}: {other}"),
                }
            }
        }
    }

    #[test]
    fn exhaustive_small_simple() {
        for n in 0..=5 {
            for d in sequence_space(n, n.saturating_sub(1) as u64) {
                let feasible = check_erdos_gallai(&d).passed;
                match realize_simple(&d) {
                    Ok(g) => {
                        assert!(feasible, "realized infeasible {d}");
                        assert_eq!(g.loop_count(), 0);
                        assert!(verify_realization(&g, &d, DegreeConvention::Double), "bad graph for {d}");
                    }
                    Err(RealizeError::Infeasible { .. }) => assert!(!feasible, "rejected feasible {d}"),
                    Err(other) => panic!("internal failure on {d}: {other}"),
                }
            }
        }
    }

}
