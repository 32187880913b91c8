//! Graph types: simple graphs with optional loops, bipartite graphs, and the
//! small multigraph class produced by the two-fold topological cover.
//!
//! Edges are stored as canonicalized ordered pairs in B-tree sets, so "no
//! multiple edges" is structural and iteration order is deterministic
//! everywhere (serialization, DOT export, realizer output).

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::sequences::DegreeSequence;

/// How loops contribute to a vertex degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DegreeConvention {
    /// A loop adds two, the usual multigraph convention.
    Double,
    /// A loop adds one.
    Reduced,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("edge {v}-{v} is a self edge; use a loop instead")]
    SelfEdge { v: usize },
    #[error("edge {a}-{b} already present")]
    DuplicateEdge { a: usize, b: usize },
    #[error("edge {a}-{b} not present")]
    MissingEdge { a: usize, b: usize },
    #[error("loop at {v} already present")]
    DuplicateLoop { v: usize },
    #[error("loop at {v} not present")]
    MissingLoop { v: usize },
    #[error("edge multiplicity {m} outside 1..=2")]
    BadMultiplicity { m: u8 },
}

fn key(a: usize, b: usize) -> (usize, usize) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// A simple graph on vertices `0..n` with at most one loop per vertex.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawGraph", into = "RawGraph")]
pub struct GraphWithLoops {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
    loops: BTreeSet<usize>,
}

impl GraphWithLoops {
    pub fn new(n: usize) -> Self {
        Self { n, edges: BTreeSet::new(), loops: BTreeSet::new() }
    }

    pub fn from_parts(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
        loops: impl IntoIterator<Item = usize>,
    ) -> Result<Self, GraphError> {
        let mut g = Self::new(n);
        for (a, b) in edges {
            g.add_edge(a, b)?;
        }
        for v in loops {
            g.add_loop(v)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn loop_count(&self) -> usize {
        self.loops.len()
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { v, n: self.n })
        }
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a != b && self.edges.contains(&key(a, b))
    }

    pub fn has_loop(&self, v: usize) -> bool {
        self.loops.contains(&v)
    }

    pub fn add_edge(&mut self, a: usize, b: usize) -> Result<(), GraphError> {
        self.check_vertex(a)?;
        self.check_vertex(b)?;
        if a == b {
            return Err(GraphError::SelfEdge { v: a });
        }
        if !self.edges.insert(key(a, b)) {
            return Err(GraphError::DuplicateEdge { a, b });
        }
        Ok(())
    }

    pub fn remove_edge(&mut self, a: usize, b: usize) -> Result<(), GraphError> {
        if a == b || !self.edges.remove(&key(a, b)) {
            return Err(GraphError::MissingEdge { a, b });
        }
        Ok(())
    }

    pub fn add_loop(&mut self, v: usize) -> Result<(), GraphError> {
        self.check_vertex(v)?;
        if !self.loops.insert(v) {
            return Err(GraphError::DuplicateLoop { v });
        }
        Ok(())
    }

    pub fn remove_loop(&mut self, v: usize) -> Result<(), GraphError> {
        if !self.loops.remove(&v) {
            return Err(GraphError::MissingLoop { v });
        }
        Ok(())
    }

    /// Canonicalized edges in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn loops(&self) -> impl Iterator<Item = usize> + '_ {
        self.loops.iter().copied()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.edges.iter().filter_map(move |&(a, b)| {
            if a == v {
                Some(b)
            } else if b == v {
                Some(a)
            } else {
                None
            }
        })
    }

    /// Appends isolated vertices until the graph has `n` of them.
    pub(crate) fn grow_to(&mut self, n: usize) {
        debug_assert!(n >= self.n);
        self.n = self.n.max(n);
    }

    /// Per-vertex degrees in vertex order.
    pub fn degree_vector(&self, convention: DegreeConvention) -> Vec<u64> {
        let mut deg = vec![0u64; self.n];
        for &(a, b) in &self.edges {
            deg[a] += 1;
            deg[b] += 1;
        }
        let loop_weight = match convention {
            DegreeConvention::Double => 2,
            DegreeConvention::Reduced => 1,
        };
        for &v in &self.loops {
            deg[v] += loop_weight;
        }
        deg
    }

    pub fn degree_of(&self, v: usize, convention: DegreeConvention) -> u64 {
        let edges = self.neighbors(v).count() as u64;
        let loop_weight = match convention {
            DegreeConvention::Double => 2,
            DegreeConvention::Reduced => 1,
        };
        edges + if self.has_loop(v) { loop_weight } else { 0 }
    }

    /// Degree sequence under the chosen convention, sorted nonincreasing.
    pub fn degrees(&self, convention: DegreeConvention) -> DegreeSequence {
        DegreeSequence::from_unsorted(self.degree_vector(convention))
    }

    /// Degrees with loops counted twice, sorted nonincreasing.
    pub fn degrees_double(&self) -> DegreeSequence {
        self.degrees(DegreeConvention::Double)
    }

    /// Degrees with loops counted once, sorted nonincreasing.
    pub fn degrees_reduced(&self) -> DegreeSequence {
        self.degrees(DegreeConvention::Reduced)
    }
}

/// True when the graph's degree multiset under the chosen convention equals
/// `d`. Comparison is on sorted sequences, so vertex labels never matter.
pub fn verify_realization(g: &GraphWithLoops, d: &DegreeSequence, convention: DegreeConvention) -> bool {
    g.degrees(convention) == *d
}

#[derive(Serialize, Deserialize)]
struct RawGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    loops: Vec<usize>,
}

impl TryFrom<RawGraph> for GraphWithLoops {
    type Error = GraphError;

    fn try_from(raw: RawGraph) -> Result<Self, Self::Error> {
        Self::from_parts(raw.n, raw.edges, raw.loops)
    }
}

impl From<GraphWithLoops> for RawGraph {
    fn from(g: GraphWithLoops) -> Self {
        Self { n: g.n, edges: g.edges.into_iter().collect(), loops: g.loops.into_iter().collect() }
    }
}

/// A simple bipartite graph with parts `0..n_left` and `0..n_right`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawBipartite", into = "RawBipartite")]
pub struct BipartiteGraph {
    n_left: usize,
    n_right: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl BipartiteGraph {
    pub fn new(n_left: usize, n_right: usize) -> Self {
        Self { n_left, n_right, edges: BTreeSet::new() }
    }

    pub fn from_parts(
        n_left: usize,
        n_right: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let mut b = Self::new(n_left, n_right);
        for (l, r) in edges {
            b.add_edge(l, r)?;
        }
        Ok(b)
    }

    pub fn n_left(&self) -> usize {
        self.n_left
    }

    pub fn n_right(&self) -> usize {
        self.n_right
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, left: usize, right: usize) -> bool {
        self.edges.contains(&(left, right))
    }

    pub fn add_edge(&mut self, left: usize, right: usize) -> Result<(), GraphError> {
        if left >= self.n_left {
            return Err(GraphError::VertexOutOfRange { v: left, n: self.n_left });
        }
        if right >= self.n_right {
            return Err(GraphError::VertexOutOfRange { v: right, n: self.n_right });
        }
        if !self.edges.insert((left, right)) {
            return Err(GraphError::DuplicateEdge { a: left, b: right });
        }
        Ok(())
    }

    /// Edges as `(left, right)` pairs in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn left_degree_vector(&self) -> Vec<u64> {
        let mut deg = vec![0u64; self.n_left];
        for &(l, _) in &self.edges {
            deg[l] += 1;
        }
        deg
    }

    pub fn right_degree_vector(&self) -> Vec<u64> {
        let mut deg = vec![0u64; self.n_right];
        for &(_, r) in &self.edges {
            deg[r] += 1;
        }
        deg
    }

    /// Left and right part degree sequences, each sorted nonincreasing.
    pub fn part_degrees(&self) -> (DegreeSequence, DegreeSequence) {
        (
            DegreeSequence::from_unsorted(self.left_degree_vector()),
            DegreeSequence::from_unsorted(self.right_degree_vector()),
        )
    }
}

#[derive(Serialize, Deserialize)]
struct RawBipartite {
    n_left: usize,
    n_right: usize,
    edges: Vec<(usize, usize)>,
}

impl TryFrom<RawBipartite> for BipartiteGraph {
    type Error = GraphError;

    fn try_from(raw: RawBipartite) -> Result<Self, Self::Error> {
        Self::from_parts(raw.n_left, raw.n_right, raw.edges)
    }
}

impl From<BipartiteGraph> for RawBipartite {
    fn from(b: BipartiteGraph) -> Self {
        Self { n_left: b.n_left, n_right: b.n_right, edges: b.edges.into_iter().collect() }
    }
}

/// A loop-free multigraph whose edges have multiplicity one or two; the
/// codomain of the topological double cover and nothing more.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawMultigraph", into = "RawMultigraph")]
pub struct LoopMultigraph {
    n: usize,
    multiplicities: BTreeMap<(usize, usize), u8>,
}

impl LoopMultigraph {
    pub fn new(n: usize) -> Self {
        Self { n, multiplicities: BTreeMap::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, a: usize, b: usize, multiplicity: u8) -> Result<(), GraphError> {
        if a >= self.n {
            return Err(GraphError::VertexOutOfRange { v: a, n: self.n });
        }
        if b >= self.n {
            return Err(GraphError::VertexOutOfRange { v: b, n: self.n });
        }
        if a == b {
            return Err(GraphError::SelfEdge { v: a });
        }
        if !(1..=2).contains(&multiplicity) {
            return Err(GraphError::BadMultiplicity { m: multiplicity });
        }
        if self.multiplicities.contains_key(&key(a, b)) {
            return Err(GraphError::DuplicateEdge { a, b });
        }
        self.multiplicities.insert(key(a, b), multiplicity);
        Ok(())
    }

    pub fn multiplicity(&self, a: usize, b: usize) -> u8 {
        if a == b {
            return 0;
        }
        self.multiplicities.get(&key(a, b)).copied().unwrap_or(0)
    }

    /// Distinct vertex pairs with their multiplicities, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, u8)> + '_ {
        self.multiplicities.iter().map(|(&(a, b), &m)| (a, b, m))
    }

    /// Total edge count with multiplicity.
    pub fn edge_count_with_multiplicity(&self) -> u64 {
        self.multiplicities.values().map(|&m| m as u64).sum()
    }

    pub fn degree_vector(&self) -> Vec<u64> {
        let mut deg = vec![0u64; self.n];
        for (&(a, b), &m) in &self.multiplicities {
            deg[a] += m as u64;
            deg[b] += m as u64;
        }
        deg
    }

    pub fn degrees(&self) -> DegreeSequence {
        DegreeSequence::from_unsorted(self.degree_vector())
    }
}

#[derive(Serialize, Deserialize)]
struct RawMultigraph {
    n: usize,
    edges: Vec<(usize, usize, u8)>,
}

impl TryFrom<RawMultigraph> for LoopMultigraph {
    type Error = GraphError;

    fn try_from(raw: RawMultigraph) -> Result<Self, Self::Error> {
        let mut m = LoopMultigraph::new(raw.n);
        for (a, b, mult) in raw.edges {
            m.add_edge(a, b, mult)?;
        }
        Ok(m)
    }
}

impl From<LoopMultigraph> for RawMultigraph {
    fn from(m: LoopMultigraph) -> Self {
        Self { n: m.n, edges: m.edges().collect() }
    }
}
