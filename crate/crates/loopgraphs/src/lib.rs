//! Realizability of integer sequences as degree sequences of graphs that
//! allow at most one loop per vertex, and the bipartite graphs such graphs
//! double-cover.
//!
//! A *graph-with-loops* is a simple graph in which every vertex may carry at
//! most one loop. Two degree conventions make sense for them: the usual
//! multigraph one where a loop adds two to its vertex degree, and a *reduced*
//! one where a loop adds one. The crate answers, for a nonincreasing sequence
//! of nonnegative integers:
//!
//! * is it the degree sequence of a graph-with-loops under either convention
//!   ([`sequences::check_loops_double`], [`sequences::check_loops_reduced`]),
//!   of a plain simple graph ([`sequences::check_erdos_gallai`]), or of both
//!   parts of a bipartite graph ([`sequences::check_gale_ryser_symmetric`])?
//! * if so, what does a realization look like? The [`realize`] module builds
//!   one constructively by descending to the all-zero sequence and rebuilding
//!   with local rewrites, recording every step.
//!
//! The [`transforms`] module connects the two worlds: the tensor-product
//! double cover of a graph-with-loops is a bipartite graph whose part degrees
//! are the reduced degrees, while the two-fold topological cover is a
//! multigraph preserving the doubled degrees. The [`oracle`] module provides
//! brute-force ground truth at small vertex counts so that every check and
//! realizer can be validated against exhaustive enumeration.

pub mod graphs;
pub mod io;
pub mod oracle;
pub mod realize;
pub mod sequences;
pub mod transforms;

pub use graphs::{verify_realization, BipartiteGraph, DegreeConvention, GraphWithLoops, LoopMultigraph};
pub use sequences::{CheckReport, CheckRow, DegreeSequence};
