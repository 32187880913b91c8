//! Degree sequences and the prefix-sum inequalities that decide their
//! realizability.
//!
//! Every check here has the same shape: for each `k` from 1 to `n`, compare
//! the sum of the `k` largest degrees against a bound made of a clique-like
//! term plus the capacity of the remaining vertices. They differ only in the
//! clique term: `k(k-1)` for simple graphs, `k(k+1)` for graphs-with-loops
//! under the doubled-degree convention, `k^2` under the reduced convention,
//! and no clique term at all for the symmetric bipartite (dominance) test.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Errors from constructing or transforming degree sequences.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SequenceError {
    #[error("degree {value} at position {index} is negative")]
    NegativeEntry { index: usize, value: i64 },
    #[error("degrees increase at position {index}; enable sorting to reorder")]
    NotSorted { index: usize },
    #[error("degree at position {index} is zero")]
    ZeroEntry { index: usize },
    #[error("cannot lower the single degree {value} by 2")]
    Underflow { value: u64 },
    #[error("sequence is empty")]
    Empty,
    #[error("largest degree {max} exceeds the sequence length {n}")]
    DegreeExceedsOrder { max: u64, n: usize },
}

/// A sequence of nonnegative integer degrees in nonincreasing order.
///
/// The ordering is an invariant, not a convention: every check below is
/// stated for sorted input, so construction validates or sorts up front and
/// the rest of the crate never re-checks.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct DegreeSequence {
    values: Vec<u64>,
}

impl DegreeSequence {
    /// Builds a sequence from raw integers. With `autosort` the input is
    /// reordered; without it, out-of-order input is rejected.
    pub fn new(raw: &[i64], autosort: bool) -> Result<Self, SequenceError> {
        for (index, &value) in raw.iter().enumerate() {
            if value < 0 {
                return Err(SequenceError::NegativeEntry { index, value });
            }
        }
        let mut values: Vec<u64> = raw.iter().map(|&v| v as u64).collect();
        if autosort {
            values.sort_unstable_by(|a, b| b.cmp(a));
        } else if let Some(index) = values.windows(2).position(|w| w[0] < w[1]) {
            return Err(SequenceError::NotSorted { index });
        }
        Ok(Self { values })
    }

    /// Wraps a vector that is already nonincreasing.
    pub fn from_sorted(values: Vec<u64>) -> Result<Self, SequenceError> {
        if let Some(index) = values.windows(2).position(|w| w[0] < w[1]) {
            return Err(SequenceError::NotSorted { index });
        }
        Ok(Self { values })
    }

    /// Sorts arbitrary degrees into a valid sequence.
    pub fn from_unsorted(mut values: Vec<u64>) -> Self {
        values.sort_unstable_by(|a, b| b.cmp(a));
        Self { values }
    }

    pub fn empty() -> Self {
        Self { values: Vec::new() }
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn sum(&self) -> u64 {
        self.values.iter().sum()
    }

    /// Largest degree; 0 for the empty sequence.
    pub fn max_degree(&self) -> u64 {
        self.values.first().copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.values.iter().copied()
    }

    /// Copy without the trailing zero entries.
    pub fn strip_trailing_zeros(&self) -> Self {
        let end = self.values.iter().rposition(|&v| v != 0).map_or(0, |i| i + 1);
        Self { values: self.values[..end].to_vec() }
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.values {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

impl TryFrom<Vec<u64>> for DegreeSequence {
    type Error = SequenceError;

    fn try_from(values: Vec<u64>) -> Result<Self, Self::Error> {
        Self::from_sorted(values)
    }
}

impl From<DegreeSequence> for Vec<u64> {
    fn from(d: DegreeSequence) -> Self {
        d.values
    }
}

/// One row of a realizability check: the prefix sum and its bound at index `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRow {
    pub k: usize,
    pub lhs: u64,
    pub rhs: u64,
}

/// Outcome of a realizability check, with one row per prefix length.
///
/// `parity_ok` is fixed to `true` for the checks that impose no parity
/// condition, so `passed == parity_ok && lhs <= rhs on every row` holds
/// uniformly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub passed: bool,
    pub parity_ok: bool,
    pub rows: Vec<CheckRow>,
    /// Least `k` whose row has `lhs > rhs`, independent of parity.
    pub first_violation: Option<usize>,
}

fn run_check(d: &DegreeSequence, parity_required: bool, rhs: impl Fn(usize) -> u64) -> CheckReport {
    let mut rows = Vec::with_capacity(d.len());
    let mut first_violation = None;
    let mut lhs = 0u64;
    for (i, v) in d.iter().enumerate() {
        let k = i + 1;
        lhs += v;
        let rhs_k = rhs(k);
        if lhs > rhs_k && first_violation.is_none() {
            first_violation = Some(k);
        }
        rows.push(CheckRow { k, lhs, rhs: rhs_k });
    }
    let parity_ok = !parity_required || d.sum().is_multiple_of(2);
    CheckReport { passed: parity_ok && first_violation.is_none(), parity_ok, rows, first_violation }
}

fn tail_min_sum(d: &DegreeSequence, k: usize) -> u64 {
    d.values()[k..].iter().map(|&v| v.min(k as u64)).sum()
}

fn total_min_sum(d: &DegreeSequence, k: usize) -> u64 {
    d.values().iter().map(|&v| v.min(k as u64)).sum()
}

/// Simple-graph realizability: the sum is even and for every `k`
/// the `k` largest degrees sum to at most `k(k-1) + Σ_{i>k} min(k, d_i)`.
pub fn check_erdos_gallai(d: &DegreeSequence) -> CheckReport {
    run_check(d, true, |k| {
        let k = k as u64;
        k * (k - 1) + tail_min_sum(d, k as usize)
    })
}

/// Graph-with-loops realizability with loops counted twice: the sum is even
/// and the bound relaxes to `k(k+1)` since each of the first `k` vertices may
/// also carry a loop worth two.
pub fn check_loops_double(d: &DegreeSequence) -> CheckReport {
    run_check(d, true, |k| {
        let k = k as u64;
        k * (k + 1) + tail_min_sum(d, k as usize)
    })
}

/// Graph-with-loops realizability with loops counted once: bound `k^2`, and
/// no parity condition at all.
pub fn check_loops_reduced(d: &DegreeSequence) -> CheckReport {
    run_check(d, false, |k| {
        let k = k as u64;
        k * k + tail_min_sum(d, k as usize)
    })
}

/// Realizability of `(d, d)` as the two part degree sequences of a bipartite
/// simple graph, decided by dominance: for every `k`, the `k` largest degrees
/// sum to at most `Σ_{i=1..n} min(k, d_i)`.
pub fn check_gale_ryser_symmetric(d: &DegreeSequence) -> CheckReport {
    run_check(d, false, |k| total_min_sum(d, k))
}

/// Conjugate partition: entry `k` counts the degrees that are at least `k`.
///
/// Its prefix sums are exactly the right-hand sides of
/// [`check_gale_ryser_symmetric`].
pub fn conjugate(d: &DegreeSequence) -> DegreeSequence {
    let values = (1..=d.max_degree()).map(|k| d.iter().filter(|&v| v >= k).count() as u64).collect();
    DegreeSequence { values }
}

/// Lowers the largest and the smallest degree by one and restores sorted
/// order.
///
/// Returns the reduced sequence together with the 1-based pivot position `m`
/// whose entry absorbed the leading decrement: the last position of the run
/// of maximal entries, or `n - 1` when all entries are equal. A single-entry
/// sequence is its own head and tail, so it drops by two (position `m = 0`
/// by the all-equal convention), which fails for a lone 1.
///
/// All entries must be strictly positive; strip trailing zeros first.
pub fn choudum_reduce(d: &DegreeSequence) -> Result<(DegreeSequence, usize), SequenceError> {
    let v = d.values();
    if v.is_empty() {
        return Err(SequenceError::Empty);
    }
    if let Some(index) = v.iter().position(|&x| x == 0) {
        return Err(SequenceError::ZeroEntry { index });
    }
    let n = v.len();
    if n == 1 {
        if v[0] < 2 {
            return Err(SequenceError::Underflow { value: v[0] });
        }
        return Ok((DegreeSequence { values: vec![v[0] - 2] }, 0));
    }
    let run = v.iter().take_while(|&&x| x == v[0]).count();
    let m = if run == n { n - 1 } else { run };
    // Decrementing the last entry of the head run is the same as decrementing
    // the first entry and re-sorting, so the result stays nonincreasing.
    let mut values = v.to_vec();
    values[m - 1] -= 1;
    values[n - 1] -= 1;
    debug_assert!(values.windows(2).all(|w| w[0] >= w[1]));
    Ok((DegreeSequence { values }, m))
}

/// Raises every degree by one.
pub fn increment_all(d: &DegreeSequence) -> DegreeSequence {
    DegreeSequence { values: d.iter().map(|v| v + 1).collect() }
}

/// Degrees of the complement within the complete graph-with-loops on `n`
/// vertices: entry `i` becomes `n - d_{n+1-i}`, which is nonincreasing by
/// construction. Fails when the largest degree exceeds `n`.
pub fn complement_sequence(d: &DegreeSequence) -> Result<DegreeSequence, SequenceError> {
    let n = d.len() as u64;
    if d.max_degree() > n {
        return Err(SequenceError::DegreeExceedsOrder { max: d.max_degree(), n: d.len() });
    }
    Ok(DegreeSequence { values: d.values().iter().rev().map(|&v| n - v).collect() })
}
