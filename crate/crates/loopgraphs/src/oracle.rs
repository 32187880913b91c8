//! Brute-force ground truth at small vertex counts.
//!
//! Realizability is decided by exhaustive search over all labeled graphs, so
//! the verdicts here share no logic with the inequality checks in
//! [`crate::sequences`]; agreement between the two is what the equivalence
//! suites establish. Since every relabeling of a witness is also a witness,
//! the search may fix vertex `i` to target degree `d_i` and prune branches
//! whose partial degrees can no longer meet their targets.

use std::time::{Duration, Instant};

use thiserror::Error;

use crate::graphs::{BipartiteGraph, DegreeConvention, GraphWithLoops};
use crate::sequences::DegreeSequence;

/// Size and time limits for oracle queries.
///
/// Enumeration over graphs-with-loops visits up to `2^(n(n+1)/2)` graphs and
/// the bipartite search up to `2^(n^2)`, so the cap must be checked before a
/// query starts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleBudget {
    /// Largest sequence length the oracle accepts.
    pub max_n: usize,
    /// Optional wall-clock cap per query.
    pub timeout: Option<Duration>,
}

impl Default for OracleBudget {
    fn default() -> Self {
        Self { max_n: 5, timeout: None }
    }
}

impl OracleBudget {
    pub fn with_max_n(max_n: usize) -> Self {
        Self { max_n, ..Self::default() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("sequence length {n} exceeds the oracle budget max_n = {max_n}")]
    BudgetExceeded { n: usize, max_n: usize },
    #[error("oracle query exceeded its time budget")]
    TimedOut,
}

#[derive(Clone, Copy)]
enum Slot {
    Pair(usize, usize),
    Loop(usize),
}

struct LoopSearch<'a> {
    targets: &'a [u64],
    loop_weight: u64,
    slots: Vec<Slot>,
    /// `suffix_cap[s][v]`: degree still obtainable for `v` from slots `s..`.
    suffix_cap: Vec<Vec<u64>>,
    degrees: Vec<u64>,
    chosen: Vec<usize>,
    deadline: Option<Instant>,
    ticks: u32,
}

impl<'a> LoopSearch<'a> {
    fn new(targets: &'a [u64], loop_weight: u64, deadline: Option<Instant>) -> Self {
        let n = targets.len();
        let mut slots = Vec::with_capacity(n * (n + 1) / 2);
        for a in 0..n {
            for b in a + 1..n {
                slots.push(Slot::Pair(a, b));
            }
        }
        for v in 0..n {
            slots.push(Slot::Loop(v));
        }
        let mut suffix_cap = vec![vec![0u64; n]; slots.len() + 1];
        for s in (0..slots.len()).rev() {
            let mut cap = suffix_cap[s + 1].clone();
            match slots[s] {
                Slot::Pair(a, b) => {
                    cap[a] += 1;
                    cap[b] += 1;
                }
                Slot::Loop(v) => cap[v] += loop_weight,
            }
            suffix_cap[s] = cap;
        }
        Self {
            targets,
            loop_weight,
            slots,
            suffix_cap,
            degrees: vec![0; n],
            chosen: Vec::new(),
            deadline,
            ticks: 0,
        }
    }

    fn tick(&mut self) -> Result<(), OracleError> {
        self.ticks = self.ticks.wrapping_add(1);
        if self.ticks.is_multiple_of(1024) {
            if let Some(deadline) = self.deadline {
                if Instant::now() > deadline {
                    return Err(OracleError::TimedOut);
                }
            }
        }
        Ok(())
    }

    fn dfs(&mut self, s: usize) -> Result<Option<GraphWithLoops>, OracleError> {
        self.tick()?;
        for v in 0..self.targets.len() {
            if self.degrees[v] > self.targets[v]
                || self.degrees[v] + self.suffix_cap[s][v] < self.targets[v]
            {
                return Ok(None);
            }
        }
        if s == self.slots.len() {
            return Ok(Some(self.build()));
        }
        // leave the slot empty first: the first witness found is the
        // lexicographically least over the slot bitstring
        if let Some(found) = self.dfs(s + 1)? {
            return Ok(Some(found));
        }
        match self.slots[s] {
            Slot::Pair(a, b) => {
                self.degrees[a] += 1;
                self.degrees[b] += 1;
                self.chosen.push(s);
                let found = self.dfs(s + 1);
                self.chosen.pop();
                self.degrees[a] -= 1;
                self.degrees[b] -= 1;
                found
            }
            Slot::Loop(v) => {
                self.degrees[v] += self.loop_weight;
                self.chosen.push(s);
                let found = self.dfs(s + 1);
                self.chosen.pop();
                self.degrees[v] -= self.loop_weight;
                found
            }
        }
    }

    fn build(&self) -> GraphWithLoops {
        let mut g = GraphWithLoops::new(self.targets.len());
        for &s in &self.chosen {
            match self.slots[s] {
                Slot::Pair(a, b) => g.add_edge(a, b).expect("slot edges are distinct"),
                Slot::Loop(v) => g.add_loop(v).expect("slot loops are distinct"),
            }
        }
        g
    }
}

fn deadline_of(budget: &OracleBudget) -> Option<Instant> {
    budget.timeout.map(|t| Instant::now() + t)
}

/// Searches for a graph-with-loops whose degree multiset under `convention`
/// equals `d`; returns the first witness in slot order, or `None`.
pub fn oracle_realizable(
    d: &DegreeSequence,
    convention: DegreeConvention,
    budget: &OracleBudget,
) -> Result<Option<GraphWithLoops>, OracleError> {
    let n = d.len();
    if n > budget.max_n {
        return Err(OracleError::BudgetExceeded { n, max_n: budget.max_n });
    }
    let loop_weight = match convention {
        DegreeConvention::Double => 2,
        DegreeConvention::Reduced => 1,
    };
    LoopSearch::new(d.values(), loop_weight, deadline_of(budget)).dfs(0)
}

struct BipartiteSearch<'a> {
    targets: &'a [u64],
    suffix_cap_left: Vec<Vec<u64>>,
    suffix_cap_right: Vec<Vec<u64>>,
    slots: Vec<(usize, usize)>,
    left: Vec<u64>,
    right: Vec<u64>,
    chosen: Vec<usize>,
    deadline: Option<Instant>,
    ticks: u32,
}

impl<'a> BipartiteSearch<'a> {
    fn new(targets: &'a [u64], deadline: Option<Instant>) -> Self {
        let n = targets.len();
        let slots: Vec<(usize, usize)> =
            (0..n).flat_map(|l| (0..n).map(move |r| (l, r))).collect();
        let mut suffix_cap_left = vec![vec![0u64; n]; slots.len() + 1];
        let mut suffix_cap_right = vec![vec![0u64; n]; slots.len() + 1];
        for s in (0..slots.len()).rev() {
            let (l, r) = slots[s];
            let mut cl = suffix_cap_left[s + 1].clone();
            let mut cr = suffix_cap_right[s + 1].clone();
            cl[l] += 1;
            cr[r] += 1;
            suffix_cap_left[s] = cl;
            suffix_cap_right[s] = cr;
        }
        Self {
            targets,
            suffix_cap_left,
            suffix_cap_right,
            slots,
            left: vec![0; n],
            right: vec![0; n],
            chosen: Vec::new(),
            deadline,
            ticks: 0,
        }
    }

    fn tick(&mut self) -> Result<(), OracleError> {
        self.ticks = self.ticks.wrapping_add(1);
        if self.ticks.is_multiple_of(1024) {
            if let Some(deadline) = self.deadline {
                if Instant::now() > deadline {
                    return Err(OracleError::TimedOut);
                }
            }
        }
        Ok(())
    }

    fn dfs(&mut self, s: usize) -> Result<Option<BipartiteGraph>, OracleError> {
        self.tick()?;
        for v in 0..self.targets.len() {
            if self.left[v] > self.targets[v]
                || self.left[v] + self.suffix_cap_left[s][v] < self.targets[v]
                || self.right[v] > self.targets[v]
                || self.right[v] + self.suffix_cap_right[s][v] < self.targets[v]
            {
                return Ok(None);
            }
        }
        if s == self.slots.len() {
            let mut b = BipartiteGraph::new(self.targets.len(), self.targets.len());
            for &c in &self.chosen {
                let (l, r) = self.slots[c];
                b.add_edge(l, r).expect("slot edges are distinct");
            }
            return Ok(Some(b));
        }
        if let Some(found) = self.dfs(s + 1)? {
            return Ok(Some(found));
        }
        let (l, r) = self.slots[s];
        self.left[l] += 1;
        self.right[r] += 1;
        self.chosen.push(s);
        let found = self.dfs(s + 1);
        self.chosen.pop();
        self.left[l] -= 1;
        self.right[r] -= 1;
        found
    }
}

/// Searches for a bipartite graph on `n + n` labeled vertices whose two part
/// degree multisets both equal `d`. The slot space is `2^(n^2)`, so keep the
/// budget at 4 or below.
pub fn oracle_bipartite_symmetric(
    d: &DegreeSequence,
    budget: &OracleBudget,
) -> Result<Option<BipartiteGraph>, OracleError> {
    let n = d.len();
    if n > budget.max_n {
        return Err(OracleError::BudgetExceeded { n, max_n: budget.max_n });
    }
    BipartiteSearch::new(d.values(), deadline_of(budget)).dfs(0)
}

/// Every nonincreasing sequence of length `n` with entries in `0..=d_max`,
/// in ascending lexicographic order.
pub fn sequence_space(n: usize, d_max: u64) -> Vec<DegreeSequence> {
    fn rec(out: &mut Vec<DegreeSequence>, prefix: &mut Vec<u64>, n: usize, cap: u64) {
        if prefix.len() == n {
            out.push(DegreeSequence::from_sorted(prefix.clone()).expect("built nonincreasing"));
            return;
        }
        for v in 0..=cap {
            prefix.push(v);
            rec(out, prefix, n, v);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut out, &mut Vec::new(), n, d_max);
    out
}

/// Oracle verdict for every sequence in [`sequence_space`].
pub fn exhaustive_sequence_scan(
    n: usize,
    d_max: u64,
    convention: DegreeConvention,
    budget: &OracleBudget,
) -> Result<Vec<(DegreeSequence, bool)>, OracleError> {
    if n > budget.max_n {
        return Err(OracleError::BudgetExceeded { n, max_n: budget.max_n });
    }
    sequence_space(n, d_max)
        .into_iter()
        .map(|d| {
            let verdict = oracle_realizable(&d, convention, budget)?.is_some();
            Ok((d, verdict))
        })
        .collect()
}
