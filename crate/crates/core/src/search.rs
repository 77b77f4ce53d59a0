//! Exhaustive backtracking search for a CBO on small graphs.
//!
//! Positions are filled left to right with edge ids, position 1 pinned to
//! edge 0 (orderings are rotation-invariant, so this quotients out
//! rotations). After each placement the run of the last up-to-(n-1)
//! consecutive edges must stay acyclic — a run of exactly n-1 acyclic
//! edges is automatically a spanning tree. Wrapping windows are checked
//! once an assignment completes. Candidates are tried in ascending id, so
//! a found ordering is the lexicographically least one starting with
//! edge 0.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::ordering::EdgeOrdering;

/// Node budget for the backtracking search.
#[derive(Debug, Clone, Copy)]
pub struct SearchBudget {
    pub node_limit: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        Self {
            node_limit: 100_000_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(EdgeOrdering),
    /// The whole search space was exhausted: no CBO exists.
    Exhausted,
    /// The node budget ran out first.
    Inconclusive,
}

/// Depth-first search for any CBO of `g` within the given budget.
pub fn find_cbo(g: &Graph, budget: SearchBudget) -> Result<SearchOutcome> {
    if !g.is_connected() {
        return Err(Error::DisconnectedGraph);
    }
    let (n, m) = (g.n(), g.m());
    if m < n - 1 {
        return Ok(SearchOutcome::Exhausted);
    }
    if m == 0 {
        return Ok(SearchOutcome::Found(EdgeOrdering::identity(0)));
    }
    let mut state = SearchState {
        g,
        n,
        m,
        positions: vec![0; m],
        used: vec![false; m],
        dsu: RollbackDsu::new(n),
        nodes: 0,
        limit: budget.node_limit,
    };
    state.used[0] = true;
    match state.extend(1) {
        Step::Found => Ok(SearchOutcome::Found(
            EdgeOrdering::new(state.positions).expect("search places each edge once"),
        )),
        Step::Exhausted => Ok(SearchOutcome::Exhausted),
        Step::OutOfBudget => Ok(SearchOutcome::Inconclusive),
    }
}

enum Step {
    Found,
    Exhausted,
    OutOfBudget,
}

struct SearchState<'a> {
    g: &'a Graph,
    n: usize,
    m: usize,
    positions: Vec<usize>,
    used: Vec<bool>,
    dsu: RollbackDsu,
    nodes: u64,
    limit: u64,
}

impl SearchState<'_> {
    /// Loads the scratch DSU with the previous up-to-(n-2) placed edges.
    /// A candidate extending them acyclically keeps every consecutive run
    /// of length <= n-1 a forest.
    fn rebuild_run(&mut self, depth: usize) {
        self.dsu.reset();
        let run_start = depth.saturating_sub(self.n - 2);
        for i in run_start..depth {
            let (u, v) = self.g.edge(self.positions[i]);
            self.dsu.union(u, v);
        }
    }

    /// Tries every unused edge at position index `depth` (0-based).
    fn extend(&mut self, depth: usize) -> Step {
        self.rebuild_run(depth);
        for cand in 0..self.m {
            if self.used[cand] {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.limit {
                return Step::OutOfBudget;
            }
            let (u, v) = self.g.edge(cand);
            if !self.dsu.union(u, v) {
                continue;
            }
            self.positions[depth] = cand;
            self.used[cand] = true;
            let step = if depth + 1 == self.m {
                if self.wrapping_windows_ok() {
                    Step::Found
                } else {
                    Step::Exhausted
                }
            } else {
                self.extend(depth + 1)
            };
            self.used[cand] = false;
            match step {
                // Deeper calls trashed the scratch state; restore it for
                // the remaining candidates at this depth.
                Step::Exhausted => self.rebuild_run(depth),
                done => return done,
            }
        }
        Step::Exhausted
    }

    /// Verifies the windows that cross the wrap-around once every position
    /// is filled. Plain windows were certified incrementally.
    fn wrapping_windows_ok(&mut self) -> bool {
        let (n, m) = (self.n, self.m);
        for start in m + 3 - n..=m {
            self.dsu.reset();
            for i in 0..n - 1 {
                let pos = (start - 1 + i) % m;
                let (u, v) = self.g.edge(self.positions[pos]);
                if !self.dsu.union(u, v) {
                    return false;
                }
            }
        }
        true
    }
}

/// Union-find without path compression, supporting rollback to an earlier
/// time point. Rollback stacks match the shape of a depth-first search.
#[derive(Debug, Clone)]
pub struct RollbackDsu {
    parent: Vec<usize>,
    size: Vec<usize>,
    history: Vec<usize>,
}

impl RollbackDsu {
    pub fn new(n: usize) -> Self {
        Self {
            parent: (0..=n).collect(),
            size: vec![1; n + 1],
            history: Vec::new(),
        }
    }

    pub fn find(&self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }

    pub fn same(&self, a: usize, b: usize) -> bool {
        self.find(a) == self.find(b)
    }

    /// Returns false (and records nothing) when a and b were already
    /// joined.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        self.history.push(rb);
        true
    }

    /// Number of unions recorded so far.
    pub fn time(&self) -> usize {
        self.history.len()
    }

    /// Undoes unions back to an earlier `time()` mark.
    pub fn rollback(&mut self, mark: usize) {
        while self.history.len() > mark {
            let child = self.history.pop().unwrap();
            let root = self.parent[child];
            self.size[root] -= self.size[child];
            self.parent[child] = child;
        }
    }

    pub fn reset(&mut self) {
        self.rollback(0);
    }
}
