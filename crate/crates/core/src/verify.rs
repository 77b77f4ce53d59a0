//! CBO verification: the O(VE) window-scan reference algorithm and the
//! amortized O(E log V) sliding-window algorithm on a link-cut forest.
//!
//! Both engines produce identical reports. The failing start is always the
//! smallest failing window position, and a failing window of n-1 distinct
//! edges on n vertices necessarily contains a cycle, so window-local
//! failures are reported as `CycleInWindow`.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::link_cut::LinkCutForest;
use crate::ordering::EdgeOrdering;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FailureReason {
    /// Some window's edges contain a cycle.
    CycleInWindow,
    /// Some window's edges miss a vertex without containing a cycle. Kept
    /// for report completeness; windows of exactly n-1 distinct simple
    /// edges cannot fail this way.
    WindowDisconnected,
    /// The graph itself is disconnected, so no window can span it.
    GraphDisconnected,
    /// Fewer than n-1 edges, so no window exists.
    TooFewEdges,
}

impl FailureReason {
    pub fn as_str(&self) -> &'static str {
        match self {
            FailureReason::CycleInWindow => "cycle-in-window",
            FailureReason::WindowDisconnected => "window-disconnected",
            FailureReason::GraphDisconnected => "graph-disconnected",
            FailureReason::TooFewEdges => "too-few-edges",
        }
    }
}

/// Verdict plus the first failing window, when the failure is window-local.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyReport {
    pub is_cbo: bool,
    pub failing_start: Option<usize>,
    pub reason: Option<FailureReason>,
}

impl VerifyReport {
    fn pass() -> Self {
        Self {
            is_cbo: true,
            failing_start: None,
            reason: None,
        }
    }

    fn fail_window(start: usize) -> Self {
        Self {
            is_cbo: false,
            failing_start: Some(start),
            reason: Some(FailureReason::CycleInWindow),
        }
    }

    fn fail_global(reason: FailureReason) -> Self {
        Self {
            is_cbo: false,
            failing_start: None,
            reason: Some(reason),
        }
    }
}

fn precheck(g: &Graph, o: &EdgeOrdering) -> Result<Option<VerifyReport>> {
    o.check_matches(g)?;
    if g.m() < g.n() - 1 {
        return Ok(Some(VerifyReport::fail_global(FailureReason::TooFewEdges)));
    }
    if !g.is_connected() {
        return Ok(Some(VerifyReport::fail_global(
            FailureReason::GraphDisconnected,
        )));
    }
    Ok(None)
}

/// Reference verifier: for every start, rebuilds the window's adjacency
/// list and runs a depth-first search, O(V) per window.
pub fn verify_naive(g: &Graph, o: &EdgeOrdering) -> Result<VerifyReport> {
    if let Some(report) = precheck(g, o)? {
        return Ok(report);
    }
    let (n, m) = (g.n(), g.m());
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    let mut visited = vec![false; n + 1];
    let mut stack = Vec::with_capacity(n);
    for start in 1..=m {
        for lists in adj.iter_mut() {
            lists.clear();
        }
        for i in 0..n - 1 {
            let (u, v) = g.edge(o.edge_at(start + i));
            adj[u].push(v);
            adj[v].push(u);
        }
        visited[1..].fill(false);
        stack.push(1);
        visited[1] = true;
        let mut seen = 1;
        while let Some(u) = stack.pop() {
            for &v in &adj[u] {
                if !visited[v] {
                    visited[v] = true;
                    seen += 1;
                    stack.push(v);
                }
            }
        }
        if seen != n {
            return Ok(VerifyReport::fail_window(start));
        }
    }
    Ok(VerifyReport::pass())
}

/// Sliding-window verifier over a link-cut forest.
///
/// Inserts the first n-1 edges, then for each step cuts the edge leaving
/// the window and links the edge entering it; a rejected link means the new
/// window contains a cycle. At most 2m + (n-1) forest operations.
pub fn verify_lct(g: &Graph, o: &EdgeOrdering) -> Result<VerifyReport> {
    verify_lct_counted(g, o).map(|(report, _)| report)
}

/// Same as [`verify_lct`], also reporting the number of forest operations.
pub fn verify_lct_counted(g: &Graph, o: &EdgeOrdering) -> Result<(VerifyReport, u64)> {
    if let Some(report) = precheck(g, o)? {
        return Ok((report, 0));
    }
    let (n, m) = (g.n(), g.m());
    let mut forest = LinkCutForest::new(n);
    for i in 1..n {
        let (u, v) = g.edge(o.edge_at(i));
        if link_checked(&mut forest, u, v)?.is_err() {
            // The first n-1 positions contain a cycle, so the window
            // starting at position 1 already fails.
            return Ok((VerifyReport::fail_window(1), forest.op_count()));
        }
    }
    for i in 1..m {
        let (u, v) = g.edge(o.edge_at(i));
        forest.cut(u, v)?;
        let (x, y) = g.edge(o.edge_at(i + n - 1));
        if link_checked(&mut forest, x, y)?.is_err() {
            return Ok((VerifyReport::fail_window(i + 1), forest.op_count()));
        }
    }
    Ok((VerifyReport::pass(), forest.op_count()))
}

/// Distinguishes the expected would-cycle rejection from real errors.
fn link_checked(
    forest: &mut LinkCutForest,
    u: usize,
    v: usize,
) -> Result<std::result::Result<(), ()>> {
    match forest.link(u, v) {
        Ok(()) => Ok(Ok(())),
        Err(Error::LinkWouldCycle { .. }) => Ok(Err(())),
        Err(e) => Err(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::graph::is_spanning_tree;
    use crate::ordering::window;

    fn k4_bad() -> (Graph, EdgeOrdering) {
        let g = Graph::new(4, vec![(1, 2), (1, 3), (2, 3), (1, 4), (2, 4), (3, 4)]).unwrap();
        (g, EdgeOrdering::identity(6))
    }

    #[test]
    fn petersen_fixture_passes_both_engines() {
        let g = fixtures::PETERSEN.graph();
        let o = fixtures::PETERSEN.ordering();
        assert!(verify_naive(&g, &o).unwrap().is_cbo);
        assert!(verify_lct(&g, &o).unwrap().is_cbo);
    }

    #[test]
    fn any_cycle_permutation_is_a_cbo() {
        // Every window of a cycle omits exactly one edge.
        let g = Graph::new(5, vec![(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)]).unwrap();
        for o in [
            EdgeOrdering::identity(5),
            EdgeOrdering::new(vec![3, 0, 4, 1, 2]).unwrap(),
            EdgeOrdering::new(vec![4, 2, 0, 3, 1]).unwrap(),
        ] {
            assert!(verify_naive(&g, &o).unwrap().is_cbo);
            assert!(verify_lct(&g, &o).unwrap().is_cbo);
        }
    }

    #[test]
    fn k4_identity_fails_at_first_window() {
        let (g, o) = k4_bad();
        let expected = VerifyReport {
            is_cbo: false,
            failing_start: Some(1),
            reason: Some(FailureReason::CycleInWindow),
        };
        assert_eq!(verify_naive(&g, &o).unwrap(), expected);
        assert_eq!(verify_lct(&g, &o).unwrap(), expected);
    }

    #[test]
    fn naive_matches_windowwise_spanning_tree_definition() {
        let (g, o) = k4_bad();
        let by_definition = (1..=g.m()).all(|s| {
            is_spanning_tree(&g, &window(&g, &o, s).unwrap().edge_ids).unwrap()
        });
        assert_eq!(verify_naive(&g, &o).unwrap().is_cbo, by_definition);
    }

    #[test]
    fn disconnected_graph_reported() {
        // Enough edges for windows, but two components.
        let g = Graph::new(5, vec![(1, 2), (2, 3), (3, 1), (4, 5)]).unwrap();
        let o = EdgeOrdering::identity(4);
        let expected = VerifyReport {
            is_cbo: false,
            failing_start: None,
            reason: Some(FailureReason::GraphDisconnected),
        };
        assert_eq!(verify_naive(&g, &o).unwrap(), expected);
        assert_eq!(verify_lct(&g, &o).unwrap(), expected);
    }

    #[test]
    fn too_few_edges_reported() {
        let g = Graph::new(4, vec![(1, 2), (2, 3)]).unwrap();
        let o = EdgeOrdering::identity(2);
        let expected = VerifyReport {
            is_cbo: false,
            failing_start: None,
            reason: Some(FailureReason::TooFewEdges),
        };
        assert_eq!(verify_naive(&g, &o).unwrap(), expected);
        assert_eq!(verify_lct(&g, &o).unwrap(), expected);
    }

    #[test]
    fn tree_graphs_verify() {
        // m = n-1: every window is the whole tree; the slide re-links the
        // edge it just cut.
        let g = Graph::new(5, vec![(1, 2), (1, 3), (3, 4), (3, 5)]).unwrap();
        let o = EdgeOrdering::new(vec![2, 0, 3, 1]).unwrap();
        assert!(verify_naive(&g, &o).unwrap().is_cbo);
        assert!(verify_lct(&g, &o).unwrap().is_cbo);
    }

    #[test]
    fn length_mismatch_is_an_error() {
        let g = Graph::new(3, vec![(1, 2), (2, 3), (3, 1)]).unwrap();
        let o = EdgeOrdering::identity(2);
        assert!(verify_naive(&g, &o).is_err());
        assert!(verify_lct(&g, &o).is_err());
    }

    #[test]
    fn reversed_fixture_still_verifies() {
        let g = fixtures::PETERSEN.graph();
        let o = fixtures::PETERSEN.ordering().reverse();
        assert!(verify_naive(&g, &o).unwrap().is_cbo);
        assert!(verify_lct(&g, &o).unwrap().is_cbo);
    }

    #[test]
    fn operation_count_stays_within_bound() {
        let g = fixtures::Y8.graph();
        let o = fixtures::Y8.ordering();
        let (report, ops) = verify_lct_counted(&g, &o).unwrap();
        assert!(report.is_cbo);
        assert!(ops <= (2 * g.m() + g.n() - 1) as u64);
    }
}
