use std::collections::HashMap;

use crate::error::{Error, Result};

/// Simple undirected graph with 1-based vertex ids and an indexed edge list.
///
/// Edge ids are 0-based positions into the edge list and are stable: edge
/// identity is list position, not endpoint pair, so orderings survive
/// serialization round-trips bit-exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    by_endpoints: HashMap<(usize, usize), usize>,
}

impl Graph {
    /// Builds a graph on vertices `1..=n` from a list of endpoint pairs.
    ///
    /// Rejects self-loops, duplicate unordered pairs, and out-of-range
    /// vertices. Disconnected graphs are legal to build.
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut by_endpoints = HashMap::with_capacity(edges.len());
        for (id, &(u, v)) in edges.iter().enumerate() {
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            for w in [u, v] {
                if w < 1 || w > n {
                    return Err(Error::VertexOutOfRange { v: w, n });
                }
            }
            if by_endpoints.insert(key(u, v), id).is_some() {
                return Err(Error::DuplicateEdge(u, v));
            }
        }
        Ok(Self {
            n,
            edges,
            by_endpoints,
        })
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Endpoints of the edge with the given id, as listed at construction.
    pub fn edge(&self, id: usize) -> (usize, usize) {
        self.edges[id]
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Looks up an edge id by its (unordered) endpoints.
    pub fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        self.by_endpoints.get(&key(u, v)).copied()
    }

    /// Vertex degrees, indexed 1..=n (slot 0 unused).
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.n + 1];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    /// Adjacency lists with edge ids, indexed 1..=n.
    pub fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.n + 1];
        for (id, &(u, v)) in self.edges.iter().enumerate() {
            adj[u].push((v, id));
            adj[v].push((u, id));
        }
        adj
    }

    pub fn is_connected(&self) -> bool {
        let mut dsu = Dsu::new(self.n);
        for &(u, v) in &self.edges {
            dsu.union(u, v);
        }
        dsu.components() == 1
    }

    pub(crate) fn check_edge_id(&self, id: usize) -> Result<()> {
        if id >= self.edges.len() {
            return Err(Error::EdgeIdOutOfRange {
                id,
                m: self.edges.len(),
            });
        }
        Ok(())
    }
}

fn key(u: usize, v: usize) -> (usize, usize) {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Tests whether a set of edge ids forms a spanning tree of `g`.
///
/// True iff the set has exactly n-1 edges and they connect all n vertices.
/// A rejected union (both endpoints already joined) proves a cycle, so the
/// check short-circuits there.
pub fn is_spanning_tree(g: &Graph, edge_ids: &[usize]) -> Result<bool> {
    for &id in edge_ids {
        g.check_edge_id(id)?;
    }
    if edge_ids.len() != g.n() - 1 {
        return Ok(false);
    }
    let mut dsu = Dsu::new(g.n());
    for &id in edge_ids {
        let (u, v) = g.edge(id);
        if !dsu.union(u, v) {
            return Ok(false);
        }
    }
    Ok(dsu.components() == 1)
}

/// Disjoint set union over vertices 1..=n with path halving and union by size.
#[derive(Debug, Clone)]
pub(crate) struct Dsu {
    parent: Vec<usize>,
    size: Vec<usize>,
    components: usize,
}

impl Dsu {
    pub(crate) fn new(n: usize) -> Self {
        Self {
            parent: (0..=n).collect(),
            size: vec![1; n + 1],
            components: n,
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false when both endpoints were already in one component.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        self.components -= 1;
        true
    }

    pub(crate) fn components(&self) -> usize {
        self.components
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builds_triangle() {
        let g = Graph::new(3, vec![(1, 2), (2, 3), (3, 1)]).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.m(), 3);
        assert_eq!(g.edge(0), (1, 2));
        assert_eq!(g.edge_id(3, 2), Some(1));
        assert_eq!(g.edge_id(1, 3), Some(2));
    }

    #[test]
    fn rejects_self_loop() {
        assert_eq!(
            Graph::new(2, vec![(1, 1)]).unwrap_err(),
            Error::SelfLoop(1)
        );
    }

    #[test]
    fn rejects_duplicate_and_out_of_range() {
        assert_eq!(
            Graph::new(3, vec![(1, 2), (2, 1)]).unwrap_err(),
            Error::DuplicateEdge(2, 1)
        );
        assert_eq!(
            Graph::new(3, vec![(1, 4)]).unwrap_err(),
            Error::VertexOutOfRange { v: 4, n: 3 }
        );
    }

    #[test]
    fn spanning_tree_on_triangle() {
        let g = Graph::new(3, vec![(1, 2), (2, 3), (3, 1)]).unwrap();
        assert!(is_spanning_tree(&g, &[0, 1]).unwrap());
        assert!(!is_spanning_tree(&g, &[0, 1, 2]).unwrap());
    }

    #[test]
    fn spanning_tree_detects_disconnection() {
        // C_4 as a cycle 1-2-3-4; the two opposite edges do not span.
        let g = Graph::new(4, vec![(1, 2), (2, 3), (3, 4), (4, 1)]).unwrap();
        assert!(!is_spanning_tree(&g, &[0, 2]).unwrap());
        assert!(is_spanning_tree(&g, &[0, 1, 2]).unwrap());
    }

    #[test]
    fn disconnected_graphs_are_legal() {
        let g = Graph::new(4, vec![(1, 2), (3, 4)]).unwrap();
        assert!(!g.is_connected());
    }
}
