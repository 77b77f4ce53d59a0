//! Splay-tree based link-cut forest over nodes 1..=n.
//!
//! Supports link, cut-by-endpoints, and connectivity queries in amortized
//! logarithmic time. Links between arbitrary trees need re-rooting, so
//! every preferred path carries a lazy reversal flag.

use crate::error::{Error, Result};

const NIL: usize = usize::MAX;

#[derive(Debug, Clone)]
struct Node {
    parent: usize,
    child: [usize; 2],
    flip: bool,
}

/// Dynamic forest on nodes 1..=n. Single-owner mutable state: use one
/// instance per concurrent verification.
#[derive(Debug, Clone)]
pub struct LinkCutForest {
    nodes: Vec<Node>,
    splay_path: Vec<usize>,
    ops: u64,
}

impl LinkCutForest {
    pub fn new(n: usize) -> Self {
        Self {
            nodes: vec![
                Node {
                    parent: NIL,
                    child: [NIL, NIL],
                    flip: false,
                };
                n + 1
            ],
            splay_path: Vec::new(),
            ops: 0,
        }
    }

    /// Number of nodes the forest was created with.
    pub fn len(&self) -> usize {
        self.nodes.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Count of public link/cut/connected calls so far.
    pub fn op_count(&self) -> u64 {
        self.ops
    }

    /// True iff `u` and `v` are currently in the same tree.
    pub fn connected(&mut self, u: usize, v: usize) -> Result<bool> {
        self.check_node(u)?;
        self.check_node(v)?;
        self.ops += 1;
        Ok(self.connected_internal(u, v))
    }

    /// Joins the trees containing `u` and `v` by a new edge.
    ///
    /// Linking two nodes that are already connected is a contract
    /// violation and leaves the forest unchanged.
    pub fn link(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_node(u)?;
        self.check_node(v)?;
        self.ops += 1;
        if u == v || self.connected_internal(u, v) {
            return Err(Error::LinkWouldCycle { u, v });
        }
        // connected_internal left u freshly accessed; re-root its tree at u
        // and hang it off v as a path parent.
        self.make_root(u);
        self.nodes[u].parent = v;
        Ok(())
    }

    /// Removes the edge (u, v). Errors if no such forest edge exists.
    pub fn cut(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_node(u)?;
        self.check_node(v)?;
        self.ops += 1;
        if u == v {
            return Err(Error::CutMissingEdge { u, v });
        }
        self.make_root(u);
        self.access(v);
        // After re-rooting at u and accessing v, v's splay tree holds the
        // u..v path in order. The edge exists iff that path is exactly two
        // nodes: u as v's left child with no right subtree of its own.
        self.push_down(u);
        if self.nodes[v].child[0] != u || self.nodes[u].child[1] != NIL {
            return Err(Error::CutMissingEdge { u, v });
        }
        self.nodes[v].child[0] = NIL;
        self.nodes[u].parent = NIL;
        Ok(())
    }

    fn check_node(&self, v: usize) -> Result<()> {
        if v < 1 || v >= self.nodes.len() {
            return Err(Error::ForestNodeOutOfRange {
                v,
                n: self.nodes.len() - 1,
            });
        }
        Ok(())
    }

    fn connected_internal(&mut self, u: usize, v: usize) -> bool {
        if u == v {
            return true;
        }
        let ru = self.find_root(u);
        let rv = self.find_root(v);
        ru == rv
    }

    fn is_splay_root(&self, x: usize) -> bool {
        let p = self.nodes[x].parent;
        p == NIL || (self.nodes[p].child[0] != x && self.nodes[p].child[1] != x)
    }

    fn push_down(&mut self, x: usize) {
        if self.nodes[x].flip {
            self.nodes[x].child.swap(0, 1);
            for side in 0..2 {
                let c = self.nodes[x].child[side];
                if c != NIL {
                    self.nodes[c].flip ^= true;
                }
            }
            self.nodes[x].flip = false;
        }
    }

    fn rotate(&mut self, x: usize) {
        let p = self.nodes[x].parent;
        let g = self.nodes[p].parent;
        let dir = (self.nodes[p].child[1] == x) as usize;
        let mid = self.nodes[x].child[1 - dir];

        if !self.is_splay_root(p) {
            let gdir = (self.nodes[g].child[1] == p) as usize;
            self.nodes[g].child[gdir] = x;
        }
        self.nodes[x].parent = g;

        self.nodes[p].child[dir] = mid;
        if mid != NIL {
            self.nodes[mid].parent = p;
        }
        self.nodes[x].child[1 - dir] = p;
        self.nodes[p].parent = x;
    }

    fn splay(&mut self, x: usize) {
        let mut path = std::mem::take(&mut self.splay_path);
        path.clear();
        let mut cur = x;
        path.push(cur);
        while !self.is_splay_root(cur) {
            cur = self.nodes[cur].parent;
            path.push(cur);
        }
        while let Some(y) = path.pop() {
            self.push_down(y);
        }
        self.splay_path = path;

        while !self.is_splay_root(x) {
            let p = self.nodes[x].parent;
            if !self.is_splay_root(p) {
                let g = self.nodes[p].parent;
                let zig_zig =
                    (self.nodes[g].child[1] == p) == (self.nodes[p].child[1] == x);
                if zig_zig {
                    self.rotate(p);
                } else {
                    self.rotate(x);
                }
            }
            self.rotate(x);
        }
    }

    /// Makes the path from the tree root to `x` preferred, with `x` as the
    /// root of its splay tree.
    fn access(&mut self, x: usize) {
        let mut last = NIL;
        let mut cur = x;
        while cur != NIL {
            self.splay(cur);
            // The displaced right child keeps `cur` as its path parent.
            self.nodes[cur].child[1] = last;
            last = cur;
            cur = self.nodes[cur].parent;
        }
        self.splay(x);
    }

    fn make_root(&mut self, x: usize) {
        self.access(x);
        self.nodes[x].flip ^= true;
    }

    fn find_root(&mut self, x: usize) -> usize {
        self.access(x);
        let mut cur = x;
        loop {
            self.push_down(cur);
            let left = self.nodes[cur].child[0];
            if left == NIL {
                break;
            }
            cur = left;
        }
        self.splay(cur);
        cur
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fresh_forest_is_disconnected() {
        let mut f = LinkCutForest::new(4);
        assert!(!f.connected(1, 2).unwrap());
        assert!(f.connected(3, 3).unwrap());
    }

    #[test]
    fn link_then_cut() {
        let mut f = LinkCutForest::new(4);
        f.link(1, 2).unwrap();
        assert!(f.connected(1, 2).unwrap());
        f.cut(1, 2).unwrap();
        assert!(!f.connected(1, 2).unwrap());
    }

    #[test]
    fn link_within_one_tree_is_an_error() {
        let mut f = LinkCutForest::new(3);
        f.link(1, 2).unwrap();
        f.link(2, 3).unwrap();
        assert_eq!(
            f.link(1, 3).unwrap_err(),
            Error::LinkWouldCycle { u: 1, v: 3 }
        );
        // The failed link must leave the forest intact.
        assert!(f.connected(1, 3).unwrap());
        f.cut(2, 3).unwrap();
        assert!(!f.connected(1, 3).unwrap());
    }

    #[test]
    fn cut_of_absent_edge_is_an_error() {
        let mut f = LinkCutForest::new(4);
        f.link(1, 2).unwrap();
        f.link(2, 3).unwrap();
        // 1-3 are connected but not by a direct edge.
        assert_eq!(f.cut(1, 3).unwrap_err(), Error::CutMissingEdge { u: 1, v: 3 });
        assert!(f.connected(1, 3).unwrap());
        assert_eq!(f.cut(1, 4).unwrap_err(), Error::CutMissingEdge { u: 1, v: 4 });
    }

    #[test]
    fn path_reversal_keeps_edges_cuttable() {
        // Build a path, re-root it implicitly through links from both ends,
        // and cut an interior edge.
        let mut f = LinkCutForest::new(6);
        f.link(3, 4).unwrap();
        f.link(2, 3).unwrap();
        f.link(5, 4).unwrap();
        f.link(1, 2).unwrap();
        f.link(6, 5).unwrap();
        assert!(f.connected(1, 6).unwrap());
        f.cut(4, 3).unwrap();
        assert!(f.connected(1, 3).unwrap());
        assert!(f.connected(4, 6).unwrap());
        assert!(!f.connected(1, 6).unwrap());
    }

    #[test]
    fn op_counter_counts_public_calls() {
        let mut f = LinkCutForest::new(3);
        let _ = f.connected(1, 2);
        let _ = f.link(1, 2);
        let _ = f.cut(1, 2);
        assert_eq!(f.op_count(), 3);
    }
}
