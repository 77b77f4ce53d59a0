use crate::error::{Error, Result};
use crate::graph::Graph;

/// A cyclic edge ordering: a bijection from edge ids onto positions `1..=m`.
///
/// Position `p` (1-based) holds edge id `positions[p-1]`; positions are
/// interpreted cyclically modulo `m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeOrdering {
    positions: Vec<usize>,
}

impl EdgeOrdering {
    /// Validates that `positions` is a permutation of `0..positions.len()`.
    pub fn new(positions: Vec<usize>) -> Result<Self> {
        let m = positions.len();
        let mut seen = vec![false; m];
        for &id in &positions {
            if id >= m || seen[id] {
                return Err(Error::NotAPermutation { m });
            }
            seen[id] = true;
        }
        Ok(Self { positions })
    }

    /// The ordering that keeps edges in edge-id order.
    pub fn identity(m: usize) -> Self {
        Self {
            positions: (0..m).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    /// Edge id at 1-based position `p`, wrapping cyclically.
    pub fn edge_at(&self, p: usize) -> usize {
        let m = self.positions.len();
        self.positions[(p - 1) % m]
    }

    /// 1-based position of an edge id.
    pub fn position_of(&self, edge_id: usize) -> Option<usize> {
        self.positions.iter().position(|&e| e == edge_id).map(|i| i + 1)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.positions
    }

    /// Cyclic rotation by `k` positions: the edge previously at position
    /// `1 + k` moves to position 1.
    pub fn rotate(&self, k: usize) -> Self {
        let m = self.positions.len();
        if m == 0 {
            return self.clone();
        }
        let k = k % m;
        let mut positions = self.positions.clone();
        positions.rotate_left(k);
        Self { positions }
    }

    /// Full reversal of the position sequence.
    pub fn reverse(&self) -> Self {
        let mut positions = self.positions.clone();
        positions.reverse();
        Self { positions }
    }

    pub(crate) fn check_matches(&self, g: &Graph) -> Result<()> {
        if self.positions.len() != g.m() {
            return Err(Error::OrderingLengthMismatch {
                expected: g.m(),
                got: self.positions.len(),
            });
        }
        Ok(())
    }
}

/// One window of `n-1` cyclically consecutive edges in an ordering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Progression {
    pub start: usize,
    pub edge_ids: Vec<usize>,
}

/// The `n-1` edge ids at cyclic positions `start..start+n-2` of `o`.
pub fn window(g: &Graph, o: &EdgeOrdering, start: usize) -> Result<Progression> {
    o.check_matches(g)?;
    let (n, m) = (g.n(), g.m());
    if m < n - 1 {
        return Err(Error::TooFewEdges { needed: n - 1, m });
    }
    if start < 1 || start > m {
        return Err(Error::PositionOutOfRange { start, m });
    }
    let edge_ids = (0..n - 1).map(|i| o.edge_at(start + i)).collect();
    Ok(Progression { start, edge_ids })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c4() -> Graph {
        Graph::new(4, vec![(1, 2), (2, 3), (3, 4), (4, 1)]).unwrap()
    }

    #[test]
    fn rejects_non_permutations() {
        assert!(EdgeOrdering::new(vec![0, 0, 1]).is_err());
        assert!(EdgeOrdering::new(vec![0, 3]).is_err());
        assert!(EdgeOrdering::new(vec![2, 0, 1]).is_ok());
    }

    #[test]
    fn window_basic_and_wrapping() {
        let g = c4();
        let o = EdgeOrdering::identity(4);
        assert_eq!(window(&g, &o, 1).unwrap().edge_ids, vec![0, 1, 2]);
        // start=3 wraps: positions 3, 4, 1.
        assert_eq!(window(&g, &o, 3).unwrap().edge_ids, vec![2, 3, 0]);
    }

    #[test]
    fn window_rejects_too_few_edges() {
        let g = Graph::new(3, vec![(1, 2)]).unwrap();
        let o = EdgeOrdering::identity(1);
        assert_eq!(
            window(&g, &o, 1).unwrap_err(),
            Error::TooFewEdges { needed: 2, m: 1 }
        );
    }

    #[test]
    fn rotation_shifts_positions() {
        let o = EdgeOrdering::identity(3);
        assert_eq!(o.rotate(1).as_slice(), &[1, 2, 0]);
        assert_eq!(o.rotate(3).as_slice(), o.as_slice());
    }

    #[test]
    fn reversal() {
        let o = EdgeOrdering::new(vec![2, 0, 1]).unwrap();
        assert_eq!(o.reverse().as_slice(), &[1, 0, 2]);
    }

    #[test]
    fn rotation_preserves_window_multiset() {
        let g = c4();
        let o = EdgeOrdering::new(vec![2, 0, 3, 1]).unwrap();
        let sets = |o: &EdgeOrdering| {
            let mut v: Vec<Vec<usize>> = (1..=4)
                .map(|s| {
                    let mut w = window(&g, o, s).unwrap().edge_ids;
                    w.sort_unstable();
                    w
                })
                .collect();
            v.sort();
            v
        };
        for k in 0..4 {
            assert_eq!(sets(&o), sets(&o.rotate(k)));
        }
    }
}
