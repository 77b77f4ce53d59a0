//! Density, uniform density, and the necessary conditions an ordering's
//! existence imposes. All comparisons use exact rationals: the interesting
//! bounds sit exactly on equality for natural parameters, where floating
//! point would misclassify.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Exact rational with positive denominator, always reduced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rational {
    num: i64,
    den: i64,
}

impl Rational {
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "denominator must be nonzero");
        let sign = if den < 0 { -1 } else { 1 };
        let g = gcd(num.unsigned_abs(), den.unsigned_abs()) as i64;
        Self {
            num: sign * num / g,
            den: sign * den / g,
        }
    }

    pub fn num(&self) -> i64 {
        self.num
    }

    pub fn den(&self) -> i64 {
        self.den
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num as i128 * other.den as i128).cmp(&(other.num as i128 * self.den as i128))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a.max(1)
    } else {
        gcd(b, a % b)
    }
}

/// d(G) = |E| / (|V| - 1), exactly.
pub fn density(g: &Graph) -> Result<Rational> {
    if g.n() < 2 {
        return Err(Error::DensityUndefined);
    }
    Ok(Rational::new(g.m() as i64, (g.n() - 1) as i64))
}

/// Hard cap for the exhaustive subset scan.
pub const UNIFORM_DENSITY_VERTEX_CAP: usize = 24;

/// Tests d(H) <= d(G) over every induced subgraph H with at least two
/// vertices, by scanning all vertex subsets.
///
/// Induced subgraphs suffice: for a fixed vertex set, taking all induced
/// edges maximizes density, and dropping isolated vertices never lowers
/// it. On failure returns a maximizing witness set (lexicographically
/// smallest among maximizers).
pub fn is_uniformly_dense(g: &Graph) -> Result<(bool, Option<Vec<usize>>)> {
    let n = g.n();
    if n > UNIFORM_DENSITY_VERTEX_CAP {
        return Err(Error::DensityScanTooLarge {
            n,
            cap: UNIFORM_DENSITY_VERTEX_CAP,
        });
    }
    let whole = density(g)?;
    let edge_masks: Vec<u32> = g
        .edges()
        .iter()
        .map(|&(u, v)| (1u32 << (u - 1)) | (1u32 << (v - 1)))
        .collect();

    let mut best: Option<(Rational, Vec<usize>)> = None;
    for mask in 1u32..(1 << n) {
        let size = mask.count_ones() as usize;
        if size < 2 {
            continue;
        }
        let edges = edge_masks.iter().filter(|&&em| em & mask == em).count();
        let d = Rational::new(edges as i64, (size - 1) as i64);
        if d <= whole {
            continue;
        }
        let verts: Vec<usize> = (1..=n).filter(|&v| mask >> (v - 1) & 1 == 1).collect();
        let better = match &best {
            None => true,
            Some((bd, bv)) => d > *bd || (d == *bd && verts < *bv),
        };
        if better {
            best = Some((d, verts));
        }
    }
    match best {
        None => Ok((true, None)),
        Some((_, witness)) => Ok((false, Some(witness))),
    }
}

/// An ordering can only exist when no vertex has degree below |E|/(|V|-1).
pub fn min_degree_necessary(g: &Graph) -> Result<bool> {
    let d = density(g)?;
    let min_deg = g.degrees()[1..].iter().copied().min().unwrap_or(0);
    Ok(Rational::new(min_deg as i64, 1) >= d)
}

/// For a broken wheel on n vertices with r spokes, any cycle must have at
/// least (n-1)/r + 1 vertices; tests s against that bound.
pub fn broken_wheel_cycle_bound(n: usize, r: usize, s: usize) -> bool {
    // s >= (n-1)/r + 1 <=> s*r >= n-1+r, exactly.
    Rational::new(s as i64, 1) >= Rational::new((n - 1 + r) as i64, r as i64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, FamilySpec};
    use crate::fixtures;

    fn k4_plus_pendant() -> Graph {
        Graph::new(
            5,
            vec![(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4), (4, 5)],
        )
        .unwrap()
    }

    #[test]
    fn rational_arithmetic() {
        assert_eq!(Rational::new(15, 9), Rational::new(5, 3));
        assert_eq!(Rational::new(10, 5).to_string(), "2");
        assert_eq!(Rational::new(5, 3).to_string(), "5/3");
        assert!(Rational::new(4, 1) < Rational::new(13, 3));
        assert_eq!(Rational::new(5, 1), Rational::new(25, 5));
    }

    #[test]
    fn density_examples() {
        assert_eq!(density(&fixtures::PETERSEN.graph()).unwrap(), Rational::new(5, 3));
        // Any tree has density 1.
        let tree = Graph::new(4, vec![(1, 2), (2, 3), (2, 4)]).unwrap();
        assert_eq!(density(&tree).unwrap(), Rational::new(1, 1));
        let (w6, _) = generate(&FamilySpec::Wheel { n: 6 }).unwrap();
        assert_eq!(density(&w6).unwrap(), Rational::new(2, 1));
    }

    #[test]
    fn k4_plus_pendant_witness() {
        let (uniform, witness) = is_uniformly_dense(&k4_plus_pendant()).unwrap();
        assert!(!uniform);
        assert_eq!(witness, Some(vec![1, 2, 3, 4]));
    }

    #[test]
    fn petersen_is_uniformly_dense() {
        let (uniform, witness) = is_uniformly_dense(&fixtures::PETERSEN.graph()).unwrap();
        assert!(uniform);
        assert!(witness.is_none());
    }

    #[test]
    fn scan_cap_is_enforced() {
        let edges = (1..30).map(|i| (i, i + 1)).collect();
        let g = Graph::new(30, edges).unwrap();
        assert!(matches!(
            is_uniformly_dense(&g),
            Err(Error::DensityScanTooLarge { .. })
        ));
    }

    #[test]
    fn min_degree_examples() {
        // Wheel on 5 vertices with all spokes but one removed: the hub has
        // degree 1 < 5/4.
        let g = Graph::new(
            5,
            vec![(1, 2), (2, 3), (3, 4), (4, 1), (5, 1)],
        )
        .unwrap();
        assert!(!min_degree_necessary(&g).unwrap());

        let (c9, _) = generate(&FamilySpec::Cycle { n: 9 }).unwrap();
        assert!(min_degree_necessary(&c9).unwrap());
        assert!(min_degree_necessary(&fixtures::PETERSEN.graph()).unwrap());
    }

    #[test]
    fn cycle_bound_examples() {
        assert!(!broken_wheel_cycle_bound(11, 3, 4));
        assert!(broken_wheel_cycle_bound(9, 2, 5));
        assert!(broken_wheel_cycle_bound(9, 4, 3));
    }

    #[test]
    fn induced_scan_equals_all_subgraph_scan() {
        // On small graphs, brute-force every edge subset (vertex set =
        // covered endpoints) and compare maxima with the induced scan.
        let graphs = [
            k4_plus_pendant(),
            Graph::new(4, vec![(1, 2), (2, 3), (3, 4), (4, 1), (1, 3)]).unwrap(),
            fixtures::Y3.graph(),
        ];
        for g in &graphs {
            let whole = density(g).unwrap();
            let mut best_any: Option<Rational> = None;
            for mask in 1u32..(1 << g.m()) {
                let mut verts = std::collections::BTreeSet::new();
                let mut count = 0i64;
                for (id, &(u, v)) in g.edges().iter().enumerate() {
                    if mask >> id & 1 == 1 {
                        verts.insert(u);
                        verts.insert(v);
                        count += 1;
                    }
                }
                if verts.len() < 2 {
                    continue;
                }
                let d = Rational::new(count, verts.len() as i64 - 1);
                best_any = Some(best_any.map_or(d, |b: Rational| b.max(d)));
            }
            let exceeds_any = best_any.unwrap() > whole;
            let (uniform, _) = is_uniformly_dense(g).unwrap();
            assert_eq!(uniform, !exceeds_any);
        }
    }
}
