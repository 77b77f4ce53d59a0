//! Canonical generators for the graph families under study, with
//! deterministic vertex and edge labeling.
//!
//! Labeling conventions (class `a`/`b`/`c` with 1-based indices):
//! * cycle: `b_i = (v_i, v_{i+1})`, indices mod n.
//! * square cycle: `a_i = (v_i, v_{i+2})` chords, `b_i = (v_i, v_{i+1})` rim,
//!   indices mod n.
//! * wheel: hub `v_n`; spokes `a_i = (v_i, v_n)`, rim `b_i` mod n-1.
//! * double wheel: rim `v_1..v_{n-2}`, hubs are the two highest ids (the
//!   paper-style `v_0` becomes vertex n, the second hub is vertex n-1);
//!   `a_i = (v_i, v_n)`, rim `b_i`, `c_i = (v_i, v_{n-1})`, indices mod n-2.
//!   There is no hub-hub edge, so the graph has 3n-6 edges.
//! * fan / broken fan: hub `v_1`, path `v_2..v_n`; spokes `a_i` in path
//!   order, path edges `b_i = (v_{i+1}, v_{i+2})`.
//! * broken wheels: hub `v_0` becomes vertex n; rim edges
//!   `a_i = (v_i, v_{i+1})` mod n-1, spokes `b_i` in rim order (for the
//!   one-missing-spoke wheel `b_i = (v_0, v_{i+1})`, so the spoke to `v_1`
//!   is absent).
//! * prism: outer `a_i`, rungs `b_i = (v_i, u_i)`, inner `c_i`, indices
//!   mod n; `u_i` is vertex n+i.

use std::collections::BTreeMap;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A graph family together with its parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Cycle { n: usize },
    SquareCycle { n: usize },
    Wheel { n: usize },
    DoubleWheel { n: usize },
    Fan { n: usize },
    BrokenFan { t: usize, r: usize },
    BrokenWheelOneSpoke { n: usize },
    BrokenWheelUniform { n: usize, r: usize },
    Prism { n: usize },
    Max2Deg(Max2DegTrace),
}

impl FamilySpec {
    /// One-line description, used as a `#` header in graph files.
    pub fn describe(&self) -> String {
        match self {
            FamilySpec::Cycle { n } => format!("family: cycle n={n}"),
            FamilySpec::SquareCycle { n } => format!("family: square_cycle n={n}"),
            FamilySpec::Wheel { n } => format!("family: wheel n={n}"),
            FamilySpec::DoubleWheel { n } => format!("family: double_wheel n={n}"),
            FamilySpec::Fan { n } => format!("family: fan n={n}"),
            FamilySpec::BrokenFan { t, r } => {
                format!("family: broken_fan t={t} r={r} n={}", (r - 1) * t + 2)
            }
            FamilySpec::BrokenWheelOneSpoke { n } => {
                format!("family: broken_wheel_one_spoke n={n}")
            }
            FamilySpec::BrokenWheelUniform { n, r } => {
                format!("family: broken_wheel_uniform n={n} r={r}")
            }
            FamilySpec::Prism { n } => format!("family: prism n={n}"),
            FamilySpec::Max2Deg(trace) => format!("family: max2deg n={}", trace.vertex_count()),
        }
    }
}

/// Construction sequence for a maximal 2-degenerate graph: the base edge
/// (1,2), then one step per new vertex 3, 4, ... joining two distinct
/// existing vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Max2DegTrace {
    steps: Vec<(usize, usize, usize)>,
}

impl Max2DegTrace {
    pub fn new(steps: Vec<(usize, usize, usize)>) -> Result<Self> {
        for (i, &(v, x, y)) in steps.iter().enumerate() {
            if v != i + 3 {
                return Err(Error::InvalidTrace(format!(
                    "step {} must add vertex {}, got {v}",
                    i + 1,
                    i + 3
                )));
            }
            if x == y {
                return Err(Error::InvalidTrace(format!(
                    "step for vertex {v} joins {x} twice"
                )));
            }
            if x >= v || y >= v || x < 1 || y < 1 {
                return Err(Error::InvalidTrace(format!(
                    "step for vertex {v} references ({x}, {y}), not yet present"
                )));
            }
        }
        Ok(Self { steps })
    }

    pub fn steps(&self) -> &[(usize, usize, usize)] {
        &self.steps
    }

    pub fn vertex_count(&self) -> usize {
        self.steps.len() + 2
    }

    /// Builds the graph: edge (1,2), then the two edges of each step in
    /// order, giving 1 + 2(n-2) = 2n-3 edges.
    pub fn to_graph(&self) -> Graph {
        let mut edges = Vec::with_capacity(1 + 2 * self.steps.len());
        edges.push((1, 2));
        for &(v, x, y) in &self.steps {
            edges.push((v, x));
            edges.push((v, y));
        }
        Graph::new(self.vertex_count(), edges).expect("trace edges are valid by construction")
    }
}

/// Lookup from symbolic edge names (class and 1-based index) to edge ids.
///
/// Indices are normalized modulo the class period into 1..=period, so
/// out-of-range subscripts wrap the way rim indices do.
#[derive(Debug, Clone, Default)]
pub struct LabeledEdgeMap {
    classes: BTreeMap<char, Vec<usize>>,
}

impl LabeledEdgeMap {
    fn insert(&mut self, class: char, ids: Vec<usize>) {
        self.classes.insert(class, ids);
    }

    pub fn edge(&self, class: char, index: i64) -> Option<usize> {
        let ids = self.classes.get(&class)?;
        let period = ids.len() as i64;
        let idx = (index - 1).rem_euclid(period);
        Some(ids[idx as usize])
    }

    pub fn period(&self, class: char) -> Option<usize> {
        self.classes.get(&class).map(Vec::len)
    }

    pub fn classes(&self) -> impl Iterator<Item = char> + '_ {
        self.classes.keys().copied()
    }

    pub fn total(&self) -> usize {
        self.classes.values().map(Vec::len).sum()
    }

    /// True when the labels cover each edge id below `m` exactly once.
    pub fn is_bijection_onto(&self, m: usize) -> bool {
        let mut seen = vec![false; m];
        for ids in self.classes.values() {
            for &id in ids {
                if id >= m || seen[id] {
                    return false;
                }
                seen[id] = true;
            }
        }
        seen.iter().all(|&s| s)
    }
}

fn wrap(i: usize, period: usize) -> usize {
    (i - 1) % period + 1
}

fn param_err(family: &'static str, requirement: impl Into<String>) -> Error {
    Error::InvalidParameter {
        family,
        requirement: requirement.into(),
    }
}

/// Builds the canonical graph for a family spec along with its symbolic
/// edge map.
pub fn generate(spec: &FamilySpec) -> Result<(Graph, LabeledEdgeMap)> {
    match *spec {
        FamilySpec::Cycle { n } => cycle(n),
        FamilySpec::SquareCycle { n } => square_cycle(n),
        FamilySpec::Wheel { n } => wheel(n),
        FamilySpec::DoubleWheel { n } => double_wheel(n),
        FamilySpec::Fan { n } => fan(n),
        FamilySpec::BrokenFan { t, r } => broken_fan(t, r),
        FamilySpec::BrokenWheelOneSpoke { n } => broken_wheel_one_spoke(n),
        FamilySpec::BrokenWheelUniform { n, r } => broken_wheel_uniform(n, r),
        FamilySpec::Prism { n } => prism(n),
        FamilySpec::Max2Deg(ref trace) => {
            if trace.vertex_count() < 3 {
                return Err(param_err("max2deg", "a trace with n >= 3".to_string()));
            }
            Ok((trace.to_graph(), LabeledEdgeMap::default()))
        }
    }
}

fn cycle(n: usize) -> Result<(Graph, LabeledEdgeMap)> {
    if n < 3 {
        return Err(param_err("cycle", "n >= 3"));
    }
    let edges: Vec<_> = (1..=n).map(|i| (i, wrap(i + 1, n))).collect();
    let mut map = LabeledEdgeMap::default();
    map.insert('b', (0..n).collect());
    Ok((Graph::new(n, edges)?, map))
}

fn square_cycle(n: usize) -> Result<(Graph, LabeledEdgeMap)> {
    if n < 5 {
        return Err(param_err("square_cycle", "n >= 5"));
    }
    let mut edges = Vec::with_capacity(2 * n);
    for i in 1..=n {
        edges.push((i, wrap(i + 2, n)));
    }
    for i in 1..=n {
        edges.push((i, wrap(i + 1, n)));
    }
    let mut map = LabeledEdgeMap::default();
    map.insert('a', (0..n).collect());
    map.insert('b', (n..2 * n).collect());
    Ok((Graph::new(n, edges)?, map))
}

fn wheel(n: usize) -> Result<(Graph, LabeledEdgeMap)> {
    if n < 4 {
        return Err(param_err("wheel", "n >= 4"));
    }
    let rim = n - 1;
    let mut edges = Vec::with_capacity(2 * rim);
    for i in 1..=rim {
        edges.push((i, n));
    }
    for i in 1..=rim {
        edges.push((i, wrap(i + 1, rim)));
    }
    let mut map = LabeledEdgeMap::default();
    map.insert('a', (0..rim).collect());
    map.insert('b', (rim..2 * rim).collect());
    Ok((Graph::new(n, edges)?, map))
}

fn double_wheel(n: usize) -> Result<(Graph, LabeledEdgeMap)> {
    if n < 5 {
        return Err(param_err("double_wheel", "n >= 5"));
    }
    let rim = n - 2;
    let (hub_a, hub_c) = (n, n - 1);
    let mut edges = Vec::with_capacity(3 * rim);
    for i in 1..=rim {
        edges.push((i, hub_a));
    }
    for i in 1..=rim {
        edges.push((i, wrap(i + 1, rim)));
    }
    for i in 1..=rim {
        edges.push((i, hub_c));
    }
    let mut map = LabeledEdgeMap::default();
    map.insert('a', (0..rim).collect());
    map.insert('b', (rim..2 * rim).collect());
    map.insert('c', (2 * rim..3 * rim).collect());
    Ok((Graph::new(n, edges)?, map))
}

fn fan(n: usize) -> Result<(Graph, LabeledEdgeMap)> {
    if n < 3 {
        return Err(param_err("fan", "n >= 3"));
    }
    let mut edges = Vec::with_capacity(2 * n - 3);
    for i in 1..n {
        edges.push((1, i + 1));
    }
    for i in 1..n - 1 {
        edges.push((i + 1, i + 2));
    }
    let mut map = LabeledEdgeMap::default();
    map.insert('a', (0..n - 1).collect());
    map.insert('b', (n - 1..2 * n - 3).collect());
    Ok((Graph::new(n, edges)?, map))
}

fn broken_fan(t: usize, r: usize) -> Result<(Graph, LabeledEdgeMap)> {
    if t < 2 {
        return Err(param_err("broken_fan", "t >= 2"));
    }
    if r < 2 {
        return Err(param_err("broken_fan", "r >= 2"));
    }
    let n = (r - 1) * t + 2;
    let mut edges = Vec::with_capacity((r - 1) * t + r);
    for i in 1..=r {
        edges.push((1, 2 + (i - 1) * t));
    }
    for i in 1..n - 1 {
        edges.push((i + 1, i + 2));
    }
    let mut map = LabeledEdgeMap::default();
    map.insert('a', (0..r).collect());
    map.insert('b', (r..r + n - 2).collect());
    Ok((Graph::new(n, edges)?, map))
}

fn broken_wheel_one_spoke(n: usize) -> Result<(Graph, LabeledEdgeMap)> {
    if n < 4 {
        return Err(param_err("broken_wheel_one_spoke", "n >= 4"));
    }
    let rim = n - 1;
    let mut edges = Vec::with_capacity(2 * n - 3);
    for i in 1..=rim {
        edges.push((i, wrap(i + 1, rim)));
    }
    for i in 1..=n - 2 {
        edges.push((n, i + 1));
    }
    let mut map = LabeledEdgeMap::default();
    map.insert('a', (0..rim).collect());
    map.insert('b', (rim..2 * n - 3).collect());
    Ok((Graph::new(n, edges)?, map))
}

/// Spoke rim positions of W(n, r): `floor((n-1) i / r) + 1` for 0 <= i < r.
pub fn uniform_spoke_positions(n: usize, r: usize) -> Vec<usize> {
    (0..r).map(|i| (n - 1) * i / r + 1).collect()
}

fn broken_wheel_uniform(n: usize, r: usize) -> Result<(Graph, LabeledEdgeMap)> {
    if n < 4 {
        return Err(param_err("broken_wheel_uniform", "n >= 4"));
    }
    if r < 2 || r > n - 1 {
        return Err(param_err("broken_wheel_uniform", "n-1 >= r >= 2"));
    }
    let rim = n - 1;
    let mut edges = Vec::with_capacity(rim + r);
    for i in 1..=rim {
        edges.push((i, wrap(i + 1, rim)));
    }
    for k in uniform_spoke_positions(n, r) {
        edges.push((n, k));
    }
    let mut map = LabeledEdgeMap::default();
    map.insert('a', (0..rim).collect());
    map.insert('b', (rim..rim + r).collect());
    Ok((Graph::new(n, edges)?, map))
}

fn prism(n: usize) -> Result<(Graph, LabeledEdgeMap)> {
    if n < 3 {
        return Err(param_err("prism", "n >= 3"));
    }
    let mut edges = Vec::with_capacity(3 * n);
    for i in 1..=n {
        edges.push((i, wrap(i + 1, n)));
    }
    for i in 1..=n {
        edges.push((i, n + i));
    }
    for i in 1..=n {
        edges.push((n + i, n + wrap(i + 1, n)));
    }
    let mut map = LabeledEdgeMap::default();
    map.insert('a', (0..n).collect());
    map.insert('b', (n..2 * n).collect());
    map.insert('c', (2 * n..3 * n).collect());
    Ok((Graph::new(2 * n, edges)?, map))
}

/// Deterministic-for-seed random construction trace: each step joins the
/// new vertex to two distinct uniformly chosen existing vertices.
pub fn random_max2deg_trace(n: usize, seed: u64) -> Max2DegTrace {
    assert!(n >= 3, "random_max2deg_trace requires n >= 3");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut steps = Vec::with_capacity(n - 2);
    for v in 3..=n {
        let x = rng.gen_range(1..v);
        let y = loop {
            let y = rng.gen_range(1..v);
            if y != x {
                break y;
            }
        };
        steps.push((v, x, y));
    }
    Max2DegTrace::new(steps).expect("generated steps are valid")
}

/// Checks both conditions for a maximal 2-degenerate graph: 2n-3 edges and
/// a full elimination order of degree-2 vertices ending in a triangle.
pub fn is_maximal_2_degenerate(g: &Graph) -> bool {
    elimination_order(g).is_ok()
}

/// Peels degree-2 vertices (smallest id first) down to a triangle.
///
/// Returns the additions in construction order (reverse peel order) plus
/// the base triangle's vertices.
pub(crate) fn elimination_order(g: &Graph) -> Result<(Vec<(usize, usize, usize)>, [usize; 3])> {
    let n = g.n();
    if n < 3 {
        return Err(Error::NotMax2Degenerate(format!("needs n >= 3, got {n}")));
    }
    if g.m() != 2 * n - 3 {
        return Err(Error::NotMax2Degenerate(format!(
            "expected {} edges, found {}",
            2 * n - 3,
            g.m()
        )));
    }
    let adj = g.adjacency();
    let mut deg = g.degrees();
    let mut alive = vec![true; n + 1];
    let mut peeled = Vec::with_capacity(n - 3);
    for remaining in (4..=n).rev() {
        let _ = remaining;
        let v = match (1..=n).find(|&v| alive[v] && deg[v] == 2) {
            Some(v) => v,
            None => {
                return Err(Error::NotMax2Degenerate(
                    "no degree-2 vertex to remove".into(),
                ))
            }
        };
        let mut nbrs = adj[v].iter().filter(|&&(w, _)| alive[w]).map(|&(w, _)| w);
        let (x, y) = (nbrs.next().unwrap(), nbrs.next().unwrap());
        alive[v] = false;
        deg[x] -= 1;
        deg[y] -= 1;
        deg[v] = 0;
        peeled.push((v, x.min(y), x.max(y)));
    }
    let base: Vec<usize> = (1..=n).filter(|&v| alive[v]).collect();
    let [p, q, r] = [base[0], base[1], base[2]];
    for (u, v) in [(p, q), (q, r), (p, r)] {
        if g.edge_id(u, v).is_none() {
            return Err(Error::NotMax2Degenerate(
                "peeling does not end in a triangle".into(),
            ));
        }
    }
    peeled.reverse();
    Ok((peeled, [p, q, r]))
}
