//! Explicit cyclic base ordering constructions, one per family.
//!
//! Wheel-like and prism families have closed-form interleavings expressed
//! through symbolic edge labels. Fans, broken fans, broken wheels, and
//! maximal 2-degenerate graphs are built recursively: construct an ordering
//! for a reduced graph, rotate a chosen tree edge to position 1, then
//! splice the removed edges back at evenly spaced positions while shifting
//! the remaining ones block by block.

use crate::error::{Error, Result};
use crate::families::{self, FamilySpec, LabeledEdgeMap, Max2DegTrace};
use crate::graph::{is_spanning_tree, Graph};
use crate::ordering::EdgeOrdering;

/// Identity ordering on the cycle: every window omits exactly one edge.
pub fn cbo_cycle(n: usize) -> Result<EdgeOrdering> {
    let (g, _) = families::generate(&FamilySpec::Cycle { n })?;
    Ok(EdgeOrdering::identity(g.m()))
}

/// Square of a cycle. Odd n lists all chords then the rim in a swapped
/// pair pattern; even n interleaves chord i with rim edge k+i.
pub fn cbo_square_cycle(n: usize) -> Result<EdgeOrdering> {
    let (_, map) = families::generate(&FamilySpec::SquareCycle { n })?;
    let mut labels: Vec<(char, i64)> = Vec::with_capacity(2 * n);
    if n % 2 == 1 {
        let k = (n - 1) / 2;
        for i in 1..=n {
            labels.push(('a', i as i64));
        }
        labels.push(('b', 1));
        for j in 1..=k {
            labels.push(('b', 2 * j as i64 + 1));
            labels.push(('b', 2 * j as i64));
        }
    } else {
        let k = n / 2;
        for i in 1..=n {
            labels.push(('a', i as i64));
            labels.push(('b', (k + i) as i64));
        }
    }
    Ok(from_labels(&map, &labels))
}

/// Wheel: spoke i is followed by the rim edge k-1+i (even n) or k+i
/// (odd n), rim indices mod n-1.
pub fn cbo_wheel(n: usize) -> Result<EdgeOrdering> {
    let (_, map) = families::generate(&FamilySpec::Wheel { n })?;
    let k = n / 2;
    let offset = if n % 2 == 0 { k - 1 } else { k };
    let mut labels = Vec::with_capacity(2 * (n - 1));
    for i in 1..=n - 1 {
        labels.push(('a', i as i64));
        labels.push(('b', (offset + i) as i64));
    }
    Ok(from_labels(&map, &labels))
}

/// Double wheel: triples per rim vertex, with the hub/rim/hub pattern
/// depending on n mod 3; indices mod n-2.
pub fn cbo_double_wheel(n: usize) -> Result<EdgeOrdering> {
    let (_, map) = families::generate(&FamilySpec::DoubleWheel { n })?;
    let m = n - 2;
    let k = (n / 3) as i64;
    let mut labels = Vec::with_capacity(3 * m);
    for t in 1..=m as i64 {
        if n % 3 == 0 {
            labels.push(('a', t));
            labels.push(('b', t + k - 1));
            labels.push(('c', t + 2 * k - 1));
        } else {
            labels.push(('a', t));
            labels.push(('c', t + 2 * k));
            labels.push(('b', t + k));
        }
    }
    Ok(from_labels(&map, &labels))
}

/// Prism on n ≡ 2 (mod 3) rim vertices: n triples (a_{3i+1}, b_{3i+3},
/// c_{3i+3}), indices mod n.
pub fn cbo_prism(n: usize) -> Result<EdgeOrdering> {
    if n % 3 != 2 {
        return Err(Error::InvalidParameter {
            family: "prism",
            requirement: "n ≡ 2 (mod 3)".into(),
        });
    }
    let (_, map) = families::generate(&FamilySpec::Prism { n })?;
    let mut labels = Vec::with_capacity(3 * n);
    for i in 0..n as i64 {
        labels.push(('a', 3 * i + 1));
        labels.push(('b', 3 * i + 3));
        labels.push(('c', 3 * i + 3));
    }
    Ok(from_labels(&map, &labels))
}

/// Fan: realized as a maximal 2-degenerate construction where each path
/// vertex joins the hub and its predecessor.
pub fn cbo_fan(n: usize) -> Result<EdgeOrdering> {
    let (fan_g, _) = families::generate(&FamilySpec::Fan { n })?;
    let mut steps = vec![(3, 1, 2)];
    for v in 4..=n {
        steps.push((v, 1, v - 1));
    }
    let trace = Max2DegTrace::new(steps)?;
    let trace_g = trace.to_graph();
    let o = max2deg_ordering(&trace_g, &trace.steps()[1..], [1, 2, 3])?;
    transfer_ordering(&trace_g, &o, &fan_g)
}

/// Broken fan F_n(t) with r spokes, n = (r-1)t + 2.
///
/// Base case r = 2 is the cycle C_{t+2}. The step removes the interior
/// vertices of the first gap, orders the smaller fan recursively with the
/// bridging spoke at position 1, then re-inserts the t+1 removed edges at
/// positions (j-2)(r-1)+2 while an old edge at position q >= 2 moves to
/// q + ceil((q-1)/(r-2)).
pub fn cbo_broken_fan(t: usize, r: usize) -> Result<EdgeOrdering> {
    let seq = broken_fan_sequence(t, r)?;
    Ok(EdgeOrdering::new(seq).expect("splice maps are bijections"))
}

fn broken_fan_sequence(t: usize, r: usize) -> Result<Vec<usize>> {
    let (parent, _) = families::generate(&FamilySpec::BrokenFan { t, r })?;
    if r == 2 {
        // C_{t+2}; the next level's bridging spoke is edge (1, t+2) = a_1,
        // already at position 1 in the identity ordering.
        return Ok((0..parent.m()).collect());
    }
    let child_seq = broken_fan_sequence(t, r - 1)?;
    let (child, _) = families::generate(&FamilySpec::BrokenFan { t, r: r - 1 })?;
    // Child path vertex j corresponds to parent vertex j + t.
    let mut seq = mapped_edge_sequence(&child, &child_seq, &parent, |j| {
        if j == 1 {
            1
        } else {
            j + t
        }
    });
    let bridge = parent
        .edge_id(1, t + 2)
        .expect("bridging spoke exists in the parent fan");
    rotate_to_front(&mut seq, bridge);

    let mut slots: Vec<Option<usize>> = vec![None; parent.m()];
    slots[0] = Some(seq[0]);
    for j in 2..=t + 2 {
        let e = if j == 2 {
            parent.edge_id(1, 2).unwrap()
        } else {
            parent.edge_id(j - 1, j).unwrap()
        };
        place(&mut slots, (j - 2) * (r - 1) + 2, e);
    }
    for q in 2..=seq.len() {
        let shift = div_ceil(q - 1, r - 2);
        place(&mut slots, q + shift, seq[q - 1]);
    }
    Ok(collect_slots(slots))
}

/// Broken wheel W(n, r) with uniformly placed spokes, n = rt + 2.
///
/// With r = n-1 the graph is the full wheel and the wheel ordering is
/// reused. Otherwise remove the t interior vertices of the long gap,
/// order the remaining fan (the plain fan when t = 1), rotate the minimum
/// tree edge of the rim-endpoint path to position 1, and splice the
/// removed rim edges at positions (j-1)r+2 with old edges shifted by
/// ceil((q-1)/(r-1)).
pub fn cbo_broken_wheel_uniform(n: usize, r: usize) -> Result<EdgeOrdering> {
    let (g, gmap) = families::generate(&FamilySpec::BrokenWheelUniform { n, r })?;
    if r == n - 1 {
        let (wheel_g, _) = families::generate(&FamilySpec::Wheel { n })?;
        let o = cbo_wheel(n)?;
        return transfer_ordering(&wheel_g, &o, &g);
    }
    let t = (n - 2) / r;
    if t == 0 || r * t + 2 != n {
        return Err(Error::InvalidParameter {
            family: "broken_wheel_uniform",
            requirement: "n = r·t + 2 for an integer t >= 1, or r = n-1".into(),
        });
    }
    // G' = the graph with the long gap's interior removed: hub plus the rim
    // path v_1..v_{(r-1)t+1}, which is the fan F_{n-t}(t) (the plain fan
    // when t = 1). Child path vertex j corresponds to rim vertex j-1.
    let (child, child_seq) = if t == 1 {
        let (fg, _) = families::generate(&FamilySpec::Fan { n: n - 1 })?;
        let o = cbo_fan(n - 1)?;
        (fg, o.as_slice().to_vec())
    } else {
        let (bfg, _) = families::generate(&FamilySpec::BrokenFan { t, r })?;
        (bfg, broken_fan_sequence(t, r)?)
    };
    let mut seq = mapped_edge_sequence(&child, &child_seq, &g, |j| {
        if j == 1 {
            n
        } else {
            j - 1
        }
    });

    let n_child = n - t;
    let (x, y) = (1, (r - 1) * t + 1);
    let p_pos = path_min_position(&g, &seq[..n_child - 1], x, y)
        .expect("ordering prefix spans the reduced graph");
    seq.rotate_left(p_pos - 1);

    let mut slots: Vec<Option<usize>> = vec![None; g.m()];
    slots[0] = Some(seq[0]);
    for j in 1..=t + 1 {
        // Segment edges from x = v_1 around the long gap: a_{n-1}, a_{n-2},
        // ..., a_{(r-1)t+1}.
        let e = gmap.edge('a', (n - j) as i64).unwrap();
        place(&mut slots, (j - 1) * r + 2, e);
    }
    for q in 2..=seq.len() {
        let shift = div_ceil(q - 1, r - 1);
        place(&mut slots, q + shift, seq[q - 1]);
    }
    Ok(EdgeOrdering::new(collect_slots(slots)).expect("splice maps are bijections"))
}

/// Wheel missing exactly one spoke (the hub-to-v_1 spoke); explicit
/// two-half interleavings for even and odd n.
pub fn cbo_broken_wheel_one_spoke(n: usize) -> Result<EdgeOrdering> {
    let (_, map) = families::generate(&FamilySpec::BrokenWheelOneSpoke { n })?;
    let mut labels: Vec<(char, i64)> = Vec::with_capacity(2 * n - 3);
    if n % 2 == 0 {
        let h = (n / 2) as i64;
        labels.push(('a', 1));
        labels.push(('b', 1));
        for i in 1..=h - 2 {
            labels.push(('a', h + i));
            labels.push(('b', i + 1));
        }
        labels.push(('a', n as i64 - 1));
        for i in 1..=h - 1 {
            labels.push(('b', h - 1 + i));
            labels.push(('a', i + 1));
        }
    } else {
        let h = ((n - 1) / 2) as i64;
        for i in 1..=h {
            labels.push(('a', h + i));
            labels.push(('b', i));
        }
        for i in 1..=h - 1 {
            labels.push(('b', h + i));
            labels.push(('a', i + 1));
        }
        labels.push(('a', 1));
    }
    Ok(from_labels(&map, &labels))
}

/// Ordering for the graph built by a maximal 2-degenerate construction
/// trace, over that graph's edge ids.
pub fn cbo_max2deg(trace: &Max2DegTrace) -> Result<EdgeOrdering> {
    if trace.vertex_count() < 3 {
        return Err(Error::InvalidTrace("need at least 3 vertices".into()));
    }
    let g = trace.to_graph();
    // The first step (vertex 3 joining 1 and 2) completes the base K_3.
    max2deg_ordering(&g, &trace.steps()[1..], [1, 2, 3])
}

/// Ordering for an arbitrary maximal 2-degenerate graph, derived by
/// peeling degree-2 vertices down to a triangle.
pub fn cbo_max2deg_graph(g: &Graph) -> Result<EdgeOrdering> {
    let (additions, base) = families::elimination_order(g)?;
    max2deg_ordering(g, &additions, base)
}

/// Core recursion shared by fans and maximal 2-degenerate graphs, run
/// bottom-up. `additions` lists (v, x, y) steps in construction order on
/// top of the base triangle.
///
/// Each step rotates the minimum-position edge p of the x–y tree path to
/// position 1, then emits p, vx, the old block 2..n-2 shifted by one, vy
/// at position n, and the tail shifted by two.
fn max2deg_ordering(
    g: &Graph,
    additions: &[(usize, usize, usize)],
    base: [usize; 3],
) -> Result<EdgeOrdering> {
    let mut base_ids = vec![
        g.edge_id(base[0], base[1]),
        g.edge_id(base[1], base[2]),
        g.edge_id(base[0], base[2]),
    ]
    .into_iter()
    .map(|id| id.ok_or_else(|| Error::NotMax2Degenerate("base is not a triangle".into())))
    .collect::<Result<Vec<_>>>()?;
    base_ids.sort_unstable();

    let mut ord = base_ids;
    let mut nv = 3;
    for &(v, x, y) in additions {
        nv += 1;
        let (x, y) = (x.min(y), x.max(y));
        let p_pos = path_min_position(g, &ord[..nv - 2], x, y)
            .expect("ordering prefix spans the current subgraph");
        ord.rotate_left(p_pos - 1);

        let ex = g
            .edge_id(v, x)
            .ok_or_else(|| Error::InvalidTrace(format!("missing edge ({v}, {x})")))?;
        let ey = g
            .edge_id(v, y)
            .ok_or_else(|| Error::InvalidTrace(format!("missing edge ({v}, {y})")))?;

        let mut next = Vec::with_capacity(ord.len() + 2);
        next.push(ord[0]);
        next.push(ex);
        next.extend_from_slice(&ord[1..nv - 2]);
        next.push(ey);
        next.extend_from_slice(&ord[nv - 2..]);
        debug_assert_eq!(next.len(), 2 * nv - 3);
        ord = next;
    }
    Ok(EdgeOrdering::new(ord).expect("splice maps are bijections"))
}

/// The minimum-position edge on the unique x–y path in the spanning tree
/// formed by the first `prefix_len` positions of `o`.
///
/// Removing the returned edge separates x from y in that tree.
pub fn tree_path_min_edge(
    g: &Graph,
    o: &EdgeOrdering,
    prefix_len: usize,
    x: usize,
    y: usize,
) -> Result<usize> {
    o.check_matches(g)?;
    let prefix = &o.as_slice()[..prefix_len.min(o.len())];
    if !is_spanning_tree(g, prefix)? {
        return Err(Error::PrefixNotSpanningTree(prefix_len));
    }
    let pos = path_min_position(g, prefix, x, y).ok_or(Error::VertexOutOfRange { v: x, n: g.n() })?;
    Ok(prefix[pos - 1])
}

/// BFS over the given edges from x to y; returns the 1-based index (within
/// `edges`) of the minimum-index edge on the path, or None when x and y
/// are not connected by them.
fn path_min_position(g: &Graph, edges: &[usize], x: usize, y: usize) -> Option<usize> {
    if x == y || x > g.n() || y > g.n() || x == 0 || y == 0 {
        return None;
    }
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); g.n() + 1];
    for (i, &id) in edges.iter().enumerate() {
        let (u, v) = g.edge(id);
        adj[u].push((v, i + 1));
        adj[v].push((u, i + 1));
    }
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; g.n() + 1];
    let mut queue = std::collections::VecDeque::from([x]);
    let mut seen = vec![false; g.n() + 1];
    seen[x] = true;
    while let Some(u) = queue.pop_front() {
        if u == y {
            break;
        }
        for &(w, pos) in &adj[u] {
            if !seen[w] {
                seen[w] = true;
                parent[w] = Some((u, pos));
                queue.push_back(w);
            }
        }
    }
    if !seen[y] {
        return None;
    }
    let mut best = usize::MAX;
    let mut cur = y;
    while cur != x {
        let (prev, pos) = parent[cur].expect("walked back along BFS parents");
        best = best.min(pos);
        cur = prev;
    }
    Some(best)
}

/// Builds the ordering for any family spec together with its graph and
/// edge labels.
pub fn construct(spec: &FamilySpec) -> Result<(Graph, LabeledEdgeMap, EdgeOrdering)> {
    let o = match *spec {
        FamilySpec::Cycle { n } => cbo_cycle(n)?,
        FamilySpec::SquareCycle { n } => cbo_square_cycle(n)?,
        FamilySpec::Wheel { n } => cbo_wheel(n)?,
        FamilySpec::DoubleWheel { n } => cbo_double_wheel(n)?,
        FamilySpec::Fan { n } => cbo_fan(n)?,
        FamilySpec::BrokenFan { t, r } => cbo_broken_fan(t, r)?,
        FamilySpec::BrokenWheelOneSpoke { n } => cbo_broken_wheel_one_spoke(n)?,
        FamilySpec::BrokenWheelUniform { n, r } => cbo_broken_wheel_uniform(n, r)?,
        FamilySpec::Prism { n } => cbo_prism(n)?,
        FamilySpec::Max2Deg(ref trace) => cbo_max2deg(trace)?,
    };
    let (g, map) = families::generate(spec)?;
    Ok((g, map, o))
}

fn from_labels(map: &LabeledEdgeMap, labels: &[(char, i64)]) -> EdgeOrdering {
    let ids: Vec<usize> = labels
        .iter()
        .map(|&(c, i)| map.edge(c, i).expect("label class exists"))
        .collect();
    EdgeOrdering::new(ids).expect("label sequences are permutations")
}

/// Child ordering rewritten as a sequence of parent edge ids under a
/// vertex mapping.
fn mapped_edge_sequence(
    child: &Graph,
    child_seq: &[usize],
    parent: &Graph,
    vertex_map: impl Fn(usize) -> usize,
) -> Vec<usize> {
    child_seq
        .iter()
        .map(|&eid| {
            let (u, v) = child.edge(eid);
            parent
                .edge_id(vertex_map(u), vertex_map(v))
                .expect("child edge exists in parent")
        })
        .collect()
}

/// Rewrites an ordering over `src` edge ids into one over `dst` edge ids
/// by endpoint lookup; both graphs must share the same vertex numbering
/// and edge set.
pub(crate) fn transfer_ordering(
    src: &Graph,
    o: &EdgeOrdering,
    dst: &Graph,
) -> Result<EdgeOrdering> {
    let ids = o
        .as_slice()
        .iter()
        .map(|&eid| {
            let (u, v) = src.edge(eid);
            dst.edge_id(u, v).ok_or(Error::VertexOutOfRange { v: u, n: dst.n() })
        })
        .collect::<Result<Vec<_>>>()?;
    EdgeOrdering::new(ids)
}

fn rotate_to_front(seq: &mut [usize], edge_id: usize) {
    let pos = seq
        .iter()
        .position(|&e| e == edge_id)
        .expect("edge present in sequence");
    seq.rotate_left(pos);
}

fn place(slots: &mut [Option<usize>], pos: usize, edge_id: usize) {
    assert!(
        slots[pos - 1].is_none(),
        "splice collision at position {pos}"
    );
    slots[pos - 1] = Some(edge_id);
}

fn collect_slots(slots: Vec<Option<usize>>) -> Vec<usize> {
    slots
        .into_iter()
        .map(|s| s.expect("splice map is total"))
        .collect()
}

fn div_ceil(a: usize, b: usize) -> usize {
    (a + b - 1) / b
}
