use std::fmt::Write as _;

use crate::graph::Graph;
use crate::ordering::EdgeOrdering;

/// Renders the graph in DOT format. When an ordering is given, each edge
/// carries its 1-based position as a label.
pub fn export_dot(g: &Graph, o: Option<&EdgeOrdering>) -> String {
    let mut out = String::from("graph G {\n");
    for v in 1..=g.n() {
        let _ = writeln!(out, "  {v};");
    }
    for (id, &(u, v)) in g.edges().iter().enumerate() {
        match o.and_then(|o| o.position_of(id)) {
            Some(p) => {
                let _ = writeln!(out, "  {u} -- {v} [label=\"{p}\"];");
            }
            None => {
                let _ = writeln!(out, "  {u} -- {v};");
            }
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_without_ordering() {
        let g = Graph::new(3, vec![(1, 2), (2, 3), (3, 1)]).unwrap();
        assert_eq!(
            export_dot(&g, None),
            "graph G {\n  1;\n  2;\n  3;\n  1 -- 2;\n  2 -- 3;\n  3 -- 1;\n}\n"
        );
    }

    #[test]
    fn triangle_with_identity_labels() {
        let g = Graph::new(3, vec![(1, 2), (2, 3), (3, 1)]).unwrap();
        let o = EdgeOrdering::identity(3);
        let dot = export_dot(&g, Some(&o));
        assert!(dot.contains("1 -- 2 [label=\"1\"];"));
        assert!(dot.contains("2 -- 3 [label=\"2\"];"));
        assert!(dot.contains("3 -- 1 [label=\"3\"];"));
    }
}
