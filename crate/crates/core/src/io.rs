//! Text formats for graphs and orderings.
//!
//! Graph files: optional `#` comment lines, a line `n m`, then `m` lines
//! `u v` with 1-based vertex ids. Ordering files: `m` lines, line `p`
//! holding the 0-based edge id at position `p`. Both formats are canonical
//! and round-trip bit-exactly.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::ordering::EdgeOrdering;

pub fn graph_to_string(g: &Graph, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        let _ = writeln!(out, "# {c}");
    }
    let _ = writeln!(out, "{} {}", g.n(), g.m());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut data = data_lines(text);
    let (line_no, header) = data
        .next()
        .ok_or_else(|| parse_err(1, "missing `n m` header line"))?;
    let mut header_it = header.split_whitespace();
    let n: usize = next_number(&mut header_it, line_no, "vertex count")?;
    let m: usize = next_number(&mut header_it, line_no, "edge count")?;
    if header_it.next().is_some() {
        return Err(parse_err(line_no, "expected exactly `n m` on header line"));
    }
    let mut edges = Vec::with_capacity(m);
    let mut seen = std::collections::HashSet::with_capacity(m);
    for _ in 0..m {
        let (line_no, line) = data
            .next()
            .ok_or_else(|| parse_err(0, format!("expected {m} edge lines")))?;
        let mut it = line.split_whitespace();
        let u: usize = next_number(&mut it, line_no, "endpoint")?;
        let v: usize = next_number(&mut it, line_no, "endpoint")?;
        if it.next().is_some() {
            return Err(parse_err(line_no, "expected exactly `u v` on edge line"));
        }
        // Surface graph-invariant violations with the offending line number.
        if u == v {
            return Err(parse_err(line_no, Error::SelfLoop(u).to_string()));
        }
        for w in [u, v] {
            if w < 1 || w > n {
                return Err(parse_err(
                    line_no,
                    Error::VertexOutOfRange { v: w, n }.to_string(),
                ));
            }
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(parse_err(line_no, Error::DuplicateEdge(u, v).to_string()));
        }
        edges.push((u, v));
    }
    if let Some((line_no, _)) = data.next() {
        return Err(parse_err(line_no, "trailing data after edge list"));
    }
    Graph::new(n, edges)
}

pub fn ordering_to_string(o: &EdgeOrdering) -> String {
    let mut out = String::new();
    for &id in o.as_slice() {
        let _ = writeln!(out, "{id}");
    }
    out
}

pub fn parse_ordering(text: &str) -> Result<EdgeOrdering> {
    let mut ids = Vec::new();
    for (line_no, line) in data_lines(text) {
        let mut it = line.split_whitespace();
        let id: usize = next_number(&mut it, line_no, "edge id")?;
        if it.next().is_some() {
            return Err(parse_err(line_no, "expected one edge id per line"));
        }
        ids.push(id);
    }
    let m = ids.len();
    EdgeOrdering::new(ids).map_err(|_| Error::Parse {
        line: 0,
        msg: format!("ordering is not a permutation of 0..{m}"),
    })
}

fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn next_number<'a>(
    it: &mut impl Iterator<Item = &'a str>,
    line: usize,
    what: &str,
) -> Result<usize> {
    let tok = it
        .next()
        .ok_or_else(|| parse_err(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| parse_err(line, format!("bad {what} `{tok}`")))
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}
