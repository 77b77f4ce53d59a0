use thiserror::Error;

/// Errors produced by graph construction, parsing, and the ordering machinery.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex count must be positive")]
    EmptyGraph,
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("vertex {v} out of range 1..={n}")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("edge id {id} out of range for {m} edges")]
    EdgeIdOutOfRange { id: usize, m: usize },
    #[error("ordering is not a permutation of 0..{m}")]
    NotAPermutation { m: usize },
    #[error("ordering has {got} positions but graph has {expected} edges")]
    OrderingLengthMismatch { expected: usize, got: usize },
    #[error("position {start} out of range 1..={m}")]
    PositionOutOfRange { start: usize, m: usize },
    #[error("a window needs {needed} edges but the graph has only {m}")]
    TooFewEdges { needed: usize, m: usize },
    #[error("{family} requires {requirement}")]
    InvalidParameter {
        family: &'static str,
        requirement: String,
    },
    #[error("invalid construction trace: {0}")]
    InvalidTrace(String),
    #[error("graph is not maximal 2-degenerate: {0}")]
    NotMax2Degenerate(String),
    #[error("the first {0} positions do not form a spanning tree")]
    PrefixNotSpanningTree(usize),
    #[error("link({u}, {v}) would close a cycle")]
    LinkWouldCycle { u: usize, v: usize },
    #[error("cut({u}, {v}): no such forest edge")]
    CutMissingEdge { u: usize, v: usize },
    #[error("node {v} out of range for forest of {n} nodes")]
    ForestNodeOutOfRange { v: usize, n: usize },
    #[error("graph is disconnected")]
    DisconnectedGraph,
    #[error("density is undefined for fewer than 2 vertices")]
    DensityUndefined,
    #[error("exhaustive density scan capped at {cap} vertices, graph has {n}")]
    DensityScanTooLarge { n: usize, cap: usize },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
