//! Cyclic base orderings of graphs.
//!
//! A cyclic base ordering (CBO) of a connected graph on n vertices is a
//! cyclic ordering of all edges in which every n-1 consecutive edges form a
//! spanning tree. This crate provides:
//!
//! * [`graph`] / [`ordering`] — graph representation, edge orderings,
//!   windows, and spanning-tree testing;
//! * [`families`] — canonical generators for the graph families under
//!   study (cycle powers, wheels, fans, broken wheels, prisms, maximal
//!   2-degenerate graphs);
//! * [`construct`] — explicit CBO constructions for those families;
//! * [`verify`] — a window-scan reference verifier and a link-cut-tree
//!   sliding verifier;
//! * [`density`] — exact-rational density and the necessary conditions a
//!   CBO imposes;
//! * [`search`] — an exhaustive backtracking oracle for small graphs;
//! * [`io`] / [`dot`] — text formats and DOT export;
//! * [`fixtures`] — known CBOs shipped as data.

pub mod construct;
pub mod density;
pub mod dot;
pub mod error;
pub mod families;
pub mod fixtures;
pub mod graph;
pub mod io;
pub mod link_cut;
pub mod ordering;
pub mod search;
pub mod verify;

pub use error::{Error, Result};
pub use families::{FamilySpec, LabeledEdgeMap, Max2DegTrace};
pub use graph::{is_spanning_tree, Graph};
pub use link_cut::LinkCutForest;
pub use ordering::{window, EdgeOrdering, Progression};
pub use verify::{verify_lct, verify_naive, FailureReason, VerifyReport};
