//! Simple undirected graphs on vertex set `{1, …, n}`.
//!
//! Provides the graph families used by the colouring-bound models
//! (cliques, cycles, circulants, clique unions, Petersen), the
//! complement / disjoint-union / induced-subgraph operators, and
//! DIMACS `.col` text I/O. Vertices are 1-based in every public API,
//! matching the DIMACS convention.
//!
//! `Graph` values are immutable after construction and safe to share
//! across threads.

mod dimacs;
mod family;
mod graph;

pub use dimacs::{parse_dimacs, write_dimacs, ParsedDimacs};
pub use family::Family;
pub use graph::{random_gnp, Graph, GraphError};
