//! Graphs whose edge set partitions into maximum matchings.
//!
//! A graph is *friendly* (friendly-edge-colorable) when its edges split into
//! maximum matchings; equivalently `|E| = χ'·ν`. Deciding that needs exact
//! matching numbers and chromatic indices, which live in [`matching`] and
//! [`coloring`]. [`friendly`] builds certificates on top of them and
//! [`extremal`] covers the edge bound in terms of `Δ` and `ν`. Exhaustive
//! checks over small graphs are in [`enumeration`].

pub mod coloring;
pub mod enumeration;
pub mod error;
pub mod extremal;
pub mod format;
pub mod friendly;
pub mod graph;
pub mod matching;

pub use coloring::{Budget, ChromaticIndex, EdgeColoring, VizingClass};
pub use error::{Error, Result};
pub use graph::{Edge, Graph, GraphStats, Subgraph};
pub use matching::Matching;
