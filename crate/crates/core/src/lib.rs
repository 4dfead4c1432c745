//! Executable machinery for bound vertices of longest paths in cubic graphs.
//!
//! The crate provides exact search kernels (longest `(x,y)`-paths, longest and
//! Hamilton cycles), enumeration of small cubic graphs, a 3-coloring routine
//! for Hamilton-cycle-plus-triangles graphs, the two Hamilton cycle exchange
//! lemmas, and the path extender: given an `(x,y)`-path of a 2-connected cubic
//! graph with no internal bound vertex, it constructs a strictly longer
//! `(x,y)`-path together with a replayable trace.
//!
//! Everything here is `no_std` with `alloc`; IO and the command line live in the
//! `chordlab` crate.

#![no_std]

extern crate alloc;

pub mod canon;
pub mod coloring;
pub mod enumeration;
pub mod error;
pub mod extender;
pub mod graph;
pub mod named;
pub mod search;
pub mod second_cycle;
pub mod vertex_set;

pub use error::{Error, Result};
pub use graph::{
    build_graph, components_after_deletion, connectivity_at_least, contract_set, contract_sets,
    is_cubic, ComponentDecomposition, ContractionMap, Graph,
};
pub use search::{Cycle, Path, PathReport, SearchMode};
pub use vertex_set::VertexSet;
