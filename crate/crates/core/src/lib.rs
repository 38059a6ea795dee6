//! Domains with small boundary around balls in planar graphs.
//!
//! Hosts are finite plane graphs given by rotation systems. The main entry
//! point is [`cutset::find_cutset`]; [`metrics`] measures growth and doubling
//! and provides brute-force and max-flow oracles, [`experiments`] runs random
//! walks and nested-cutset sums.

pub mod cutset;
pub mod error;
pub mod experiments;
pub mod generators;
pub mod graph;
pub mod io;
pub mod metrics;
pub mod winding;

pub use error::{Error, Result};
pub use graph::{PlanarEmbeddedGraph, VertexId};
