//! Exact convex combinations of 2-edge-connected spanning subgraphs for
//! cubic 3-edge-connected graphs.
//!
//! [`combiner::Certifier`] builds, for any cubic 3-edge-connected graph, a
//! weighted family of 2-edge-connected spanning subgraphs in which every
//! edge appears with total weight exactly 7/9. The lightest member then has
//! at most `7n/6` edges. [`oracle`] provides independent exact values
//! (minimum 2EC size, cut-LP optimum, integrality gap) to check against.

pub mod combiner;
pub mod connectivity;
pub mod error;
pub mod graph;
pub mod oracle;
pub mod rational;
pub mod simplex;

pub use error::{Error, GraphError, Result};
pub use graph::{EdgeId, EdgeSet, Graph, VertexId};
pub use rational::Rational;
