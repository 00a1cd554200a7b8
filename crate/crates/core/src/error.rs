use thiserror::Error;

use crate::graph::EdgeId;

/// Errors raised while reading or building graphs.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("self-loop at vertex {0}")]
    Loop(usize),
    #[error("parallel edge between {0} and {1}")]
    Parallel(usize, usize),
    #[error("vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("graph too large: {0}")]
    TooLarge(String),
    #[error("unknown builtin graph `{0}` (expected one of k4, k33, prism, petersen)")]
    UnknownBuiltin(String),
}

/// Crate-wide error type.
///
/// Variants split into two families: input/precondition problems, and
/// internal invariant violations. The latter would mean a step of the
/// construction failed on a graph where it is supposed to succeed.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("size limit exceeded: {0}")]
    TooLarge(String),
    #[error("LP infeasible: {0}")]
    Infeasible(String),
    #[error("structural violation: {0}")]
    StructuralViolation(String),
    #[error("both safe-pair orientations blocked at pivot edge {pivot}: witness shores {first:?} and {second:?}")]
    Lemma3Violation {
        pivot: EdgeId,
        first: Vec<usize>,
        second: Vec<usize>,
    },
    #[error("no uniform combination found for base graph {0}")]
    BaseCaseFailure(String),
    #[error("lifted subgraph {edges:?} is not 2-edge-connected")]
    LiftFailure { edges: Vec<EdgeId> },
    #[error("pseudo-vertex pattern mismatch: {0}")]
    PatternMismatch(String),
    #[error("glued subgraph {edges:?} is not 2-edge-connected")]
    GlueFailure { edges: Vec<EdgeId> },
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// True for failures of the construction itself, as opposed to bad input.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            Error::StructuralViolation(_)
                | Error::Lemma3Violation { .. }
                | Error::BaseCaseFailure(_)
                | Error::LiftFailure { .. }
                | Error::PatternMismatch(_)
                | Error::GlueFailure { .. }
                | Error::Internal(_)
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
