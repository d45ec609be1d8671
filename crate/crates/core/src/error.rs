use alloc::string::String;
use core::fmt;

use crate::Vertex;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Errors raised by the structural algorithms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A vertex id outside `0..n`.
    VertexOutOfRange { vertex: Vertex, n: usize },
    /// An edge `{v, v}`.
    SelfLoop(Vertex),
    /// Contraction blocks share a vertex.
    OverlappingBlocks(Vertex),
    /// Two distinct vertices were required.
    SameVertex(Vertex),
    /// The operation needs a graph with a perfect matching.
    NotFactorizable,
    /// `G - v` has no perfect matching.
    NotDeletable(Vertex),
    /// The graph has an odd cycle.
    NotBipartite,
    /// The given side is not a color class of the bipartite graph.
    NotColorClass,
    /// The vertex set is not an odd-maximal barrier.
    NotOddMaximalBarrier,
    /// Exhaustive enumeration refused: the graph is larger than the limit.
    TooLarge { n: usize, limit: usize },
    /// Parameters that no graph satisfies.
    InvalidParameters(String),
    /// The brute-force relation failed to be transitive.
    TransitivityViolation { u: Vertex, v: Vertex, w: Vertex },
    /// A structural identity that must hold for correct input did not.
    Inconsistency(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for a graph on {n} vertices")
            }
            Error::SelfLoop(v) => write!(f, "self-loop at vertex {v}"),
            Error::OverlappingBlocks(v) => write!(f, "vertex {v} belongs to two contraction blocks"),
            Error::SameVertex(v) => write!(f, "expected two distinct vertices, got {v} twice"),
            Error::NotFactorizable => f.write_str("graph has no perfect matching"),
            Error::NotDeletable(v) => write!(f, "graph minus vertex {v} has no perfect matching"),
            Error::NotBipartite => f.write_str("graph is not bipartite"),
            Error::NotColorClass => f.write_str("vertex set is not a color class"),
            Error::NotOddMaximalBarrier => f.write_str("vertex set is not an odd-maximal barrier"),
            Error::TooLarge { n, limit } => {
                write!(f, "graph has {n} vertices, enumeration limit is {limit}")
            }
            Error::InvalidParameters(msg) => write!(f, "invalid parameters: {msg}"),
            Error::TransitivityViolation { u, v, w } => {
                write!(f, "relation not transitive on vertices {u}, {v}, {w}")
            }
            Error::Inconsistency(msg) => write!(f, "internal consistency failure: {msg}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}
