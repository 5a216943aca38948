use crate::vertexset::VertexSet;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },

    #[error("vertex set {set} is not contained in {{0..{n}}}")]
    SetOutOfRange { set: VertexSet, n: usize },

    #[error("edge ({u},{v}) is not present in the graph")]
    EdgeNotInGraph { u: usize, v: usize },

    #[error("duplicate edge ({u},{v})")]
    DuplicateEdge { u: usize, v: usize },

    #[error("graphs have different vertex counts ({left} vs {right})")]
    VertexCountMismatch { left: usize, right: usize },

    #[error("edge ({u},{v}) is missing from the supergraph")]
    NotSubgraph { u: usize, v: usize },

    #[error("graph is not chordal")]
    NotChordal,

    #[error("the two graphs have identical edge sets; nothing to remove")]
    NothingToRemove,

    #[error("edge sequence is not an erasure sequence (step {step} not exposed)")]
    NotAnErasureSequence { step: usize },

    #[error("facet {facet} does not consist of exactly {k} vertices below {n}")]
    BadFacet { facet: VertexSet, n: usize, k: usize },

    #[error("face {face} is already a facet of the clutter")]
    FacetAlreadyPresent { face: VertexSet },

    #[error("clutter has no facets")]
    EmptyClutter,

    #[error("clutter has {count} facets; the search engine supports at most 64")]
    TooManyFacets { count: usize },

    #[error("the edge-clutter correspondence needs at least 3 vertices, got {n}")]
    TooFewVertices { n: usize },

    #[error("facet size {k} does not equal n - 2 = {expected}")]
    NotAnEdgeClutter { k: usize, expected: usize },

    #[error("complex is not shellable")]
    NotShellable,

    #[error("invalid partial shelling: {reason}")]
    InvalidPartial { reason: String },

    #[error("direct completion needs at most k + 2 = {max} vertices, got {n}")]
    TooManyVerticesForTransport { n: usize, max: usize },

    #[error("skeleton parameters out of range: n = {n}, facet size = {size}")]
    SkeletonOutOfRange { n: usize, size: usize },

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Error {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}
