//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("cannot parse rational {text:?}: {reason}")]
    BadRational { text: String, reason: String },

    #[error("zero direction")]
    ZeroDirection,

    #[error("polygon needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),

    #[error("duplicate vertices in polygon input")]
    DuplicateVertices,

    #[error("vertex list is not in convex position: point ({0}, {1}) is interior")]
    NonConvex(String, String),

    #[error("degenerate polygon: fewer than 3 extreme points")]
    DegeneratePolygon,

    #[error("vertex index {index} out of range for polygon with {len} vertices")]
    VertexIndexOutOfRange { index: usize, len: usize },

    #[error("edge index {index} out of range for polygon with {len} edges")]
    EdgeIndexOutOfRange { index: usize, len: usize },

    #[error("mark index {index} out of range ({len} marks)")]
    MarkIndexOutOfRange { index: usize, len: usize },

    #[error("flip vector has length {got}, representative has {want} marks")]
    FlipLengthMismatch { got: usize, want: usize },

    #[error("representative fails validation: {0}")]
    InvalidRepresentative(String),

    #[error("group action produced an invalid representative: {0}")]
    ActionClosureFailure(String),

    #[error("half-space system is unbounded")]
    UnboundedPolytope,

    #[error("half-space system has empty or lower-dimensional interior")]
    EmptyOrFlatPolytope,

    #[error("repeated facet in half-space system")]
    RepeatedFacet,

    #[error("redundant facet {0} in half-space system")]
    RedundantFacet(usize),

    #[error("facet normal has wrong dimension: expected {expected}, got {got}")]
    FacetDimensionMismatch { expected: usize, got: usize },

    #[error("not a Delzant polytope: {0}")]
    NotDelzant(String),

    #[error("series substitution requires zero constant term")]
    NonzeroConstantTerm,

    #[error("series inversion requires a positive linear Y coefficient")]
    NonpositiveLinearCoefficient,

    #[error("truncation orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),

    #[error("invalid pinch tuple: {0}")]
    InvalidTuple(String),

    #[error("invalid label data: {0}")]
    InvalidLabels(String),

    #[error("chop does not fit: {0}")]
    ChopDoesNotFit(String),

    #[error("no representative in the flip orbit admits this chop")]
    ChopBlockedByCuts,

    #[error("edge {0} does not reverse a corner chop: {1}")]
    NotReverseChoppable(usize, String),

    #[error("document error: {0}")]
    Document(String),
}

pub type Result<T> = std::result::Result<T, Error>;
