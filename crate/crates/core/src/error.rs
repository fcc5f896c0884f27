use thiserror::Error;

use crate::graph::Edge;

/// Errors raised by constructors, converters and parsers in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex id {id} out of range for a graph on {n} vertices")]
    VertexOutOfRange { id: usize, n: usize },

    #[error("duplicate edge {0}")]
    DuplicateEdge(Edge),

    #[error("loop {0} is not allowed in a simple graph")]
    LoopNotAllowed(Edge),

    #[error("{operation} requires a simple graph but the input has loops")]
    LoopsUnsupported { operation: &'static str },

    #[error("invalid generator parameters: {0}")]
    InvalidParameters(String),

    #[error("random generation stalled after {attempts} attempts with {placed} of {wanted} edges")]
    GenerationStalled {
        attempts: u64,
        placed: usize,
        wanted: usize,
    },

    #[error("not a vertex ordering: {0}")]
    InvalidOrdering(String),

    #[error("exhaustive search refused: {n} vertices exceeds the cap of {cap} (search is exponential)")]
    SearchCapExceeded { n: usize, cap: usize },

    #[error("sequence is not strictly increasing positive integers at position {position}")]
    NotIncreasing { position: usize },

    #[error("{0} is not a set with distinct pairwise sums")]
    NotSidon(String),

    #[error("{value} is not prime")]
    NotPrime { value: u64 },

    #[error("invalid labelling: {0}")]
    InvalidLabelling(String),

    #[error("labelling covers {labels} vertices but the graph has {n}")]
    LabellingSizeMismatch { labels: usize, n: usize },

    #[error("labelling is not antimagic: edges {first} and {second} both sum to {sum}")]
    NotAntimagic { first: Edge, second: Edge, sum: u64 },

    #[error("ordering is not a 1-queue layout: edge {outer} nests edge {inner}")]
    NestedEdges { outer: Edge, inner: Edge },

    #[error("invalid track injection: {0}")]
    InvalidTrackInjection(String),

    #[error("induced edge map is not injective: edges {first} and {second} share track pair and slot sum")]
    EdgeMapNotInjective { first: Edge, second: Edge },

    #[error("point dimensions differ: {0} vs {1}")]
    DimensionMismatch(u32, u32),

    #[error("dimension {dim} is outside the supported range 0..={max}")]
    DimensionOutOfRange { dim: u32, max: u32 },

    #[error("degenerate segment: both endpoints are the same point")]
    DegenerateSegment,

    #[error("the two segments are the same segment")]
    SameSegment,

    #[error("drawing places {points} vertices but the graph has {n}")]
    DrawingSizeMismatch { points: usize, n: usize },

    #[error("invalid drawing: {0}")]
    InvalidDrawing(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
