use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("uniformity d must be at least 1")]
    ZeroUniformity,

    #[error("at most 64 vertex labels are supported, got {n}")]
    TooManyVertices { n: usize },

    #[error("edge {edge:?} has {found} vertices, expected d = {expected}")]
    EdgeCardinality { edge: Vec<usize>, expected: usize, found: usize },

    #[error("duplicate edge {edge:?}")]
    DuplicateEdge { edge: Vec<usize> },

    #[error("vertex {vertex} is out of range (vertex set has bound {bound})")]
    VertexOutOfRange { vertex: usize, bound: usize },

    #[error("vertex list {list:?} is not strictly ascending")]
    NotAscending { list: Vec<usize> },

    #[error("facet {inner:?} is contained in facet {outer:?}")]
    NotAntichain { inner: Vec<usize>, outer: Vec<usize> },

    #[error("void flag is {void} but {facets} facets were given")]
    VoidMismatch { void: bool, facets: usize },

    #[error("{face:?} is not a face of the complex")]
    NotAFace { face: Vec<usize> },

    #[error("{p} is not a prime")]
    NotPrime { p: u64 },

    #[error("unknown field {0:?} (expected gf2, gf<p>, or q)")]
    UnknownField(String),

    #[error("exhaustive operation on {n} vertices exceeds the cap of {cap}")]
    CapExceeded { n: usize, cap: usize },

    #[error("move {index}: {reason}")]
    InvalidMove { index: usize, reason: String },

    #[error("invalid input: {0}")]
    Input(String),
}
