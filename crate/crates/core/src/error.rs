//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for vertex set [{n}]")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("empty edge: hyperedges must be nonempty")]
    EmptyEdge,

    #[error("missing singleton {{{vertex}}}: every vertex must carry its singleton edge")]
    MissingSingleton { vertex: usize },

    #[error("invalid set composition: {reason}")]
    InvalidSetComposition { reason: String },

    #[error("set composition of [{flag_n}] does not match vertex set [{n}]")]
    GroundSetMismatch { flag_n: usize, n: usize },

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("cannot combine an empty list of terms")]
    EmptyCombination,

    #[error("the degree-0 unit term has no last part to increment")]
    UnitTermInPlusOne,

    #[error("{operation} guard exceeded: n = {n} > {guard}")]
    GuardExceeded {
        operation: &'static str,
        n: usize,
        guard: usize,
    },

    #[error("{operation} requires a nonempty vertex set")]
    EmptyGroundSet { operation: &'static str },

    #[error("affine dimension of an empty point set is undefined")]
    EmptyPointList,

    #[error("flag is on [{found}] but the polytope lives in dimension {expected}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("composition {composition:?} is not a composition of {degree}")]
    CompositionDegreeMismatch {
        composition: Vec<usize>,
        degree: usize,
    },

    #[error("invalid family parameters: {reason}")]
    InvalidFamily { reason: String },
}
