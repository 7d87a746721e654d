use thiserror::Error;

use crate::family::ValidationReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("universe has {0} elements, at most 64 are supported")]
    UniverseTooLarge(usize),

    #[error("element name at position {0} is empty")]
    EmptyElementName(usize),

    #[error("duplicate element name {0:?}")]
    DuplicateElement(String),

    #[error("unknown element {0:?}")]
    UnknownElement(String),

    #[error("state {0} uses bits outside the universe")]
    StateOutOfUniverse(u64),

    #[error("duplicate state {0}")]
    DuplicateState(String),

    #[error("state {0} is not a member of the family")]
    MissingState(String),

    #[error("{0} is not a subset of {1}")]
    NotSubset(String, String),

    #[error("no single-element chain from {0} to {1}")]
    NoChain(String, String),

    #[error("family is not a learning space (violations: {})", .0.violations.len())]
    InvalidFamily(ValidationReport),

    #[error("not a permutation of 0..{0}: {1:?}")]
    NotPermutation(usize, Vec<usize>),

    #[error("length mismatch: {what} has {got}, expected {expected}")]
    LengthMismatch {
        what: &'static str,
        got: usize,
        expected: usize,
    },

    #[error("corner coordinates are not pairwise distinct on the {0} axis")]
    CoincidentCoordinates(char),

    #[error("boundary orders are inconsistent with the family: {0}")]
    InconsistentOrders(String),

    #[error("{what} supports at most {max} elements, got {got}")]
    TooLarge {
        what: &'static str,
        max: usize,
        got: usize,
    },

    #[error("drawing is not a planar straight-line drawing: {0}")]
    NotPlanar(String),

    #[error("drawing has {got} coordinates for {expected} vertices")]
    DrawingSize { got: usize, expected: usize },

    #[error("invalid drawing: {0}")]
    InvalidDrawing(String),

    #[error("zone structure is malformed: {0}")]
    MalformedZone(String),

    #[error("{0}")]
    Parse(String),
}
