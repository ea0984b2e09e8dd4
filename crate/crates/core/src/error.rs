use thiserror::Error;

use crate::notation::ParseError;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("size must be at least 1")]
    ZeroSize,
    #[error("point {point} is out of range for k = {k}")]
    PointOutOfRange { point: String, k: usize },
    #[error("point {0} appears in more than one block")]
    DuplicatePoint(String),
    #[error("empty block supplied")]
    EmptyBlock,
    #[error("image {target} is out of range 1..={n}")]
    TargetOutOfRange { target: usize, n: usize },
    #[error("two points are mapped to {0}; a partial injection must be injective")]
    NotInjective(usize),
    #[error("operands live in different ambient sizes ({left} vs {right})")]
    SizeMismatch { left: usize, right: usize },
    #[error("{element} is not an element of {family}")]
    WrongFamily {
        element: String,
        family: &'static str,
    },
    #[error("{what} = {size} exceeds the guard {limit} (override with unbounded limits)")]
    Guard {
        what: &'static str,
        size: usize,
        limit: usize,
    },
    #[error("matrix shapes do not agree: {0}")]
    Shape(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}
