use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("coincident points at indices {0} and {1}")]
    CoincidentPoints(usize, usize),
    #[error("degenerate lift: direction points to the south pole (lambda = 0)")]
    DegenerateLift,
    #[error("input sequence is not ascending at position {0}")]
    NonAscendingInput(usize),
    #[error("non-finite coordinate in point {0}")]
    NonFinite(usize),
    #[error("configuration needs at least 2 points, got {0}")]
    TooFewPoints(usize),
    #[error("degenerate start: points {0} and {1} are within the coincidence guard")]
    DegenerateStart(usize, usize),
    #[error("invalid orientation policy: {0}")]
    InvalidPolicy(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}
