use thiserror::Error;

/// Errors surfaced by the analysis operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("linear system is inconsistent")]
    Inconsistent,
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("point has no fundamental polynomial of the requested degree")]
    NoFundamental,
    #[error("operation is undefined on the empty point set")]
    EmptySet,
    #[error("interpolation problem is not solvable for the given data")]
    NotSolvable,
    #[error("point set has {0} points, exceeding the m*n-1 bound of {1}")]
    OutOfScope(usize, usize),
    #[error("duplicate point at indices {0} and {1}")]
    DuplicatePoints(usize, usize),
    #[error("zero denominator in rational literal {0:?}")]
    ZeroDenominator(String),
    #[error("parse error at {at}: {msg}")]
    ParseError { at: String, msg: String },
    #[error("theorem conclusion failed, implementation bug: {0}")]
    TheoremViolation(String),
    #[error("degenerate configuration after retries: {0}")]
    DegenerateConfiguration(String),
}

pub type Result<T> = std::result::Result<T, Error>;
