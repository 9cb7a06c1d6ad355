use thiserror::Error;

/// Errors raised by the algebra kernel and the solver pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("unsupported poles: denominator {0} does not split into rational linear factors")]
    UnsupportedPoles(String),
    #[error("{0} is not a pole")]
    NotAPole(String),
    #[error("wrong order: {0}")]
    WrongOrder(String),
    #[error("parse error at position {pos}: {message}")]
    Parse { pos: usize, message: String },
    #[error("symbolic coefficients are not supported (found `{0}`)")]
    SymbolicCoefficients(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
