use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("dimension mismatch: expected {expected} variables, got {found}")]
    Dimension { expected: usize, found: usize },

    #[error("at least one variable is required")]
    NoVariables,

    #[error("empty input: {0}")]
    EmptyInput(&'static str),

    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("term {0} is not a member of the set")]
    NotMember(String),

    #[error("bar code is not admissible")]
    NotAdmissible,

    #[error("term set is not an order ideal: {0} is missing a divisor")]
    NotOrderIdeal(String),

    #[error("{power} is not a nonmultiplicative power of {term}")]
    NotNonMultiplicativePower { term: String, power: String },

    #[error("invalid bar code: {0}")]
    InvalidBarCode(String),

    #[error("duplicate point: points {} and {} coincide", first + 1, second + 1)]
    DuplicatePoint { first: usize, second: usize },

    #[error("evaluation matrix is singular; the term set is not a basis for the points")]
    Singular,

    #[error("internal bound exceeded: {0}")]
    BoundExceeded(String),
}

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
