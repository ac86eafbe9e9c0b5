use thiserror::Error;

/// Errors produced anywhere in the counting library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero: {0}")]
    DivisionByZero(&'static str),

    #[error("series expansion needs a denominator whose x^0 coefficient is 1")]
    SeriesPrecondition,

    #[error("linear system is singular")]
    SingularSystem,

    #[error("system dimension {dim} exceeds the solver limit {limit}")]
    DimensionLimit { dim: usize, limit: usize },

    #[error("polynomial division is not exact")]
    InexactDivision,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("{what} needs {needed} but the cap is {cap}; {hint}")]
    CapExceeded {
        what: &'static str,
        needed: String,
        cap: String,
        hint: &'static str,
    },

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("coloring has {got} entries but the graph has {expected} vertices")]
    LengthMismatch { expected: usize, got: usize },

    #[error("color {color} out of range for k = {k}")]
    ColorOutOfRange { color: u32, k: u32 },

    #[error("unknown fixture {0:?}")]
    UnknownFixture(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }

    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }
}
