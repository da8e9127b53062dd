use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors raised by the library. Input problems and broken invariants are
/// kept apart so the CLI can map them onto distinct exit codes.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("zero polynomial has no well-defined root count")]
    ZeroPolynomial,

    #[error("division left a nonzero remainder: {0}")]
    InexactDivision(String),

    #[error("class {0} is not integral")]
    NotIntegral(String),

    #[error("orbifold is not log Fano (basis {basis} has a non-positive coefficient)")]
    NotLogFano { basis: String },

    #[error("missing Reeb choice v at stage {0}")]
    MissingReeb(usize),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub fn invariant(msg: impl Into<String>) -> Self {
        Error::Invariant(msg.into())
    }

    /// True for errors caused by malformed or inconsistent caller input.
    pub fn is_input_error(&self) -> bool {
        !matches!(self, Error::Invariant(_))
    }
}
