use thiserror::Error;

/// Errors raised by the computational operations.
///
/// Validation never produces these; validators return reports listing every
/// violated axiom instance instead.
#[derive(Debug, Error)]
pub enum Error {
    #[error("`{0}` is not an idempotent")]
    NotIdempotent(String),

    #[error("carrier mismatch: {0}")]
    CarrierMismatch(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("not a catale: {0}")]
    NotCatale(String),

    #[error("not a taut category: {0}")]
    NotTaut(String),

    #[error("no identity frames `{0}`")]
    NoIdentity(String),

    #[error("search space of {what} has {size} candidates, above the bound {bound}")]
    BoundExceeded { what: String, size: u128, bound: u128 },

    #[error("{0} exceeds the supported capacity of 64")]
    Capacity(String),

    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),

    #[error("invalid document: {0}")]
    Document(String),

    #[error("invalid structure: {0}")]
    Invalid(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
