/// Errors produced by the algebra engine and the verification drivers.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("ring signature mismatch: {0}")]
    RingMismatch(String),

    #[error("invalid ring signature: {0}")]
    InvalidRing(String),

    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("exponent overflow")]
    ExponentOverflow,

    #[error("polynomial is not homogeneous: {0}")]
    NotHomogeneous(String),

    #[error("polynomial is not a quadratic form: {0}")]
    NotQuadratic(String),

    #[error("not a semi-invariant: {0}")]
    NotSemiInvariant(String),

    #[error("unknown case `{0}`")]
    UnknownCase(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid map: {0}")]
    InvalidMap(String),

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
