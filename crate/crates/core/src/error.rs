use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("incomparable sizes: {0} and {1}")]
    IncomparableSizes(usize, usize),

    #[error("ambient size mismatch: [{0}] and [{1}]")]
    AmbientMismatch(usize, usize),

    #[error("empty Richardson variety: {v} is not below {w} in Bruhat order")]
    EmptyRichardson { v: String, w: String },

    #[error("invalid subset: {0}")]
    InvalidSubset(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("out of range: {0}")]
    OutOfRange(String),

    #[error("weight matrix is not coherent at {0}: the minimum-weight term is not unique")]
    Incoherent(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("kernel cache: {0}")]
    Cache(String),

    #[error("inconsistent classification tables: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
