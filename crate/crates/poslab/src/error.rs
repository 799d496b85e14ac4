use thiserror::Error;

/// Errors shared across the numerics, kernels and positivity modules.
#[derive(Debug, Error)]
pub enum Error {
    #[error("symmetry required")]
    SymmetryRequired,

    #[error("points must be positive strictly increasing")]
    InvalidPoints,

    #[error("log requires positive entries")]
    LogRequiresPositive,

    #[error("entrywise power undefined")]
    PowerUndefined,

    #[error("Hankel structure required")]
    HankelRequired,

    #[error("brute force capped: n = {n} exceeds cap {cap}")]
    BruteForceCapped { n: usize, cap: usize },

    #[error("precondition unverified: {0}")]
    PreconditionUnverified(String),

    #[error("invalid kernel spec: {0}")]
    InvalidSpec(String),

    #[error("basis must consist of {expected} independent zero-sum vectors of length {n}")]
    InvalidBasis { n: usize, expected: usize },

    #[error("malformed matrix: {0}")]
    MalformedMatrix(String),
}

pub type Result<T> = std::result::Result<T, Error>;
