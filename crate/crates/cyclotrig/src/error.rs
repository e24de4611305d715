use thiserror::Error;

/// Errors produced by the exact-arithmetic layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("conductor mismatch: {0} vs {1}; promote with change_conductor first")]
    ConductorMismatch(u64, u64),

    #[error("conductor {0} does not divide target conductor {1}")]
    InvalidConductor(u64, u64),

    #[error("k = {k} is not coprime to {n}, so it induces no automorphism")]
    NotAnAutomorphism { k: i64, n: u64 },

    /// Tangent evaluated where the cosine vanishes.
    #[error("tangent pole: cosine vanishes at this angle")]
    Pole,

    #[error("element is not fixed by complex conjugation")]
    NotReal,

    #[error("value out of range: {0}")]
    OutOfRange(String),

    #[error("quadratic has no real irrational root (discriminant not positive)")]
    NotRealQuadratic,

    /// The numeric sign resolver hit its precision ceiling. This indicates a
    /// bug elsewhere: a nonzero real algebraic number separates from zero at
    /// finite precision.
    #[error("precision ceiling of {0} bits exceeded while resolving a sign")]
    PrecisionExhausted(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
