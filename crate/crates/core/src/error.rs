use thiserror::Error;

/// Errors raised by the kernel and the class constructors.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arity mismatch: {left} vs {right}")]
    ArityMismatch { left: usize, right: usize },

    #[error("division by zero polynomial")]
    DivisionByZero,

    #[error("polynomial is not exactly divisible")]
    NotDivisible,

    #[error("weight is zero; factor 1 - T^0 vanishes")]
    ZeroWeight,

    #[error("denominator vanishes at the requested point")]
    DenominatorVanishes,

    #[error("ill-formed lattice map: {0}")]
    IllFormedMap(String),

    #[error("invalid dimension n = {n}: {reason}")]
    InvalidDimension { n: usize, reason: &'static str },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("integral still depends on torus variables")]
    ResidualTDependence,

    #[error("structural rewrite failed: {0}")]
    StructuralRewriteFailed(String),

    #[error("limit does not exist: negative power of u at t^{t_degree}")]
    NonvanishingNegativeUPart { t_degree: i32 },

    #[error("truncation order {order} too low, need at least {needed}")]
    TruncationTooLow { order: usize, needed: usize },

    #[error("class vanishes through the computed order")]
    ZeroClass,

    #[error("series leading coefficient is not an invertible monomial")]
    NotInvertible,
}

pub type Result<T> = std::result::Result<T, Error>;
