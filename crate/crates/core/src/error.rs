use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("rate must be nonzero")]
    ZeroRate,

    #[error("leading coefficient alpha of A(x) must be nonzero")]
    ZeroAlpha,

    #[error("series truncation orders differ ({left} vs {right})")]
    OrderMismatch { left: usize, right: usize },

    #[error("series constant term is not an invertible scalar")]
    NotInvertible,

    #[error("generating-function formula inapplicable; sigma depends on n")]
    NotDegenerate,

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("invalid rational literal `{0}`")]
    InvalidRational(String),

    #[error("unknown {kind} `{name}`")]
    Unknown { kind: &'static str, name: String },

    #[error("floating-point overflow evaluating {0}")]
    Overflow(String),

    #[error("adaptive quadrature exceeded maximum depth {0}")]
    MaxDepthExceeded(usize),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// An internal consistency check failed. Seeing this means a bug.
    #[error("internal error: {0}")]
    Internal(String),
}
