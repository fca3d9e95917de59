use thiserror::Error;

/// Errors raised by ideal arithmetic and the algorithms built on it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable context mismatch: {left} vs {right} variables")]
    ContextMismatch { left: usize, right: usize },

    #[error("exponent overflow while multiplying monomials")]
    ExponentOverflow,

    #[error("operation undefined on the zero ideal")]
    ZeroIdeal,

    #[error("operation undefined on the unit ideal")]
    UnitIdeal,

    #[error("J is not contained in I: generator {0} of J lies outside I")]
    NotContained(String),

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("minor on rows {rows:?}, columns {cols:?} is a genuine polynomial: {poly}")]
    MixedMinor {
        rows: Vec<usize>,
        cols: Vec<usize>,
        poly: String,
    },

    #[error("resource budget exceeded in {what}: needed more than {budget} work units (at {size})")]
    ResourceExceeded {
        what: &'static str,
        size: usize,
        budget: usize,
    },

    #[error("the Valabrega-Valla module does not vanish; the presentation is not available")]
    VvNotVanishing,

    #[error("proposed generator is not in the kernel: {0}")]
    NotInKernel(String),

    #[error("binomial is not homogeneous in T-degree: {0}")]
    Inhomogeneous(String),

    #[error("theorem-guaranteed property failed: {0}")]
    TheoremViolation(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
