use thiserror::Error;

/// Errors produced by the norm computations and matrix I/O.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum NormError {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("empty vectors and matrices are not allowed")]
    Empty,

    #[error("invalid exponent {0}: must be >= 1 or inf")]
    InvalidExponent(String),

    #[error("exponents out of order: expected {lower} <= {upper}")]
    ArgumentOrder { lower: String, upper: String },

    #[error("exponent {p} lies outside the interpolation interval [{p1}, {p2}]")]
    Range { p: String, p1: String, p2: String },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("certificate rejected: relative residual {residual:e} exceeds {tolerance:e}")]
    CertificateRejected { residual: f64, tolerance: f64 },

    #[error("unsupported size for oracle: n = {0} (need n <= 3)")]
    UnsupportedSize(usize),

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, NormError>;
