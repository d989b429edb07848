use crate::poly::Family;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid curve signature ({r},{s}): {reason}")]
    InvalidSignature { r: i64, s: i64, reason: String },

    #[error("{what} = {value} out of range {lo}..={hi}")]
    OutOfRange {
        what: &'static str,
        value: i64,
        lo: i64,
        hi: i64,
    },

    #[error("variable family mismatch: {left} vs {right}")]
    FamilyMismatch { left: Family, right: Family },

    #[error("no value assigned to variable {0}")]
    MissingAssignment(String),

    #[error("polynomial division left a nonzero remainder")]
    NotDivisible,

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("internal consistency check failed: {0}")]
    Internal(String),

    #[error("support violation: {0}")]
    SupportViolation(String),

    #[error("certification failed: {message}")]
    Certification { message: String, witness: Vec<String> },

    #[error("special divisor: |det| = {det_abs:e} below tolerance {threshold:e}")]
    SpecialDivisor { det_abs: f64, threshold: f64 },

    #[error("ramification point: f(x) = 0 at x = {0}")]
    Ramification(String),

    #[error("numeric tolerance failure: {0}")]
    Numeric(String),
}

pub type Result<T> = std::result::Result<T, Error>;
