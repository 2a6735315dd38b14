//! Error types shared across the crate.

use thiserror::Error;

#[derive(Error, Debug)]
pub enum Error {
    /// Field order or extension degree outside the supported range.
    #[error("unsupported field: {0}")]
    UnsupportedField(String),

    /// Operands belong to different fields.
    #[error("field mismatch: {0}")]
    FieldMismatch(String),

    /// Mathematically undefined operation (division by zero, gcd(0,0), ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// Length incompatible with the field (n must divide q^m - 1, gcd(q, n) = 1, ...).
    #[error("invalid length: {0}")]
    InvalidLength(String),

    /// Polynomial is not a valid generator for the requested code.
    #[error("invalid generator: {0}")]
    InvalidGenerator(String),

    /// Family parameters violate a structural precondition of the construction.
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    /// Operation does not apply to this object (e.g. BCH bound on a repeated-root code).
    #[error("not applicable: {0}")]
    NotApplicable(String),

    /// Enumeration or table size beyond the configured desk-scale cap.
    #[error("resource limit exceeded: {0}")]
    Resource(String),

    /// Subset-visit budget ran out during a distance search. All weights up to
    /// `completed` were fully exhausted, so the minimum distance is at least
    /// `completed + 1`.
    #[error("search budget exhausted after weight level {completed}; minimum distance >= {}", completed + 1)]
    Budget { completed: u32 },

    /// Invariant violation that indicates a bug, not a caller error.
    #[error("internal consistency: {0}")]
    Internal(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
