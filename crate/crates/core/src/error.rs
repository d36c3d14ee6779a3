//! Error type shared by every module of the crate.

use thiserror::Error;

/// Crate-wide error enumeration.
///
/// Variants are grouped by how a caller should react: `Parse` means the
/// input text or file is malformed, `Internal` means two independent
/// computation routes disagreed (a bug, never a data problem), and the
/// remaining variants are domain errors on structurally valid inputs.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { msg: String, line: usize, col: usize },

    #[error("division by zero in the scalar field")]
    DivisionByZero,

    #[error("zero vector is not a valid projective point")]
    ZeroVector,

    #[error("factor count mismatch: {0}")]
    FactorMismatch(String),

    #[error("representation space mismatch: {0}")]
    SpaceMismatch(String),

    #[error("invalid value: {0}")]
    Domain(String),

    #[error("tangent frame requires a Lagrangian orbit point")]
    NotLagrangian,

    #[error("unsupported frame: {0}")]
    UnsupportedFrame(String),

    #[error("castling transform not applicable: {0}")]
    CastlingInapplicable(String),

    #[error("eigenvalue relations violated: {0}")]
    RelationViolation(String),

    #[error("catalog flag conflict: {0}")]
    FlagConflict(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl Error {
    /// Parse error in a single-line literal, at a zero-based byte offset.
    pub fn parse_at(offset: usize, msg: impl Into<String>) -> Self {
        Error::Parse { msg: msg.into(), line: 1, col: offset + 1 }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
