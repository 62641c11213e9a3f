use thiserror::Error;

/// Errors raised by the algebraic routines.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("matrix is not square: row {row} has {len} entries, expected {dim}")]
    NotSquare { row: usize, len: usize, dim: usize },

    #[error("matrix must have at least one row")]
    EmptyMatrix,

    #[error("matrix is singular (determinant 0)")]
    SingularMatrix,

    #[error("{value} is not an eigenvalue of the matrix")]
    NotEigenvalue { value: String },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("degree mismatch: monomial has total degree {actual}, grade {grade} requires {expected}")]
    DegreeMismatch {
        grade: u32,
        expected: String,
        actual: String,
    },

    #[error("enumeration budget of {budget} monomials exceeded at grade {grade} (completed through grade {reached})")]
    BudgetExceeded { budget: u64, grade: u32, reached: u32 },

    #[error("no witness found within search bounds: {0}")]
    Undetermined(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("malformed input: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
