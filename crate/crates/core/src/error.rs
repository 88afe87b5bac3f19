use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} has degree {degree}, expected 3")]
    DegreeViolation { vertex: usize, degree: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("genus {genus} is too small, need g >= 2")]
    GenusTooSmall { genus: i64 },
    #[error("vertex ids must be exactly 0..{expected}, vertex {missing} is missing")]
    VertexGap { expected: usize, missing: usize },
    #[error("syntax error at line {line}: {message}")]
    Syntax { line: usize, message: String },

    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("matrix has non-integer entries")]
    NonInteger,
    #[error("zero vector has no primitive representative")]
    ZeroVector,
    #[error("matrix must have at least one row and one column")]
    EmptyMatrix,

    #[error("polyhedron is unbounded")]
    Unbounded,
    #[error("polytope is not full-dimensional (dimension {dimension} in ambient {ambient})")]
    NotFullDimensional { dimension: i64, ambient: usize },
    #[error("brute-force oracle limited to ambient dimension {limit}, got {dimension}")]
    OracleTooLarge { dimension: usize, limit: usize },

    #[error("internal contradiction: {0}")]
    Contradiction(String),
}
