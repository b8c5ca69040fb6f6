use thiserror::Error;

/// Errors shared by every module of the workbench.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("rank-one term contains a zero matrix factor")]
    ZeroMatrixFactor,
    #[error("degenerate point configuration: {0}")]
    DegenerateConfiguration(String),
    #[error("unknown name `{0}`")]
    UnknownName(String),
    #[error("group construction failed: {0}")]
    GroupConstruction(String),
    #[error("candidate element {0} does not preserve the matrix multiplication tensor")]
    CandidateNotSymmetry(usize),
    #[error("group element {element} does not map the term set to itself (term {term})")]
    NotStabilized { element: usize, term: usize },
    #[error("tensor is not in the span of the given basis")]
    NotInSpan,
    #[error("basis is linearly dependent")]
    DependentBasis,
    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),
    #[error("empty group")]
    EmptyGroup,
    #[error("unsupported tensor power {0}")]
    UnsupportedPower(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
