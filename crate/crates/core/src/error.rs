use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    #[error("polynomial is not divisible")]
    NotDivisible,
    #[error("frame fields Y{0} and Y{1} do not commute")]
    NonCommuting(usize, usize),
    #[error("frame is degenerate: Y_1 ^ ... ^ Y_n vanishes")]
    DegenerateFrame,
    #[error("frame violates the joint eigenvector identity for Y{0}")]
    JointEigenvector(usize),
    #[error("bivector is not Poisson")]
    NotPoisson,
    #[error("matrix alpha is not skew-symmetric")]
    NotSkew,
    #[error("unknown catalog index {0} (valid: 1..=13)")]
    UnknownIndex(usize),
    #[error("parameter violation: {0}")]
    ParameterViolation(String),
    #[error("catalog verification failed: {0}")]
    CatalogMismatch(String),
    #[error("operators do not commute")]
    OperatorsNotCommuting,
    #[error("operators are not upper-triangular")]
    NotTriangular,
    #[error("simultaneous triangularization failed: characteristic polynomial has no root in Q(i)")]
    TriangularizationFailed,
    #[error("input is not a cocycle")]
    NotACocycle,
    #[error("exactness violation: {0}")]
    ExactnessViolation(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("degenerate structure: {0}")]
    Degenerate(String),
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Whether the error is about the input (bad structure, parameters or
    /// usage) rather than a failed internal check.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::NonCommuting(..)
                | Error::DegenerateFrame
                | Error::JointEigenvector(_)
                | Error::NotPoisson
                | Error::NotSkew
                | Error::UnknownIndex(_)
                | Error::ParameterViolation(_)
                | Error::OperatorsNotCommuting
                | Error::TriangularizationFailed
                | Error::DimensionMismatch(_)
                | Error::Degenerate(_)
                | Error::UnknownSuite(_)
                | Error::Parse(_)
        )
    }
}
