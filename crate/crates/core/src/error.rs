use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("singular matrix")]
    Singular,
    #[error("forbidden function is identically zero")]
    IdenticallyZero,
    #[error("no admissible generic point found after {0} attempts")]
    NoGenericPoint(usize),
    #[error("Jacobi violated: {0}")]
    JacobiViolated(String),
    #[error("not a cocycle: {0}")]
    NotACocycle(String),
    #[error("not a structure: {0}")]
    NotAStructure(String),
    #[error("degenerate geometric object: {0}")]
    Degenerate(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("not involutive: {0}")]
    NonInvolutive(String),
    #[error("involutivity criteria disagree: {0}")]
    CriteriaDisagree(String),
    #[error("lift does not project onto its argument")]
    BadLift,
    #[error("inconsistent symbol tower: {0}")]
    InconsistentTower(String),
}

impl Error {
    /// True for failures of the mathematics (as opposed to bad input).
    pub fn is_mathematical(&self) -> bool {
        matches!(
            self,
            Error::JacobiViolated(_)
                | Error::NotACocycle(_)
                | Error::NotAStructure(_)
                | Error::NonInvolutive(_)
                | Error::CriteriaDisagree(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
