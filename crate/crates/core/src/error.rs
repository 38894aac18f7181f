use thiserror::Error;

/// Crate-wide error type. The CLI maps these onto process exit codes:
/// usage errors are handled by clap itself (exit 2), `Precondition` maps
/// to 3, `Budget` to 4 and everything else to 5.
#[derive(Debug, Error)]
pub enum Error {
    #[error("variable count mismatch: {0} vs {1}")]
    NVarsMismatch(usize, usize),

    #[error("zero input not allowed: {0}")]
    ZeroInput(&'static str),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("computation budget exceeded: {0}")]
    Budget(String),

    #[error("singular specialization: discriminant vanishes at the given point")]
    SingularSpecialization,

    #[error("point does not lie on the curve")]
    OffCurve,

    #[error("factorization failed within budget for {0}")]
    FactorBudget(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Exit code class used by the CLI.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Precondition(_)
            | Error::NVarsMismatch(..)
            | Error::ZeroInput(_)
            | Error::SingularSpecialization
            | Error::OffCurve => 3,
            Error::Budget(_) | Error::FactorBudget(_) => 4,
            _ => 5,
        }
    }
}
