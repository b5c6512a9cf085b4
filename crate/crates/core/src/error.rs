use thiserror::Error;

/// Errors raised by the numerical routines.
#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is not Hermitian: max |M - M^dagger| = {deviation:e}")]
    NotHermitian { deviation: f64 },

    #[error("invalid density matrix: {0}")]
    InvalidState(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("state is rank deficient (smallest eigenvalue {min_eigenvalue:e}); a full-rank state is required")]
    RankDeficient { min_eigenvalue: f64 },

    #[error("unsupported input: {0}")]
    Unsupported(String),

    #[error("invalid stabilizer group: {0}")]
    InvalidStabilizer(String),

    #[error("numerical tolerance failure: {0}")]
    Tolerance(String),

    #[error("bound violated: {0}")]
    BoundViolation(String),

    #[error("precondition failed: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
