use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("element index {index} out of range 1..={total}")]
    IndexOutOfRange { index: usize, total: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error(
        "covariance matrix is not positive semidefinite: eigenvalue {min_eigenvalue:e} \
         is below the repair threshold {threshold:e}"
    )]
    CovarianceNotPsd { min_eigenvalue: f64, threshold: f64 },

    #[error("quadratic form is not real: |imag|/|real| = {ratio:e} exceeds 1e-9")]
    NonRealQuadraticForm { ratio: f64 },

    #[error("numerical failure: {0}")]
    Numerical(String),

    #[error("insufficient data: {0}")]
    InsufficientData(String),

    #[error("config error: {0}")]
    Config(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code used by the CLI: 2 config, 3 numerical, 4 io.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::IndexOutOfRange { .. }
            | Error::DimensionMismatch(_)
            | Error::InvalidParameter(_)
            | Error::InsufficientData(_)
            | Error::Config(_) => 2,
            Error::CovarianceNotPsd { .. }
            | Error::NonRealQuadraticForm { .. }
            | Error::Numerical(_) => 3,
            Error::Io(_) => 4,
        }
    }
}
