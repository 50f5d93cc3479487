//! Error type shared across the crate.

/// Errors produced by rule construction, assembly, and time integration.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("singular jacobian: |det J| = {det:e} at x = {location:?}")]
    SingularJacobian { det: f64, location: Vec<f64> },

    #[error("assembly failure: {0}")]
    AssemblyFailure(String),

    #[error("non-finite value of {what} at node {location:?}")]
    NonFinite { what: String, location: Vec<f64> },

    #[error("stiff integration failure at t = {t}: {detail}")]
    StiffFailure { t: f64, detail: String },

    #[error("configuration error: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}
