use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("{what} did not converge (last estimate {estimate}, error estimate {est_error})")]
    SolverFailure {
        what: &'static str,
        estimate: f64,
        est_error: f64,
    },

    #[error("no bound state: {0}")]
    NoBoundState(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
