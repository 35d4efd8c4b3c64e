use std::path::PathBuf;

use pinilot_core::GroupError;
use thiserror::Error;

/// Errors surfaced by the verification harness.
#[derive(Debug, Error)]
pub enum HarnessError {
    /// The requested check is only defined for odd primes.
    #[error("check requires an odd prime, got {0}")]
    OddPrimeRequired(u32),

    /// The requested check needs a prime parameter.
    #[error("{0} is not a prime")]
    PrimeRequired(u32),

    /// No check with the given id exists.
    #[error("unknown check id \"{0}\"")]
    UnknownCheck(String),

    /// An underlying group computation failed.
    #[error(transparent)]
    Group(#[from] GroupError),

    /// A corpus file could not be parsed.
    #[error("{path}:{line}: {message}")]
    Parse {
        path: PathBuf,
        line: usize,
        message: String,
    },

    /// Filesystem access failed.
    #[error(transparent)]
    Io(#[from] std::io::Error),

    /// The worker thread pool could not be constructed.
    #[error("thread pool: {0}")]
    Pool(String),
}
