//! Crate-wide error type.

use thiserror::Error;

/// Errors reported by the geometry kernel and the solvers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("empty point set")]
    EmptyPointSet,

    #[error("coordinates must be finite")]
    NonFiniteCoordinate,

    #[error("support direction must be nonzero")]
    ZeroDirection,

    #[error("vertex count exceeds n (m = {m}, n = {n})")]
    VertexCountExceedsN { m: usize, n: usize },

    #[error("generator set must contain at least one vector")]
    EmptyGeneratorSet,

    #[error("instance too large for oracle (n = {n}, limit {limit})")]
    OracleTooLarge { n: usize, limit: usize },

    #[error("sign pattern entries must be +1 or -1")]
    InvalidSignPattern,

    #[error(
        "enumeration guard exceeded ({patterns:.3e} sign patterns, limit {limit:.1e}); \
         use the planar sweep (d = 2, k = n) or smaller parameters"
    )]
    EnumerationGuard { patterns: f64, limit: f64 },

    #[error("empty body set")]
    EmptyBodySet,

    #[error("condition check implemented for segment bodies only")]
    NotASegment,

    #[error("{0}")]
    InvalidParameter(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
