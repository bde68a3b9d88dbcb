use thiserror::Error;

/// Crate-wide error type. Variants mirror the preconditions of the
/// calculators and simulation operations that produce them.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("eta must be < 0.5 and >= 0 (got {0})")]
    EtaOutOfRange(f64),

    #[error("high-noise rate must be in (0.5, 1] (got {0})")]
    HighNoiseOutOfRange(f64),

    #[error("delta must be in (0, 1) (got {0})")]
    ConfidenceOutOfRange(f64),

    #[error("Delta must be in (0, 1] (got {0})")]
    GapOutOfRange(f64),

    #[error("eps must be in (0, 1) (got {0})")]
    EpsilonOutOfRange(f64),

    #[error("K must be in [1, {n}] (got {k})")]
    KOutOfRange { k: usize, n: usize },

    #[error("operation requires a pool of symmetric-noise workers")]
    NonSymmetricPool,

    #[error("operation requires a pool of asymmetric-noise workers")]
    NonAsymmetricPool,

    #[error("point dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("sample must be non-empty")]
    EmptySample,

    #[error("vote count must be odd and positive (got {0})")]
    EvenVoteCount(usize),

    #[error("pool of {pool} workers cannot supply {needed} distinct voters per point")]
    PoolTooSmall { pool: usize, needed: usize },

    #[error("ground-truth set holds {have} points but {need} are required")]
    InsufficientGroundTruth { have: usize, need: usize },

    #[error("no worker with zero observed errors")]
    NoZeroErrorWorker,

    #[error("worker {worker} would exceed the per-worker task budget {budget}")]
    BudgetExceeded { worker: usize, budget: u64 },

    #[error("Infeasible: {0}")]
    Infeasible(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("replicate {index} failed: {source}")]
    Replicate {
        index: usize,
        #[source]
        source: Box<Error>,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}

/// Validates a confidence parameter `delta` in (0, 1).
pub(crate) fn check_confidence(delta: f64) -> Result<()> {
    if delta.is_finite() && delta > 0.0 && delta < 1.0 {
        Ok(())
    } else {
        Err(Error::ConfidenceOutOfRange(delta))
    }
}

/// Validates a noise rate in [0, 1/2).
pub(crate) fn check_eta(eta: f64) -> Result<()> {
    if eta.is_finite() && (0.0..0.5).contains(&eta) {
        Ok(())
    } else {
        Err(Error::EtaOutOfRange(eta))
    }
}

/// Validates an optimality gap in (0, 1].
pub(crate) fn check_gap(gap: f64) -> Result<()> {
    if gap.is_finite() && gap > 0.0 && gap <= 1.0 {
        Ok(())
    } else {
        Err(Error::GapOutOfRange(gap))
    }
}

/// Validates an accuracy parameter `eps` in (0, 1).
pub(crate) fn check_eps(eps: f64) -> Result<()> {
    if eps.is_finite() && eps > 0.0 && eps < 1.0 {
        Ok(())
    } else {
        Err(Error::EpsilonOutOfRange(eps))
    }
}
