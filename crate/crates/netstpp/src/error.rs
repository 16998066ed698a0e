use thiserror::Error;

/// Errors produced by network construction, model fitting and validation.
#[derive(Debug, Error)]
pub enum Error {
    #[error("empty network")]
    EmptyNetwork,

    #[error("non-finite coordinate in segment {0}")]
    NonFiniteCoordinate(usize),

    #[error("unreachable: locations lie in different components ({0}, {1})")]
    Unreachable(u32, u32),

    #[error("row {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("zero variance: count series is constant")]
    ZeroVariance,

    #[error("lag count {m} must be positive and smaller than the series length {n}")]
    BadLagCount { m: usize, n: usize },

    #[error("all-zero count series")]
    DegenerateCounts,

    #[error("cyclic basis needs at least 4 knots, got {0}")]
    TooFewKnots(usize),

    #[error("fit did not converge after {iterations} iterations; deviance trace {trace:?}")]
    NoConvergence { iterations: usize, trace: Vec<f64> },

    #[error("rank-deficient design: collinear block `{0}`")]
    RankDeficient(String),

    #[error("optimizer failed: {0}")]
    OptimFailed(String),

    #[error("degenerate point set: zero spread in both coordinates")]
    DegeneratePoints,

    #[error("event {0} outside effective network support")]
    OutsideSupport(usize),

    #[error("empty point pattern `{0}`")]
    EmptyPattern(&'static str),

    #[error("all-zero density field")]
    ZeroField,

    #[error("obs density too sparse: {0:.1}% of mass excluded")]
    SparseObs(f64),

    #[error("all stations unreachable from event")]
    NoStationReachable,

    #[error("period {period} not in the future (T = {t_max})")]
    NotFuture { period: u32, t_max: u32 },

    #[error("invalid argument: {0}")]
    InvalidArg(String),

    #[error("unsupported model document version {0}")]
    ModelVersion(u32),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
