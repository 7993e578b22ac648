/// Unified error type for the crate.
///
/// Variants fall into four groups that the CLI maps onto exit codes:
/// invalid argument values (domain), Hurst-scope refusals, numeric
/// failures inside samplers, and harness configuration problems.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("Hurst parameter must lie in the open interval (0, 1), got {value}")]
    HurstOutOfRange { value: f64 },

    #[error("{what} must be positive, got {value}")]
    NonPositive { what: &'static str, value: f64 },

    #[error("time arguments must be nonnegative, got {value}")]
    NegativeTime { value: f64 },

    #[error("grid must have at least one step")]
    EmptyGrid,

    #[error("sample path must contain at least one value")]
    EmptyPath,

    #[error("sample path must start at zero, got {value}")]
    UnanchoredPath { value: f64 },

    #[error("{values} path values do not match {points} grid points")]
    LengthMismatch { values: usize, points: usize },

    #[error("bound is stated for H >= 1/2 only, got H = {value}")]
    HurstBelowHalf { value: f64 },

    #[error("bound undefined below eta: x = {x}, eta = {eta}")]
    BelowEta { x: f64, eta: f64 },

    #[error("need 0 <= u <= v <= t, got u = {u}, v = {v}, t = {t}")]
    TimeOrdering { u: f64, v: f64, t: f64 },

    #[error("grid size {n} exceeds the cap {cap} for this sampler")]
    GridTooLarge { n: usize, cap: usize },

    #[error("burn-in {burn_in} is shorter than 10x the horizon {horizon}")]
    BurnInTooShort { burn_in: f64, horizon: f64 },

    #[error("covariance factorization failed: matrix not positive definite at pivot {pivot}")]
    CholeskyPivot { pivot: usize },

    #[error("circulant embedding not nonnegative definite: eigenvalue {value:e} at index {index}")]
    EmbeddingEigenvalue { index: usize, value: f64 },

    #[error("partial correlation out of range at lag {lag}: {value}")]
    PartialCorrelation { lag: usize, value: f64 },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("replication {rep} failed: {source}")]
    Replication {
        rep: u64,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    /// True for failures of the numeric machinery itself (factorization,
    /// embedding eigenvalues, recursion breakdown), as opposed to bad inputs.
    pub fn is_numeric(&self) -> bool {
        match self {
            Error::CholeskyPivot { .. }
            | Error::EmbeddingEigenvalue { .. }
            | Error::PartialCorrelation { .. } => true,
            Error::Replication { source, .. } => source.is_numeric(),
            _ => false,
        }
    }

    pub(crate) fn config(msg: impl Into<String>) -> Self {
        Error::Config(msg.into())
    }
}
