use thiserror::Error;

/// Errors raised by the partition, counting and generating-function routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts must be weakly decreasing: {0} is followed by the larger part {1}")]
    NotDecreasing(u32, u32),
    #[error("invalid partition token {0:?}")]
    BadToken(String),
    #[error("operation requires a nonempty partition")]
    EmptyPartition,
    #[error("invalid rectangular decomposition: {0}")]
    InvalidDecomp(String),
    #[error("pattern {0} is not strict")]
    NotStrict(String),
    #[error(
        "pattern {0} is not super-strict: rational generating functions are only produced for \
         super-strict patterns, and strict patterns whose two largest parts differ by one have \
         generating functions that are not algebraic"
    )]
    NotSuperStrict(String),
    #[error("pattern {0} is too small (largest part must be at least 2)")]
    PatternTooSmall(String),
    #[error("pattern {0} is too small (weight must be at least 2)")]
    TooSmall(String),
    #[error("{what} {value} exceeds the configured cap {cap}")]
    CapExceeded { what: &'static str, value: u64, cap: u64 },
    #[error("staircase pattern {0} has no hat partition")]
    StaircaseHasNoHat(String),
    #[error("index {index} out of range for {pattern}: expected {lo} < i <= {hi}")]
    IndexOutOfRange { pattern: String, index: u32, lo: u32, hi: u32 },
    #[error("partition {alpha} is not in D({pattern})")]
    NotInDomain { alpha: String, pattern: String },
    #[error("division by the zero rational function")]
    DivisionByZero,
    #[error("denominator vanishes at z = 0; no power series expansion")]
    PoleAtZero,
    #[error("series coefficient of z^{0} is not an integer")]
    NonIntegralSeries(usize),
    #[error("F(z, 0) requested below an N operator at level {0}")]
    NZeroUnsupported(usize),
    #[error("horizon {horizon} is smaller than the number of parts {len}")]
    HorizonTooSmall { horizon: usize, len: usize },
    #[error("degenerate product factor {factor} in the leading constant of {pattern}")]
    DegenerateProduct { pattern: String, factor: i64 },
    #[error("no exact counting method covers {pattern} at n = {n}")]
    NoExactSource { pattern: String, n: u64 },
    #[error("cannot parse rational function: {0}")]
    Parse(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn is_cap_exceeded(&self) -> bool {
        matches!(self, Error::CapExceeded { .. })
    }

    pub fn cap(what: &'static str, value: impl Into<u64>, cap: impl Into<u64>) -> Self {
        Error::CapExceeded { what, value: value.into(), cap: cap.into() }
    }
}
