use thiserror::Error;

/// Errors produced by table construction, file ingestion, and the exact
/// comparison kernels.
#[derive(Debug, Error)]
pub enum Error {
    /// A comparison kernel was handed a value it cannot root or divide by.
    #[error("{0}: operand must be positive")]
    NonPositive(&'static str),

    /// Root degree zero has no meaning for the kernels.
    #[error("{0}: root degree must be at least 1")]
    ZeroRootDegree(&'static str),

    /// Rational text had denominator 0.
    #[error("zero denominator")]
    ZeroDenominator,

    /// Rational text that is not "P" or "P/Q" in base 10.
    #[error("invalid rational literal {0:?}")]
    InvalidNumber(String),

    #[error("index {index} out of range for table with max index {max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("invalid range [{lo}, {hi}] (table max index {max})")]
    InvalidRange { lo: usize, hi: usize, max: usize },

    /// Empty terms file (or table construction with no terms).
    #[error("no terms")]
    NoTerms,

    #[error("terms file line {line}: {reason}")]
    TermsParse { line: usize, reason: String },

    #[error("nonpositive term at index {index}")]
    NonPositiveTerm { index: usize },

    #[error("terms file line {line}: expected index {expected}, found {found}")]
    IndexGap {
        line: usize,
        expected: usize,
        found: usize,
    },

    #[error("k-regular generation requires k >= 2 (got {0})")]
    InvalidRegularK(u32),

    /// The Euler-product recurrence must divide exactly for integer exponent
    /// rules; a remainder means the rule or the engine is broken.
    #[error("euler-product recurrence left a remainder at n = {n}")]
    InexactRecurrence { n: usize },

    #[error("horizon {horizon} too small for n0 = {n0}: need at least {needed}")]
    HorizonTooSmall {
        horizon: usize,
        n0: usize,
        needed: usize,
    },

    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
