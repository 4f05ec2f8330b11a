use thiserror::Error;

/// Errors produced by set construction, counting, and structure extraction.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("set must have at least 2 elements, got {0}")]
    TooFewElements(usize),

    #[error("set elements must be strictly increasing (violation at index {0})")]
    NotStrictlyIncreasing(usize),

    #[error("invalid set literal: {0}")]
    ParseSetLiteral(String),

    #[error("set is not in normalized form: {0}")]
    NotNormalized(String),

    #[error("integer overflow during {0}")]
    Overflow(&'static str),

    #[error("fold count h must be at least 1")]
    ZeroFold,

    #[error("threshold t must be at least 1")]
    ZeroThreshold,

    #[error("count cap must be at least 1")]
    ZeroCap,

    #[error("index range too large: h = {h} with a_max = {a_max} exceeds 2^31 table entries")]
    RangeTooLarge { h: u64, a_max: i64 },

    #[error("enumeration budget exceeded: {multisets} multisets is over the oracle limit of {budget}")]
    OracleBudgetExceeded { multisets: u128, budget: u128 },

    #[error("the structure theorem requires k >= 2; the normalized set {{0, 1}} has k = 1")]
    PairSetUnsupported,

    #[error("(hA)^({t}) is empty for every h when A = {{0, 1}} and t >= 2; no finite answer exists")]
    EmptyForAllFolds { t: u32 },

    #[error("n = {n} lies outside the guaranteed interval [{lo}, {hi}]")]
    OutsideInterval { n: i64, lo: i64, hi: i64 },

    /// The guaranteed interval was not contained in the computed sumset.
    /// This can only happen if the counting implementation is wrong.
    #[error("interval [{lo}, {hi}] not contained in the computed sumset at h = {h}: {n} is missing")]
    ContainmentFalsified { h: u32, lo: i64, hi: i64, n: i64 },

    #[error("h_lo = {h_lo} is below the stabilization threshold h_t = {h_t}")]
    BelowThreshold { h_lo: u32, h_t: i64 },

    #[error("empty fold range: h_lo = {lo} > h_hi = {hi}")]
    BadFoldRange { lo: u32, hi: u32 },

    #[error("corpus sampling needs k_max >= 2 and a_limit >= k_max, got k_max = {k_max}, a_limit = {a_limit}")]
    CorpusParams { k_max: usize, a_limit: i64 },

    #[error("corpus sampling found only {found} distinct sets of the {requested} requested")]
    CorpusExhausted { requested: usize, found: usize },

    /// Predicted and computed threshold sumsets disagree at some fold.
    /// Carries the first failing fold and the symmetric difference.
    #[error(
        "predicted and computed sumsets disagree at h = {h}: {} predicted-only, {} computed-only",
        predicted_only.len(),
        computed_only.len()
    )]
    StructureMismatch {
        h: u32,
        predicted_only: Vec<i64>,
        computed_only: Vec<i64>,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
