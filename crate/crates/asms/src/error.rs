use thiserror::Error;

use crate::langford::SequenceViolation;

/// Errors shared across the construction pipeline.
#[derive(Debug, Error)]
pub enum Error {
    #[error("unsupported order {0}: n must be \u{2261} \u{b1}3 (mod 18) and \u{2265} 21")]
    UnsupportedOrder(i64),

    #[error("hole position {k} is not admissible for m = {m}")]
    InadmissibleHole { m: i64, k: usize },

    #[error("search exhausted after {nodes} node expansions ({reason})")]
    SearchExhausted { nodes: u64, reason: SearchFailure },

    #[error("exhaustive enumeration is limited to m \u{2264} {limit}, got m = {m}")]
    OracleScaleExceeded { m: i64, limit: i64 },

    #[error("invalid sequence: {0}")]
    InvalidSequence(SequenceViolation),

    #[error("triple ({x}, {y}, {z}) does not sum to zero")]
    NonZeroSumTriple { x: i64, y: i64, z: i64 },

    #[error("entry coverage violation: {0}")]
    CoverageViolation(String),

    #[error("layout inconsistency: {0}")]
    LayoutInconsistency(String),

    #[error("subsquare order {k} out of range [3, {max}]")]
    OrderOutOfRange { k: i64, max: i64 },

    #[error("scan of order {n} exceeds the n \u{2264} {limit} oracle bound")]
    ScanScaleExceeded { n: i64, limit: i64 },

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Why a sequence search stopped without a result.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchFailure {
    /// The node budget was consumed before a sequence was found.
    BudgetExceeded,
    /// The whole space was explored and holds no sequence.
    NoSolution,
}

impl std::fmt::Display for SearchFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SearchFailure::BudgetExceeded => write!(f, "node budget exceeded"),
            SearchFailure::NoSolution => write!(f, "search space exhausted, no sequence exists"),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
