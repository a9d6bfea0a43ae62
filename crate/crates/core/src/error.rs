use thiserror::Error;

/// Errors shared by the whole crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("bases family is empty")]
    EmptyBases,
    #[error("bases have unequal cardinality")]
    UnequalCardinality,
    #[error("element {element} out of range for ground set of size {size}")]
    ElementOutOfRange { element: usize, size: usize },
    #[error("basis exchange fails for bases {b1:?} and {b2:?} at element {e}")]
    ExchangeFailure {
        b1: Vec<usize>,
        b2: Vec<usize>,
        e: usize,
    },
    #[error("ground set of size {0} exceeds the {max} element limit", max = crate::MAX_ELEMENTS)]
    GroundSetTooLarge(usize),
    #[error("graph has no edges")]
    NoEdges,
    #[error("graph has {0} vertices; at most 32 are supported")]
    TooManyVertices(usize),
    #[error("minor would remove the whole ground set")]
    DeleteAll,
    #[error("operation requires rank at least 1")]
    RankZero,
    #[error("matroid is not 3-connected")]
    NotThreeConnected,
    #[error("engine contradiction: {0}")]
    InternalContradiction(String),
    #[error("unknown lemma id `{0}`")]
    UnknownLemma(String),
    #[error("minor target has {0} elements; at most 10 are supported")]
    TargetTooLarge(usize),
    #[error("family parameter n={n} too small; need n >= {min}")]
    NTooSmall { n: usize, min: usize },
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}
