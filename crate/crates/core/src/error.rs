use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },

    #[error("empty input: {0}")]
    Empty(&'static str),

    #[error("division by the zero rational function")]
    DivisionByZero,

    #[error("variable count mismatch: {0} vs {1}")]
    ArityMismatch(usize, usize),

    #[error("pole at the evaluation point")]
    Pole,

    #[error("operation requires a rank-1 grid, this grid has rank {0}")]
    NotRankOne(usize),

    #[error("component `{component}` has no value for bundle `{bundle}`")]
    MissingBundle { component: String, bundle: String },

    #[error("unknown component id `{0}`")]
    UnknownComponent(String),

    #[error("component `{0}` has an unspecified compass")]
    UnspecifiedCompass(String),

    #[error("ambiguous sink: candidates {0:?}")]
    AmbiguousSink(Vec<String>),

    #[error("edge set is not flagged complete; nef test refused")]
    EdgesIncomplete,

    #[error("grid is not equalized")]
    NotEqualized,

    #[error("component `{0}` is not an isolated point")]
    NonIsolated(String),

    #[error("value for `{0}` is not an integer")]
    NonIntegral(String),

    #[error("residual denominator after simplification: {0}")]
    ResidualDenominator(String),

    #[error("edge {0} -> {1} carries no type tag")]
    UntaggedEdge(String, String),

    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid merge: {0}")]
    Merge(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("unsupported: {0}")]
    Unsupported(String),
}
