use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("not a permutation of 1..{len}: {detail}")]
    InvalidPermutation { len: usize, detail: String },

    #[error("cannot parse {what} from {input:?}: {detail}")]
    Parse {
        what: &'static str,
        input: String,
        detail: String,
    },

    #[error("n = {requested} exceeds the configured limit {limit}; pass an explicit override to go further")]
    LimitExceeded { requested: usize, limit: usize },

    #[error("{0}")]
    Precondition(String),

    #[error("division by {name}: constant term is zero")]
    ZeroConstantTerm { name: String },

    #[error("coefficient {index} of {name} is not an integer: {value}")]
    NonIntegral {
        name: String,
        index: usize,
        value: String,
    },

    #[error("unknown generating function {0:?}")]
    UnknownSeries(String),

    #[error("invalid Schroder path at step {position}: {reason}")]
    InvalidPath { position: usize, reason: String },

    #[error("invalid bounding staircase: {0}")]
    InvalidStaircase(String),

    #[error("{perm} contains {pattern} at positions {positions:?}")]
    ContainsPattern {
        perm: String,
        pattern: String,
        positions: Vec<usize>,
    },

    #[error("unknown OEIS id {0} in offline mode (bundled: A006318, A026671, A060693, A111279)")]
    UnknownOeisId(String),

    #[error("malformed OEIS id {0:?}: expected 'A' followed by six digits")]
    MalformedOeisId(String),

    #[error("b-file line {line}: {detail}")]
    BFile { line: usize, detail: String },

    #[error(
        "network fetch of {url} failed ({detail}); rerun with --offline to use bundled fixtures"
    )]
    Network { url: String, detail: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
