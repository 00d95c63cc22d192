use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown atom `{0}`")]
    UnknownAtom(String),
    #[error("atom index {0} out of range")]
    AtomIndexOutOfRange(usize),
    #[error("duplicate atom declaration `{0}`")]
    DuplicateAtom(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("state-space dimension {dim} exceeds the configured cap {cap}")]
    DimensionCapExceeded { dim: usize, cap: usize },
    #[error("the set of two-valued states is empty")]
    EmptyStateSet,
    #[error("not a state: {0}")]
    NotAState(String),
    #[error("diagram is not (n,m)-homogeneous")]
    Inhomogeneous,
    #[error("element does not belong to this logic: {0}")]
    ForeignElement(String),
    #[error("invalid concrete logic: {0}")]
    InvalidConcreteLogic(String),
    #[error("unknown catalog key `{0}`")]
    UnknownCatalogKey(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
