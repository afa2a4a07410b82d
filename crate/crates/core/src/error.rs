use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("graph is disconnected; operation requires finite distances")]
    Disconnected,
    #[error("invalid generator parameter: {0}")]
    InvalidGenerator(String),
    #[error("invalid poset: {0}")]
    InvalidPoset(String),
    #[error("invalid CW complex: {0}")]
    InvalidCw(String),
    #[error("invalid P_k^sigma parameters: {0}")]
    InvalidPkSigma(String),
    #[error("unknown corpus name: {0}")]
    UnknownCorpus(String),
    #[error("basis mismatch: {0}")]
    BasisMismatch(String),
    #[error("not a subcomplex: {0}")]
    NotSubcomplex(String),
    #[error("malformed chain complex: composite of boundary maps is nonzero")]
    NotAComplex,
    #[error("vector is not a cycle (d_k * v != 0)")]
    NotACycle,
    #[error("input is not a tree: {0}")]
    NotATree(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
