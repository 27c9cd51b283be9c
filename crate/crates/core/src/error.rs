use thiserror::Error;

/// Errors produced by the analysis routines and the edge-list reader.
#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("line {line}: self-loop on `{label}` is not allowed")]
    SelfLoop { line: usize, label: String },

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    /// The quantity is not defined for this input (e.g. density of a 1-vertex graph).
    #[error("undefined for this input: {0}")]
    Undefined(String),

    /// The input is valid but makes the result meaningless (e.g. all radii equal).
    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("shortest-path count overflowed 128 bits")]
    PathCountOverflow,

    #[error("eigen solver failed: {0}")]
    Eigen(String),

    #[error("input is not Euclidean: most negative Gram eigenvalue {0:e}")]
    NonEuclidean(f64),

    #[error("vertex `{0}` is isolated")]
    IsolatedVertex(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
