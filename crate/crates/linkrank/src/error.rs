use thiserror::Error;

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: {reason}")]
    MalformedLine { line: usize, reason: String },
    #[error(transparent)]
    Graph(#[from] linkrank_core::Error),
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("document id {0:?} appears more than once")]
    DuplicateId(String),
    #[error("document {index}: {reason}")]
    MalformedDocument { index: usize, reason: String },
}
