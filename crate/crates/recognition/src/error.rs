use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RecognitionError {
    #[error("search space too large: {0}")]
    SizeLimitExceeded(String),
    #[error("digraphs are limited to {max} vertices, {requested} requested")]
    TooManyVertices { requested: usize, max: usize },
    #[error("the tableau is not decisive")]
    NotDecisive,
    #[error("invalid identification witness: {0}")]
    InvalidWitness(String),
    #[error("matroid {0} is not part of the tableau")]
    UnknownMatroid(String),
    #[error("tableau parse error: {0}")]
    Parse(String),
}
