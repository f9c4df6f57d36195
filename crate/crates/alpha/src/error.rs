use matroid_core::Subset;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlphaError {
    #[error("dense alpha tables need at most {max} elements, got {n}")]
    TooLarge { n: usize, max: usize },
    #[error("the matroid is not a strict gammoid: alpha({0}) < 0")]
    NotStrict(Subset),
    #[error("not a modular cut: {0}")]
    InvalidCut(String),
}
