use matroid_core::{MatroidError, Subset};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DigraphError {
    #[error("arc ({0}, {1}) is not in the digraph")]
    ArcMissing(usize, usize),
    #[error("the given vertex sequence is not a cycle walk")]
    NotACycle,
    #[error("the digraph has a cycle")]
    CyclicInput,
    #[error("{0} is not a base of the represented gammoid")]
    NotABase(Subset),
    #[error("rank {r} exceeds ground set size {n}")]
    RankTooLarge { n: usize, r: usize },
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Matroid(#[from] MatroidError),
}
