use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RealizeError {
    #[error("determinant of a non-square {0}x{1} matrix")]
    NonSquare(usize, usize),
    #[error("pivot entry at ({0}, {1}) is zero")]
    ZeroPivot(usize, usize),
    #[error("the digraph has a cycle")]
    CyclicInput,
}
