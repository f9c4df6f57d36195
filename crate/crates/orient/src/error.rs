use matroid_core::Subset;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OrientError {
    #[error("the signed circuits do not determine a signing of cocircuit {0}")]
    InconsistentSigning(Subset),
    #[error("the permutation is not an automorphism of the underlying matroid")]
    NotAutomorphism,
    #[error("the digraph has a cycle")]
    CyclicInput,
    #[error("lattice path {0} is not south of {1} with common endpoints")]
    NotComparable(String, String),
    #[error("the matroid has a loop or a parallel pair")]
    NotSimple,
    #[error("rank {0} is below two")]
    LowRank(usize),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}
