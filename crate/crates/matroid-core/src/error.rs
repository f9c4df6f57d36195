use thiserror::Error;

use crate::subset::Subset;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatroidError {
    #[error("index {index} out of range for {r}-subsets of {n} elements")]
    IndexOutOfRange { n: usize, r: usize, index: u64 },
    #[error("expected {expected} base bits, got {got}")]
    BadLength { expected: u64, got: usize },
    #[error("rank {r} exceeds ground set size {n}")]
    RankTooLarge { n: usize, r: usize },
    #[error("ground sets with more than {max} elements are not supported")]
    TooLarge { max: usize },
    #[error("no base bit is set")]
    EmptyBaseFamily,
    #[error("base exchange fails for X = {x}, Y = {y}, element {}", .element + 1)]
    ExchangeViolation { x: Subset, y: Subset, element: usize },
    #[error("{0} is not a subset of the ground set")]
    NotInGround(Subset),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}
