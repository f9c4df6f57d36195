//! Exact rational matrices for gammoids: heavy integer arc weights, the
//! Lindström path matrix, contraction pivots and a randomized matrix for
//! transversal matroids.

pub mod error;
pub mod lindstrom;
pub mod matrix;
pub mod transversal;
pub mod weights;

pub use error::RealizeError;
pub use lindstrom::{lindstrom_heavy, lindstrom_matrix, represent_gammoid};
pub use matrix::{exact_det, idet, matrix_contract, matrix_matroid, ExactMatrix};
pub use transversal::randomized_transversal_matrix;
pub use weights::{canonical_weighting, heavy_weighting, HeavyWeighting};
