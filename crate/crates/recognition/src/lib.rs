//! Gammoid recognition.

pub mod backtrack;
pub mod bruteforce;
pub mod census;
pub mod error;
pub mod pipeline;
pub mod tableau;

pub use backtrack::{
    arc_order, backtrack, recognize_backtracking, BacktrackOptions, BacktrackVerdict, Linking, Path, SearchState,
    SearchStats,
};
pub use bruteforce::{recognize_bruteforce, BruteForceVerdict, BRUTE_FORCE_MAX_FREE, BRUTE_FORCE_MAX_N};
pub use census::{rank3_census, CensusLevel};
pub use error::RecognitionError;
pub use pipeline::{auto_pipeline, Budget, PipelineRun, PipelineVerdict, StepRecord};
pub use tableau::{canonical_hash, small_gammoid_oracle, Decision, Induction, Tableau, ValidityReport};
