//! Oriented matroids given by signed circuits and cocircuits: axiom
//! checks, orientations from matrices and from heavy arc signatures of
//! acyclic digraphs, reorientation, coflow chromatic numbers, lattice path
//! matroids and quite simple colines.

pub mod coflow;
pub mod error;
pub mod heavy;
pub mod lpm;
pub mod om;
pub mod realizable;
pub mod signed;

pub use coflow::{chromatic_number, coflow_lattice, coflow_member, Chromatic, Lattice};
pub use error::OrientError;
pub use heavy::{circuit_signature, heavy_arc_orientation, ArcSignature};
pub use lpm::{
    coline_census, lattice_path_matroid, parse_path, presentation, quite_simple_coline, quite_simple_colines,
    western_coline, ColineCensus,
};
pub use om::{
    check_axioms, cocircuits_from_circuits, matroid_with_circuits, relabel, reorient, reorientation_between, Axiom,
    AxiomReport, OrientedMatroid, Violation,
};
pub use realizable::{cramer_signature, orientation_from_matrix};
pub use signed::{numeric_names, parse_signed_sets, print_signed_sets, with_negations, SignedSubset};
