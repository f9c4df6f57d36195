//! The α invariant: strict gammoids, violations, modular cuts and
//! single-element extensions, plus a few structural tests used when
//! deciding whether a matroid is a gammoid.

pub mod cuts;
pub mod deflate;
pub mod error;
pub mod exchange;
pub mod ingleton;
pub mod strict;
pub mod table;

pub use cuts::{
    alpha_of_extension, cut_of_extension, extend, extend_unchecked, extension_delta, flats_of_extension,
    is_modular_pair, modular_cuts, ExtensionDelta, ModularCut,
};
pub use deflate::{find_deflate, is_deflated, restriction_cut, unique_minimal, Deflate};
pub use error::AlphaError;
pub use exchange::{full_exchange, sbo_counterexample, strongly_base_orderable};
pub use ingleton::{ingleton_holds, ingleton_violation};
pub use strict::{alpha_system, strict_representation};
pub use table::{
    alpha_invariant, alpha_via_moebius, alpha_violations, first_negative, is_strict_gammoid, is_transversal,
    violations_of, AlphaTable,
};
