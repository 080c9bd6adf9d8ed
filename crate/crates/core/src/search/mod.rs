//! Exhaustive oracle: enumerate every digraph of a small order, keep the
//! extremal ones, and compare them with the families up to isomorphism.

pub mod canon;
pub mod enumerate;
pub mod extremal;
pub mod iso;
pub mod verify;

pub use canon::{canonical_form, canonical_label, CanonicalForm, CANON_CAP};
pub use enumerate::{enumerate_digraphs, enumeration_cap};
pub use extremal::{
    search_extremal, ExtremalSearchReport, Objective, Scope, SearchConfig, Witness,
};
pub use iso::are_isomorphic;
pub use verify::{
    verify_theorem, RowStatus, TheoremTag, VerifyBounds, VerifyRow, VerifyTable, WitnessCheck,
};
