//! Extremal Laplacian energy of digraphs that avoid a directed cycle of a
//! given length.
//!
//! The Laplacian energy of a digraph is the sum of the squared eigenvalues of
//! `L = D⁺ − A`, which for loop-free digraphs equals the sum of squared
//! outdegrees plus the number of closed 2-walks. This crate provides:
//!
//! * [`digraph`]: a compact bit-row digraph type for orders up to 64;
//! * [`invariants`]: exact energy, first Zagreb index, `c₂` and `trace(L²)`;
//! * [`families`]: generators for the block-chain extremal families;
//! * [`cycles`]: detection of directed cycles of an exact length;
//! * [`closed_forms`]: the extremal values as exact integer formulas;
//! * [`majorization`]: majorization and Karamata checks on degree sequences;
//! * [`search`]: an exhaustive oracle over all small digraphs, canonical
//!   labeling, isomorphism, and row-by-row verification tables;
//! * [`io`]: arclist, DOT and JSON formats.

pub mod closed_forms;
pub mod cycles;
pub mod digraph;
pub mod error;
pub mod families;
pub mod invariants;
pub mod io;
pub mod majorization;
pub mod search;

pub use digraph::{DegreeSequence, Digraph, DigraphBuilder, LaplacianMatrix, MAX_VERTICES};
pub use error::{Error, Result};
pub use families::FamilySpec;
pub use invariants::InvariantBundle;
