//! Power-contamination process on rectangular grids.
//!
//! A cell becomes contaminated when two already contaminated cells sit in
//! one of eight fixed relative positions around it. This crate provides the
//! closure engine for that process, the closed-form contamination number
//! `gamma`, exhaustive searches that count optimal (`alpha`) and feasible
//! (`beta`) seed sets, and the word/permutation encodings used to relate
//! those counts to classical integer sequences.

pub mod closed_forms;
pub mod combinatorics;
mod error;
pub mod grid;
pub mod search;

pub use error::{Error, Result};
pub use grid::{Cell, CellSet, ClosureTrace, GridDims, Rule, Symmetry};
