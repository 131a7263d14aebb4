//! Gauss-diagram calculus for free knots.
//!
//! A free knot is represented by a chord diagram: a fixed-point-free pairing
//! of `2n` positions on a line (long) or a circle (closed). This crate
//! classifies chords by parity, type and sort, evaluates the integer
//! invariant `l` and two group-valued invariants, applies Reidemeister moves,
//! and searches for trivializing move sequences.
//!
//! The `fk` binary exposes the same operations on corpus files of diagrams.

pub mod corpus;
pub mod diagram;
pub mod group;
pub mod invariants;
pub mod moves;
pub mod parity;
pub mod samples;
pub mod search;

pub use diagram::{Chord, ChordDiagram, DiagramKind};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("parse error at line {line}: {msg}")]
    ParseAt { line: usize, msg: String },
    #[error("unsupported operation: {0}")]
    Unsupported(String),
    #[error("chord `{0}` is not in the diagram")]
    ChordNotFound(String),
    #[error("move not applicable: {0}")]
    Inapplicable(String),
    #[error("gap {gap} out of range for a diagram with {len} positions")]
    GapOutOfRange { gap: usize, len: usize },
    #[error("mismatched group tags: {0} vs {1}")]
    GroupMismatch(&'static str, &'static str),
    #[error("budget must be positive")]
    BadBudget,
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
