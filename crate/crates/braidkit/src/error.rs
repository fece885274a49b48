//! Toolkit-wide error type.

use thiserror::Error;

/// Errors shared across the toolkit.
///
/// `Undecided` is deliberately distinct from any boolean verdict: the word
/// problem backend refuses to guess when its work budget is exhausted.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("strand count mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },

    #[error("invalid letter {letter} for {strands} strands")]
    InvalidLetter { letter: i64, strands: usize },

    #[error("word problem undecided: fuel exhausted after {fuel} steps")]
    Undecided { fuel: u64 },

    #[error("index {index} out of range for {strands} strands")]
    IndexOutOfRange { index: usize, strands: usize },

    #[error("invalid named element: {reason}")]
    InvalidNamed { reason: String },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("homomorphism error: {0}")]
    Hom(String),

    #[error("transvection precheck failed at generator {generator}")]
    TransvectionPrecheck { generator: usize },

    #[error("cable structure error: {0}")]
    Cable(String),

    #[error("input is not a cabling section: {0}")]
    NonSection(String),

    #[error("enumeration size guard exceeded: {0}")]
    SizeGuard(String),
}

pub type Result<T> = std::result::Result<T, Error>;
