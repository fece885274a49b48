//! Exact computations in braid groups: words and the word problem
//! (handle reduction plus a lamination-action cross-check), curve systems
//! and disjointness, homomorphisms `B_n → B_2n` with fingerprints and a
//! cabling classifier, semidirect cabling decomposition, and symmetric-
//! group homomorphism enumeration.

pub mod braid;
pub mod cable;
pub mod curve;
pub mod error;
pub mod handle;
pub mod hom;
pub mod lamination;
pub mod suite;

pub use braid::{BraidWord, NamedTag, Permutation, SubgroupKind, DEFAULT_FUEL};
pub use cable::{CableStructure, CablingClassification, CrossedVector, SemidirectElement};
pub use curve::{CurveSpec, DisjointnessVerdict, Multicurve};
pub use error::{Error, Result};
pub use hom::{Fingerprint, Homomorphism, StandardKind};
pub use lamination::LaminationCoords;
