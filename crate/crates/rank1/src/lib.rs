//! Symbolic rank-one systems from cutting and spacer parameters.
//!
//! A rank-one construction is driven by a cut count and a spacer tuple per
//! level: the generating word of each level is built from copies of the
//! previous word separated by runs of 1-symbols. This crate represents
//! eventually periodic parameter sequences finitely and provides, on top
//! of that representation:
//!
//! * [`spacer`] — the algebra of spacer tuples: the level-collapsing
//!   product, reversal, and the window-compatibility relation;
//! * [`engine`] — parameter resolution, generating words, level
//!   collapsing, the measure conditions, and the canonical-parameter
//!   necessary condition;
//! * [`parse`] — expected occurrences of one generating word inside
//!   another, their gap sequences, and spacer-pattern search;
//! * [`measure`] — exact rational normalizer and cylinder measures;
//! * [`inverse`] — the decision procedure for isomorphism to the inverse,
//!   with machine-checkable certificates;
//! * [`cli`] — the `r1` command-line front-end.
//!
//! All library operations are pure and deterministic over immutable
//! inputs, so they are safe to call concurrently without restriction.

pub mod cli;
pub mod engine;
pub mod error;
pub mod inverse;
pub mod measure;
pub mod parse;
pub mod spacer;

pub use engine::{LevelSpec, ParamSpec, Tail, Word, DEFAULT_WORD_BUDGET};
pub use error::Error;
pub use spacer::{CompatibilityResult, SpacerTuple};
