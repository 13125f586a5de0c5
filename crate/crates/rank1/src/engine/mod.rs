//! Finitely represented cutting and spacer parameters and the generating
//! words they produce.
//!
//! A parameter sequence is stored as an explicit prefix of levels plus a
//! tail that is either periodic (a repeating cycle of levels) or
//! unspecified. Eventually periodic parameters are exactly the class on
//! which the eventual-palindromicity question and the measure conditions
//! are decidable, while an unspecified tail still supports every
//! finite-level computation on the prefix.

mod conditions;
mod params;
mod word;

pub use conditions::{
    canonical_necessary, check_measure_conditions, CanonicalCheck, DistinctSpacers,
    MeasureConditionReport, OneDensity,
};
pub use params::{LevelSpec, ParamSpec, Tail};
pub use word::{Word, DEFAULT_WORD_BUDGET};
