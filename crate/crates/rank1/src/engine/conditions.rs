use serde::{Deserialize, Serialize};

use super::params::{ParamSpec, Tail};
use crate::error::Error;
use crate::measure::{normalizer, partial_normalizer, ExactRational, NormalizerResult};
use crate::spacer::star;

/// Whether the spacer values keep taking at least two distinct values
/// arbitrarily late in the sequence. When they do, the invariant measure is
/// atomless.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum DistinctSpacers {
    /// Two distinct values recur in the periodic tail.
    Holds { witness: (u64, u64) },
    /// Every spacer value in the cycle is this one constant, so beyond any
    /// horizon all values agree.
    FailsOnTail { constant_value: u64 },
    /// The tail is unspecified; only the prefix was inspected.
    UndeterminedPrefixOnly {
        prefix_len: u64,
        distinct_in_prefix: bool,
    },
}

/// Whether the density of 1-symbols in the generating words stays bounded
/// away from 1. When it does, the invariant measure is finite.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum OneDensity {
    /// Periodic tails always satisfy this: the normalizer series converges
    /// geometrically. Carries the exact limit data.
    Holds {
        normalizer: ExactRational,
        one_density_limit: ExactRational,
    },
    /// The tail is unspecified; only the partial normalizer at the end of
    /// the prefix is available.
    UndeterminedPrefixOnly {
        prefix_len: u64,
        partial_normalizer: ExactRational,
    },
}

/// Report on the two conditions a parameter sequence must satisfy to carry
/// a finite atomless invariant measure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MeasureConditionReport {
    pub distinct_spacers: DistinctSpacers,
    pub one_density: OneDensity,
    pub notes: Vec<String>,
}

impl MeasureConditionReport {
    /// True when both conditions are positively established.
    pub fn both_hold(&self) -> bool {
        matches!(self.distinct_spacers, DistinctSpacers::Holds { .. })
            && matches!(self.one_density, OneDensity::Holds { .. })
    }
}

/// Evaluates the two measure conditions exactly on the given
/// representation.
///
/// The distinct-values condition quantifies over arbitrarily late levels,
/// so prefix values cannot decide it: for a periodic tail it holds exactly
/// when the cycle carries at least two distinct spacer values. The density
/// condition always holds for a periodic tail and the report carries the
/// exact normalizer; for an unspecified tail both verdicts are undetermined
/// with prefix evidence attached.
pub fn check_measure_conditions(params: &ParamSpec) -> MeasureConditionReport {
    match params.tail() {
        Tail::Periodic { cycle } => {
            let mut values = cycle
                .iter()
                .flat_map(|level| level.spacers().values().iter().copied());
            let first = values.next().expect("cycle levels have nonempty tuples");
            let distinct_spacers = match values.find(|&v| v != first) {
                Some(other) => DistinctSpacers::Holds {
                    witness: (first, other),
                },
                None => DistinctSpacers::FailsOnTail {
                    constant_value: first,
                },
            };
            let z = match normalizer(params) {
                NormalizerResult::Exact { value } => value,
                NormalizerResult::LowerBound { .. } => {
                    unreachable!("periodic tails have exact normalizers")
                }
            };
            let one_density_limit = ExactRational::one() - z.recip();
            let mut notes = Vec::new();
            if let DistinctSpacers::FailsOnTail { constant_value } = &distinct_spacers {
                notes.push(format!(
                    "every spacer value in the cycle equals {constant_value}; \
                     the invariant measure has atoms"
                ));
            }
            MeasureConditionReport {
                distinct_spacers,
                one_density: OneDensity::Holds {
                    normalizer: z,
                    one_density_limit,
                },
                notes,
            }
        }
        Tail::Unspecified => {
            let prefix_len = params.prefix_len();
            let mut prefix_values = params
                .prefix()
                .iter()
                .flat_map(|level| level.spacers().values().iter().copied());
            let distinct_in_prefix = match prefix_values.next() {
                Some(first) => prefix_values.any(|v| v != first),
                None => false,
            };
            let partial =
                partial_normalizer(params, prefix_len).expect("prefix levels always resolve");
            MeasureConditionReport {
                distinct_spacers: DistinctSpacers::UndeterminedPrefixOnly {
                    prefix_len,
                    distinct_in_prefix,
                },
                one_density: OneDensity::UndeterminedPrefixOnly {
                    prefix_len,
                    partial_normalizer: partial,
                },
                notes: vec!["tail unspecified: verdicts use prefix evidence only".to_string()],
            }
        }
    }
}

/// Outcome of the canonical-parameter necessary condition check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CanonicalCheck {
    pub holds: bool,
    /// Least level whose combined tuple with the next level is constant.
    pub first_violation: Option<u64>,
    pub checked_through: u64,
}

/// Checks that for every level `n <= up_to` the star product of the tuples
/// at levels `n + 1` and `n` is not constant. Canonical parameter
/// sequences satisfy this at every level, so a violation shows the given
/// parameters are not canonical. For a periodic tail,
/// [`ParamSpec::canonical_horizon`] gives an `up_to` that certifies all
/// levels.
pub fn canonical_necessary(params: &ParamSpec, up_to: u64) -> Result<CanonicalCheck, Error> {
    for n in 0..=up_to {
        let lower = params.resolve_level(n)?;
        let upper = params.resolve_level(n + 1)?;
        if star(upper.spacers(), lower.spacers()).is_constant() {
            return Ok(CanonicalCheck {
                holds: false,
                first_violation: Some(n),
                checked_through: up_to,
            });
        }
    }
    Ok(CanonicalCheck {
        holds: true,
        first_violation: None,
        checked_through: up_to,
    })
}
