use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::spacer::{star, SpacerTuple};

/// One level of a construction: a cut count `r >= 2` together with the
/// spacer tuple of length `r - 1` inserted between the cuts.
///
/// The cut count is determined by the tuple, so only the tuple is stored;
/// the wire format spells both out and is validated on input.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "LevelSpecWire", into = "LevelSpecWire")]
pub struct LevelSpec {
    spacers: SpacerTuple,
}

impl LevelSpec {
    /// Builds a level, checking that `cut_count` matches the tuple length.
    pub fn new(cut_count: u64, spacers: SpacerTuple) -> Result<Self, Error> {
        if spacers.cut_count() != cut_count {
            return Err(Error::LevelSpecMismatch {
                cut_count,
                spacer_len: spacers.len(),
            });
        }
        Ok(LevelSpec { spacers })
    }

    /// Builds a level directly from its spacer tuple.
    pub fn from_spacers(spacers: SpacerTuple) -> Self {
        LevelSpec { spacers }
    }

    pub fn cut_count(&self) -> u64 {
        self.spacers.cut_count()
    }

    pub fn spacers(&self) -> &SpacerTuple {
        &self.spacers
    }

    /// The level with the spacer tuple reversed. Presenting every level of
    /// a system this way presents the inverse system.
    pub fn reversed(&self) -> LevelSpec {
        LevelSpec {
            spacers: self.spacers.reverse(),
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct LevelSpecWire {
    r: u64,
    s: Vec<u64>,
}

impl TryFrom<LevelSpecWire> for LevelSpec {
    type Error = Error;

    fn try_from(wire: LevelSpecWire) -> Result<Self, Error> {
        if wire.r < 2 {
            return Err(Error::InvalidCutCount(wire.r));
        }
        LevelSpec::new(wire.r, SpacerTuple::new(wire.s)?)
    }
}

impl From<LevelSpec> for LevelSpecWire {
    fn from(spec: LevelSpec) -> LevelSpecWire {
        LevelSpecWire {
            r: spec.cut_count(),
            s: spec.spacers.values().to_vec(),
        }
    }
}

/// How the levels beyond the explicit prefix are determined.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum Tail {
    /// Level `prefix_len + i` resolves to `cycle[i mod cycle.len()]`.
    Periodic { cycle: Vec<LevelSpec> },
    /// Nothing is known beyond the prefix; level resolution fails there.
    Unspecified,
}

/// A finitely represented cutting and spacer parameter sequence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ParamSpecWire", into = "ParamSpecWire")]
pub struct ParamSpec {
    prefix: Vec<LevelSpec>,
    tail: Tail,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ParamSpecWire {
    prefix: Vec<LevelSpec>,
    tail: Tail,
}

impl TryFrom<ParamSpecWire> for ParamSpec {
    type Error = Error;

    fn try_from(wire: ParamSpecWire) -> Result<Self, Error> {
        ParamSpec::new(wire.prefix, wire.tail)
    }
}

impl From<ParamSpec> for ParamSpecWire {
    fn from(params: ParamSpec) -> ParamSpecWire {
        ParamSpecWire {
            prefix: params.prefix,
            tail: params.tail,
        }
    }
}

impl ParamSpec {
    /// Builds a parameter sequence. A periodic tail must have a nonempty
    /// cycle.
    pub fn new(prefix: Vec<LevelSpec>, tail: Tail) -> Result<Self, Error> {
        if let Tail::Periodic { cycle } = &tail {
            if cycle.is_empty() {
                return Err(Error::InvalidParams(
                    "a periodic tail must have a nonempty cycle".into(),
                ));
            }
        }
        Ok(ParamSpec { prefix, tail })
    }

    /// Parameters that repeat a single cycle from level 0 on.
    pub fn periodic(cycle: Vec<LevelSpec>) -> Result<Self, Error> {
        ParamSpec::new(Vec::new(), Tail::Periodic { cycle })
    }

    /// Parameters known only on an explicit prefix.
    pub fn prefix_only(prefix: Vec<LevelSpec>) -> Self {
        ParamSpec {
            prefix,
            tail: Tail::Unspecified,
        }
    }

    pub fn prefix(&self) -> &[LevelSpec] {
        &self.prefix
    }

    pub fn tail(&self) -> &Tail {
        &self.tail
    }

    pub fn prefix_len(&self) -> u64 {
        self.prefix.len() as u64
    }

    pub fn is_periodic(&self) -> bool {
        matches!(self.tail, Tail::Periodic { .. })
    }

    pub fn cycle(&self) -> Option<&[LevelSpec]> {
        match &self.tail {
            Tail::Periodic { cycle } => Some(cycle),
            Tail::Unspecified => None,
        }
    }

    /// Every level this representation pins down: the prefix, then one copy
    /// of the cycle if the tail is periodic.
    pub fn represented_levels(&self) -> impl Iterator<Item = &LevelSpec> {
        self.prefix.iter().chain(self.cycle().unwrap_or(&[]).iter())
    }

    /// The level specification at `level`, resolving periodically past the
    /// prefix.
    pub fn resolve_level(&self, level: u64) -> Result<&LevelSpec, Error> {
        if let Some(spec) = usize::try_from(level).ok().and_then(|i| self.prefix.get(i)) {
            return Ok(spec);
        }
        match &self.tail {
            Tail::Periodic { cycle } => {
                let idx = ((level - self.prefix_len()) % cycle.len() as u64) as usize;
                Ok(&cycle[idx])
            }
            Tail::Unspecified => Err(Error::BeyondPrefix {
                level,
                prefix_len: self.prefix_len(),
            }),
        }
    }

    /// Largest cut count among the represented levels.
    pub fn cut_bound(&self) -> u64 {
        self.represented_levels()
            .map(LevelSpec::cut_count)
            .max()
            .unwrap_or(2)
    }

    /// Largest spacer value among the represented levels.
    pub fn spacer_bound(&self) -> u64 {
        self.represented_levels()
            .map(|l| l.spacers().max_value())
            .max()
            .unwrap_or(0)
    }

    /// Largest per-level spacer sum among the represented levels.
    pub fn level_sum_bound(&self) -> u128 {
        self.represented_levels()
            .map(|l| l.spacers().sum())
            .max()
            .unwrap_or(0)
    }

    /// Moves `count` leading cycle levels into the explicit prefix,
    /// rotating the cycle so that every level still resolves to the same
    /// specification.
    pub fn unroll(&self, count: u64) -> Result<ParamSpec, Error> {
        if count == 0 {
            return Ok(self.clone());
        }
        let Tail::Periodic { cycle } = &self.tail else {
            return Err(Error::UnspecifiedTail);
        };
        let len = cycle.len() as u64;
        let mut prefix = self.prefix.clone();
        for i in 0..count {
            prefix.push(cycle[(i % len) as usize].clone());
        }
        let shift = (count % len) as usize;
        let mut rotated = cycle[shift..].to_vec();
        rotated.extend_from_slice(&cycle[..shift]);
        ParamSpec::new(prefix, Tail::Periodic { cycle: rotated })
    }

    /// Deletes generating word `at + 1`, fusing levels `at` and `at + 1`
    /// into one: the fused cut count is the product and the fused spacer
    /// tuple is the star product. Words at all surviving levels are
    /// unchanged. `at` must lie in the explicit prefix; if `at + 1` is the
    /// first tail level of a periodic tail, the cycle is rotated to absorb
    /// it.
    pub fn collapse_level(&self, at: u64) -> Result<ParamSpec, Error> {
        let prefix_len = self.prefix_len();
        if at >= prefix_len {
            return match &self.tail {
                Tail::Periodic { .. } => Err(Error::TailCollapse { level: at }),
                Tail::Unspecified => Err(Error::BeyondPrefix {
                    level: at,
                    prefix_len,
                }),
            };
        }
        let lower = &self.prefix[at as usize];
        let upper = self.resolve_level(at + 1)?.clone();
        let fused = LevelSpec::from_spacers(star(upper.spacers(), lower.spacers()));

        let mut prefix: Vec<LevelSpec> = self.prefix[..at as usize].to_vec();
        prefix.push(fused);
        if at + 1 < prefix_len {
            prefix.extend_from_slice(&self.prefix[(at + 2) as usize..]);
            ParamSpec::new(prefix, self.tail.clone())
        } else {
            // `at + 1` was the first tail level: rotate the cycle left once
            let Tail::Periodic { cycle } = &self.tail else {
                unreachable!("resolve_level(at + 1) succeeded, so the tail is periodic");
            };
            let mut rotated = cycle[1..].to_vec();
            rotated.push(cycle[0].clone());
            ParamSpec::new(prefix, Tail::Periodic { cycle: rotated })
        }
    }

    /// How far [`canonical_necessary`](super::canonical_necessary) has to
    /// look to certify every level: one pass over the prefix plus one full
    /// cycle period. For an unspecified tail this is the last level whose
    /// successor is still resolvable, or `None` when no pair is.
    pub fn canonical_horizon(&self) -> Option<u64> {
        match &self.tail {
            Tail::Periodic { cycle } => Some(self.prefix_len() + cycle.len() as u64 - 1),
            Tail::Unspecified => self.prefix_len().checked_sub(2),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lvl(r: u64, s: &[u64]) -> LevelSpec {
        LevelSpec::new(r, SpacerTuple::new(s.to_vec()).unwrap()).unwrap()
    }

    #[test]
    fn resolve_prefix_then_cycle() {
        let params = ParamSpec::new(
            vec![lvl(2, &[0])],
            Tail::Periodic {
                cycle: vec![lvl(3, &[0, 1])],
            },
        )
        .unwrap();
        assert_eq!(params.resolve_level(0).unwrap(), &lvl(2, &[0]));
        assert_eq!(params.resolve_level(5).unwrap(), &lvl(3, &[0, 1]));
    }

    #[test]
    fn resolve_beyond_unspecified_prefix_fails() {
        let params = ParamSpec::prefix_only(vec![lvl(2, &[0])]);
        assert_eq!(
            params.resolve_level(1),
            Err(Error::BeyondPrefix {
                level: 1,
                prefix_len: 1
            })
        );
    }

    #[test]
    fn collapse_fuses_adjacent_prefix_levels() {
        let params = ParamSpec::prefix_only(vec![lvl(2, &[1]), lvl(3, &[0, 1])]);
        let collapsed = params.collapse_level(0).unwrap();
        assert_eq!(collapsed.prefix(), &[lvl(6, &[1, 0, 1, 1, 1])]);

        let params = ParamSpec::prefix_only(vec![lvl(2, &[0]), lvl(2, &[0])]);
        let collapsed = params.collapse_level(0).unwrap();
        assert_eq!(collapsed.prefix(), &[lvl(4, &[0, 0, 0])]);
    }

    #[test]
    fn collapse_at_prefix_end_rotates_the_cycle() {
        let params = ParamSpec::new(
            vec![lvl(2, &[1])],
            Tail::Periodic {
                cycle: vec![lvl(3, &[0, 1]), lvl(2, &[2])],
            },
        )
        .unwrap();
        let collapsed = params.collapse_level(0).unwrap();
        assert_eq!(collapsed.prefix(), &[lvl(6, &[1, 0, 1, 1, 1])]);
        assert_eq!(collapsed.cycle().unwrap(), &[lvl(2, &[2]), lvl(3, &[0, 1])]);
        // every level of the collapsed sequence matches the original one up
        for n in 1..8 {
            assert_eq!(
                collapsed.resolve_level(n).unwrap(),
                params.resolve_level(n + 1).unwrap()
            );
        }
    }

    #[test]
    fn collapse_inside_tail_is_rejected() {
        let params = ParamSpec::periodic(vec![lvl(3, &[0, 1])]).unwrap();
        assert_eq!(
            params.collapse_level(0),
            Err(Error::TailCollapse { level: 0 })
        );
        let unrolled = params.unroll(2).unwrap();
        assert!(unrolled.collapse_level(1).is_ok());
    }

    #[test]
    fn unroll_preserves_resolution() {
        let params = ParamSpec::new(
            vec![lvl(2, &[0])],
            Tail::Periodic {
                cycle: vec![lvl(3, &[0, 1]), lvl(2, &[2]), lvl(4, &[1, 2, 3])],
            },
        )
        .unwrap();
        for count in 0..7 {
            let unrolled = params.unroll(count).unwrap();
            assert_eq!(unrolled.prefix_len(), 1 + count);
            for level in 0..12 {
                assert_eq!(
                    unrolled.resolve_level(level).unwrap(),
                    params.resolve_level(level).unwrap(),
                    "count={count} level={level}"
                );
            }
        }
    }

    #[test]
    fn unroll_requires_a_periodic_tail() {
        let params = ParamSpec::prefix_only(vec![lvl(2, &[0])]);
        assert_eq!(params.unroll(1), Err(Error::UnspecifiedTail));
        assert!(params.unroll(0).is_ok());
    }

    #[test]
    fn json_schema_round_trip() {
        let text = r#"{"prefix":[{"r":2,"s":[0]}],"tail":{"type":"periodic","cycle":[{"r":3,"s":[0,1]}]}}"#;
        let params: ParamSpec = serde_json::from_str(text).unwrap();
        assert_eq!(params.prefix(), &[lvl(2, &[0])]);
        assert_eq!(params.cycle().unwrap(), &[lvl(3, &[0, 1])]);
        assert_eq!(serde_json::to_string(&params).unwrap(), text);

        let unspecified = r#"{"prefix":[],"tail":{"type":"unspecified"}}"#;
        let params: ParamSpec = serde_json::from_str(unspecified).unwrap();
        assert!(!params.is_periodic());
        assert_eq!(serde_json::to_string(&params).unwrap(), unspecified);
    }

    #[test]
    fn json_schema_is_validated() {
        // cut count must match the tuple length
        assert!(serde_json::from_str::<ParamSpec>(
            r#"{"prefix":[{"r":3,"s":[0]}],"tail":{"type":"unspecified"}}"#
        )
        .is_err());
        // cut count at least 2
        assert!(serde_json::from_str::<ParamSpec>(
            r#"{"prefix":[{"r":1,"s":[]}],"tail":{"type":"unspecified"}}"#
        )
        .is_err());
        // periodic cycles are nonempty
        assert!(serde_json::from_str::<ParamSpec>(
            r#"{"prefix":[],"tail":{"type":"periodic","cycle":[]}}"#
        )
        .is_err());
        // unknown fields are rejected
        assert!(serde_json::from_str::<ParamSpec>(
            r#"{"prefix":[],"tail":{"type":"unspecified"},"extra":1}"#
        )
        .is_err());
    }

    #[test]
    fn bounds_cover_prefix_and_cycle() {
        let params = ParamSpec::new(
            vec![lvl(2, &[7])],
            Tail::Periodic {
                cycle: vec![lvl(5, &[0, 1, 2, 3])],
            },
        )
        .unwrap();
        assert_eq!(params.cut_bound(), 5);
        assert_eq!(params.spacer_bound(), 7);
        assert_eq!(params.level_sum_bound(), 7);
    }

    #[test]
    fn canonical_horizon_covers_prefix_plus_one_period() {
        let periodic = ParamSpec::new(
            vec![lvl(2, &[0]), lvl(2, &[1])],
            Tail::Periodic {
                cycle: vec![lvl(3, &[0, 1]), lvl(2, &[2])],
            },
        )
        .unwrap();
        assert_eq!(periodic.canonical_horizon(), Some(3));

        let prefix_only = ParamSpec::prefix_only(vec![lvl(2, &[0]), lvl(2, &[1])]);
        assert_eq!(prefix_only.canonical_horizon(), Some(0));
        assert_eq!(
            ParamSpec::prefix_only(vec![lvl(2, &[0])]).canonical_horizon(),
            None
        );
    }
}
