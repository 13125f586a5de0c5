//! Helpers shared by the integration suites.

#![allow(dead_code)] // each test target compiles this module separately

use rand::Rng;
use rank1::engine::{LevelSpec, ParamSpec, Tail};
use rank1::spacer::SpacerTuple;

pub fn t(values: &[u64]) -> SpacerTuple {
    SpacerTuple::new(values.to_vec()).unwrap()
}

pub fn lvl(r: u64, s: &[u64]) -> LevelSpec {
    LevelSpec::new(r, t(s)).unwrap()
}

/// A system repeating one level forever.
pub fn all_levels(spec: LevelSpec) -> ParamSpec {
    ParamSpec::periodic(vec![spec]).unwrap()
}

/// The first `depth` levels of the classical two-cut construction whose
/// level-`n` spacer is `n`. Representable only as a finite prefix.
pub fn chacon2(depth: u64) -> ParamSpec {
    ParamSpec::prefix_only((0..depth).map(|n| lvl(2, &[n])).collect())
}

/// Independent compatibility oracle: materialize the doubled tuple for
/// every candidate middle value and scan all windows by brute force. A
/// covered middle must equal an entry of `s`, so candidates up to
/// `max(s) + 1` are exhaustive.
pub fn brute_compatible(s: &SpacerTuple, s_prime: &SpacerTuple) -> bool {
    let r = s.len() + 1;
    (0..=s.max_value() + 1).any(|c| {
        let mut doubled = Vec::with_capacity(2 * r - 1);
        doubled.extend_from_slice(s_prime.values());
        doubled.push(c);
        doubled.extend_from_slice(s_prime.values());
        (0..=r).any(|k| &doubled[k..k + r - 1] == s.values())
    })
}

pub fn random_tuple(rng: &mut impl Rng, max_r: u64, max_value: u64) -> SpacerTuple {
    let r = rng.random_range(2..=max_r);
    SpacerTuple::new(
        (0..r - 1)
            .map(|_| rng.random_range(0..=max_value))
            .collect(),
    )
    .unwrap()
}

/// A random parameter sequence with small levels: usually periodic, with a
/// short explicit prefix; occasionally prefix-only.
pub fn random_params(rng: &mut impl Rng) -> ParamSpec {
    let prefix_len = rng.random_range(0..3u32);
    let mut prefix: Vec<LevelSpec> = (0..prefix_len)
        .map(|_| LevelSpec::from_spacers(random_tuple(rng, 4, 3)))
        .collect();
    if rng.random_bool(0.7) {
        let cycle_len = rng.random_range(1..=3u32);
        let cycle = (0..cycle_len)
            .map(|_| LevelSpec::from_spacers(random_tuple(rng, 4, 3)))
            .collect();
        ParamSpec::new(prefix, Tail::Periodic { cycle }).unwrap()
    } else {
        while prefix.len() < 3 {
            prefix.push(LevelSpec::from_spacers(random_tuple(rng, 4, 3)));
        }
        ParamSpec::prefix_only(prefix)
    }
}

/// All levels of `params` whose words stay within `max_len` symbols.
pub fn levels_within(params: &ParamSpec, max_len: u64) -> Vec<u64> {
    let mut levels = Vec::new();
    let mut level = 0u64;
    loop {
        match params.word_length(level) {
            Ok(len) if len <= max_len.into() => levels.push(level),
            _ => break,
        }
        level += 1;
    }
    levels
}
