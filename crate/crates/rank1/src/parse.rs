//! Expected occurrences of one generating word inside a deeper one.
//!
//! Occurrences are computed structurally from the construction recursion,
//! never by substring search: an accidental symbol match is not an expected
//! occurrence, and expectedness is a property of the parse. The verifier
//! then cross-checks the structural parse against the raw symbols.
//!
//! The gap sequence between consecutive expected occurrences consists of
//! single spacer values from the levels in between, so scanning it for a
//! spacer pattern ([`find_spacer_pattern`]) realizes the finite version of
//! the blocking argument: a match forces window compatibility of the two
//! spacer tuples. Gaps that would cross the outer word's boundary depend
//! on higher levels and are deliberately out of view here; the algebraic
//! compatibility check covers that case exactly through its free middle
//! value.

use num::BigUint;
use serde::{Deserialize, Serialize};

use crate::engine::ParamSpec;
use crate::error::Error;
use crate::spacer::SpacerTuple;

/// The expected occurrences of the level-`inner` word inside the
/// level-`outer` word, as sorted start offsets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OccurrenceParse {
    inner_level: u64,
    outer_level: u64,
    inner_len: u64,
    outer_len: u64,
    offsets: Vec<u64>,
}

impl OccurrenceParse {
    pub fn inner_level(&self) -> u64 {
        self.inner_level
    }

    pub fn outer_level(&self) -> u64 {
        self.outer_level
    }

    pub fn inner_len(&self) -> u64 {
        self.inner_len
    }

    pub fn outer_len(&self) -> u64 {
        self.outer_len
    }

    pub fn offsets(&self) -> &[u64] {
        &self.offsets
    }

    pub fn count(&self) -> u64 {
        self.offsets.len() as u64
    }

    /// Runs of 1-symbols between consecutive expected occurrences.
    pub fn gap_sequence(&self) -> GapSequence {
        let gaps = self
            .offsets
            .windows(2)
            .map(|pair| pair[1] - pair[0] - self.inner_len)
            .collect();
        GapSequence { gaps }
    }
}

/// Lengths of the 1-runs separating consecutive expected occurrences.
/// Every gap equals a single spacer value of some level between the inner
/// and outer levels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GapSequence {
    gaps: Vec<u64>,
}

impl GapSequence {
    pub fn gaps(&self) -> &[u64] {
        &self.gaps
    }

    pub fn len(&self) -> usize {
        self.gaps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gaps.is_empty()
    }
}

/// Computes the expected occurrences of the level-`inner` word inside the
/// level-`outer` word by the construction recursion: the parse of a level
/// in itself is the single offset 0, and each level up translates the
/// current parse into every block of the next word.
pub fn expected_offsets(
    params: &ParamSpec,
    inner: u64,
    outer: u64,
    budget: u64,
) -> Result<OccurrenceParse, Error> {
    if inner > outer {
        return Err(Error::LevelOrder { inner, outer });
    }
    let outer_len_big = params.word_length(outer)?;
    if outer_len_big > BigUint::from(budget) {
        return Err(Error::BudgetExceeded {
            level: outer,
            length: outer_len_big.to_string(),
            budget,
        });
    }
    let inner_len = u64::try_from(params.word_length(inner)?).expect("within budget");
    let outer_len = u64::try_from(outer_len_big).expect("within budget");

    let mut offsets = vec![0u64];
    let mut level_len = inner_len;
    for k in inner..outer {
        let spec = params.resolve_level(k)?;
        let spacers = spec.spacers();
        let mut next = Vec::with_capacity(offsets.len() * spec.cut_count() as usize);
        let mut block_start = 0u64;
        for block in 0..spec.cut_count() {
            if block > 0 {
                block_start += level_len + spacers.entry(block as usize);
            }
            next.extend(offsets.iter().map(|&o| block_start + o));
        }
        level_len = level_len * spec.cut_count() + spacers.sum() as u64;
        offsets = next;
    }
    Ok(OccurrenceParse {
        inner_level: inner,
        outer_level: outer,
        inner_len,
        outer_len,
        offsets,
    })
}

/// The gap sequence of the `(inner, outer)` parse.
pub fn gap_sequence(
    params: &ParamSpec,
    inner: u64,
    outer: u64,
    budget: u64,
) -> Result<GapSequence, Error> {
    Ok(expected_offsets(params, inner, outer, budget)?.gap_sequence())
}

/// Finds every position where `pattern` occurs contiguously in the gap
/// sequence of the `(inner, outer)` parse. A match at position `j` means
/// that `pattern.len() + 1` consecutive expected occurrences of the inner
/// word are separated by exactly the pattern's runs of 1-symbols. The
/// pattern must be strictly shorter than the gap sequence.
pub fn find_spacer_pattern(
    params: &ParamSpec,
    inner: u64,
    outer: u64,
    pattern: &SpacerTuple,
    budget: u64,
) -> Result<Vec<u64>, Error> {
    let gaps = gap_sequence(params, inner, outer, budget)?;
    if pattern.len() >= gaps.len() {
        return Err(Error::PatternTooLong {
            pattern_len: pattern.len(),
            gap_count: gaps.len(),
        });
    }
    Ok(gaps
        .gaps()
        .windows(pattern.len())
        .enumerate()
        .filter(|(_, window)| *window == pattern.values())
        .map(|(j, _)| j as u64)
        .collect())
}

/// Result of one verified property, with the first offending position when
/// it fails.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyCheck {
    pub passed: bool,
    pub counterexample: Option<u64>,
}

impl PropertyCheck {
    fn pass() -> Self {
        PropertyCheck {
            passed: true,
            counterexample: None,
        }
    }

    fn fail(at: u64) -> Self {
        PropertyCheck {
            passed: false,
            counterexample: Some(at),
        }
    }
}

/// The defining properties of expected occurrences, re-verified against
/// the materialized symbols of the outer word.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpectednessReport {
    /// Every 0-symbol of the outer word lies in exactly one expected
    /// occurrence of the inner word.
    pub zero_coverage: PropertyCheck,
    /// Every expected occurrence of the inner word lies in exactly one
    /// expected occurrence of each intermediate level's word.
    pub unique_nesting: PropertyCheck,
    /// Distinct expected occurrences never overlap.
    pub non_overlap: PropertyCheck,
    /// The relative offsets of inner occurrences are identical inside every
    /// occurrence of each intermediate level's word.
    pub uniform_relative_pattern: PropertyCheck,
    /// The symbols at each offset spell the inner word, and everything
    /// between consecutive occurrences is a run of 1-symbols.
    pub symbol_agreement: PropertyCheck,
}

impl ExpectednessReport {
    pub fn all_passed(&self) -> bool {
        self.zero_coverage.passed
            && self.unique_nesting.passed
            && self.non_overlap.passed
            && self.uniform_relative_pattern.passed
            && self.symbol_agreement.passed
    }
}

/// Number of occurrences of `inner` intervals containing the interval
/// `[start, start + len)`, given sorted non-overlap candidates with length
/// `container_len`.
fn containment_count(containers: &[u64], container_len: u64, start: u64, len: u64) -> usize {
    // containers with c <= start and c + container_len >= start + len
    let upper = containers.partition_point(|&c| c <= start);
    let lower_bound = (start + len).saturating_sub(container_len);
    let lower = containers.partition_point(|&c| c < lower_bound);
    upper.saturating_sub(lower)
}

/// Verifies the expectedness properties of the `(inner, outer)` parse from
/// scratch: the offsets come from the structural recursion, every check
/// below recomputes the claimed property against those offsets and the raw
/// symbols.
pub fn verify_expectedness_properties(
    params: &ParamSpec,
    inner: u64,
    outer: u64,
    budget: u64,
) -> Result<ExpectednessReport, Error> {
    let parse = expected_offsets(params, inner, outer, budget)?;
    let outer_word = params.build_word(outer, budget)?;
    let inner_word = params.build_word(inner, budget)?;
    let inner_len = parse.inner_len();
    let offsets = parse.offsets();

    // coverage counts per position, then: every 0-symbol covered exactly once
    let mut coverage = vec![0u32; outer_word.len()];
    for &o in offsets {
        for c in coverage
            .iter_mut()
            .skip(o as usize)
            .take(inner_len as usize)
        {
            *c += 1;
        }
    }
    let mut zero_coverage = PropertyCheck::pass();
    for (pos, &sym) in outer_word.symbols().iter().enumerate() {
        if sym == 0 && coverage[pos] != 1 {
            zero_coverage = PropertyCheck::fail(pos as u64);
            break;
        }
    }

    let mut non_overlap = PropertyCheck::pass();
    for pair in offsets.windows(2) {
        if pair[1] - pair[0] < inner_len {
            non_overlap = PropertyCheck::fail(pair[1]);
            break;
        }
    }

    let mut unique_nesting = PropertyCheck::pass();
    let mut uniform_relative_pattern = PropertyCheck::pass();
    'levels: for mid in inner + 1..=outer {
        let mid_parse = expected_offsets(params, mid, outer, budget)?;
        let mid_len = mid_parse.inner_len();
        let mid_offsets = mid_parse.offsets();
        // each inner occurrence sits in exactly one mid-level occurrence
        for &o in offsets {
            if containment_count(mid_offsets, mid_len, o, inner_len) != 1 {
                unique_nesting = PropertyCheck::fail(o);
                break 'levels;
            }
        }
        // the relative pattern of inner occurrences is the same in every
        // block; blocks and offsets are both sorted, so one sweep suffices
        let mut reference: Option<Vec<u64>> = None;
        let mut cursor = 0usize;
        for &block in mid_offsets {
            while cursor < offsets.len() && offsets[cursor] < block {
                cursor += 1;
            }
            let mut pattern = Vec::new();
            while cursor < offsets.len() && offsets[cursor] + inner_len <= block + mid_len {
                pattern.push(offsets[cursor] - block);
                cursor += 1;
            }
            match &reference {
                None => reference = Some(pattern),
                Some(expected) if *expected != pattern => {
                    uniform_relative_pattern = PropertyCheck::fail(block);
                    break 'levels;
                }
                Some(_) => {}
            }
        }
    }

    // symbols at each offset spell the inner word; only 1-symbols between
    let mut symbol_agreement = PropertyCheck::pass();
    'symbols: {
        for &o in offsets {
            let slice = &outer_word.symbols()[o as usize..(o + inner_len) as usize];
            if slice != inner_word.symbols() {
                symbol_agreement = PropertyCheck::fail(o);
                break 'symbols;
            }
        }
        for pair in offsets.windows(2) {
            let between = &outer_word.symbols()[(pair[0] + inner_len) as usize..pair[1] as usize];
            if between.iter().any(|&s| s != 1) {
                symbol_agreement = PropertyCheck::fail(pair[0] + inner_len);
                break 'symbols;
            }
        }
        // the outer word begins and ends with the inner word
        if offsets.first() != Some(&0)
            || offsets.last().map(|&o| o + inner_len) != Some(parse.outer_len())
        {
            symbol_agreement = PropertyCheck::fail(0);
        }
    }

    Ok(ExpectednessReport {
        zero_coverage,
        unique_nesting,
        non_overlap,
        uniform_relative_pattern,
        symbol_agreement,
    })
}
