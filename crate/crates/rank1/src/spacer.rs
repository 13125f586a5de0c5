//! Spacer-tuple algebra.
//!
//! A spacer tuple lists, for one level of a cutting-and-stacking
//! construction, how many 1-symbols separate consecutive copies of the
//! previous generating word. A tuple with `k` entries belongs to a level
//! with `k + 1` cuts. This module provides the two combinatorial tools the
//! rest of the crate is built on:
//!
//! * [`star`], the product describing the spacer tuple of a collapsed level
//!   (delete one word of the generating sequence, fuse two adjacent levels);
//! * [`compatibility`], the window relation deciding whether one tuple can
//!   appear as a run of gaps inside a doubled copy of another. Two tuples
//!   that never fit are *incompatible*, written `perp` here.
//!
//! Incompatibility of a combined tuple with its own reverse is what the
//! decision procedure in [`crate::inverse`] ultimately certifies, so
//! [`verify_reversal_incompatibility`] recomputes it from scratch instead of
//! trusting any general fact.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// An ordered tuple of spacer counts, 1-indexed in the mathematics and
/// stored 0-indexed. Entry `i` is the number of 1-symbols inserted after
/// the `i`-th copy of the previous word; the implied cut count is
/// `len() + 1`.
///
/// Invariants: at least one entry; entries are arbitrary naturals
/// (zero is allowed).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct SpacerTuple {
    values: Vec<u64>,
}

impl SpacerTuple {
    /// Builds a tuple from its entries. Fails on an empty list.
    pub fn new(values: Vec<u64>) -> Result<Self, Error> {
        if values.is_empty() {
            return Err(Error::EmptyTuple);
        }
        Ok(SpacerTuple { values })
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false // the length-one lower bound is a type invariant
    }

    /// The cut count of the level this tuple describes.
    pub fn cut_count(&self) -> u64 {
        self.values.len() as u64 + 1
    }

    /// 1-indexed entry access: `entry(i)` is defined for `1 <= i <= len()`.
    pub fn entry(&self, i: usize) -> u64 {
        self.values[i - 1]
    }

    /// Sum of all entries, widened so it cannot overflow.
    pub fn sum(&self) -> u128 {
        self.values.iter().map(|&v| u128::from(v)).sum()
    }

    pub fn max_value(&self) -> u64 {
        self.values.iter().copied().max().unwrap_or(0)
    }

    /// The tuple read backwards: entry `i` of the result is entry
    /// `cut_count() - i` of `self`.
    pub fn reverse(&self) -> SpacerTuple {
        let mut values = self.values.clone();
        values.reverse();
        SpacerTuple { values }
    }

    pub fn is_palindrome(&self) -> bool {
        self.values.iter().eq(self.values.iter().rev())
    }

    pub fn is_constant(&self) -> bool {
        self.values.iter().all(|&v| v == self.values[0])
    }
}

impl TryFrom<Vec<u64>> for SpacerTuple {
    type Error = Error;

    fn try_from(values: Vec<u64>) -> Result<Self, Error> {
        SpacerTuple::new(values)
    }
}

impl From<SpacerTuple> for Vec<u64> {
    fn from(tuple: SpacerTuple) -> Vec<u64> {
        tuple.values
    }
}

impl fmt::Display for SpacerTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.values {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for SpacerTuple {
    type Err = String;

    /// Parses the comma-separated form used on the command line, e.g. `0,1,0`.
    fn from_str(s: &str) -> Result<Self, String> {
        let values = s
            .split(',')
            .map(|part| {
                part.trim()
                    .parse::<u64>()
                    .map_err(|e| format!("`{part}`: {e}"))
            })
            .collect::<Result<Vec<_>, _>>()?;
        SpacerTuple::new(values).map_err(|e| e.to_string())
    }
}

/// Constraint on the free middle value of the doubled tuple in a
/// compatibility witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum MiddleConstraint {
    /// The matching window does not cover the middle position, so any value
    /// works there.
    Free,
    /// The window covers the middle position, which forces this exact value.
    Forced { value: u64 },
}

/// Outcome of the window-compatibility check between two equal-length
/// tuples.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum CompatibilityResult {
    /// `s` appears as the window of `c * s_prime` starting after position
    /// `offset`, with `c` constrained as recorded.
    Compatible {
        offset: u64,
        middle: MiddleConstraint,
    },
    /// No offset and no middle value make `s` a window of `c * s_prime`.
    Incompatible,
}

impl CompatibilityResult {
    pub fn is_compatible(&self) -> bool {
        matches!(self, CompatibilityResult::Compatible { .. })
    }

    /// Replays the witness against the two tuples. For a `Compatible`
    /// verdict this re-runs the window comparison at the recorded offset
    /// (requiring the forced middle value where the window covers the
    /// middle); for `Incompatible` it re-runs the full scan.
    pub fn verify(&self, s: &SpacerTuple, s_prime: &SpacerTuple) -> Result<bool, Error> {
        if s.len() != s_prime.len() {
            return Err(Error::LengthMismatch {
                left: s.len(),
                right: s_prime.len(),
            });
        }
        match *self {
            CompatibilityResult::Compatible { offset, middle } => {
                let r = s.len() + 1;
                let k = offset as usize;
                if k > r {
                    return Ok(false);
                }
                for l in 1..r {
                    let pos = k + l;
                    let expected = if pos.is_multiple_of(r) {
                        match middle {
                            MiddleConstraint::Forced { value } => value,
                            MiddleConstraint::Free => return Ok(false),
                        }
                    } else {
                        s_prime.entry(pos % r)
                    };
                    if s.entry(l) != expected {
                        return Ok(false);
                    }
                }
                if matches!(middle, MiddleConstraint::Forced { .. }) && !(1..r).contains(&k) {
                    // a forced value was claimed although the window misses the middle
                    return Ok(false);
                }
                Ok(true)
            }
            CompatibilityResult::Incompatible => {
                Ok(compatibility(s, s_prime)? == CompatibilityResult::Incompatible)
            }
        }
    }
}

/// The level-collapsing product of two spacer tuples.
///
/// If `s1` has cut count `r1` and `s2` has cut count `r2`, the result has
/// cut count `r2 * r1`: positions that are nonzero mod `r1` carry the
/// corresponding `s1` entry, positions divisible by `r1` carry the `s2`
/// entry at the quotient. Deleting word `n0 + 1` from a generating
/// sequence turns levels `(r_{n0}, s_{n0})` and `(r_{n0+1}, s_{n0+1})`
/// into the single level `(r_{n0+1} * r_{n0}, star(s_{n0+1}, s_{n0}))`.
pub fn star(s2: &SpacerTuple, s1: &SpacerTuple) -> SpacerTuple {
    let r1 = s1.len() + 1;
    let r2 = s2.len() + 1;
    let total = r1
        .checked_mul(r2)
        .and_then(|p| p.checked_sub(1))
        .expect("combined tuple length overflows usize");
    let mut values = Vec::with_capacity(total);
    for i in 1..=total {
        if i.is_multiple_of(r1) {
            values.push(s2.entry(i / r1));
        } else {
            values.push(s1.entry(i % r1));
        }
    }
    SpacerTuple { values }
}

/// Decides whether `s` is compatible with `s_prime`.
///
/// Both tuples must have the same length (cut count `r`). `s` is compatible
/// with `s_prime` when for some offset `0 <= k <= r` and some natural `c`,
/// the window of `c * s_prime` at offset `k` equals `s` entrywise. The
/// doubled tuple `c * s_prime` is `s_prime`, then `c`, then `s_prime`
/// again, so the middle value `c` is forced exactly when the window covers
/// the middle position; otherwise it is free. Offsets are scanned in
/// ascending order and the first match is returned, which in particular
/// reports offset 0 with a free middle when `s == s_prime`.
pub fn compatibility(s: &SpacerTuple, s_prime: &SpacerTuple) -> Result<CompatibilityResult, Error> {
    if s.len() != s_prime.len() {
        return Err(Error::LengthMismatch {
            left: s.len(),
            right: s_prime.len(),
        });
    }
    let r = s.len() + 1;
    for k in 0..=r {
        let mut fits = true;
        for l in 1..r {
            let pos = k + l;
            if pos.is_multiple_of(r) {
                continue; // middle position: free or forced, never a mismatch
            }
            if s.entry(l) != s_prime.entry(pos % r) {
                fits = false;
                break;
            }
        }
        if fits {
            let middle = if (1..r).contains(&k) {
                MiddleConstraint::Forced {
                    value: s.entry(r - k),
                }
            } else {
                MiddleConstraint::Free
            };
            return Ok(CompatibilityResult::Compatible {
                offset: k as u64,
                middle,
            });
        }
    }
    Ok(CompatibilityResult::Incompatible)
}

/// True when `s` and `s_prime` are incompatible.
pub fn perp(s: &SpacerTuple, s_prime: &SpacerTuple) -> Result<bool, Error> {
    Ok(compatibility(s, s_prime)? == CompatibilityResult::Incompatible)
}

/// Checks that the combined tuple `star(s2, s1)` is incompatible with its
/// own reverse.
///
/// This holds whenever `s1` is not a palindrome and `s2` is not constant;
/// inputs violating those premises are rejected rather than checked,
/// because the conclusion is only claimed under them. The result is
/// recomputed by the full window scan, never assumed.
pub fn verify_reversal_incompatibility(s1: &SpacerTuple, s2: &SpacerTuple) -> Result<bool, Error> {
    if s1.is_palindrome() {
        return Err(Error::PremiseViolation(format!(
            "s1 = ({s1}) is palindromic"
        )));
    }
    if s2.is_constant() {
        return Err(Error::PremiseViolation(format!("s2 = ({s2}) is constant")));
    }
    let combined = star(s2, s1);
    perp(&combined, &combined.reverse())
}

/// Lexicographic enumeration of all spacer tuples with a given cut count
/// and entries bounded by `max_value`.
#[derive(Debug, Clone)]
pub struct TupleRange {
    next: Option<Vec<u64>>,
    max_value: u64,
}

impl Iterator for TupleRange {
    type Item = SpacerTuple;

    fn next(&mut self) -> Option<SpacerTuple> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let mut i = succ.len();
        loop {
            if i == 0 {
                break; // current was the lexicographic maximum
            }
            i -= 1;
            if succ[i] < self.max_value {
                succ[i] += 1;
                for later in succ.iter_mut().skip(i + 1) {
                    *later = 0;
                }
                self.next = Some(succ);
                break;
            }
        }
        Some(SpacerTuple { values: current })
    }
}

/// Yields every tuple of length `r - 1` with entries in `0..=max_value`,
/// in lexicographic order, each exactly once. `r` must be at least 2.
pub fn enumerate_tuples(r: u64, max_value: u64) -> Result<TupleRange, Error> {
    if r < 2 {
        return Err(Error::InvalidCutCount(r));
    }
    Ok(TupleRange {
        next: Some(vec![0; (r - 1) as usize]),
        max_value,
    })
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;

    fn t(values: &[u64]) -> SpacerTuple {
        SpacerTuple::new(values.to_vec()).unwrap()
    }

    /// Independent oracle: materialize `c * s_prime` for every candidate
    /// middle value and scan all windows. A covered middle must equal one
    /// of the entries of `s`, so candidates up to `max(s) + 1` are
    /// exhaustive.
    fn brute_compatible(s: &SpacerTuple, s_prime: &SpacerTuple) -> bool {
        let r = s.len() + 1;
        (0..=s.max_value() + 1).any(|c| {
            let mut doubled = Vec::with_capacity(2 * r - 1);
            doubled.extend_from_slice(s_prime.values());
            doubled.push(c);
            doubled.extend_from_slice(s_prime.values());
            (0..=r).any(|k| &doubled[k..k + r - 1] == s.values())
        })
    }

    #[test]
    fn star_matches_worked_example() {
        assert_eq!(
            star(&t(&[5, 6]), &t(&[0, 1, 0])),
            t(&[0, 1, 0, 5, 0, 1, 0, 6, 0, 1, 0])
        );
    }

    #[test]
    fn star_of_singletons() {
        for a in 0..4 {
            for c in 0..4 {
                assert_eq!(star(&t(&[c]), &t(&[a])), t(&[a, c, a]));
            }
        }
    }

    #[test]
    fn star_hand_expanded_three_by_three() {
        assert_eq!(star(&t(&[0, 1]), &t(&[0, 1])), t(&[0, 1, 0, 0, 1, 1, 0, 1]));
    }

    #[test]
    fn star_of_constant_singletons_is_constant() {
        let combined = star(&t(&[1]), &t(&[1]));
        assert_eq!(combined, t(&[1, 1, 1]));
        assert!(combined.is_constant());
    }

    #[test]
    fn reverse_examples() {
        assert_eq!(t(&[0, 1]).reverse(), t(&[1, 0]));
        assert_eq!(t(&[0, 1, 0]).reverse(), t(&[0, 1, 0]));
        assert_eq!(
            t(&[0, 1, 0, 0, 1, 1, 0, 1]).reverse(),
            t(&[1, 0, 1, 1, 0, 0, 1, 0])
        );
    }

    #[test]
    fn palindrome_examples() {
        assert!(t(&[0, 1, 0]).is_palindrome());
        assert!(!t(&[0, 1]).is_palindrome());
        for n in 0..5 {
            assert!(t(&[n]).is_palindrome());
        }
    }

    #[test]
    fn constant_examples() {
        assert!(t(&[1, 1, 1]).is_constant());
        assert!(!t(&[0, 1]).is_constant());
    }

    #[test]
    fn compatibility_worked_examples() {
        assert_eq!(
            compatibility(&t(&[0, 1, 0]), &t(&[0, 0, 1])).unwrap(),
            CompatibilityResult::Compatible {
                offset: 1,
                middle: MiddleConstraint::Forced { value: 0 },
            }
        );
        assert_eq!(
            compatibility(&t(&[0, 1, 0]), &t(&[0, 1, 2])).unwrap(),
            CompatibilityResult::Incompatible
        );
        // single levels can be compatible with their own reverses
        assert_eq!(
            compatibility(&t(&[0, 1]), &t(&[1, 0])).unwrap(),
            CompatibilityResult::Compatible {
                offset: 1,
                middle: MiddleConstraint::Forced { value: 1 },
            }
        );
    }

    #[test]
    fn singletons_are_never_incompatible() {
        for a in 0..4 {
            for b in 0..4 {
                let result = compatibility(&t(&[a]), &t(&[b])).unwrap();
                assert!(result.is_compatible(), "({a}) vs ({b})");
                if a != b {
                    assert_eq!(
                        result,
                        CompatibilityResult::Compatible {
                            offset: 1,
                            middle: MiddleConstraint::Forced { value: a },
                        }
                    );
                }
            }
        }
    }

    #[test]
    fn compatibility_rejects_length_mismatch() {
        assert_eq!(
            compatibility(&t(&[0, 1]), &t(&[0, 1, 2])),
            Err(Error::LengthMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn compatibility_agrees_with_brute_force_exhaustively() {
        // all pairs of equal-length tuples with cut counts 2..=4, entries <= 2
        for r in 2..=4u64 {
            for s in enumerate_tuples(r, 2).unwrap() {
                for s_prime in enumerate_tuples(r, 2).unwrap() {
                    let got = compatibility(&s, &s_prime).unwrap();
                    assert_eq!(
                        got.is_compatible(),
                        brute_compatible(&s, &s_prime),
                        "({s}) vs ({s_prime})"
                    );
                    assert!(got.verify(&s, &s_prime).unwrap(), "({s}) vs ({s_prime})");
                }
            }
        }
    }

    #[test]
    fn reversal_incompatibility_derived_example() {
        assert_eq!(
            verify_reversal_incompatibility(&t(&[0, 1]), &t(&[0, 1])),
            Ok(true)
        );
    }

    #[test]
    fn reversal_incompatibility_premise_violations() {
        assert!(matches!(
            verify_reversal_incompatibility(&t(&[0, 1, 0]), &t(&[0, 1])),
            Err(Error::PremiseViolation(_))
        ));
        assert!(matches!(
            verify_reversal_incompatibility(&t(&[0, 1]), &t(&[1, 1])),
            Err(Error::PremiseViolation(_))
        ));
    }

    #[test]
    fn reversal_incompatibility_small_sweep() {
        for r1 in 2..=3u64 {
            for r2 in 2..=3u64 {
                for s1 in enumerate_tuples(r1, 2).unwrap() {
                    if s1.is_palindrome() {
                        continue;
                    }
                    for s2 in enumerate_tuples(r2, 2).unwrap() {
                        if s2.is_constant() {
                            continue;
                        }
                        assert_eq!(
                            verify_reversal_incompatibility(&s1, &s2),
                            Ok(true),
                            "s1=({s1}) s2=({s2})"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn enumerate_small_ranges() {
        let two: Vec<_> = enumerate_tuples(2, 1).unwrap().collect();
        assert_eq!(two, vec![t(&[0]), t(&[1])]);
        let three: Vec<_> = enumerate_tuples(3, 1).unwrap().collect();
        assert_eq!(three, vec![t(&[0, 0]), t(&[0, 1]), t(&[1, 0]), t(&[1, 1])]);
        assert_eq!(enumerate_tuples(4, 3).unwrap().count(), 64);
    }

    #[test]
    fn enumerate_rejects_degenerate_cut_counts() {
        assert_eq!(
            enumerate_tuples(1, 5).err(),
            Some(Error::InvalidCutCount(1))
        );
        assert_eq!(
            enumerate_tuples(0, 5).err(),
            Some(Error::InvalidCutCount(0))
        );
    }

    #[test]
    fn empty_tuple_rejected() {
        assert_eq!(SpacerTuple::new(vec![]), Err(Error::EmptyTuple));
    }

    #[test]
    fn display_and_parse_round_trip() {
        let tuple = t(&[0, 1, 0, 5]);
        assert_eq!(tuple.to_string(), "0,1,0,5");
        assert_eq!("0,1,0,5".parse::<SpacerTuple>().unwrap(), tuple);
        assert!("".parse::<SpacerTuple>().is_err());
        assert!("1,x".parse::<SpacerTuple>().is_err());
    }

    fn tuple_strategy() -> impl Strategy<Value = SpacerTuple> {
        prop::collection::vec(0..=5u64, 1..=4).prop_map(|values| SpacerTuple::new(values).unwrap())
    }

    proptest! {
        #[test]
        fn star_is_associative(
            a in tuple_strategy(),
            b in tuple_strategy(),
            c in tuple_strategy(),
        ) {
            prop_assert_eq!(star(&a, &star(&b, &c)), star(&star(&a, &b), &c));
        }

        #[test]
        fn reversal_distributes_over_star(a in tuple_strategy(), b in tuple_strategy()) {
            prop_assert_eq!(star(&a, &b).reverse(), star(&a.reverse(), &b.reverse()));
        }

        #[test]
        fn reverse_is_an_involution(a in tuple_strategy()) {
            prop_assert_eq!(a.reverse().reverse(), a);
        }

        #[test]
        fn star_length_and_sum_laws(a in tuple_strategy(), b in tuple_strategy()) {
            let combined = star(&a, &b);
            prop_assert_eq!(
                combined.cut_count(),
                a.cut_count() * b.cut_count()
            );
            prop_assert_eq!(
                combined.sum(),
                u128::from(a.cut_count()) * b.sum() + a.sum()
            );
        }

        #[test]
        fn incompatibility_is_symmetric(a in tuple_strategy(), b in tuple_strategy()) {
            prop_assume!(a.len() == b.len());
            prop_assert_eq!(perp(&a, &b).unwrap(), perp(&b, &a).unwrap());
        }

        #[test]
        fn compatibility_is_reflexive_at_offset_zero(a in tuple_strategy()) {
            prop_assert_eq!(
                compatibility(&a, &a).unwrap(),
                CompatibilityResult::Compatible { offset: 0, middle: MiddleConstraint::Free }
            );
        }

        #[test]
        fn compatibility_witness_replays(a in tuple_strategy(), b in tuple_strategy()) {
            prop_assume!(a.len() == b.len());
            let result = compatibility(&a, &b).unwrap();
            prop_assert!(result.verify(&a, &b).unwrap());
        }

        #[test]
        fn sum_and_length_preserved_by_reverse(a in tuple_strategy()) {
            let rev = a.reverse();
            prop_assert_eq!(rev.len(), a.len());
            prop_assert_eq!(rev.sum(), a.sum());
        }
    }
}
