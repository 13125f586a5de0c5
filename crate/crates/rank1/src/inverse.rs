//! The decision procedure for isomorphism to the inverse.
//!
//! Reversing every spacer tuple of a system presents its inverse, so the
//! question is whether the system is isomorphic to its own tuple-reversed
//! presentation. For canonically bounded, eventually periodic parameters
//! the answer is decided by eventual palindromicity of the tuples:
//!
//! * if all tuples from some level on are palindromes, replacing every
//!   expected occurrence of that level's word by its reverse is an
//!   isomorphism with the inverse ([`sufficient_self_inverse`]);
//! * otherwise a non-palindromic tuple recurs, and telescoping three
//!   consecutive levels at each of its occurrences produces combined
//!   tuples that are incompatible with their own reverses. Bounded cut
//!   counts then rule out any isomorphism with the inverse
//!   ([`build_witness`], [`check_nonisomorphism_premises`]).
//!
//! [`decide_self_inverse`] runs both directions and returns a verdict with
//! a machine-checkable certificate; [`verify_witness_certificate`] replays
//! a certificate from scratch using only the spacer algebra, trusting
//! nothing recorded by the builder beyond the base levels it names.

use std::collections::HashMap;

use num::Integer;
use serde::{Deserialize, Serialize};

use crate::engine::{canonical_necessary, LevelSpec, ParamSpec, Tail};
use crate::error::Error;
use crate::spacer::{perp, star, SpacerTuple};

/// Parameters of the inverse system: same cut counts, every spacer tuple
/// reversed, in the prefix and the cycle alike. An involution.
pub fn invert_params(params: &ParamSpec) -> ParamSpec {
    let prefix = params.prefix().iter().map(LevelSpec::reversed).collect();
    let tail = match params.tail() {
        Tail::Periodic { cycle } => Tail::Periodic {
            cycle: cycle.iter().map(LevelSpec::reversed).collect(),
        },
        Tail::Unspecified => Tail::Unspecified,
    };
    ParamSpec::new(prefix, tail).expect("reversal preserves validity")
}

/// Outcome of the eventual-palindromicity test.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum SelfInverseSufficiency {
    /// Every level from `from_level` on has a palindromic tuple; the least
    /// such level is reported.
    Yes { from_level: u64 },
    /// A non-palindromic tuple recurs in the cycle, so infinitely many
    /// levels violate palindromicity; one of them is reported.
    No { witness_level: u64 },
    /// The tail is unspecified, so only the prefix could be inspected.
    Undetermined {
        all_given_palindromic: bool,
        /// Least level from which every *given* tuple is palindromic.
        palindromic_from: Option<u64>,
    },
}

/// Tests the sufficient condition for isomorphism to the inverse: some
/// level from which every spacer tuple is a palindrome.
pub fn sufficient_self_inverse(params: &ParamSpec) -> SelfInverseSufficiency {
    let palindromic_from = |levels: &[LevelSpec]| -> u64 {
        let mut from = 0u64;
        for (i, level) in levels.iter().enumerate() {
            if !level.spacers().is_palindrome() {
                from = i as u64 + 1;
            }
        }
        from
    };
    match params.tail() {
        Tail::Periodic { cycle } => {
            match cycle
                .iter()
                .position(|level| !level.spacers().is_palindrome())
            {
                Some(pos) => SelfInverseSufficiency::No {
                    witness_level: params.prefix_len() + pos as u64,
                },
                None => SelfInverseSufficiency::Yes {
                    from_level: palindromic_from(params.prefix()),
                },
            }
        }
        Tail::Unspecified => {
            let from = palindromic_from(params.prefix());
            SelfInverseSufficiency::Undetermined {
                all_given_palindromic: from == 0,
                // `None` when even the last given tuple is asymmetric
                palindromic_from: (from < params.prefix_len() || params.prefix().is_empty())
                    .then_some(from),
            }
        }
    }
}

/// Evidence grade of a premise check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PremiseEvidence {
    /// Both representations are periodic; checking up to the horizon
    /// certifies every level.
    PeriodicallyCertified { horizon: u64 },
    /// Only levels below the horizon were checked.
    FiniteHorizon { horizon: u64 },
}

/// Both systems have the same cut count and the same per-level spacer sum
/// at every level, so their generating words have equal lengths.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EqualShapeCheck {
    pub holds: bool,
    pub first_violation: Option<u64>,
    pub evidence: PremiseEvidence,
}

/// All spacer values of both systems are bounded by `bound`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpacerBoundCheck {
    pub holds: bool,
    pub bound: u64,
    pub evidence: PremiseEvidence,
}

/// Levels with cut count at most `cut_bound` where the two systems' tuples
/// are incompatible. A level of this kind inside the common cycle recurs
/// forever, which is what the non-isomorphism argument needs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecurrentIncompatibilityCheck {
    pub holds: bool,
    pub cut_bound: u64,
    pub perp_levels: Vec<u64>,
    pub certified_infinite: bool,
    pub evidence: PremiseEvidence,
}

/// The three premises under which two systems cannot be isomorphic.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PremiseReport {
    pub equal_shape: EqualShapeCheck,
    pub spacer_bound: SpacerBoundCheck,
    pub recurrent_incompatibility: RecurrentIncompatibilityCheck,
}

impl PremiseReport {
    pub fn all_hold(&self) -> bool {
        self.equal_shape.holds && self.spacer_bound.holds && self.recurrent_incompatibility.holds
    }
}

/// Checks, for two systems, the premises of the non-isomorphism argument:
/// equal shape at every level, a common spacer bound, and incompatible
/// tuples at infinitely many levels of bounded cut count.
///
/// When both tails are periodic the checks run to one aligned period
/// beyond the prefixes and certify all levels; otherwise `horizon` levels
/// are checked and a zero horizon is rejected.
pub fn check_nonisomorphism_premises(
    a: &ParamSpec,
    b: &ParamSpec,
    horizon: u64,
) -> Result<PremiseReport, Error> {
    let (scan_to, evidence, periodic_from) = match (a.cycle(), b.cycle()) {
        (Some(cycle_a), Some(cycle_b)) => {
            let shared_prefix = a.prefix_len().max(b.prefix_len());
            let period = (cycle_a.len() as u64).lcm(&(cycle_b.len() as u64));
            let h = shared_prefix + period;
            (
                h,
                PremiseEvidence::PeriodicallyCertified { horizon: h },
                Some(shared_prefix),
            )
        }
        _ => {
            if horizon == 0 {
                return Err(Error::IncompatibleRepresentations);
            }
            (horizon, PremiseEvidence::FiniteHorizon { horizon }, None)
        }
    };

    let mut first_shape_violation = None;
    let mut perp_levels = Vec::new();
    let mut certified_infinite = false;
    for n in 0..scan_to {
        let level_a = a.resolve_level(n)?;
        let level_b = b.resolve_level(n)?;
        let same_shape = level_a.cut_count() == level_b.cut_count()
            && level_a.spacers().sum() == level_b.spacers().sum();
        if !same_shape && first_shape_violation.is_none() {
            first_shape_violation = Some(n);
        }
        if level_a.spacers().len() == level_b.spacers().len()
            && perp(level_a.spacers(), level_b.spacers())?
        {
            perp_levels.push(n);
            if periodic_from.is_some_and(|from| n >= from) {
                certified_infinite = true;
            }
        }
    }

    let bound = a.spacer_bound().max(b.spacer_bound());
    let cut_bound = a.cut_bound().max(b.cut_bound());
    let recurrent_holds = match periodic_from {
        Some(_) => certified_infinite,
        None => !perp_levels.is_empty(),
    };
    Ok(PremiseReport {
        equal_shape: EqualShapeCheck {
            holds: first_shape_violation.is_none(),
            first_violation: first_shape_violation,
            evidence,
        },
        spacer_bound: SpacerBoundCheck {
            holds: true,
            bound,
            evidence,
        },
        recurrent_incompatibility: RecurrentIncompatibilityCheck {
            holds: recurrent_holds,
            cut_bound,
            perp_levels,
            certified_infinite,
            evidence,
        },
    })
}

/// One verified step of a witness: three consecutive levels starting at
/// `base_level`, combined into a single level whose tuple is incompatible
/// with its own reverse.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessEntry {
    pub base_level: u64,
    pub combined_r: u64,
    pub combined_s: SpacerTuple,
    pub perp_verified: bool,
    /// Cube of the system's cut bound; `combined_r` never exceeds it.
    pub r_bound: u64,
}

/// A machine-checkable certificate of non-isomorphism with the inverse:
/// the combined-level entries plus the premise report for the telescoped
/// system against its inversion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessCertificate {
    pub entries: Vec<WitnessEntry>,
    pub premises: PremiseReport,
}

/// Builds the telescoped parameter sequence witnessing non-isomorphism
/// with the inverse, together with its certificate.
///
/// Starting from level 0, each step finds the least level `m` strictly
/// above the current position whose tuple is not a palindrome, emits one
/// level combining everything below `m`, then one level combining levels
/// `m`, `m + 1`, `m + 2`, and continues from `m + 3`. The second level of
/// each step keeps its combined tuple incompatible with its own reverse:
/// its low factor is non-palindromic by choice of `m` and the product of
/// the upper two factors is non-constant because the parameters satisfy
/// the canonical necessary condition. That incompatibility is recomputed
/// here rather than derived.
///
/// The step pattern eventually repeats with the cycle, so the telescoped
/// sequence is again eventually periodic and is returned as a `ParamSpec`.
pub fn build_witness(params: &ParamSpec) -> Result<(ParamSpec, WitnessCertificate), Error> {
    let Tail::Periodic { cycle } = params.tail() else {
        return Err(Error::UnspecifiedTail);
    };
    let horizon = params
        .canonical_horizon()
        .expect("periodic tails always have a horizon");
    let canonical = canonical_necessary(params, horizon)?;
    if let Some(level) = canonical.first_violation {
        return Err(Error::CanonicalConditionFailed { level });
    }
    if cycle.iter().all(|level| level.spacers().is_palindrome()) {
        return Err(Error::NoRecurringAsymmetry);
    }

    let prefix_len = params.prefix_len();
    let cycle_len = cycle.len() as u64;
    let r_bound = params
        .cut_bound()
        .checked_pow(3)
        .ok_or_else(|| Error::InvalidParams("cut bound cube overflows".into()))?;

    // combine levels from..to into a single level by folding the product
    let combine = |from: u64, to: u64| -> Result<LevelSpec, Error> {
        let mut spacers = params.resolve_level(from)?.spacers().clone();
        for level in from + 1..to {
            spacers = star(params.resolve_level(level)?.spacers(), &spacers);
        }
        Ok(LevelSpec::from_spacers(spacers))
    };

    let mut telescoped_levels: Vec<LevelSpec> = Vec::new();
    // original level represented by each telescoped level boundary
    let mut selected_levels: Vec<u64> = vec![0];
    let mut entries = Vec::new();
    let mut seen_residues: HashMap<u64, usize> = HashMap::new();
    let mut position = 0u64;
    let (telescoped_prefix, telescoped_cycle) = loop {
        if position >= prefix_len {
            let residue = (position - prefix_len) % cycle_len;
            if let Some(&start) = seen_residues.get(&residue) {
                break (
                    telescoped_levels[..start].to_vec(),
                    telescoped_levels[start..].to_vec(),
                );
            }
            seen_residues.insert(residue, telescoped_levels.len());
        }
        let mut base = position + 1;
        while params.resolve_level(base)?.spacers().is_palindrome() {
            base += 1;
        }
        telescoped_levels.push(combine(position, base)?);
        selected_levels.push(base);

        let odd = combine(base, base + 3)?;
        let combined_s = odd.spacers().clone();
        let perp_verified = perp(&combined_s, &combined_s.reverse())?;
        entries.push(WitnessEntry {
            base_level: base,
            combined_r: odd.cut_count(),
            combined_s,
            perp_verified,
            r_bound,
        });
        telescoped_levels.push(odd);
        selected_levels.push(base + 3);
        position = base + 3;
    };

    let telescoped = ParamSpec::new(
        telescoped_prefix,
        Tail::Periodic {
            cycle: telescoped_cycle,
        },
    )?;

    // the telescoped sequence must replay the original words at the
    // selected levels; spot-check the small ones
    debug_assert!({
        let cap = 1u64 << 16;
        (0..selected_levels.len() as u64).all(|t| {
            match (
                telescoped.build_word(t, cap),
                params.build_word(selected_levels[t as usize], cap),
            ) {
                (Ok(ours), Ok(original)) => ours.symbols() == original.symbols(),
                _ => true, // beyond the spot-check budget
            }
        })
    });

    let premises = check_nonisomorphism_premises(&telescoped, &invert_params(&telescoped), 0)?;
    Ok((telescoped, WitnessCertificate { entries, premises }))
}

/// Boundedness data for the hypothesis record: both bounds always exist
/// for an eventually periodic representation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundednessReport {
    pub cut_bound: u64,
    pub spacer_bound: u64,
}

/// The hypotheses the decision procedure verified before issuing its
/// verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypothesisChecks {
    pub bounded: BoundednessReport,
    pub canonical_necessary: bool,
}

/// The verdict of the decision procedure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Verdict {
    /// Isomorphic to the inverse: every tuple from `from_level` on is a
    /// palindrome.
    IsomorphicToInverse { from_level: u64 },
    /// Not isomorphic to the inverse, with a re-checkable certificate.
    NotIsomorphicToInverse { certificate: WitnessCertificate },
    /// The representation does not determine the answer.
    Undetermined { reason: String },
}

/// A decision with the hypothesis record attached.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InverseDecision {
    pub verdict: Verdict,
    pub hypothesis_checks: HypothesisChecks,
}

/// Decides whether the system is isomorphic to its inverse.
///
/// The tail must be periodic; the caller asserts the parameters are the
/// canonical ones, and the procedure verifies what it can of that claim:
/// boundedness is computed outright, and the canonical necessary condition
/// is checked across the prefix and one full period. If that condition
/// fails the procedure refuses to answer rather than issue a verdict
/// outside its hypotheses.
pub fn decide_self_inverse(params: &ParamSpec) -> Result<InverseDecision, Error> {
    if !params.is_periodic() {
        return Err(Error::UnspecifiedTail);
    }
    let horizon = params
        .canonical_horizon()
        .expect("periodic tails always have a horizon");
    let canonical = canonical_necessary(params, horizon)?;
    if let Some(level) = canonical.first_violation {
        return Err(Error::CanonicalConditionFailed { level });
    }
    let hypothesis_checks = HypothesisChecks {
        bounded: BoundednessReport {
            cut_bound: params.cut_bound(),
            spacer_bound: params.spacer_bound(),
        },
        canonical_necessary: true,
    };
    let verdict = match sufficient_self_inverse(params) {
        SelfInverseSufficiency::Yes { from_level } => Verdict::IsomorphicToInverse { from_level },
        SelfInverseSufficiency::No { .. } => {
            let (_telescoped, certificate) = build_witness(params)?;
            Verdict::NotIsomorphicToInverse { certificate }
        }
        SelfInverseSufficiency::Undetermined { .. } => {
            unreachable!("periodic tails never leave the sufficiency test undetermined")
        }
    };
    Ok(InverseDecision {
        verdict,
        hypothesis_checks,
    })
}

/// Result of replaying a certificate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateVerification {
    pub verified: bool,
    pub entries_checked: u64,
    pub failures: Vec<String>,
}

/// Replays a witness certificate against the parameters it was issued
/// for, using only the spacer algebra: each entry's combined tuple is
/// recomputed from the three levels it names, its incompatibility with its
/// own reverse is re-decided from scratch, and the recorded bounds are
/// recomputed. The premise report's claims are checked for internal
/// consistency with the entries.
pub fn verify_witness_certificate(
    params: &ParamSpec,
    certificate: &WitnessCertificate,
) -> Result<CertificateVerification, Error> {
    let mut failures = Vec::new();
    if certificate.entries.is_empty() {
        failures.push("certificate has no entries".to_string());
    }
    let expected_bound = params
        .cut_bound()
        .checked_pow(3)
        .ok_or_else(|| Error::InvalidParams("cut bound cube overflows".into()))?;
    for (index, entry) in certificate.entries.iter().enumerate() {
        let mut spacers = params.resolve_level(entry.base_level)?.spacers().clone();
        let mut combined_r = params.resolve_level(entry.base_level)?.cut_count();
        for level in entry.base_level + 1..entry.base_level + 3 {
            let spec = params.resolve_level(level)?;
            spacers = star(spec.spacers(), &spacers);
            combined_r *= spec.cut_count();
        }
        if spacers != entry.combined_s {
            failures.push(format!(
                "entry {index}: combined tuple does not match levels {}..{}",
                entry.base_level,
                entry.base_level + 3
            ));
            continue;
        }
        if combined_r != entry.combined_r {
            failures.push(format!(
                "entry {index}: combined cut count is {combined_r}, recorded {}",
                entry.combined_r
            ));
        }
        if entry.r_bound != expected_bound {
            failures.push(format!(
                "entry {index}: recorded bound {} differs from the cut bound cube {expected_bound}",
                entry.r_bound
            ));
        }
        if entry.combined_r > entry.r_bound {
            failures.push(format!(
                "entry {index}: combined cut count {} exceeds the bound {}",
                entry.combined_r, entry.r_bound
            ));
        }
        if !perp(&entry.combined_s, &entry.combined_s.reverse())? {
            failures.push(format!(
                "entry {index}: combined tuple is compatible with its reverse"
            ));
        } else if !entry.perp_verified {
            failures.push(format!(
                "entry {index}: incompatibility holds but was recorded as unverified"
            ));
        }
    }
    if !certificate.premises.all_hold() {
        failures.push("premise report does not claim all three premises".to_string());
    }
    if !certificate
        .premises
        .recurrent_incompatibility
        .certified_infinite
    {
        failures.push("recurrent incompatibility is not certified infinite".to_string());
    }
    Ok(CertificateVerification {
        verified: failures.is_empty(),
        entries_checked: certificate.entries.len() as u64,
        failures,
    })
}
