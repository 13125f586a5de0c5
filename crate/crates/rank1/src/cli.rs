//! The `r1` command-line front-end.
//!
//! One subcommand per capability, plain text by default and a JSON report
//! envelope under `--json`. Output is byte-identical for identical inputs:
//! no timestamps, no randomness, no map iteration. Exit codes: 0 on
//! success, 1 on domain errors (reported with the library error name), 2 on
//! usage errors.

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::engine::{
    canonical_necessary, check_measure_conditions, ParamSpec, DEFAULT_WORD_BUDGET,
};
use crate::error::Error;
use crate::inverse::{
    build_witness, decide_self_inverse, verify_witness_certificate, Verdict, WitnessCertificate,
};
use crate::measure::{
    cylinder_measure, normalizer, partial_normalizer, symbol_measures, tower_mass, NormalizerResult,
};
use crate::parse::{expected_offsets, find_spacer_pattern, verify_expectedness_properties};
use crate::spacer::{
    compatibility, enumerate_tuples, star, verify_reversal_incompatibility, CompatibilityResult,
    MiddleConstraint, SpacerTuple,
};

/// Captured outcome of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CmdOutput {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser)]
#[command(
    name = "r1",
    version,
    about = "Build and analyze symbolic rank-one systems from cutting and spacer parameters"
)]
struct Cli {
    /// Emit a machine-readable JSON report on stdout.
    #[arg(long, global = true)]
    json: bool,

    /// Cap on the number of symbols of any materialized word.
    #[arg(long, global = true, default_value_t = DEFAULT_WORD_BUDGET)]
    budget: u64,

    #[command(subcommand)]
    command: Command,
}

fn parse_tuple(value: &str) -> Result<SpacerTuple, String> {
    value.parse()
}

#[derive(Subcommand)]
enum Command {
    /// Combine two spacer tuples into the tuple of the collapsed level.
    Star {
        /// Upper-level tuple, comma separated (e.g. 5,6).
        #[arg(long, value_parser = parse_tuple)]
        s2: SpacerTuple,
        /// Lower-level tuple, comma separated.
        #[arg(long, value_parser = parse_tuple)]
        s1: SpacerTuple,
    },
    /// Reverse a spacer tuple.
    Reverse {
        #[arg(long, value_parser = parse_tuple)]
        s: SpacerTuple,
    },
    /// Decide window compatibility of two equal-length tuples.
    Compat {
        #[arg(long, value_parser = parse_tuple)]
        s: SpacerTuple,
        #[arg(long = "s-prime", value_parser = parse_tuple)]
        s_prime: SpacerTuple,
    },
    /// Materialize the generating word at a level.
    Word {
        /// Parameter file (JSON), or `-` for stdin.
        #[arg(long)]
        params: String,
        #[arg(long)]
        level: u64,
    },
    /// Expected occurrences of one generating word inside another, with the
    /// gap sequence and optional pattern search.
    Parse {
        #[arg(long)]
        params: String,
        /// Level of the word whose occurrences are parsed.
        #[arg(long)]
        inner: u64,
        /// Level of the surrounding word.
        #[arg(long, conflicts_with = "depth")]
        outer: Option<u64>,
        /// Number of levels above `inner` to parse within.
        #[arg(long)]
        depth: Option<u64>,
        /// Spacer pattern to search for in the gap sequence.
        #[arg(long, value_parser = parse_tuple)]
        pattern: Option<SpacerTuple>,
        /// Re-verify the expectedness properties against the raw symbols.
        #[arg(long)]
        check: bool,
    },
    /// Fuse two adjacent levels into one; prints the collapsed parameters.
    Collapse {
        #[arg(long)]
        params: String,
        /// Prefix level to collapse with its successor.
        #[arg(long)]
        at: u64,
        /// Unroll this many cycle levels into the prefix first.
        #[arg(long, default_value_t = 0)]
        unroll: u64,
    },
    /// Exact normalizer and measure data.
    Measure {
        #[arg(long)]
        params: String,
        /// Also report level data: partial normalizer, cylinder measure,
        /// tower mass.
        #[arg(long)]
        level: Option<u64>,
    },
    /// Measure conditions and the canonical necessary condition.
    Conditions {
        #[arg(long)]
        params: String,
        /// Check the canonical condition through this level (default: the
        /// prefix plus one full cycle period).
        #[arg(long = "up-to")]
        up_to: Option<u64>,
    },
    /// Decide whether the system is isomorphic to its inverse.
    Decide {
        #[arg(long)]
        params: String,
        /// Write the certificate (when the verdict carries one) to this
        /// file as JSON.
        #[arg(long = "cert-out")]
        cert_out: Option<String>,
    },
    /// Build the telescoped witness sequence and its certificate.
    Witness {
        #[arg(long)]
        params: String,
    },
    /// Replay a certificate against its parameters.
    VerifyCert {
        #[arg(long)]
        params: String,
        /// Certificate file (JSON).
        #[arg(long)]
        cert: String,
    },
    /// Exhaustively check that combined tuples are incompatible with their
    /// reverses, over all premise-satisfying pairs in a range.
    Sweep {
        /// Largest cut count to enumerate.
        #[arg(long, default_value_t = 4)]
        rmax: u64,
        /// Largest spacer entry to enumerate.
        #[arg(long, default_value_t = 3)]
        smax: u64,
        /// Also sweep the algebraic laws (associativity, reversal,
        /// symmetry) over the same range.
        #[arg(long)]
        laws: bool,
    },
}

enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Domain(e)
    }
}

struct CommandReport {
    command: &'static str,
    input_digest: String,
    payload: Value,
    text: String,
}

#[derive(Serialize)]
struct ReportEnvelope<'a> {
    command: &'a str,
    version: &'a str,
    input_digest: &'a str,
    payload: &'a Value,
}

/// Runs one invocation. `argv` includes the program name; `stdin` is only
/// consumed when a file argument is `-`.
pub fn run(argv: &[String], stdin: &[u8]) -> CmdOutput {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(err) => {
            let rendered = err.render().to_string();
            return match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => CmdOutput {
                    exit_code: 0,
                    stdout: rendered,
                    stderr: String::new(),
                },
                _ => CmdOutput {
                    exit_code: 2,
                    stdout: String::new(),
                    stderr: rendered,
                },
            };
        }
    };
    let json_mode = cli.json;
    match dispatch(cli, stdin) {
        Ok(report) => {
            let stdout = if json_mode {
                let envelope = ReportEnvelope {
                    command: report.command,
                    version: env!("CARGO_PKG_VERSION"),
                    input_digest: &report.input_digest,
                    payload: &report.payload,
                };
                let mut rendered =
                    serde_json::to_string_pretty(&envelope).expect("reports serialize");
                rendered.push('\n');
                rendered
            } else {
                report.text
            };
            CmdOutput {
                exit_code: 0,
                stdout,
                stderr: String::new(),
            }
        }
        Err(Failure::Usage(message)) => CmdOutput {
            exit_code: 2,
            stdout: String::new(),
            stderr: format!("usage error: {message}\n"),
        },
        Err(Failure::Domain(error)) => {
            let stderr = if json_mode {
                let mut rendered = serde_json::to_string_pretty(&json!({
                    "error": { "name": error.name(), "message": error.to_string() }
                }))
                .expect("errors serialize");
                rendered.push('\n');
                rendered
            } else {
                format!("error[{}]: {}\n", error.name(), error)
            };
            CmdOutput {
                exit_code: 1,
                stdout: String::new(),
                stderr,
            }
        }
    }
}

fn digest(bytes: &[u8]) -> String {
    format!("sha256:{:x}", Sha256::digest(bytes))
}

fn load_params(path: &str, stdin: &[u8]) -> Result<(ParamSpec, String), Failure> {
    let bytes = if path == "-" {
        stdin.to_vec()
    } else {
        std::fs::read(path).map_err(|e| Error::Io(format!("{path}: {e}")))?
    };
    let params: ParamSpec =
        serde_json::from_slice(&bytes).map_err(|e| Error::InvalidParams(e.to_string()))?;
    Ok((params, digest(&bytes)))
}

fn dispatch(cli: Cli, stdin: &[u8]) -> Result<CommandReport, Failure> {
    let budget = cli.budget;
    match cli.command {
        Command::Star { s2, s1 } => {
            let result = star(&s2, &s1);
            Ok(CommandReport {
                command: "star",
                input_digest: digest(format!("s2={s2};s1={s1}").as_bytes()),
                payload: json!({ "s2": s2, "s1": s1, "result": result }),
                text: format!("{result}\n"),
            })
        }
        Command::Reverse { s } => {
            let result = s.reverse();
            Ok(CommandReport {
                command: "reverse",
                input_digest: digest(format!("s={s}").as_bytes()),
                payload: json!({ "s": s, "result": result }),
                text: format!("{result}\n"),
            })
        }
        Command::Compat { s, s_prime } => {
            let result = compatibility(&s, &s_prime)?;
            let text = match result {
                CompatibilityResult::Compatible {
                    offset,
                    middle: MiddleConstraint::Forced { value },
                } => {
                    format!("compatible at offset {offset} with forced middle value {value}\n")
                }
                CompatibilityResult::Compatible {
                    offset,
                    middle: MiddleConstraint::Free,
                } => format!("compatible at offset {offset} with free middle value\n"),
                CompatibilityResult::Incompatible => "incompatible\n".to_string(),
            };
            Ok(CommandReport {
                command: "compat",
                input_digest: digest(format!("s={s};s_prime={s_prime}").as_bytes()),
                payload: json!({ "s": s, "s_prime": s_prime, "result": result }),
                text,
            })
        }
        Command::Word { params, level } => {
            let (spec, input_digest) = load_params(&params, stdin)?;
            let word = spec.build_word(level, budget)?;
            Ok(CommandReport {
                command: "word",
                input_digest,
                payload: json!({
                    "level": level,
                    "length": word.len() as u64,
                    "zero_count": word.zero_count(),
                    "word": word.to_string(),
                }),
                text: format!("{word}\n"),
            })
        }
        Command::Parse {
            params,
            inner,
            outer,
            depth,
            pattern,
            check,
        } => {
            let (spec, input_digest) = load_params(&params, stdin)?;
            let outer = match (outer, depth) {
                (Some(outer), None) => outer,
                (None, Some(depth)) => inner + depth,
                (None, None) => {
                    return Err(Failure::Usage(
                        "one of --outer or --depth is required".into(),
                    ))
                }
                (Some(_), Some(_)) => unreachable!("clap rejects the conflict"),
            };
            let parse = expected_offsets(&spec, inner, outer, budget)?;
            let gaps = parse.gap_sequence();
            let mut text = format!(
                "offsets: {}\ngaps: {}\n",
                join(parse.offsets()),
                join(gaps.gaps()),
            );
            let matches = pattern
                .as_ref()
                .map(|p| find_spacer_pattern(&spec, inner, outer, p, budget))
                .transpose()?;
            if let (Some(p), Some(m)) = (&pattern, &matches) {
                text.push_str(&format!(
                    "pattern {p}: {} matches at {}\n",
                    m.len(),
                    join(m)
                ));
            }
            let expectedness = check
                .then(|| verify_expectedness_properties(&spec, inner, outer, budget))
                .transpose()?;
            if let Some(report) = &expectedness {
                text.push_str(&format!(
                    "expectedness: {}\n",
                    if report.all_passed() {
                        "all properties hold"
                    } else {
                        "FAILED"
                    }
                ));
            }
            Ok(CommandReport {
                command: "parse",
                input_digest,
                payload: json!({
                    "inner": inner,
                    "outer": outer,
                    "offsets": parse.offsets(),
                    "gaps": gaps.gaps(),
                    "pattern_matches": matches,
                    "expectedness": expectedness,
                }),
                text,
            })
        }
        Command::Collapse { params, at, unroll } => {
            let (spec, input_digest) = load_params(&params, stdin)?;
            let collapsed = spec.unroll(unroll)?.collapse_level(at)?;
            let rendered = serde_json::to_string(&collapsed).expect("params serialize");
            Ok(CommandReport {
                command: "collapse",
                input_digest,
                payload: serde_json::to_value(&collapsed).expect("params serialize"),
                text: format!("{rendered}\n"),
            })
        }
        Command::Measure { params, level } => {
            let (spec, input_digest) = load_params(&params, stdin)?;
            let norm = normalizer(&spec);
            let symbols = spec
                .is_periodic()
                .then(|| symbol_measures(&spec))
                .transpose()?;
            let mut text = match &norm {
                NormalizerResult::Exact { value } => format!("normalizer: exact {value}\n"),
                NormalizerResult::LowerBound { value, depth } => {
                    format!("normalizer: at least {value} (prefix depth {depth})\n")
                }
            };
            if let Some(m) = &symbols {
                text.push_str(&format!(
                    "zero measure: {}\none measure: {}\n",
                    m.zero, m.one
                ));
            }
            let level_data = level
                .map(|n| -> Result<Value, Error> {
                    let partial = partial_normalizer(&spec, n)?;
                    text.push_str(&format!("level {n}: partial normalizer {partial}\n"));
                    let (cylinder, tower) = if spec.is_periodic() {
                        let cylinder = cylinder_measure(&spec, n)?;
                        let tower = tower_mass(&spec, n)?;
                        text.push_str(&format!(
                            "level {n}: cylinder measure {cylinder}, tower mass {tower}\n"
                        ));
                        (Some(cylinder), Some(tower))
                    } else {
                        (None, None)
                    };
                    Ok(json!({
                        "level": n,
                        "partial_normalizer": partial,
                        "cylinder_measure": cylinder,
                        "tower_mass": tower,
                    }))
                })
                .transpose()?;
            Ok(CommandReport {
                command: "measure",
                input_digest,
                payload: json!({
                    "normalizer": norm,
                    "symbol_measures": symbols,
                    "level_data": level_data,
                }),
                text,
            })
        }
        Command::Conditions { params, up_to } => {
            let (spec, input_digest) = load_params(&params, stdin)?;
            let report = check_measure_conditions(&spec);
            let horizon = up_to.or_else(|| spec.canonical_horizon());
            let canonical = horizon.map(|h| canonical_necessary(&spec, h)).transpose()?;
            let mut text = format!(
                "distinct-spacers: {}\none-density: {}\n",
                match &report.distinct_spacers {
                    crate::engine::DistinctSpacers::Holds { witness } =>
                        format!("holds (values {} and {} recur)", witness.0, witness.1),
                    crate::engine::DistinctSpacers::FailsOnTail { constant_value } =>
                        format!("fails on the tail (every value is {constant_value})"),
                    crate::engine::DistinctSpacers::UndeterminedPrefixOnly { .. } =>
                        "undetermined (prefix evidence only)".to_string(),
                },
                match &report.one_density {
                    crate::engine::OneDensity::Holds {
                        normalizer,
                        one_density_limit,
                    } => format!("holds (normalizer {normalizer}, limit {one_density_limit})"),
                    crate::engine::OneDensity::UndeterminedPrefixOnly { .. } =>
                        "undetermined (prefix evidence only)".to_string(),
                },
            );
            match &canonical {
                Some(check) if check.holds => text.push_str(&format!(
                    "canonical-necessary: holds through level {}\n",
                    check.checked_through
                )),
                Some(check) => text.push_str(&format!(
                    "canonical-necessary: fails at level {}\n",
                    check.first_violation.expect("failing checks name a level")
                )),
                None => text.push_str("canonical-necessary: no resolvable level pair\n"),
            }
            Ok(CommandReport {
                command: "conditions",
                input_digest,
                payload: json!({
                    "measure_conditions": report,
                    "canonical_necessary": canonical,
                }),
                text,
            })
        }
        Command::Decide { params, cert_out } => {
            let (spec, input_digest) = load_params(&params, stdin)?;
            let decision = decide_self_inverse(&spec)?;
            let mut text = match &decision.verdict {
                Verdict::IsomorphicToInverse { from_level } => {
                    format!("verdict: isomorphic to inverse (palindromic from level {from_level})\n")
                }
                Verdict::NotIsomorphicToInverse { certificate } => format!(
                    "verdict: not isomorphic to inverse ({} certificate entries, all re-verified)\n",
                    certificate.entries.len()
                ),
                Verdict::Undetermined { reason } => format!("verdict: undetermined ({reason})\n"),
            };
            text.push_str(&format!(
                "bounds: cut {} spacer {}\ncanonical-necessary: verified\n",
                decision.hypothesis_checks.bounded.cut_bound,
                decision.hypothesis_checks.bounded.spacer_bound,
            ));
            if let Some(path) = cert_out {
                let Verdict::NotIsomorphicToInverse { certificate } = &decision.verdict else {
                    return Err(Failure::Domain(Error::VerificationFailed(
                        "the verdict carries no certificate to write".into(),
                    )));
                };
                let mut rendered =
                    serde_json::to_string_pretty(certificate).expect("certificates serialize");
                rendered.push('\n');
                std::fs::write(&path, rendered).map_err(|e| Error::Io(format!("{path}: {e}")))?;
                text.push_str(&format!("certificate written to {path}\n"));
            }
            Ok(CommandReport {
                command: "decide",
                input_digest,
                payload: serde_json::to_value(&decision).expect("decisions serialize"),
                text,
            })
        }
        Command::Witness { params } => {
            let (spec, input_digest) = load_params(&params, stdin)?;
            let (telescoped, certificate) = build_witness(&spec)?;
            let text = format!(
                "telescoped: {}\ncertificate entries: {}\n",
                serde_json::to_string(&telescoped).expect("params serialize"),
                certificate.entries.len(),
            );
            Ok(CommandReport {
                command: "witness",
                input_digest,
                payload: json!({
                    "telescoped": telescoped,
                    "certificate": certificate,
                }),
                text,
            })
        }
        Command::VerifyCert { params, cert } => {
            let (spec, params_digest) = load_params(&params, stdin)?;
            let cert_bytes = std::fs::read(&cert).map_err(|e| Error::Io(format!("{cert}: {e}")))?;
            let certificate: WitnessCertificate = serde_json::from_slice(&cert_bytes)
                .map_err(|e| Error::InvalidParams(format!("certificate: {e}")))?;
            let verification = verify_witness_certificate(&spec, &certificate)?;
            if !verification.verified {
                return Err(Failure::Domain(Error::VerificationFailed(
                    verification.failures.join("; "),
                )));
            }
            Ok(CommandReport {
                command: "verify-cert",
                input_digest: params_digest,
                payload: json!({
                    "verified": true,
                    "entries_checked": verification.entries_checked,
                    "certificate": certificate,
                }),
                text: format!(
                    "certificate verified ({} entries)\n",
                    verification.entries_checked
                ),
            })
        }
        Command::Sweep { rmax, smax, laws } => {
            if rmax < 2 {
                return Err(Failure::Usage("--rmax must be at least 2".into()));
            }
            let (pairs, counterexamples) = sweep_reversal_incompatibility(rmax, smax)?;
            if !counterexamples.is_empty() {
                return Err(Failure::Domain(Error::VerificationFailed(format!(
                    "combined tuples compatible with their reverses: {}",
                    counterexamples.join("; ")
                ))));
            }
            let mut text = format!(
                "checked {pairs} premise-satisfying pairs (cut counts 2..={rmax}, entries 0..={smax}): \
                 every combined tuple is incompatible with its reverse\n"
            );
            let law_counts = if laws {
                let counts = sweep_laws(rmax, smax)?;
                text.push_str(&format!(
                    "laws: associativity {} triples, reversal {} pairs, symmetry {} pairs, \
                     reflexivity {} tuples, involution {} tuples: all hold\n",
                    counts.associativity,
                    counts.reversal,
                    counts.symmetry,
                    counts.reflexivity,
                    counts.involution,
                ));
                Some(counts)
            } else {
                None
            };
            Ok(CommandReport {
                command: "sweep",
                input_digest: digest(format!("rmax={rmax};smax={smax};laws={laws}").as_bytes()),
                payload: json!({
                    "rmax": rmax,
                    "smax": smax,
                    "pairs_checked": pairs,
                    "counterexamples": counterexamples,
                    "laws": law_counts,
                }),
                text,
            })
        }
    }
}

fn join(values: &[u64]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn sweep_reversal_incompatibility(rmax: u64, smax: u64) -> Result<(u64, Vec<String>), Error> {
    let mut pairs = 0u64;
    let mut counterexamples = Vec::new();
    for r1 in 2..=rmax {
        for s1 in enumerate_tuples(r1, smax)? {
            if s1.is_palindrome() {
                continue;
            }
            for r2 in 2..=rmax {
                for s2 in enumerate_tuples(r2, smax)? {
                    if s2.is_constant() {
                        continue;
                    }
                    pairs += 1;
                    if !verify_reversal_incompatibility(&s1, &s2)? {
                        counterexamples.push(format!("s1=({s1}) s2=({s2})"));
                    }
                }
            }
        }
    }
    Ok((pairs, counterexamples))
}

#[derive(Serialize)]
struct LawSweepCounts {
    associativity: u64,
    reversal: u64,
    symmetry: u64,
    reflexivity: u64,
    involution: u64,
}

fn sweep_laws(rmax: u64, smax: u64) -> Result<LawSweepCounts, Error> {
    let tuples: Vec<SpacerTuple> = (2..=rmax)
        .flat_map(|r| enumerate_tuples(r, smax).expect("r >= 2"))
        .collect();
    let mut counts = LawSweepCounts {
        associativity: 0,
        reversal: 0,
        symmetry: 0,
        reflexivity: 0,
        involution: 0,
    };
    for a in &tuples {
        if a.reverse().reverse() != *a {
            return Err(Error::VerificationFailed(format!(
                "involution fails for ({a})"
            )));
        }
        counts.involution += 1;
        if compatibility(a, a)?
            != (CompatibilityResult::Compatible {
                offset: 0,
                middle: MiddleConstraint::Free,
            })
        {
            return Err(Error::VerificationFailed(format!(
                "reflexivity fails for ({a})"
            )));
        }
        counts.reflexivity += 1;
    }
    for a in &tuples {
        for b in &tuples {
            if star(a, b).reverse() != star(&a.reverse(), &b.reverse()) {
                return Err(Error::VerificationFailed(format!(
                    "reversal law fails for ({a}), ({b})"
                )));
            }
            counts.reversal += 1;
            if a.len() == b.len() {
                let forward = compatibility(a, b)? == CompatibilityResult::Incompatible;
                let backward = compatibility(b, a)? == CompatibilityResult::Incompatible;
                if forward != backward {
                    return Err(Error::VerificationFailed(format!(
                        "symmetry fails for ({a}), ({b})"
                    )));
                }
                counts.symmetry += 1;
            }
        }
    }
    for a in &tuples {
        for b in &tuples {
            for c in &tuples {
                if star(a, &star(b, c)) != star(&star(a, b), c) {
                    return Err(Error::VerificationFailed(format!(
                        "associativity fails for ({a}), ({b}), ({c})"
                    )));
                }
                counts.associativity += 1;
            }
        }
    }
    Ok(counts)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> CmdOutput {
        let argv: Vec<String> = args.iter().map(|s| s.to_string()).collect();
        run(&argv, b"")
    }

    #[test]
    fn star_prints_the_combined_tuple() {
        let out = run_args(&["r1", "star", "--s2", "5,6", "--s1", "0,1,0"]);
        assert_eq!(out.exit_code, 0);
        assert_eq!(out.stdout, "0,1,0,5,0,1,0,6,0,1,0\n");
    }

    #[test]
    fn usage_errors_exit_2() {
        let out = run_args(&["r1", "star", "--s2", "5,6"]);
        assert_eq!(out.exit_code, 2);
        assert!(out.stderr.contains("--s1"));

        let out = run_args(&["r1", "star", "--s2", "5,x", "--s1", "0"]);
        assert_eq!(out.exit_code, 2);
        assert!(out.stderr.contains("--s2"));

        let out = run_args(&["r1", "nonsense"]);
        assert_eq!(out.exit_code, 2);
    }

    #[test]
    fn help_exits_0() {
        let out = run_args(&["r1", "--help"]);
        assert_eq!(out.exit_code, 0);
        assert!(out.stdout.contains("Usage"));
    }

    #[test]
    fn domain_errors_exit_1_with_the_error_name() {
        let out = run_args(&["r1", "compat", "--s", "0,1", "--s-prime", "0,1,2"]);
        assert_eq!(out.exit_code, 1);
        assert!(out.stderr.starts_with("error[LengthMismatch]"));
    }

    #[test]
    fn params_can_come_from_stdin() {
        let argv: Vec<String> = ["r1", "word", "--params", "-", "--level", "2"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        let stdin = br#"{"prefix":[],"tail":{"type":"periodic","cycle":[{"r":3,"s":[0,1]}]}}"#;
        let out = run(&argv, stdin);
        assert_eq!(out.exit_code, 0, "{}", out.stderr);
        assert_eq!(out.stdout, "0010001010010\n");
    }
}
