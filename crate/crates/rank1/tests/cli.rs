//! End-to-end tests of the `r1` front-end through `cli::run`: exit codes,
//! the parameter file schema, and byte-identical output for identical
//! inputs.

mod common;

use common::*;
use rank1::cli::{run, CmdOutput};
use rank1::engine::{ParamSpec, DEFAULT_WORD_BUDGET};

fn r1(args: &[&str], stdin: &[u8]) -> CmdOutput {
    let argv: Vec<String> = args.iter().map(|s| s.to_string()).collect();
    run(&argv, stdin)
}

fn write_params(dir: &tempfile::TempDir, name: &str, params: &ParamSpec) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, serde_json::to_string(params).unwrap()).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn star_and_reverse_match_the_worked_examples() {
    let out = r1(&["r1", "star", "--s2", "5,6", "--s1", "0,1,0"], b"");
    assert_eq!(
        (out.exit_code, out.stdout.as_str()),
        (0, "0,1,0,5,0,1,0,6,0,1,0\n")
    );

    let out = r1(&["r1", "reverse", "--s", "0,1,0,0,1,1,0,1"], b"");
    assert_eq!(
        (out.exit_code, out.stdout.as_str()),
        (0, "1,0,1,1,0,0,1,0\n")
    );
}

#[test]
fn compat_reports_both_verdicts() {
    let out = r1(&["r1", "compat", "--s", "0,1,0", "--s-prime", "0,0,1"], b"");
    assert_eq!(out.exit_code, 0);
    assert_eq!(
        out.stdout,
        "compatible at offset 1 with forced middle value 0\n"
    );

    let out = r1(&["r1", "compat", "--s", "0,1,0", "--s-prime", "0,1,2"], b"");
    assert_eq!(out.exit_code, 0);
    assert_eq!(out.stdout, "incompatible\n");
}

#[test]
fn word_beyond_an_unspecified_prefix_exits_1() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_params(&dir, "p.json", &chacon2(2));
    let out = r1(&["r1", "word", "--params", &path, "--level", "99"], b"");
    assert_eq!(out.exit_code, 1);
    assert!(
        out.stderr.starts_with("error[BeyondPrefix]"),
        "{}",
        out.stderr
    );
}

#[test]
fn decide_emits_a_verdict_with_certificate() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_params(&dir, "chacon_like.json", &all_levels(lvl(3, &[0, 1])));
    let out = r1(&["r1", "decide", "--params", &path, "--json"], b"");
    assert_eq!(out.exit_code, 0, "{}", out.stderr);
    let report: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(report["command"], "decide");
    assert_eq!(
        report["payload"]["verdict"]["kind"],
        "not_isomorphic_to_inverse"
    );
    assert!(report["payload"]["verdict"]["certificate"]["entries"]
        .as_array()
        .is_some_and(|entries| !entries.is_empty()));
    assert!(report["input_digest"]
        .as_str()
        .is_some_and(|d| d.starts_with("sha256:")));
}

#[test]
fn decide_refuses_non_canonical_parameters() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_params(&dir, "p.json", &all_levels(lvl(2, &[1])));
    let out = r1(&["r1", "decide", "--params", &path], b"");
    assert_eq!(out.exit_code, 1);
    assert!(
        out.stderr.starts_with("error[CanonicalConditionFailed]"),
        "{}",
        out.stderr
    );
}

#[test]
fn identical_inputs_give_byte_identical_output() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_params(&dir, "p.json", &all_levels(lvl(3, &[0, 1])));
    for args in [
        vec!["r1", "decide", "--params", path.as_str(), "--json"],
        vec![
            "r1",
            "measure",
            "--params",
            path.as_str(),
            "--level",
            "3",
            "--json",
        ],
        vec![
            "r1",
            "parse",
            "--params",
            path.as_str(),
            "--inner",
            "1",
            "--outer",
            "3",
        ],
        vec!["r1", "conditions", "--params", path.as_str(), "--json"],
        vec!["r1", "witness", "--params", path.as_str(), "--json"],
    ] {
        let first = r1(&args, b"");
        let second = r1(&args, b"");
        assert_eq!(first, second, "{args:?}");
        assert_eq!(first.exit_code, 0, "{args:?}: {}", first.stderr);
    }
}

#[test]
fn parse_supports_depth_pattern_and_check() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_params(&dir, "p.json", &all_levels(lvl(4, &[0, 0, 1])));
    let out = r1(
        &[
            "r1",
            "parse",
            "--params",
            &path,
            "--inner",
            "1",
            "--depth",
            "2",
            "--pattern",
            "0,1,0",
            "--check",
        ],
        b"",
    );
    assert_eq!(out.exit_code, 0, "{}", out.stderr);
    assert!(out.stdout.contains("offsets: "));
    assert!(out.stdout.contains("gaps: "));
    assert!(out.stdout.contains("pattern 0,1,0:"));
    assert!(out.stdout.contains("expectedness: all properties hold"));

    // --outer and --depth conflict; neither is a usage error too
    let out = r1(
        &[
            "r1", "parse", "--params", &path, "--inner", "1", "--outer", "2", "--depth", "1",
        ],
        b"",
    );
    assert_eq!(out.exit_code, 2);
    let out = r1(&["r1", "parse", "--params", &path, "--inner", "1"], b"");
    assert_eq!(out.exit_code, 2);
    assert!(out.stderr.contains("--outer"), "{}", out.stderr);
}

#[test]
fn collapse_output_is_a_valid_parameter_file() {
    let dir = tempfile::tempdir().unwrap();
    let params = ParamSpec::new(
        vec![lvl(2, &[1])],
        rank1::engine::Tail::Periodic {
            cycle: vec![lvl(3, &[0, 1])],
        },
    )
    .unwrap();
    let path = write_params(&dir, "p.json", &params);
    let out = r1(
        &[
            "r1", "collapse", "--params", &path, "--at", "1", "--unroll", "2",
        ],
        b"",
    );
    assert_eq!(out.exit_code, 0, "{}", out.stderr);
    let collapsed: ParamSpec = serde_json::from_str(out.stdout.trim()).unwrap();
    // collapsing level 1 leaves levels 0..=1 intact and shifts the rest down
    for level in 0..=1u64 {
        assert_eq!(
            collapsed
                .build_word(level, DEFAULT_WORD_BUDGET)
                .unwrap()
                .symbols(),
            params
                .build_word(level, DEFAULT_WORD_BUDGET)
                .unwrap()
                .symbols()
        );
    }
    for level in 2..5u64 {
        assert_eq!(
            collapsed
                .build_word(level, DEFAULT_WORD_BUDGET)
                .unwrap()
                .symbols(),
            params
                .build_word(level + 1, DEFAULT_WORD_BUDGET)
                .unwrap()
                .symbols()
        );
    }

    // collapsing inside the tail without unrolling is refused
    let out = r1(&["r1", "collapse", "--params", &path, "--at", "1"], b"");
    assert_eq!(out.exit_code, 1);
    assert!(
        out.stderr.starts_with("error[TailCollapse]"),
        "{}",
        out.stderr
    );
}

#[test]
fn measure_handles_both_tail_kinds() {
    let dir = tempfile::tempdir().unwrap();
    let periodic = write_params(&dir, "periodic.json", &all_levels(lvl(2, &[1])));
    let out = r1(
        &["r1", "measure", "--params", &periodic, "--level", "2"],
        b"",
    );
    assert_eq!(out.exit_code, 0);
    assert!(
        out.stdout.contains("normalizer: exact 2\n"),
        "{}",
        out.stdout
    );
    assert!(out.stdout.contains("zero measure: 1/2"));
    assert!(out.stdout.contains("cylinder measure 1/8, tower mass 7/8"));

    let prefix_only = write_params(&dir, "prefix.json", &chacon2(3));
    let out = r1(
        &["r1", "measure", "--params", &prefix_only, "--level", "3"],
        b"",
    );
    assert_eq!(out.exit_code, 0);
    assert!(out
        .stdout
        .contains("normalizer: at least 3/2 (prefix depth 3)"));
    assert!(out.stdout.contains("partial normalizer 3/2"));
    assert!(!out.stdout.contains("cylinder"));
}

#[test]
fn conditions_reports_canonical_violations_without_refusing() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_params(&dir, "p.json", &all_levels(lvl(2, &[1])));
    let out = r1(&["r1", "conditions", "--params", &path], b"");
    assert_eq!(out.exit_code, 0);
    assert!(out.stdout.contains("canonical-necessary: fails at level 0"));
    assert!(out.stdout.contains("distinct-spacers: fails on the tail"));
}

#[test]
fn witness_requires_recurring_asymmetry() {
    let dir = tempfile::tempdir().unwrap();
    let asym = write_params(&dir, "asym.json", &all_levels(lvl(3, &[0, 1])));
    let out = r1(&["r1", "witness", "--params", &asym, "--json"], b"");
    assert_eq!(out.exit_code, 0, "{}", out.stderr);
    let report: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert!(report["payload"]["telescoped"]["tail"]["cycle"].is_array());

    let palin = write_params(
        &dir,
        "palin.json",
        &ParamSpec::periodic(vec![lvl(2, &[2]), lvl(4, &[0, 1, 0])]).unwrap(),
    );
    let out = r1(&["r1", "witness", "--params", &palin], b"");
    assert_eq!(out.exit_code, 1);
    assert!(
        out.stderr.starts_with("error[NoRecurringAsymmetry]"),
        "{}",
        out.stderr
    );
}

#[test]
fn verify_cert_rejects_tampered_certificates() {
    let dir = tempfile::tempdir().unwrap();
    let params_path = write_params(&dir, "p.json", &all_levels(lvl(3, &[0, 1])));
    let cert_path = dir.path().join("cert.json");
    let out = r1(
        &[
            "r1",
            "decide",
            "--params",
            &params_path,
            "--cert-out",
            cert_path.to_str().unwrap(),
        ],
        b"",
    );
    assert_eq!(out.exit_code, 0, "{}", out.stderr);

    let verify = r1(
        &[
            "r1",
            "verify-cert",
            "--params",
            &params_path,
            "--cert",
            cert_path.to_str().unwrap(),
        ],
        b"",
    );
    assert_eq!(verify.exit_code, 0, "{}", verify.stderr);
    assert!(verify.stdout.contains("certificate verified"));

    // flip one entry of the combined tuple
    let mut cert: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&cert_path).unwrap()).unwrap();
    cert["entries"][0]["combined_s"][0] = serde_json::json!(9);
    std::fs::write(&cert_path, serde_json::to_string(&cert).unwrap()).unwrap();
    let verify = r1(
        &[
            "r1",
            "verify-cert",
            "--params",
            &params_path,
            "--cert",
            cert_path.to_str().unwrap(),
        ],
        b"",
    );
    assert_eq!(verify.exit_code, 1);
    assert!(
        verify.stderr.starts_with("error[VerificationFailed]"),
        "{}",
        verify.stderr
    );
}

#[test]
fn sweep_runs_clean_with_laws() {
    let out = r1(
        &[
            "r1", "sweep", "--rmax", "3", "--smax", "2", "--laws", "--json",
        ],
        b"",
    );
    assert_eq!(out.exit_code, 0, "{}", out.stderr);
    let report: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(report["payload"]["counterexamples"], serde_json::json!([]));
    assert!(report["payload"]["pairs_checked"].as_u64().unwrap() > 0);
    assert!(report["payload"]["laws"]["associativity"].as_u64().unwrap() > 0);
}

#[test]
fn json_errors_are_structured() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.json");
    std::fs::write(&path, b"{not json").unwrap();
    let out = r1(
        &[
            "r1",
            "word",
            "--params",
            path.to_str().unwrap(),
            "--level",
            "1",
            "--json",
        ],
        b"",
    );
    assert_eq!(out.exit_code, 1);
    let error: serde_json::Value = serde_json::from_str(&out.stderr).unwrap();
    assert_eq!(error["error"]["name"], "InvalidParams");
}
