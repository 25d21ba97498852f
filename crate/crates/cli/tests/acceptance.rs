//! Acceptance criterion 7: the CLI contract. The three documented
//! invocations produce the stated exit codes and values, and the graph6
//! round-trip holds for 100 seeded random graphs.

use std::path::Path;
use std::process::{Command, Output};

use smd_core::corpus::random_connected_graph;
use smd_core::io::{encode_graph6, parse_graph6};

fn smd(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_smd"))
        .args(args)
        .current_dir(dir)
        .env("SMD_REPORT_DIR", dir)
        .output()
        .expect("binary runs")
}

fn stdout_lines(out: &Output) -> Vec<String> {
    String::from_utf8(out.stdout.clone())
        .expect("stdout is utf-8")
        .lines()
        .map(str::to_string)
        .collect()
}

fn value_of<'a>(lines: &'a [String], key: &str) -> &'a str {
    lines
        .iter()
        .find_map(|l| l.strip_prefix(&format!("{key}=")))
        .unwrap_or_else(|| panic!("no {key}= line in {lines:?}"))
}

#[test]
fn criterion_7_cli_contract() {
    let mut failures: Vec<String> = Vec::new();
    let tmp = tempfile::tempdir().unwrap();
    let dir = tmp.path();

    // family C:7 then sdim -> 4, exit 0
    let fam = smd(dir, &["family", "--spec", "C:7", "--out", "c7.el"]);
    if fam.status.code() != Some(0) {
        failures.push(format!("family exit code {:?}", fam.status.code()));
    }
    let sd = smd(dir, &["sdim", "--in", "c7.el"]);
    let lines = stdout_lines(&sd);
    if sd.status.code() != Some(0) || value_of(&lines, "dim_s") != "4" {
        failures.push(format!(
            "sdim on C_7: exit {:?}, stdout {lines:?}",
            sd.status.code()
        ));
    }
    if value_of(&lines, "method") != "sr_reduction" {
        failures.push("sdim method line missing".to_string());
    }

    // verify hamming over k=2..3, n=2..3 -> exit 0
    let ver = smd(
        dir,
        &["verify", "--theorem", "hamming", "--range", "k=2..3,n=2..3"],
    );
    let lines = stdout_lines(&ver);
    if ver.status.code() != Some(0) || value_of(&lines, "all_pass") != "true" {
        failures.push(format!(
            "verify hamming: exit {:?}, stdout {lines:?}",
            ver.status.code()
        ));
    }
    if !dir.join("hamming.json").exists() || !dir.join("hamming.csv").exists() {
        failures.push("verify did not write reports into SMD_REPORT_DIR".to_string());
    }

    // disconnected input -> exit 2 with the exact message
    std::fs::write(dir.join("disconnected.el"), "4 2\n0 1\n2 3\n").unwrap();
    let bad = smd(dir, &["sdim", "--in", "disconnected.el"]);
    let stderr = String::from_utf8(bad.stderr.clone()).unwrap();
    if bad.status.code() != Some(2) || !stderr.contains("graph is not connected") {
        failures.push(format!(
            "disconnected input: exit {:?}, stderr {stderr:?}",
            bad.status.code()
        ));
    }

    // graph6 round-trip for 100 seeded random graphs
    for seed in 0..100u64 {
        let n = 3 + (seed % 10) as usize;
        let g = random_connected_graph(n, seed);
        let encoded = encode_graph6(&g).unwrap();
        let back = parse_graph6(&encoded).unwrap();
        if back != g {
            failures.push(format!("graph6 round-trip broke at n={n}, seed={seed}"));
        }
    }

    if failures.is_empty() {
        println!("criterion 7 (CLI contract and graph6 round-trip): PASS");
    } else {
        println!("criterion 7 (CLI contract and graph6 round-trip): FAIL");
        panic!("criterion 7: {}", failures.join("\n"));
    }
}

#[test]
fn stdout_is_deterministic_and_machine_parseable() {
    let tmp = tempfile::tempdir().unwrap();
    let dir = tmp.path();
    smd(dir, &["family", "--spec", "B(K:3,P:4)", "--out", "g.el"]);
    let a = smd(dir, &["sdim", "--in", "g.el"]);
    let b = smd(dir, &["sdim", "--in", "g.el"]);
    assert_eq!(a.stdout, b.stdout, "identical invocations differ");
    for line in stdout_lines(&a) {
        assert!(line.contains('='), "not key=value: {line:?}");
    }
}

#[test]
fn oracle_cross_checks_sdim_through_the_cli() {
    let tmp = tempfile::tempdir().unwrap();
    let dir = tmp.path();
    for spec in ["C:6", "Kb:2,3", "CR:8,2", "X(P:3,K:3)"] {
        smd(dir, &["family", "--spec", spec, "--out", "g.el"]);
        let fast = smd(dir, &["sdim", "--in", "g.el"]);
        let slow = smd(dir, &["oracle", "--in", "g.el"]);
        assert_eq!(fast.status.code(), Some(0), "{spec}");
        assert_eq!(slow.status.code(), Some(0), "{spec}");
        assert_eq!(
            value_of(&stdout_lines(&fast), "dim_s"),
            value_of(&stdout_lines(&slow), "dim_s"),
            "{spec}"
        );
    }
}

#[test]
fn exit_codes_for_usage_limit_and_verification() {
    let tmp = tempfile::tempdir().unwrap();
    let dir = tmp.path();

    let usage = smd(dir, &["verify", "--theorem", "not_a_theorem"]);
    assert_eq!(usage.status.code(), Some(1));

    let usage = smd(dir, &["family", "--spec", "Z:9", "--out", "x.el"]);
    assert_eq!(usage.status.code(), Some(1));

    smd(dir, &["family", "--spec", "C:12", "--out", "c12.el"]);
    let limit = smd(dir, &["oracle", "--in", "c12.el"]);
    assert_eq!(limit.status.code(), Some(3));
    let lifted = smd(dir, &["oracle", "--in", "c12.el", "--limit-oracle", "12"]);
    assert_eq!(lifted.status.code(), Some(0));
    assert_eq!(value_of(&stdout_lines(&lifted), "dim_s"), "6");

    let failing = smd(
        dir,
        &[
            "verify",
            "--theorem",
            "cr_times_kt",
            "--range",
            "r=8..8,t=3..3",
        ],
    );
    assert_eq!(failing.status.code(), Some(4));

    let malformed = smd(dir, &["sdim", "--in", "missing-file.el"]);
    assert_eq!(malformed.status.code(), Some(2));
}

#[test]
fn srgraph_output_round_trips_with_mapping_header() {
    let tmp = tempfile::tempdir().unwrap();
    let dir = tmp.path();
    smd(dir, &["family", "--spec", "P:6", "--out", "p6.el"]);
    let sr = smd(dir, &["srgraph", "--in", "p6.el", "--out", "p6sr.el"]);
    assert_eq!(sr.status.code(), Some(0));
    let text = std::fs::read_to_string(dir.join("p6sr.el")).unwrap();
    assert!(
        text.starts_with("# 0 = 0\n# 1 = 5\n"),
        "mapping header:\n{text}"
    );
    // the emitted file is itself valid edge-list input
    let reread = smd(dir, &["sdim", "--in", "p6sr.el"]);
    assert_eq!(reread.status.code(), Some(0));
}

#[test]
fn verify_jobs_flag_is_deterministic() {
    let tmp = tempfile::tempdir().unwrap();
    let dir = tmp.path();
    let one = smd(dir, &["verify", "--theorem", "kr_times_kt", "--jobs", "1"]);
    let json_one = std::fs::read_to_string(dir.join("kr_times_kt.json")).unwrap();
    let four = smd(dir, &["verify", "--theorem", "kr_times_kt", "--jobs", "4"]);
    let json_four = std::fs::read_to_string(dir.join("kr_times_kt.json")).unwrap();
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(four.status.code(), Some(0));
    assert_eq!(one.stdout, four.stdout);
    assert_eq!(json_one, json_four);
}

#[test]
fn product_command_matches_direct_construction() {
    let tmp = tempfile::tempdir().unwrap();
    let dir = tmp.path();
    let out = smd(
        dir,
        &[
            "product",
            "--kind",
            "cartesian",
            "--a",
            "K:2",
            "--b",
            "K:2",
            "--out",
            "c4.el",
        ],
    );
    let lines = stdout_lines(&out);
    assert_eq!(value_of(&lines, "vertices"), "4");
    assert_eq!(value_of(&lines, "edges"), "4");
    let direct = smd(
        dir,
        &[
            "product", "--kind", "direct", "--a", "K:2", "--b", "K:2", "--out", "k2k2.el",
        ],
    );
    let lines = stdout_lines(&direct);
    assert_eq!(value_of(&lines, "edges"), "2");
    // disconnected direct product is fine to build but sdim rejects it
    let sd = smd(dir, &["sdim", "--in", "k2k2.el"]);
    assert_eq!(sd.status.code(), Some(2));
}
