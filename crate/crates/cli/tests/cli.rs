//! End-to-end tests of the `btile` binary: exit codes, stream separation,
//! persistence, and byte determinism.

use std::path::Path;
use std::process::{Command, Output};

const LINE_PLUS: &str = r#"{"dim":1,"coords":[{"pre":[],"period":[1]}]}"#;
const LINE_ALT: &str = r#"{"dim":1,"coords":[{"pre":[],"period":[1,-1]}]}"#;
const PLANE_MIXED: &str = r#"{"dim":2,"coords":[{"pre":[],"period":[1]},{"pre":[],"period":[-1]}]}"#;

fn btile(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_btile"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn stdout_str(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is utf-8")
}

fn stderr_str(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("stderr is utf-8")
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_str(&stdout_str(out)).expect("stdout is JSON")
}

#[test]
fn pools_reports_walls_and_count() {
    let dir = tempfile::tempdir().unwrap();
    let out = btile(dir.path(), &["pools", "--inline", LINE_PLUS]);
    assert!(out.status.success(), "stderr: {}", stderr_str(&out));
    let v = json(&out);
    assert_eq!(v["pool_count"], 2);
    assert_eq!(v["k"], 1);
    assert_eq!(v["walls"][0]["position"], "-1");
    assert_eq!(v["walls"][0]["bounded_side"], "below");
}

#[test]
fn symmetry_reports_group_labels() {
    let dir = tempfile::tempdir().unwrap();
    let out = btile(dir.path(), &["symmetry", "--inline", LINE_PLUS]);
    assert!(out.status.success());
    assert_eq!(json(&out)["group"], "Z x B1");

    let out = btile(dir.path(), &["symmetry", "--inline", LINE_ALT]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["group"], "Z");
    assert_eq!(v["fundamental_domain"], "1 ring");
}

#[test]
fn spec_can_come_from_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("two-pools.json");
    std::fs::write(&path, LINE_PLUS).unwrap();
    let out = btile(dir.path(), &["symmetry", "--spec", "two-pools.json"]);
    assert!(out.status.success());
    assert_eq!(json(&out)["group"], "Z x B1");

    let out = btile(dir.path(), &["symmetry", "--spec", "no-such-file.json"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_str(&out).contains("i/o error"));
}

#[test]
fn census_prints_the_doubling_column_and_persists() {
    let dir = tempfile::tempdir().unwrap();
    let out = btile(
        dir.path(),
        &["census", "--inline", LINE_PLUS, "--k", "1..4", "--half-width", "16"],
    );
    assert!(out.status.success(), "stderr: {}", stderr_str(&out));
    let reports = json(&out);
    let counts: Vec<u64> = reports
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["N_k"].as_u64().unwrap())
        .collect();
    assert_eq!(counts, vec![1, 2, 4, 8]);

    // One file per radius in the default store.
    let store = dir.path().join("btile-census");
    let mut files: Vec<String> = std::fs::read_dir(&store)
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    files.sort();
    assert_eq!(files.len(), 4);
    assert!(files[0].starts_with("census-") && files[0].ends_with("-k1-L0-w16.json"));

    // A clobbered store entry is recomputed, not trusted.
    let victim = store.join(&files[0]);
    std::fs::write(&victim, "not json at all").unwrap();
    let again = btile(
        dir.path(),
        &["census", "--inline", LINE_PLUS, "--k", "1..4", "--half-width", "16"],
    );
    assert!(again.status.success());
    assert_eq!(stdout_str(&again), stdout_str(&out), "byte-identical reruns");
    assert!(stderr_str(&again).contains("recomputing stale census file"));
    let healed: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&victim).unwrap()).unwrap();
    assert_eq!(healed["N_k"], 1);

    // --no-store leaves the directory untouched.
    let fresh = tempfile::tempdir().unwrap();
    let out = btile(
        fresh.path(),
        &["census", "--inline", LINE_PLUS, "--k", "1..2", "--half-width", "16", "--no-store"],
    );
    assert!(out.status.success());
    assert!(!fresh.path().join("btile-census").exists());
}

#[test]
fn local_theorem_verdict_and_expectation() {
    let dir = tempfile::tempdir().unwrap();
    let out = btile(
        dir.path(),
        &["local-theorem", "--inline", LINE_PLUS, "--k", "0..2", "--half-width", "16"],
    );
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["verdict"], "non-crystallographic");
    assert_eq!(v["condition"], 2);
    assert_eq!(v["k"], 0);

    let ok = btile(
        dir.path(),
        &[
            "local-theorem",
            "--inline",
            LINE_PLUS,
            "--k",
            "0..2",
            "--half-width",
            "16",
            "--expect",
            "non-crystallographic",
        ],
    );
    assert_eq!(ok.status.code(), Some(0));

    let bad = btile(
        dir.path(),
        &[
            "local-theorem",
            "--inline",
            LINE_PLUS,
            "--k",
            "0..2",
            "--half-width",
            "16",
            "--expect",
            "crystallographic",
        ],
    );
    assert_eq!(bad.status.code(), Some(1));
    // The verdict still lands on stdout; the complaint goes to stderr.
    assert_eq!(json(&bad)["verdict"], "non-crystallographic");
    assert!(stderr_str(&bad).contains("expectation failed"));
}

#[test]
fn window_dumps_the_complex() {
    let dir = tempfile::tempdir().unwrap();
    let out = btile(
        dir.path(),
        &["window", "--inline", LINE_PLUS, "--layers", "0..0", "--half-width", "1"],
    );
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["nodes"].as_array().unwrap().len(), 1);
    assert_eq!(v["nodes"][0], serde_json::json!([0, 0]));
    assert_eq!(v["edges"].as_array().unwrap().len(), 0);

    // Box (-7, 7): seven layer-0 cells, four layer-1 cells; six + three
    // horocyclic contacts plus seven parent-child contacts.
    let out = btile(
        dir.path(),
        &["window", "--inline", LINE_PLUS, "--layers", "0..1", "--half-width", "7"],
    );
    let v = json(&out);
    assert_eq!(v["nodes"].as_array().unwrap().len(), 11);
    assert_eq!(v["edges"].as_array().unwrap().len(), 16);
}

#[test]
fn render_writes_svg_and_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let args = [
        "render",
        "--inline",
        LINE_ALT,
        "--layers",
        "0..2",
        "--half-width",
        "9",
        "--style",
        "pool-fill=on",
        "--style",
        "scale=32",
    ];
    let a = btile(dir.path(), &args);
    assert!(a.status.success(), "stderr: {}", stderr_str(&a));
    let svg = stdout_str(&a);
    assert!(svg.starts_with("<svg "));
    assert!(svg.trim_end().ends_with("</svg>"));
    let b = btile(dir.path(), &args);
    assert_eq!(a.stdout, b.stdout, "same flags, same bytes");

    // --out writes the same bytes to a file instead.
    let target = dir.path().join("figure.svg");
    let mut with_out: Vec<&str> = args.to_vec();
    with_out.push("--out");
    let target_str = target.to_str().unwrap();
    with_out.push(target_str);
    let c = btile(dir.path(), &with_out);
    assert!(c.status.success());
    assert!(stdout_str(&c).is_empty());
    assert_eq!(std::fs::read(&target).unwrap(), a.stdout);
}

#[test]
fn render_rejects_plane_models_beyond_dimension_one() {
    let dir = tempfile::tempdir().unwrap();
    let out = btile(
        dir.path(),
        &[
            "render",
            "--inline",
            PLANE_MIXED,
            "--layers",
            "0..0",
            "--half-width",
            "3",
            "--model",
            "disc",
        ],
    );
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_str(&out).contains("not supported for d = 2"));

    // The footprint diagram is the d = 2 rendering.
    let out = btile(
        dir.path(),
        &[
            "render",
            "--inline",
            PLANE_MIXED,
            "--layers",
            "0..0",
            "--half-width",
            "3",
            "--model",
            "footprint",
        ],
    );
    assert!(out.status.success());
    assert!(stdout_str(&out).contains("<rect"));
}

#[test]
fn verify_passes_and_prints_check_lines() {
    let dir = tempfile::tempdir().unwrap();
    let out = btile(dir.path(), &["verify", "--inline", LINE_ALT]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_str(&out);
    assert!(text.contains("check address-round-trip: pass"));
    assert!(text.contains("check census-bookkeeping: pass"));
    assert!(!text.contains("FAIL"));
}

#[test]
fn parse_and_validation_failures_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    // Malformed JSON: a parse error.
    let out = btile(dir.path(), &["pools", "--inline", r#"{"dim":1"#]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_str(&out).contains("parse error"));

    // Well-formed JSON with an illegal value: a validation error.
    let out = btile(
        dir.path(),
        &["pools", "--inline", r#"{"dim":1,"coords":[{"pre":[],"period":[]}]}"#],
    );
    assert_eq!(out.status.code(), Some(2));
    let err = stderr_str(&out);
    assert!(err.contains("invalid spec") && err.contains("empty period"), "got: {err}");

    // Letters outside the alphabet.
    let out = btile(
        dir.path(),
        &["pools", "--inline", r#"{"dim":1,"coords":[{"pre":[],"period":[2]}]}"#],
    );
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_str(&out).contains("not -1 or +1"));

    // Usage errors (unknown flags, missing arguments) also exit 2.
    let out = btile(dir.path(), &["pools"]);
    assert_eq!(out.status.code(), Some(2));
    let out = btile(dir.path(), &["census", "--inline", LINE_PLUS, "--k", "8..1", "--half-width", "16"]);
    assert_eq!(out.status.code(), Some(2));

    // Census windows too small for the radius are validation errors.
    let out = btile(
        dir.path(),
        &["census", "--inline", LINE_PLUS, "--k", "6..6", "--half-width", "4"],
    );
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_str(&out).contains("window holds 8 cells"));

    let out = btile(
        dir.path(),
        &["census", "--inline", LINE_PLUS, "--k", "3..3", "--half-width", "0"],
    );
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_str(&out).contains("half-width must be positive"));
}

#[test]
fn finite_word_specs_flow_through() {
    let dir = tempfile::tempdir().unwrap();
    let word = r#"{"dim":1,"word":[[1],[-1],[-1],[1]]}"#;
    let out = btile(dir.path(), &["symmetry", "--inline", word, "--assume-aperiodic"]);
    assert!(out.status.success(), "stderr: {}", stderr_str(&out));
    let v = json(&out);
    assert_eq!(v["group"], "trivial");
    assert_eq!(v["fundamental_domain"], "whole space");

    // Pool analysis needs the infinite tail.
    let out = btile(dir.path(), &["pools", "--inline", word]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_str(&out).contains("eventually periodic"));
}
