//! End-to-end runs of the `ranklab` binary: flag handling, exit codes,
//! determinism of the emitted documents, and agreement with the shipped
//! schemas.

use std::path::PathBuf;
use std::process::{Command, Output};

use ranklab::matrix::Matrix;
use ranklab::report::validate_against_schema;
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ranklab"))
        .args(args)
        .env_remove("RANKLAB_SEED")
        .output()
        .expect("binary runs")
}

fn stdout_json(output: &Output) -> Value {
    serde_json::from_slice(&output.stdout).expect("stdout is one JSON document")
}

fn schema(name: &str) -> Value {
    let text = match name {
        "report" => include_str!("../../../schema/report.schema.json"),
        _ => include_str!("../../../schema/certification.schema.json"),
    };
    serde_json::from_str(text).expect("schema parses")
}

fn scratch(name: &str) -> PathBuf {
    let mut path = std::env::temp_dir();
    path.push(format!("ranklab-cli-{}-{name}", std::process::id()));
    path
}

#[test]
fn check_runs_are_deterministic_and_well_formed() {
    let args = ["check", "--entries", "v31,w3", "--dims", "2..4", "--trials", "5", "--seed", "7"];
    let first = run(&args);
    let second = run(&args);
    assert!(first.status.success(), "{}", String::from_utf8_lossy(&first.stderr));
    assert_eq!(first.stdout, second.stdout, "same flags, same bytes");
    assert_eq!(first.stdout.last(), Some(&b'\n'));

    let doc = stdout_json(&first);
    validate_against_schema(&doc, &schema("report")).expect("report matches the schema");
    let entries = doc["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 2);
    for entry in entries {
        // Three dimensions, five trials each, nothing skipped or failed.
        assert_eq!(entry["passes"], 15, "entry {}", entry["id"]);
        assert_eq!(entry["fails"], 0);
        assert_eq!(entry["misses"], 0);
    }
}

#[test]
fn usage_mistakes_exit_with_code_two() {
    for args in [
        vec!["check", "--entries", "nosuch"],
        // v36 needs a root the rationals lack, so forcing radicand 0 conflicts.
        vec!["check", "--entries", "v36", "--field", "0"],
        vec!["check", "--dims", "4..2"],
        vec!["check", "--dims", "2..11"],
        vec!["extremal", "--family", "nosuchfamily"],
        vec!["gen", "--kind", "idempotent-pair", "--m", "3", "--ranks", "4,1"],
        vec!["gen", "--kind", "equation-system", "--m", "3"],
    ] {
        let output = run(&args);
        assert_eq!(output.status.code(), Some(2), "args {args:?}");
        assert!(output.stdout.is_empty(), "no partial document for {args:?}");
    }
}

#[test]
fn extremal_certifications_validate_and_stay_clean() {
    let output = run(&[
        "extremal", "--family", "TN44", "--dims", "2..3", "--trials", "4", "--instances", "2",
        "--seed", "3",
    ]);
    assert!(output.status.success(), "{}", String::from_utf8_lossy(&output.stderr));
    let doc = stdout_json(&output);
    validate_against_schema(&doc, &schema("certification")).expect("matches the schema");
    // Five lambda regimes, two dimensions, two instances each.
    assert_eq!(doc["records"].as_array().unwrap().len(), 20);
    assert_eq!(doc["violations"], 0);
    let text = String::from_utf8_lossy(&output.stdout);
    for key in ["\"maxAttained\"", "\"minAttained\"", "\"trials\"", "\"seed\""] {
        assert!(text.contains(key), "published key {key} missing");
    }
}

#[test]
fn generated_instances_verify_and_round_trip() {
    let output = run(&["gen", "--kind", "idempotent-pair", "--m", "3", "--ranks", "1,2", "--seed", "9"]);
    assert!(output.status.success());
    let line = stdout_json(&output);
    assert_eq!(line["verified"], true);
    let mats: Vec<Matrix> = line["matrices"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| Matrix::from_json(v).expect("matrix JSON round-trips"))
        .collect();
    assert!(mats.iter().all(Matrix::is_idempotent));
    assert_eq!(mats.iter().map(Matrix::rank).collect::<Vec<_>>(), vec![1, 2]);

    // Rank 0 and full rank pin the projectors down exactly.
    let output = run(&["gen", "--kind", "projector-pair", "--m", "2", "--ranks", "0,2", "--seed", "4"]);
    let line = stdout_json(&output);
    let mats: Vec<Matrix> = line["matrices"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| Matrix::from_json(v).unwrap())
        .collect();
    let field = mats[0].field();
    assert_eq!(mats[0], Matrix::zeros(2, 2, field));
    assert_eq!(mats[1], Matrix::identity(2, field));

    let output = run(&["gen", "--kind", "star-pair", "--m", "2", "--seed", "5"]);
    let line = stdout_json(&output);
    let mats: Vec<Matrix> = line["matrices"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| Matrix::from_json(v).unwrap())
        .collect();
    assert_eq!(mats[1], mats[0].conj_transpose());
}

#[test]
fn gen_streams_are_deterministic() {
    let args = [
        "gen", "--kind", "equation-system", "--system", "z11", "--m", "3", "--count", "3",
        "--seed", "6",
    ];
    let first = run(&args);
    let second = run(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(first.stdout.iter().filter(|&&b| b == b'\n').count(), 3, "one line per instance");
    for line in first.stdout.split(|&b| b == b'\n').filter(|l| !l.is_empty()) {
        let doc: Value = serde_json::from_slice(line).unwrap();
        assert_eq!(doc["system"], "z11");
        assert_eq!(doc["verified"], true);
        assert_eq!(doc["matrices"].as_array().unwrap().len(), 4);
    }
}

#[test]
fn report_command_judges_documents_by_the_schema() {
    let path = scratch("verdict.json");
    let written = run(&[
        "check", "--entries", "hh21", "--dims", "2..2", "--trials", "2", "--seed", "1", "--out",
        path.to_str().unwrap(),
    ]);
    assert!(written.status.success());
    assert!(written.stdout.is_empty(), "--out moves the document off stdout");

    let verdict = run(&["report", path.to_str().unwrap()]);
    assert_eq!(verdict.status.code(), Some(0));
    assert_eq!(stdout_json(&verdict)["valid"], true);

    // Retype one field and the same command must reject the document.
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::write(&path, text.replace("\"seed\":1", "\"seed\":\"1\"")).unwrap();
    let verdict = run(&["report", path.to_str().unwrap()]);
    assert_eq!(verdict.status.code(), Some(1));
    assert_eq!(stdout_json(&verdict)["valid"], false);
    std::fs::remove_file(&path).ok();

    let missing = run(&["report", "/nonexistent/ranklab.json"]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn the_seed_env_var_backs_the_flag() {
    let with_flag = run(&["check", "--entries", "z2", "--dims", "2..2", "--trials", "2", "--seed", "11"]);
    let with_env = Command::new(env!("CARGO_BIN_EXE_ranklab"))
        .args(["check", "--entries", "z2", "--dims", "2..2", "--trials", "2"])
        .env("RANKLAB_SEED", "11")
        .output()
        .expect("binary runs");
    assert_eq!(with_flag.stdout, with_env.stdout);

    let bad = Command::new(env!("CARGO_BIN_EXE_ranklab"))
        .args(["check", "--entries", "z2"])
        .env("RANKLAB_SEED", "eleven")
        .output()
        .expect("binary runs");
    assert_eq!(bad.status.code(), Some(2));
}
