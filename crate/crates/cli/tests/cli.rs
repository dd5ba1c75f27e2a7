use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn fixtures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_unicoder"))
        .args(args)
        .env_remove("UNICODER_API_KEY")
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn s(path: &Path) -> &str {
    path.to_str().unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

#[test]
fn parse_prints_canonical_text() {
    let program = fixtures().join("corpus/programs/add.uc");
    let out = run(&["parse", s(&program)]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    assert!(stdout(&out).contains("FUNCTION"));
}

#[test]
fn syntax_error_exits_one_with_position() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.uc", "FUNCTION f(x)\n    RETURN x +\nEND FUNCTION\n");
    let out = run(&["parse", s(&bad)]);
    assert_eq!(code(&out), 1);
    assert!(stderr(&out).contains("bad.uc:2:"), "{}", stderr(&out));
}

#[test]
fn missing_input_is_a_usage_error() {
    let out = run(&["parse", "/nonexistent/file.uc"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn unknown_flag_and_target_are_usage_errors() {
    let program = fixtures().join("corpus/programs/add.uc");
    assert_eq!(code(&run(&["parse", "--frobnicate", s(&program)])), 2);
    assert_eq!(code(&run(&["transpile", s(&program), "--target", "cobol"])), 2);
}

#[test]
fn natural_step_cannot_be_transpiled() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(
        dir.path(),
        "plan.uc",
        "FUNCTION plan(items)\n    // rank the items\n    DO: sort the items by their relevance to the user\n    RETURN items\nEND FUNCTION\n",
    );
    let parsed = run(&["parse", s(&file)]);
    assert_eq!(code(&parsed), 0, "{}", stderr(&parsed));
    let out = run(&["transpile", s(&file), "--target", "python"]);
    assert_eq!(code(&out), 1);
    assert!(stderr(&out).contains("SubsetViolation"), "{}", stderr(&out));
}

#[test]
fn transpile_writes_code() {
    let dir = tempfile::tempdir().unwrap();
    let program = fixtures().join("corpus/programs/add.uc");
    let target = dir.path().join("nested/add.go");
    let out = run(&["transpile", s(&program), "--target", "go", "--out", s(&target)]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    assert!(std::fs::read_to_string(target).unwrap().contains("func add"));
}

#[test]
fn validator_failures_exit_one() {
    let fixture = fixtures().join("validator/r3_io_call.uc");
    let out = run(&["validate", s(&fixture)]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("R3"));
    let clean = run(&["validate", s(&fixture), "--profile", "R1,R2"]);
    assert_eq!(code(&clean), 0, "{}", stdout(&clean));
}

#[test]
fn json_output_is_a_single_document() {
    let fixture = fixtures().join("validator/r3_io_call.uc");
    let out = run(&["--json", "validate", s(&fixture)]);
    assert_eq!(code(&out), 1);
    let report: Value = serde_json::from_str(&stdout(&out)).expect("one JSON document");
    assert!(report["diagnostics"].as_array().is_some_and(|d| !d.is_empty()));

    let missing = run(&["--json", "parse", "/nonexistent.uc"]);
    let error: Value = serde_json::from_str(&stdout(&missing)).unwrap();
    assert_eq!(error["exit_code"], 2);
}

#[test]
fn record_mode_without_credential_is_an_environment_error() {
    let dir = tempfile::tempdir().unwrap();
    let question = fixtures().join("uot/question.md");
    let cache = dir.path().join("cache.jsonl");
    let out = run(&["uot", "--question-file", s(&question), "--record", s(&cache)]);
    assert_eq!(code(&out), 3);
    assert!(stderr(&out).contains("UNICODER_API_KEY"));
}

#[test]
fn missing_replay_cache_is_a_usage_error() {
    let question = fixtures().join("uot/question.md");
    let out = run(&["uot", "--question-file", s(&question), "--replay", "/nonexistent/cache.jsonl"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn uot_replays_both_stages() {
    let dir = tempfile::tempdir().unwrap();
    let question = fixtures().join("uot/question.md");
    let cache = fixtures().join("replay/uot.jsonl");
    let code_out = dir.path().join("answer.py");
    let out = run(&["uot", "--question-file", s(&question), "--replay", s(&cache), "--code-out", s(&code_out)]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    assert!(std::fs::read_to_string(code_out).unwrap().contains("def "));

    let miss = run(&["uot", "--question-file", s(&question), "--replay", s(&cache), "--target", "cpp"]);
    assert_eq!(code(&miss), 1);
    assert!(stderr(&miss).contains("stage 2"), "{}", stderr(&miss));
}

#[test]
fn empty_corpus_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "manifest.json", "{\"programs\": []}");
    let out = run(&["roundtrip", "--corpus", s(dir.path())]);
    assert_eq!(code(&out), 2, "{}", stderr(&out));
}

#[test]
fn eval_reports_pass_at_k() {
    let bench = fixtures().join("benchmarks");
    let out = run(&[
        "--json",
        "eval",
        "--benchmark",
        s(&bench.join("humaneval_style.jsonl")),
        "--format",
        "humaneval",
        "--samples",
        s(&bench.join("humaneval_style_candidates.jsonl")),
        "--k",
        "1,4",
    ]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let report: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let scores = report["scores"].as_array().unwrap();
    assert_eq!(scores.len(), 2);
    assert!((scores[0]["pass_at_k"].as_f64().unwrap() - 0.7).abs() < 1e-9);
    assert!((scores[1]["pass_at_k"].as_f64().unwrap() - 1.0).abs() < 1e-9);
}

#[test]
fn probe_reports_backend_and_toolchains() {
    let out = run(&["--json", "probe"]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let report: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(report["toolchains"]["python"].is_string());
    assert!(report["gateway"]["mode"].is_string());
}

#[test]
fn unknown_config_key_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let config = write(dir.path(), "unicoder.toml", "[gateway]\nmode = \"replay\"\nsurprise = 1\n");
    let out = run(&["--config", s(&config), "probe"]);
    assert_ne!(code(&out), 0);
}
