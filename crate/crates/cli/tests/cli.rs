use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(name)
}

fn vca(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_vca"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).expect("utf-8 output"),
    )
}

fn json_run(command: &str, file: Option<&str>, extra: &[&str]) -> (i32, Value) {
    let path = file.map(|f| data(f).to_string_lossy().into_owned());
    let mut args = vec![command, "--format", "json"];
    if let Some(p) = &path {
        args.push(p);
    }
    args.extend_from_slice(extra);
    let (code, out) = vca(&args);
    (code, serde_json::from_str(&out).expect("valid json"))
}

fn validator() -> jsonschema::Validator {
    let schema: Value = serde_json::from_str(include_str!("../schema/run-report.schema.json")).unwrap();
    jsonschema::validator_for(&schema).expect("schema compiles")
}

#[test]
fn tu_check_triangle() {
    let (code, r) = json_run("tu-check", Some("triangle.hg"), &[]);
    assert_eq!(code, 1);
    assert_eq!(r["verdict"], "refuted");
    assert_eq!(r["result"]["witness"]["determinant"], "-2");
    assert_eq!(r["result"]["witness"]["rows"], serde_json::json!([1, 2, 3]));
}

#[test]
fn blocker_example() {
    let (code, r) = json_run("blocker", Some("example.hg"), &[]);
    assert_eq!(code, 0);
    assert_eq!(
        r["result"]["edges"],
        serde_json::json!([[1, 2, 3], [1, 4], [1, 5, 6], [2, 4, 6], [2, 5], [3, 4, 5], [3, 6]])
    );
}

#[test]
fn standard_graded_triangle() {
    let (code, r) = json_run("standard-graded", Some("triangle.hg"), &["--max-k", "2"]);
    assert_eq!(code, 1);
    assert_eq!(r["result"]["failing_cover"], serde_json::json!({"c": [1, 1, 1], "k": 2}));
    let (code, _) = json_run("standard-graded", Some("four_cycle.hg"), &[]);
    assert_eq!(code, 0);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(vca(&["no-such-command"]).0, 2);
    assert_eq!(vca(&["blocker", "--no-such-flag"]).0, 2);
    let (code, r) = json_run("blocker", None, &[]);
    assert_eq!(code, 2);
    assert_eq!(r["verdict"], "error");
    let (code, _) = json_run("decompose", Some("triangle.hg"), &["--cover", "1,0,0", "--k", "1"]);
    assert_eq!(code, 2);
    let (code, _) = json_run("blocker", Some("triangle.hg"), &["--weights", "1,2"]);
    assert_eq!(code, 2);
    let missing = vca(&["blocker", "/nonexistent/file.hg"]);
    assert_eq!(missing.0, 2);
}

#[test]
fn parse_errors_carry_lines() {
    let dir = std::env::temp_dir().join(format!("vca-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.hg");
    std::fs::write(&bad, "vertices 2\nedge 1 3\n").unwrap();
    let (code, out) = vca(&["blocker", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(out.contains("line 2"), "{out}");
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn weights_flag_overrides_file() {
    let (code, r) = json_run("minimal-covers", Some("triangle.hg"), &["--weights", "2,1,1", "--k", "1"]);
    assert_eq!(code, 0);
    assert_eq!(r["result"]["weights"], serde_json::json!([2, 1, 1]));
    for cover in r["result"]["covers"].as_array().unwrap() {
        let c: Vec<u64> = serde_json::from_value(cover.clone()).unwrap();
        assert!(c[0] + c[1] >= 2);
    }
}

#[test]
fn reports_are_deterministic() {
    for (cmd, file) in [
        ("blocker", "example.hg"),
        ("vertices", "triangle.hg"),
        ("generators", "triangle.hg"),
        ("verify-theorem", "example.hg"),
    ] {
        let path = data(file);
        let a = vca(&[cmd, path.to_str().unwrap(), "--format", "json"]);
        let b = vca(&[cmd, path.to_str().unwrap(), "--format", "json"]);
        assert_eq!(a, b, "{cmd}");
        assert!(!a.1.contains("elapsed_ms"));
    }
    let (_, timed) = vca(&["blocker", data("triangle.hg").to_str().unwrap(), "--format", "json", "--timing"]);
    assert!(timed.contains("elapsed_ms"));
}

#[test]
fn every_command_validates_against_schema() {
    let v = validator();
    let runs: Vec<(&str, Option<&str>, Vec<&str>)> = vec![
        ("blocker", Some("example.hg"), vec![]),
        ("tu-check", Some("example.hg"), vec![]),
        ("tu-check", Some("four_cycle.hg"), vec![]),
        ("is-cover", Some("triangle.hg"), vec!["--cover", "1,1,0", "--k", "1"]),
        ("is-cover", Some("triangle.hg"), vec!["--cover", "1,0,0"]),
        ("minimal-covers", Some("triangle.hg"), vec!["--k", "2"]),
        ("decompose", Some("triangle.hg"), vec!["--cover", "1,1,1", "--k", "2"]),
        ("decompose", Some("four_cycle.hg"), vec!["--cover", "1,1,1,1", "--k", "2"]),
        ("standard-graded", Some("triangle.hg"), vec![]),
        ("generators", Some("triangle.hg"), vec![]),
        ("symbolic-power", Some("triangle.hg"), vec!["--k", "2"]),
        ("power", Some("triangle.hg"), vec!["--k", "2"]),
        ("ideal-equal", Some("triangle.hg"), vec![]),
        ("ideal-equal", Some("four_cycle.hg"), vec![]),
        ("vertices", Some("triangle.hg"), vec![]),
        ("integrality", Some("triangle.hg"), vec![]),
        ("integrality", Some("four_cycle.hg"), vec![]),
        ("mengerian", Some("triangle.hg"), vec![]),
        ("hhtz-check", Some("triangle.hg"), vec!["--max-k", "2"]),
        ("verify-theorem", Some("four_cycle.hg"), vec!["--w-bound", "2", "--max-k", "2"]),
        ("verify-theorem", Some("triangle.hg"), vec![]),
        ("veronese", Some("triangle.hg"), vec![]),
        ("corollary-points", None, vec!["--n", "2", "--k", "2"]),
        ("corollary-points", None, vec!["--n", "1", "--weights", "3,2"]),
        ("blocker", None, vec![]),
    ];
    for (cmd, file, extra) in runs {
        let (_, report) = json_run(cmd, file, &extra);
        let errors: Vec<String> = v.iter_errors(&report).map(|e| e.to_string()).collect();
        assert!(errors.is_empty(), "{cmd} {extra:?}: {errors:?}\n{report}");
    }
}

#[test]
fn exact_rationals_in_reports() {
    let (code, r) = json_run("integrality", Some("triangle.hg"), &[]);
    assert_eq!(code, 1);
    assert_eq!(r["result"]["fractional_vertex"], serde_json::json!(["1/2", "1/2", "1/2"]));
}

#[test]
fn text_format_lines() {
    let (code, out) = vca(&["veronese", data("triangle.hg").to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.starts_with("command: veronese\ninput: sha256:"));
    assert!(out.contains("\nd: 2\n"), "{out}");
}

#[test]
fn round_trip_through_files() {
    let text = std::fs::read_to_string(data("example.hg")).unwrap();
    let parsed = vca_cli::parse_hypergraph(&text).unwrap();
    let canonical = vca_cli::serialize_hypergraph(&parsed.hypergraph, &parsed.weights);
    let again = vca_cli::parse_hypergraph(&canonical).unwrap();
    assert_eq!(vca_cli::serialize_hypergraph(&again.hypergraph, &again.weights), canonical);
}

#[test]
fn schema_rejects_malformed_reports() {
    let v = validator();
    let (_, mut report) = json_run("blocker", Some("triangle.hg"), &[]);
    assert!(v.is_valid(&report));
    report["verdict"] = "maybe".into();
    assert!(!v.is_valid(&report));
    let (_, mut report) = json_run("integrality", Some("triangle.hg"), &[]);
    report["result"]["fractional_vertex"] = serde_json::json!([0.5, 0.5, 0.5]);
    assert!(!v.is_valid(&report));
}
