use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::{json, Value};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_greenseq")).args(args).output().expect("binary runs")
}

fn run_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_greenseq")).args(args).env(key, value).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn write(dir: &Path, name: &str, value: &Value) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, value.to_string()).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn generate_linear_a() {
    let out = run(&["generate", "--family", "linear-a", "--n", "3"]);
    assert_eq!(code(&out), 0);
    let q = stdout_json(&out);
    assert_eq!(q["vertices"], json!(["1", "2", "3"]));
    assert_eq!(q["arrows"].as_array().unwrap().len(), 2);
}

#[test]
fn generate_hl_window_and_mgs() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&["generate", "--family", "hl", "--type", "B", "--rank", "2", "--window", "fig4"]);
    assert_eq!(code(&out), 0);
    let q = stdout_json(&out);
    assert_eq!(q["vertices"].as_array().unwrap().len(), 12);
    let path = write(dir.path(), "q.json", &q);
    let out = run(&["mgs", s(&path)]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let report = stdout_json(&out);
    assert_eq!(report["steps"].as_array().unwrap().len(), 33);
    assert_eq!(report["predicted_length"], json!(33));
    assert_eq!(report["family"], json!("hernandez-leclerc"));
}

#[test]
fn random_qn_is_deterministic_and_valid() {
    let dir = tempfile::tempdir().unwrap();
    let d1 = dir.path().join("d1.json");
    let d2 = dir.path().join("d2.json");
    let a = run(&["generate", "--family", "random-qn", "--seed", "7", "--chains", "3", "--decomposition-out", s(&d1)]);
    let b = run(&["generate", "--family", "random-qn", "--seed", "7", "--chains", "3", "--decomposition-out", s(&d2)]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(std::fs::read(&d1).unwrap(), std::fs::read(&d2).unwrap());
    let q = write(dir.path(), "q.json", &stdout_json(&a));
    let out = run(&["validate", s(&d1), "--quiver", s(&q)]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    assert_eq!(stdout_json(&out)["valid"], json!(true));
    let out = run(&["mgs", s(&q), "--decomposition", s(&d1)]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
}

#[test]
fn mgs_then_verify_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    for fixture in ["fig4", "fig7", "fig8", "fig10a", "fig10b", "fig10c", "fig10d"] {
        let out = run(&["mgs", "--fixture", fixture]);
        assert_eq!(code(&out), 0, "{fixture}: {}", stderr(&out));
        let seq = write(dir.path(), "seq.json", &stdout_json(&out));
        let out = run(&["verify", "--fixture", fixture, "--sequence", s(&seq)]);
        assert_eq!(code(&out), 0, "{fixture}: {}", stderr(&out));
    }
    let out = run(&["mgs", "--fixture", "fig8", "--order", "composition"]);
    let seq = write(dir.path(), "comp.json", &stdout_json(&out));
    assert_eq!(code(&run(&["verify", "--fixture", "fig8", "--sequence", s(&seq)])), 0);
}

#[test]
fn mgs_without_decomposition_is_invalid_input() {
    let out = run(&["mgs", "--fixture", "fig6"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn verify_printed_sequences() {
    let dir = tempfile::tempdir().unwrap();
    let twelve = write(dir.path(), "12.json", &json!([3, 6, 2, 1, 6, 5, 4, 3, 6, 5, 7, 6]));
    let out = run(&["verify", "--fixture", "fig8", "--sequence", s(&twelve), "--order", "composition"]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let thirteen = write(
        dir.path(),
        "13.json",
        &json!({"steps": [1, 3, 5, 7, 6, 1, 3, 5, 4, 1, 3, 2, 1], "order": "composition"}),
    );
    assert_eq!(code(&run(&["verify", "--fixture", "fig8", "--sequence", s(&thirteen)])), 0);

    let truncated = write(dir.path(), "t.json", &json!({"steps": [1, 3, 5, 7, 6], "order": "composition"}));
    let out = run(&["verify", "--fixture", "fig8", "--sequence", s(&truncated)]);
    assert_eq!(code(&out), 1);
    assert!(stderr(&out).contains("vertex still green"), "{}", stderr(&out));
    assert_eq!(stdout_json(&out)["violation"]["kind"], json!("still_green"));

    let red = write(dir.path(), "r.json", &json!([1, 2, 1, 2]));
    let out = run(&["verify", "--fixture", "fig8", "--sequence", s(&red)]);
    assert_eq!(code(&out), 1);
    assert_eq!(stdout_json(&out)["violation"]["kind"], json!("not_green"));
}

#[test]
fn parse_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{ not json").unwrap();
    assert_eq!(code(&run(&["verify", s(&bad), "--sequence", s(&bad)])), 2);
    assert_eq!(code(&run(&["mgs", "/nonexistent/q.json"])), 2);
    let looped = write(dir.path(), "loop.json", &json!({"vertices": [1], "arrows": [{"from": 1, "to": 1}]}));
    assert_eq!(code(&run(&["classify", s(&looped)])), 2);
    assert_eq!(code(&run(&["mgs", "--fixture", "nope"])), 2);
}

#[test]
fn search_modes() {
    let dir = tempfile::tempdir().unwrap();
    let a2 = write(dir.path(), "a2.json", &json!({"vertices": [1, 2], "arrows": [{"from": 2, "to": 1}]}));
    let out = run(&["search", s(&a2), "--mode", "count"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout_json(&out)["count"], json!(2));
    assert_eq!(stdout_json(&out)["budget_exhausted"], json!(false));
    let out = run(&["search", s(&a2), "--mode", "min"]);
    assert_eq!(stdout_json(&out)["min_length"], json!(2));
    let out = run(&["search", s(&a2), "--mode", "enumerate"]);
    assert_eq!(stdout_json(&out)["sequences"], json!([["1", "2", "1"], ["2", "1"]]));
}

#[test]
fn search_budgets_exit_three() {
    let out = run(&["search", "--fixture", "fig10b", "--max-mutable", "7"]);
    assert_eq!(code(&out), 3);
    assert_eq!(stdout_json(&out)["budget_exhausted"], json!(true));
    let dir = tempfile::tempdir().unwrap();
    let nine: Vec<Value> = (1..9).map(|i| json!({"from": i + 1, "to": i})).collect();
    let q = write(dir.path(), "a9.json", &json!({"vertices": (1..=9).collect::<Vec<_>>(), "arrows": nine}));
    assert_eq!(code(&run(&["search", s(&q)])), 3);
    let out = run_env(&["search", "--fixture", "fig8", "--mode", "count"], "GREENSEQ_NODE_CAP", "10");
    assert_eq!(code(&out), 3);
}

#[test]
fn export_dot_and_json() {
    let dir = tempfile::tempdir().unwrap();
    let a2 = write(dir.path(), "a2.json", &json!({"vertices": [1, 2], "arrows": [{"from": 2, "to": 1}]}));
    let out = run(&["export", s(&a2), "--format", "dot"]);
    assert_eq!(code(&out), 0);
    let dot = String::from_utf8(out.stdout).unwrap();
    assert_eq!(dot.matches("fillcolor=green").count(), 2);
    assert_eq!(dot.matches("shape=box").count(), 2);
    assert_eq!(dot, String::from_utf8(run(&["export", s(&a2), "--format", "dot"]).stdout).unwrap());

    let seq = write(dir.path(), "s.json", &json!([1, 2, 1]));
    let dot = String::from_utf8(run(&["export", s(&a2), "--sequence", s(&seq)]).stdout).unwrap();
    assert_eq!(dot.matches("fillcolor=red").count(), 2);
    assert!(!dot.contains("fillcolor=green"));
    let dot = String::from_utf8(run(&["export", s(&a2), "--sequence", s(&seq), "--prefix", "1"]).stdout).unwrap();
    assert_eq!(dot.matches("fillcolor=red").count(), 1);

    let out = run(&["export", "--fixture", "fig8", "--format", "json", "--unframed"]);
    let exported = String::from_utf8(out.stdout).unwrap();
    let again_path = write(dir.path(), "fig8.json", &serde_json::from_str(&exported).unwrap());
    let again = run(&["export", s(&again_path), "--format", "json", "--unframed"]);
    assert_eq!(String::from_utf8(again.stdout).unwrap(), exported);

    assert_eq!(code(&run(&["export", s(&a2), "--format", "svg"])), 2);
}

#[test]
fn decompose_and_classify() {
    let out = run(&["decompose", "--fixture", "fig7"]);
    assert_eq!(code(&out), 0);
    let report = stdout_json(&out);
    assert_eq!(report["family"], json!("all-cycles-oriented"));
    assert_eq!(report["chains"].as_array().unwrap().len(), 6);

    for (fixture, kind) in [("fig10a", "I"), ("fig10b", "II"), ("fig10c", "III"), ("fig10d", "IV")] {
        let out = run(&["classify", "--fixture", fixture]);
        assert_eq!(code(&out), 0);
        assert_eq!(stdout_json(&out)["mu_d"]["type"], json!(kind), "{fixture}");
    }
    let out = run(&["classify", "--fixture", "fig8"]);
    assert_eq!(stdout_json(&out)["mu_a"], json!(true));

    let out = run(&["decompose", "--fixture", "fig8", "--family", "mu-a", "--pin", "1"]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let out = run(&["decompose", "--fixture", "fig8", "--family", "mu-a", "--pin", "3"]);
    assert_eq!(code(&out), 2);
    assert_eq!(code(&run(&["decompose", "--fixture", "fig6"])), 1);
}

#[test]
fn validate_reports_clauses() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(
        dir.path(),
        "d.json",
        &json!({"chains": [["a1", "a2"], ["b1", "b2"]], "oblique": [{"from": "a2", "to": "b1"}, {"from": "a1", "to": "b2"}]}),
    );
    let out = run(&["validate", s(&bad)]);
    assert_eq!(code(&out), 1);
    let report = stdout_json(&out);
    assert_eq!(report["valid"], json!(false));
    assert!(!report["violations"].as_array().unwrap().is_empty());
    assert!(report["violations"][0]["clause"].is_string());
}
