use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::{json, Value};

fn artinian(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_artinian")).args(args).output().expect("spawn artinian")
}

fn ok(args: &[&str]) -> String {
    let out = artinian(args);
    assert!(out.status.success(), "artinian {args:?} failed: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    artinian(args).status.code().expect("exit code")
}

fn scratch(test: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("artinian-cli-{}-{test}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn write(path: &Path, v: &Value) {
    std::fs::write(path, serde_json::to_string_pretty(v).unwrap()).unwrap();
}

fn analyze(path: &Path) -> Value {
    serde_json::from_str(&ok(&["analyze", s(path)])).unwrap()
}

fn arrows(quiver: &Value) -> Vec<(u64, u64, u64)> {
    let mut v: Vec<_> = quiver["arrows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|a| (a["from"].as_u64().unwrap(), a["to"].as_u64().unwrap(), a["count"].as_u64().unwrap()))
        .collect();
    v.sort();
    v
}

#[test]
fn triangular_round_trip() {
    let dir = scratch("triangular");
    let file = dir.join("t2.json");
    ok(&["construct", "triangular", "2", "--char", "5", "-o", s(&file)]);
    let r = analyze(&file);
    assert_eq!(r["dim"], 3);
    assert_eq!(r["loewy_length"], 2);
    assert_eq!(r["radical_dims"], json!([1, 0]));
    assert_eq!(r["basic"], true);
    assert_eq!(arrows(&r["natural_quiver"]).len(), 1);
    assert_eq!(arrows(&r["natural_quiver"])[0].2, 1);
    assert_eq!(r["natural_quiver"], r["ordinary_quiver"]);
}

#[test]
fn matrix_algebra_has_no_arrows() {
    let dir = scratch("matrix");
    let file = dir.join("m2.json");
    ok(&["construct", "matrix", "2", "--rationals", "-o", s(&file)]);
    let r = analyze(&file);
    assert_eq!(r["dim"], 4);
    assert!(arrows(&r["natural_quiver"]).is_empty());
    assert_eq!(r["basic"], false);
    assert_eq!(r["blocks"], json!([{"n": 2, "dim": 4}]));
}

#[test]
fn malformed_json_exits_2() {
    let dir = scratch("malformed");
    let file = dir.join("broken.json");
    std::fs::write(&file, "{\"field\":").unwrap();
    assert_eq!(code(&["analyze", s(&file)]), 2);
    assert_eq!(code(&["verify", s(&file)]), 2);
    assert_eq!(code(&["analyze", s(&dir.join("missing.json"))]), 2);
}

#[test]
fn non_associative_constants_exit_2() {
    let dir = scratch("nonassoc");
    let file = dir.join("bad.json");
    let bad = json!({
        "field": {"char": 5},
        "dim": 3,
        "basis": ["E11", "E12", "E22"],
        "unit": [1, 0, 1],
        "mult": [[0, 0, [1, 0, 0]], [0, 1, [0, 1, 0]], [1, 2, [0, 2, 0]], [2, 2, [0, 0, 1]]]
    });
    write(&file, &bad);
    let out = artinian(&["analyze", s(&file)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not associative"));
}

#[test]
fn two_armed_example_rejects_char_2() {
    let out = artinian(&["construct", "paper-example", "--char", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("divides the group order"));
}

#[test]
fn ordinary_equals_natural_on_basic_input() {
    let dir = scratch("kinds");
    let file = dir.join("t3.json");
    ok(&["construct", "triangular", "3", "--char", "7", "-o", s(&file)]);
    for format in ["dot", "json"] {
        let natural = ok(&["quiver", s(&file), "--kind", "natural", "--format", format]);
        let ordinary = ok(&["quiver", s(&file), "--kind", "ordinary", "--format", format]);
        assert_eq!(natural, ordinary, "format {format}");
    }
    let dot = ok(&["quiver", s(&file)]);
    assert!(dot.contains("->"));
}

#[test]
fn output_is_deterministic() {
    let dir = scratch("determinism");
    let file = dir.join("ex.json");
    let a = ok(&["construct", "paper-example", "--char", "3"]);
    let b = ok(&["construct", "paper-example", "--char", "3"]);
    assert_eq!(a, b);
    std::fs::write(&file, &a).unwrap();
    assert_eq!(ok(&["analyze", s(&file)]), ok(&["analyze", s(&file)]));
    assert_eq!(ok(&["verify", s(&file), "--suite", "prop12"]), ok(&["verify", s(&file), "--suite", "prop12"]));
}

#[test]
fn two_armed_example_shape() {
    let dir = scratch("two-armed");
    let file = dir.join("ex.json");
    ok(&["construct", "paper-example", "--char", "5", "-o", s(&file)]);
    let r = analyze(&file);
    assert_eq!(r["dim"], 22);
    let mut sizes: Vec<u64> = r["blocks"].as_array().unwrap().iter().map(|b| b["n"].as_u64().unwrap()).collect();
    sizes.sort();
    assert_eq!(sizes, vec![1, 1, 2, 2]);
    let natural = arrows(&r["natural_quiver"]);
    assert_eq!(natural.len(), 3);
    assert!(natural.iter().all(|a| a.2 == 1));
    assert_eq!(natural, arrows(&r["ordinary_quiver"]));
}

#[test]
fn associated_graded_passes_gabriel_suite() {
    let dir = scratch("gabriel");
    let (ex, gr) = (dir.join("ex.json"), dir.join("gr.json"));
    ok(&["construct", "paper-example", "--char", "5", "-o", s(&ex)]);
    ok(&["construct", "associated-graded", s(&ex), "-o", s(&gr)]);
    let summary: Value = serde_json::from_str(&ok(&["verify", s(&gr), "--suite", "gabriel"])).unwrap();
    assert_eq!(summary["pass"], true);
    assert_eq!(code(&["verify", s(&gr), "--suite", "graded"]), 0);
}

#[test]
fn semisimple_passes_every_suite() {
    let dir = scratch("semisimple");
    let file = dir.join("m2.json");
    ok(&["construct", "matrix", "2", "--char", "3", "-o", s(&file)]);
    let summary: Value = serde_json::from_str(&ok(&["verify", s(&file), "--suite", "all"])).unwrap();
    assert_eq!(summary["pass"], true);
    assert_eq!(summary["suites"], json!(["prop12", "graded", "gabriel", "basics"]));
}

#[test]
fn bad_grading_exits_1() {
    let dir = scratch("grading");
    let (good, bad) = (dir.join("p.json"), dir.join("bad.json"));
    ok(&["construct", "polynomial", "3", "--char", "3", "-o", s(&good)]);
    assert_eq!(code(&["verify", s(&good), "--suite", "graded"]), 0);
    let mut v: Value = serde_json::from_str(&std::fs::read_to_string(&good).unwrap()).unwrap();
    v["degrees"] = json!([0, 2, 1]);
    write(&bad, &v);
    let out = artinian(&["verify", s(&bad), "--suite", "graded"]);
    assert_eq!(out.status.code(), Some(1));
    let summary: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(summary["pass"], false);
    assert!(summary["first_counterexample"]["detail"].as_str().unwrap().contains("outside degree"));
}

#[test]
fn unknown_suite_exits_2() {
    let dir = scratch("suite");
    let file = dir.join("m1.json");
    ok(&["construct", "matrix", "1", "--char", "3", "-o", s(&file)]);
    assert_eq!(code(&["verify", s(&file), "--suite", "nonsense"]), 2);
}

#[test]
fn path_algebra_round_trip() {
    let dir = scratch("path");
    let (spec, out) = (dir.join("q.json"), dir.join("a.json"));
    let quiver = json!({
        "field": {"char": 7},
        "vertices": ["1", "2", "3"],
        "arrows": [
            {"name": "a", "from": "1", "to": "2"},
            {"name": "b", "from": "2", "to": "3"}
        ],
        "relations": [[[1, ["a", "b"]]]]
    });
    write(&spec, &quiver);
    ok(&["construct", "path-algebra", s(&spec), "-o", s(&out)]);
    let r = analyze(&out);
    assert_eq!(r["dim"], 5);
    assert_eq!(r["basic"], true);
    assert_eq!(arrows(&r["natural_quiver"]).len(), 2);
    assert_eq!(code(&["verify", s(&out), "--suite", "all"]), 0);
}

#[test]
fn skew_group_from_files() {
    let dir = scratch("skew");
    let (spec, alg, act, out) = (dir.join("q.json"), dir.join("a.json"), dir.join("g.json"), dir.join("s.json"));
    let quiver = json!({
        "field": {"char": 5},
        "vertices": ["1", "2", "3"],
        "arrows": [{"name": "a", "from": "1", "to": "3"}, {"name": "b", "from": "2", "to": "3"}]
    });
    write(&spec, &quiver);
    ok(&["construct", "path-algebra", s(&spec), "-o", s(&alg)]);
    let action = json!({
        "order": 2,
        "images": {"e1": [[1, "e2"]], "e2": [[1, "e1"]], "a": [[1, "b"]], "b": [[1, "a"]]}
    });
    write(&act, &action);
    ok(&["construct", "skew-group", s(&alg), s(&act), "-o", s(&out)]);
    let r = analyze(&out);
    assert_eq!(r["dim"], 10);
    assert_eq!(r["basic"], false);
    assert_eq!(arrows(&r["natural_quiver"]).len(), 2);
    assert_eq!(r["natural_quiver"], r["ordinary_quiver"]);
}
