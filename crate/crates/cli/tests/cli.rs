use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;
use spl_core::io::{ideal_from_json, ideal_to_json, IdealJson};

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn spl(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_spl")).args(args).output().expect("binary runs");
    Run {
        code: out.status.code().expect("exit code"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn json(run: &Run) -> Value {
    serde_json::from_str(&run.stdout).unwrap_or_else(|e| panic!("bad JSON ({e}): {}", run.stdout))
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

const EX44: &str = r#"{"n":6,"edges":[[1,2],[1,3],[2,3],[2,4],[2,5],[3,5],[3,6],[4,5],[5,6]]}"#;
const C5: &str = r#"{"n":5,"edges":[[1,2],[2,3],[3,4],[4,5],[1,5]]}"#;

/// The ideal in a report must re-parse to itself.
fn round_trip(v: &Value) {
    let j: IdealJson = serde_json::from_value(v["ideal"].clone()).unwrap();
    let i = ideal_from_json(&j).unwrap();
    assert_eq!(ideal_to_json(&i), j);
}

#[test]
fn secant_of_triangulation() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "ex44.json", EX44);
    let run = spl(&["secant", "--graph", s(&g), "-r", "2"]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    let v = json(&run);
    assert_eq!(v["count"], 4);
    assert_eq!(v["text"], "<x3*x5*x6, x2*x4*x5, x2*x3*x5, x1*x2*x3>");
    assert!(v["version"].is_string());
    round_trip(&v);
}

#[test]
fn five_cycle_fails_at_three() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "c5.json", C5);
    let run = spl(&["diff-perfect", "--graph", s(&g), "-r", "1", "--s-max", "3"]);
    assert_eq!(run.code, 1);
    let v = json(&run);
    assert_eq!(v["first_failure"], 3);
    assert_eq!(v["witness"], "x1*x2*x3*x4*x5");
    // default s_max = n − α = 3
    assert_eq!(json(&spl(&["diff-perfect", "--graph", s(&g), "-r", "1"]))["s_max"], 3);
    let run = spl(&["perfect", "--graph", s(&g)]);
    assert_eq!(run.code, 1);
    assert_eq!(json(&run)["witness"]["vertices"], serde_json::json!([1, 2, 3, 4, 5]));
}

#[test]
fn chain_greene() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "chain3.json", r#"{"n":3,"relations":[[1,2],[2,3]]}"#);
    let run = spl(&["greene-poset", "--poset", s(&p)]);
    assert_eq!(run.code, 0);
    let v = json(&run);
    assert_eq!(v["lambda"], serde_json::json!([1, 1, 1]));
    assert_eq!(v["lambdabar"], serde_json::json!([3]));
    assert_eq!(v["conjugate"], true);
}

#[test]
fn greene_graph_failure() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "g.json", r#"{"n":6,"edges":[[1,4],[2,5],[3,6],[4,5],[4,6],[5,6]]}"#);
    let run = spl(&["greene-graph", "--graph", s(&g)]);
    assert_eq!(run.code, 1);
    let v = json(&run);
    assert_eq!(v["sequences"]["lambda"], serde_json::json!([3, 1, 2]));
    assert_eq!(v["verdict"]["witness"], serde_json::json!([1, 1, 1, 1, 1, 1]));
    let run = spl(&["greene-graph", "--graph", s(&g), "--budget", "3"]);
    assert_eq!(run.code, 2);
}

#[test]
fn input_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let nested = write(dir.path(), "h.json", r#"{"n":3,"edges":[[1,2],[1,2,3]]}"#);
    let run = spl(&["edge-ideal", "--hypergraph", s(&nested)]);
    assert_eq!(run.code, 2);
    assert!(run.stderr.contains("{1,2}"), "{}", run.stderr);
    let range = write(dir.path(), "r.json", r#"{"n":2,"edges":[[1,3]]}"#);
    assert_eq!(spl(&["edge-ideal", "--graph", s(&range)]).code, 2);
    let cyc = write(dir.path(), "p.json", r#"{"n":2,"relations":[[1,2],[2,1]]}"#);
    let run = spl(&["greene-poset", "--poset", s(&cyc)]);
    assert_eq!(run.code, 2);
    assert!(run.stderr.contains("1 < 2 < 1"), "{}", run.stderr);
    assert_eq!(spl(&["secant", "--graph", "/nonexistent.json", "-r", "2"]).code, 2);
    assert_eq!(spl(&["minors", "--family", "generic(3,3)", "-t", "2", "--pfaffian"]).code, 2);
    assert_eq!(spl(&["gb", "--family", "nonsense(2)"]).code, 2);
    assert_eq!(spl(&["not-a-verb"]).code, 2);
}

#[test]
fn ceilings_exit_three() {
    assert_eq!(spl(&["sweep", "--kind", "duality", "--n-max", "9"]).code, 3);
}

#[test]
fn segre_basis() {
    let run = spl(&["gb", "--family", "segre111"]);
    assert_eq!(run.code, 0);
    let v = json(&run);
    assert_eq!(v["count"], 9);
    assert_eq!(v["leading"][0], "x000*x111");
    let run = spl(&["initial", "--family", "segre111"]);
    let v = json(&run);
    assert_eq!(v["count"], 9);
    round_trip(&v);
    let run = spl(&["join-symbolic", "--family", "segre111", "-r", "2", "--secant"]);
    assert_eq!(json(&run)["count"], 0);
}

#[test]
fn determinantal_checks() {
    let run = spl(&["delightful", "--family", "hankel(4)", "-r", "2"]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    assert_eq!(json(&run)["delightful"], true);
    let run = spl(&["verify-product-gb", "--family", "generic(3,3)", "-r", "1", "-s", "2"]);
    assert_eq!(run.code, 0);
    let v = json(&run);
    assert_eq!(v["passed"], true);
    assert_eq!(v["candidates"], 46);
    let run = spl(&["minors", "--family", "skew(4)", "-t", "4", "--pfaffian", "--format", "text"]);
    assert_eq!(run.code, 0);
    assert!(run.stdout.contains("y14*y23 - y13*y24 + y12*y34"), "{}", run.stdout);
}

#[test]
fn polynomial_input_and_order() {
    let dir = tempfile::tempdir().unwrap();
    // x1 - x2, the point (1:1) on the line
    let f = write(
        dir.path(),
        "p.json",
        r#"[{"n":2,"terms":[{"coeff":"1","exp":[1,0]},{"coeff":"-1","exp":[0,1]}]}]"#,
    );
    let run = spl(&["join-symbolic", "--polys", s(&f), "-r", "2"]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    assert_eq!(json(&run)["text"][0], "x1^2 - 2*x1*x2 + x2^2");
    let run = spl(&["initial", "--polys", s(&f), "--order", "2,1"]);
    assert_eq!(json(&run)["text"], "<x2>");
    assert_eq!(spl(&["initial", "--polys", s(&f), "--order", "1,1"]).code, 2);
    assert_eq!(spl(&["initial", "--polys", s(&f), "--order", "1,2,3"]).code, 2);
}

#[test]
fn ideal_inputs() {
    let dir = tempfile::tempdir().unwrap();
    let i = write(dir.path(), "i.json", r#"{"n":3,"generators":[[1,1,0],[0,1,1],[1,0,1]]}"#);
    let run = spl(&["symbolic", "--ideal", s(&i), "-r", "2"]);
    assert_eq!(run.code, 0);
    let v = json(&run);
    assert_eq!(v["text"], "<x2^2*x3^2, x1*x2*x3, x1^2*x3^2, x1^2*x2^2>");
    round_trip(&v);
    let run = spl(&["symbolic", "--ideal", s(&i), "-r", "2", "--differential"]);
    assert_eq!(json(&run)["text"], v["text"]);
    assert_eq!(json(&run)["complete"], true);
}

#[test]
fn products() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "ex44.json", EX44);
    let run = spl(&["clique-products", "--graph", s(&g), "-r", "2", "-s", "2"]);
    assert_eq!(run.code, 0);
    round_trip(&json(&run));
    let p = write(dir.path(), "anti.json", r#"{"n":2,"relations":[]}"#);
    let v = json(&spl(&["antichain-products", "--poset", s(&p), "-r", "1", "-s", "2"]));
    assert_eq!(v["text"], "<x1^2*x2^2>");
}

#[test]
fn squares() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "p3.json", r#"{"n":3,"edges":[[1,2],[2,3]]}"#);
    let run = spl(&["squares-check", "--graph", s(&g), "--sigma", "1,3", "--s-max", "3"]);
    assert_eq!(run.code, 0, "{}", run.stdout);
    assert_eq!(json(&run)["sigma"], serde_json::json!([1, 3]));
    assert_eq!(spl(&["squares-check", "--graph", s(&g), "--sigma", "4", "--s-max", "2"]).code, 2);
}

#[test]
fn invariants_and_text() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "c5.json", C5);
    let run = spl(&["invariants", "--graph", s(&g), "--format", "text"]);
    assert_eq!(run.code, 0);
    let lines: Vec<&str> = run.stdout.lines().collect();
    assert_eq!(lines[0], "alpha    2");
    assert!(lines.contains(&"chi      3"));
    assert!(lines.iter().any(|l| l.starts_with("version  ")));
}

#[test]
fn output_is_deterministic() {
    let a = spl(&["sweep", "--kind", "duality", "--n-max", "4", "--random", "20", "--seed", "7"]);
    let b = spl(&["sweep", "--kind", "duality", "--n-max", "4", "--random", "20", "--seed", "7"]);
    assert_eq!(a.code, 0);
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    assert_eq!(v["failures"], 0);
    assert_eq!(v["kind"], "duality");
}
