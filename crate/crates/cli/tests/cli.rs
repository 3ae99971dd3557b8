use std::io::Write;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_detideal")).args(args).output().unwrap()
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

#[test]
fn hn_json_has_sorted_keys_and_verdict() {
    let out = run(&["hn", "--a", "1,1,1", "--b", "2,1,1"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    let r = &v[0];
    assert_eq!(r["stage"], "hn");
    assert_eq!(r["verdict"], "prime-certified");
    assert_eq!(r["field"], "Q");
    let keys: Vec<&String> = r.as_object().unwrap().keys().collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
}

#[test]
fn negative_control_is_not_certified_but_exits_zero() {
    let out = run(&["--format", "text", "hn", "--a", "1,1,1", "--b", "1,1,1", "--field", "p:32003"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().all(|l| l.starts_with("hn [not-certified] ")));
    assert!(text.contains("m=(3,3,3) gcd=3"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(code(&run(&["bogus"])), 2);
    assert_eq!(code(&run(&["hn", "--a", "0,1,1", "--b", "1,1,1"])), 2);
    assert_eq!(code(&run(&["hn", "--a", "1,1", "--b", "1,1,1"])), 2);
    assert_eq!(code(&run(&["hn", "--a", "1,1,1", "--b", "1,1,1", "--field", "p:4"])), 2);
    assert_eq!(code(&run(&["length", "--ideal", "/nonexistent/ideal.txt"])), 2);
    assert_eq!(code(&run(&["--format", "xml", "toric", "--weights", "3,4,5"])), 2);
}

#[test]
fn exhausted_budget_exits_three() {
    let out = run(&["--step-budget", "1", "toric", "--weights", "3,4,5"]);
    assert_eq!(code(&out), 3);
    assert!(String::from_utf8(out.stderr).unwrap().contains("budget"));
}

#[test]
fn toric_text_output() {
    let out = run(&["--format", "text", "toric", "--weights", "3,4,5"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 3);
    assert!(text.contains("mu=3"));
}

#[test]
fn length_reads_an_ideal_file() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "# weighted header\nvars x:1 y:1 z:1\n\nx^2\ny^3\nz^2 - x*y").unwrap();
    let out = run(&["length", "--ideal", f.path().to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    let len = v[0]["clauses"].as_array().unwrap().iter().find(|c| c["name"] == "length").unwrap();
    // Standard monomials of (x^2, y^3, z^2) after lifting: 2*3*2.
    assert_eq!(len["witness"], "12");
}

#[test]
fn length_rejects_positive_dimension_and_bad_polynomials() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "vars x y\nx^2").unwrap();
    assert_eq!(code(&run(&["length", "--ideal", f.path().to_str().unwrap()])), 2);
    let mut g = tempfile::NamedTempFile::new().unwrap();
    writeln!(g, "vars x y\nx^2 + q").unwrap();
    assert_eq!(code(&run(&["length", "--ideal", g.path().to_str().unwrap()])), 2);
}

#[test]
fn length_formula_cases() {
    let out = run(&["length-formula", "--pmax", "3", "--qmax", "2"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    let clauses = v[0]["clauses"].as_array().unwrap();
    // 0 < r < p ≤ 3 and 0 < s < q ≤ 2.
    assert_eq!(clauses.len(), 1 + 2);
    assert!(clauses.iter().all(|c| c["pass"] == true));
}

#[test]
fn stdbase_levels() {
    let out = run(&["stdbase", "--monomials", "x^2,y^3,x*y", "--dmax", "4"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v[0]["clauses"].as_array().unwrap().len(), 5);
    assert_eq!(v[0]["verdict"], "certified");
}

#[test]
fn northcott_reports_are_seeded() {
    let out = run(&["northcott", "--seeds", "3,4"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    let seeds: Vec<u64> = v.as_array().unwrap().iter().filter_map(|r| r["seed"].as_u64()).collect();
    assert_eq!(seeds, vec![3, 4]);
    let again = run(&["northcott", "--seeds", "3,4"]);
    assert_eq!(out.stdout, again.stdout);
}

#[test]
fn repro_writes_file_and_flags_tiny_fields() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bundle.json");
    let out = run(&["repro", "--seeds", "1..4", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let bundle: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert!(bundle.as_array().unwrap().iter().any(|r| r["stage"] == "engine-audit"));

    assert_eq!(code(&run(&["repro", "--seeds", "1..4", "--prime", "2"])), 1);
}
