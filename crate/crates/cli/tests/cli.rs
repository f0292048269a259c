use std::path::Path;
use std::process::{Command, Output};

use contentalg_cli::Report;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_contentalg"));
    c.env_remove("CONTENTALG_THREADS");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn info_reports_spectrum_and_flags() {
    let o = run(&["info", "--ring", "zmod:6", "--monoid", "group:0,2"]);
    assert_eq!(code(&o), 0);
    let s = stdout(&o);
    assert!(s.contains("Spec(R) = {(2), (3)}"), "{s}");
    assert!(s.contains("torsion-free: false"), "{s}");

    let o = run(&["info", "--ring", "zmod:8", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["associated_primes"], serde_json::json!(["(2)"]));
    assert_eq!(v["property_a"], true);
}

#[test]
fn dm_pinned_exponent() {
    let o = run(&["dm", "--ring", "trunc_poly:2,2,3", "--f", "a + b*X^1", "--g", "b + a*X^1", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["exponent"], 2);
    assert_eq!(v["c(fg)"], "(ab, a^2+b^2)");
}

#[test]
fn check_exit_codes() {
    let o = run(&["check", "mccoy", "--ring", "zmod:2", "--monoid", "group:0,2"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("g = 1 + X^1"));

    let o = run(&["check", "gaussian", "--ring", "zmod:4", "--monoid", "free:1"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("BOUNDED_PASS"), "{}", stdout(&o));

    assert_eq!(code(&run(&["check", "no_such_check", "--ring", "zmod:4"])), 2);
    // An algebra check without a monoid is a configuration error.
    assert_eq!(code(&run(&["check", "gaussian", "--ring", "zmod:4"])), 2);
    assert_eq!(code(&run(&["check", "spectrum", "--ring", "field:4"])), 2);
}

#[test]
fn bad_config_exits_2_with_location() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(
        dir.path(),
        "bad.json",
        "{\n  \"ring\": {\"kind\": \"trunc_poly\", \"p\": 2, \"vars\": 2, \"cap\": 3},\n  \"monoid\": {\"kind\": \"free\", \"rank\": 1},\n  \"bounds\": {\"coeff_mode\": \"exhaustive\"}\n}",
    );
    let o = run(&["suite", "--config", &p]);
    assert_eq!(code(&o), 2);
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("line 4") && err.contains("bounds.coeff_mode"), "{err}");

    let p = write(dir.path(), "ok.json", r#"{"ring": {"kind": "zmod", "n": 4}, "checks": ["spectrum"]}"#);
    let o = bin().args(["suite", "--config", &p]).env("CONTENTALG_THREADS", "0").output().unwrap();
    assert_eq!(code(&o), 2);
}

#[test]
fn suite_report_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(
        dir.path(),
        "suite.json",
        r#"{"ring": {"kind": "zmod", "n": 2}, "monoid": {"kind": "trunc_add", "cap": 2}, "checks": ["theorem13_battery", "unit_content", "spectrum"]}"#,
    );
    let out = dir.path().join("report.json");
    let o = run(&["suite", "--config", &cfg, "--out", out.to_str().unwrap(), "--format", "text"]);
    // unit_content fails on a non-cancellative monoid.
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("FAIL"));

    let report: Report = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert!(report.hash_is_valid());
    let names: Vec<&str> = report.results.iter().map(|r| r.name.as_str()).collect();
    assert_eq!(names, ["spectrum", "theorem13", "unit_content"]);

    let o = run(&["report", "--input", out.to_str().unwrap(), "--format", "text"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("determinism hash"));

    let tampered = std::fs::read_to_string(&out).unwrap().replace("\"fail\"", "\"pass\"");
    let t = write(dir.path(), "tampered.json", &tampered);
    assert_eq!(code(&run(&["report", "--input", &t])), 2);
}

#[test]
fn hash_independent_of_threads() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(
        dir.path(),
        "suite.json",
        r#"{"ring": {"kind": "zmod", "n": 4}, "monoid": {"kind": "free", "rank": 1}, "checks": ["gaussian", "armendariz", "mccoy", "spectrum"], "bounds": {"seed": 7}}"#,
    );
    let hash = |threads: &str| {
        let o = bin().args(["suite", "--config", &cfg]).env("CONTENTALG_THREADS", threads).output().unwrap();
        assert_eq!(code(&o), 0);
        let r: Report = serde_json::from_slice(&o.stdout).unwrap();
        r.determinism_hash
    };
    assert_eq!(hash("1"), hash("3"));
}
