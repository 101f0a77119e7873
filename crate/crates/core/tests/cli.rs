use std::process::Command;

use b3quot::cli::run;
use serde_json::Value;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("b3quot").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn report(args: &[&str]) -> Value {
    let (code, out, err) = call(args);
    assert_eq!(code, 0, "{err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn verify_two_dimensional() {
    let v = report(&["verify", "--params", r#"{"dim": 2, "X": [1, 2]}"#]);
    assert_eq!(v["command"], "verify");
    assert_eq!(v["context"], "Q");
    assert_eq!(v["all_ok"], true);
    assert_eq!(v["results"][0]["C_rho"], "-8");
    assert_eq!(v["results"][0]["C_expected"], "-8");
}

#[test]
fn verify_everything_on_a_set() {
    let v = report(&["verify", "--params", r#"{"X": ["1", "2", "3", "6"]}"#]);
    assert_eq!(v["results"].as_array().unwrap().len(), 16);
    assert_eq!(v["deferred"].as_array().unwrap().len(), 0);
    assert_eq!(v["all_ok"], true);
}

#[test]
fn numbers_are_strings() {
    let v = report(&["build", "--params", r#"{"dim": 1, "X": [5]}"#]);
    assert_eq!(v["representations"][0]["spec"]["dim"], "1");
    fn no_numbers(v: &Value) -> bool {
        match v {
            Value::Number(_) => false,
            Value::Array(a) => a.iter().all(no_numbers),
            Value::Object(o) => o.values().all(no_numbers),
            _ => true,
        }
    }
    assert!(no_numbers(&v));
}

#[test]
fn semisimple_failure_is_not_an_error() {
    let v = report(&["semisimple", "--params", r#"{"X": [2, 1, -4]}"#]);
    assert_eq!(v["verdict"], false);
    assert_eq!(v["failing"], serde_json::json!(["I3(1,2,3)"]));
    assert_eq!(v["census"]["applicable"], false);

    let v = report(&[
        "semisimple",
        "--params",
        r#"{"X": [1, 2, 3, 6]}"#,
        "--mode",
        "constructive",
    ]);
    assert_eq!(v["verdict"], true);
    assert_eq!(v["census"]["sum_of_squares"], "96");
    assert_eq!(v["census"]["matches"], true);
}

#[test]
fn irred_reports_witnesses() {
    let v = report(&["irred", "--params", r#"{"dim": 3, "X": [2, 1, -4]}"#]);
    let r = &v["results"][0];
    assert_eq!(r["oracle_irreducible"], false);
    assert_eq!(r["vanishing"], serde_json::json!(["I3(1,2,3)"]));
    assert!(r["witness"]["Y"].is_array());

    let v = report(&["irred", "--params", r#"{"X": [1, 2, -3, 6, 5]}"#]);
    let family = &v["dim6_family"];
    assert_eq!(family["predicates_nonzero"], false);
    assert_eq!(
        family["variants_irreducible"],
        serde_json::json!([true, true, true, true, false])
    );
    assert_eq!(family["agrees"], true);
}

#[test]
fn eval_words() {
    let v = report(&[
        "eval",
        "--params",
        r#"{"dim": 2, "X": [1, 2]}"#,
        "--words",
        "(s1 s2)^3; b^2",
    ]);
    let rs = v["results"].as_array().unwrap();
    assert_eq!(rs.len(), 2);
    assert_eq!(rs[0]["scalar"], "-8");
    assert_eq!(rs[1]["scalar"], "-8");
    assert_eq!(rs[0]["word"], "s1 s2 s1 s2 s1 s2");
}

#[test]
fn extension_fields() {
    let v = report(&[
        "verify",
        "--context",
        "gaussian",
        "--params",
        r#"{"dim": 2, "X": [[0, 1], 2]}"#,
    ]);
    assert_eq!(v["context"], "t^2 + 1");
    assert_eq!(v["all_ok"], true);
    let job = r#"{"dim": 4, "X": [1, 2, 3, 5], "h": [0, 1], "context": {"modulus": ["-30", 0, 1]}}"#;
    let v = report(&["verify", "--params", job]);
    assert_eq!(v["all_ok"], true);
}

#[test]
fn exit_codes() {
    assert_eq!(call(&["verify", "--params", r#"{"dim": 2, "X": [1, 1]}"#]).0, 2);
    assert_eq!(call(&["verify", "--params", r#"{"X": [1, 2, 3, 4, 5, 6]}"#]).0, 2);
    assert_eq!(call(&["verify", "--params", "{"]).0, 2);
    assert_eq!(call(&["verify", "--params", "/nonexistent/job.json"]).0, 2);
    assert_eq!(
        call(&["verify", "--context", "bogus", "--params", r#"{"X": [1]}"#]).0,
        2
    );
    assert_eq!(
        call(&["eval", "--params", r#"{"dim": 1, "X": [1]}"#, "--words", "s3"]).0,
        2
    );
    assert_eq!(
        call(&[
            "semisimple",
            "--params",
            r#"{"X": [1, 2, 3, 5]}"#,
            "--mode",
            "constructive"
        ])
        .0,
        2
    );
    assert_eq!(call(&["frobnicate"]).0, 2);
    let (code, out, _) = call(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("semisimple"));
}

#[test]
fn deterministic_output() {
    let args = ["irred", "--params", r#"{"X": [1, 2, 3, 5, 7]}"#];
    let (_, a, _) = call(&args);
    let (_, b, _) = call(&args);
    assert_eq!(a, b);
}

#[test]
fn scan_is_independent_of_worker_count() {
    let job = r#"{"scan": {"values": [1, 2, 3, -1, -2, 4, "1/2"], "size": 3}}"#;
    let (c1, one, _) = call(&["scan", "--params", job, "--jobs", "1"]);
    let (c4, four, _) = call(&["scan", "--params", job, "--jobs", "4"]);
    assert_eq!((c1, c4), (0, 0));
    assert_eq!(one, four);
    let v: Value = serde_json::from_str(&one).unwrap();
    assert_eq!(v["count"], "35");
    // {-1, -2, 4}: (-2)² + 4·(-1) = 0
    assert_ne!(v["semisimple_count"], "35");
    assert_eq!(v["points"][0]["X"], serde_json::json!(["1", "2", "3"]));
}

#[test]
fn scan_with_oracle() {
    let job = r#"{"scan": {"points": [[2, 1, -4], [1, 2, 3], [1, 1]], "oracle": true}}"#;
    let v = report(&["scan", "--params", job, "--jobs", "2"]);
    assert_eq!(v["error_count"], "1");
    assert_eq!(v["points"][0]["oracle_agrees"], true);
    assert_eq!(v["points"][0]["semisimple"], false);
    assert_eq!(v["points"][1]["semisimple"], true);
    assert!(v["points"][2]["error"].is_string());
}

#[test]
fn job_file_and_output_file() {
    let dir = std::env::temp_dir().join(format!("b3quot_cli_{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let job = dir.join("job.json");
    let out = dir.join("out.json");
    std::fs::write(&job, r#"{"dim": 3, "X": [1, 2, 3], "words": ["c"]}"#).unwrap();
    let (code, stdout, _) = call(&[
        "eval",
        "--params",
        job.to_str().unwrap(),
        "--output",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert!(stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["results"][0]["scalar"], "36");
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn binary_runs() {
    let out = Command::new(env!("CARGO_BIN_EXE_b3quot"))
        .args(["semisimple", "--params", r#"{"X": [2, 1, -4]}"#])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["verdict"], false);
    let bad = Command::new(env!("CARGO_BIN_EXE_b3quot"))
        .args(["verify"])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).starts_with("error:"));
}
