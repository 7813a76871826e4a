//! End-to-end runs of the `swl` binary.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn swl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_swl"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is a JSON report")
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    dir.join(name)
}

#[test]
fn passing_suite_reports_and_exits_zero() {
    let out = swl(&["run", "min-poly", "--parts", "1,2", "--d", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["schema_version"], 1);
    assert_eq!(r["suite"], "min-poly");
    assert_eq!(r["pass"], true);
    assert_eq!(r["instance"]["parts"], serde_json::json!([1, 2]));
    assert!(String::from_utf8_lossy(&out.stderr).contains("min-poly: pass"));
}

#[test]
fn all_on_the_trivial_instance() {
    let out = swl(&["run", "all", "--parts", "1", "--d", "0"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(report(&out)["pass"], true);
}

#[test]
fn suites_lists_every_name() {
    let out = swl(&["suites"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let names: Vec<&str> = text.lines().collect();
    assert_eq!(names.len(), 14);
    assert!(names.contains(&"dipper-mathas"));
    assert_eq!(names.last(), Some(&"all"));
}

#[test]
fn error_exit_codes() {
    let unknown = swl(&["run", "no-such-suite", "--parts", "1", "--d", "1"]);
    assert_eq!(unknown.status.code(), Some(4));
    let cap = swl(&[
        "run",
        "xi-basis",
        "--parts",
        "2,2",
        "--d",
        "3",
        "--max-tensor-dim",
        "10",
    ]);
    assert_eq!(cap.status.code(), Some(3));
    let origin = swl(&[
        "run", "xi-basis", "--parts", "1,2", "--origin", "0,1", "--d", "1",
    ]);
    assert_eq!(origin.status.code(), Some(2));
    let missing = swl(&["run", "xi-basis", "--parts", "1,2"]);
    assert_eq!(missing.status.code(), Some(2));
    let precondition = swl(&["run", "dipper-mathas", "--parts", "1,2", "--d", "1"]);
    assert_eq!(precondition.status.code(), Some(2));
    for out in [&unknown, &cap, &origin, &missing, &precondition] {
        assert!(out.stdout.is_empty());
        assert!(String::from_utf8_lossy(&out.stderr).starts_with("error: "));
    }
}

#[test]
fn config_file_with_flag_override() {
    let cfg = scratch("config.json");
    std::fs::write(&cfg, r#"{"parts":[1,2],"origin":["0","1/2"],"d":1}"#).unwrap();
    let path = cfg.to_str().unwrap();
    let from_file = report(&swl(&["run", "dipper-mathas", "--config", path]));
    assert_eq!(from_file["instance"]["d"], 1);
    assert_eq!(
        from_file["instance"]["origin"],
        serde_json::json!(["0/1", "1/2"])
    );
    let out = swl(&["run", "dipper-mathas", "--config", path, "--d", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["instance"]["d"], 2);
    assert_eq!(r["measured"]["full_dim"], r["measured"]["sum"]);

    std::fs::write(&cfg, r#"{"parts":[1,2],"dee":1}"#).unwrap();
    assert_eq!(
        swl(&["run", "xi-basis", "--config", path]).status.code(),
        Some(2)
    );
}

#[test]
fn json_file_output_is_deterministic() {
    let strip = |mut v: Value| {
        v.as_object_mut().unwrap().remove("elapsed_ms");
        if let Some(suites) = v["measured"]["suites"].as_array_mut() {
            for s in suites {
                s.as_object_mut().unwrap().remove("elapsed_ms");
            }
        }
        v
    };
    let mut runs = Vec::new();
    for n in 0..2 {
        let file = scratch(&format!("report{n}.json"));
        let out = swl(&[
            "run",
            "all",
            "--parts",
            "1,2",
            "--origin",
            "0,1/2",
            "--d",
            "2",
            "--json",
            file.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0));
        assert!(out.stdout.is_empty());
        let v: Value = serde_json::from_str(&std::fs::read_to_string(&file).unwrap()).unwrap();
        runs.push(serde_json::to_string(&strip(v)).unwrap());
    }
    assert_eq!(runs[0], runs[1]);
}
