use std::path::PathBuf;
use std::process::{Command, Output};

fn yangian(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_yangian")).args(args).env_remove("YANGIAN_JOBS").output().unwrap()
}

fn report_path(tag: &str) -> PathBuf {
    std::env::temp_dir().join(format!("yangian-cli-{}-{tag}.json", std::process::id()))
}

fn run_report(tag: &str, extra: &[&str]) -> serde_json::Value {
    let path = report_path(tag);
    let mut args = vec!["verify", "relations", "--type", "B", "--n", "1", "-q", "--report", path.to_str().unwrap()];
    args.extend_from_slice(extra);
    let out = yangian(&args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    let v = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let _ = std::fs::remove_file(path);
    v
}

#[test]
fn passing_run_exits_zero() {
    let out = yangian(&["verify", "ybe", "--type", "C", "--n", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("PASS"), "{text}");
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["verify", "ybe", "--type", "E"][..],
        &["verify", "ybe", "--n", "2"][..],
        &["verify", "nonsense"][..],
        &["verify", "relations", "--families", "gauss/no-such-family"][..],
        &["verify", "ybe", "--backend", "quantum"][..],
    ] {
        assert_eq!(yangian(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn report_has_documented_shape() {
    let v = run_report("shape", &["--backend", "oracle", "--seed", "7"]);
    let run = &v["run"];
    assert_eq!(run["ctx"], "B1");
    assert_eq!(run["K"], 4);
    assert_eq!(run["backend"], "oracle");
    assert_eq!(run["seed"], 7);
    assert!(run["version"].is_string());
    let cases = v["cases"].as_array().unwrap();
    assert!(!cases.is_empty());
    for c in cases {
        assert!(c["id"].is_string() && c["params"].is_object() && c["millis"].is_u64());
        assert_eq!(c["status"], "PASS");
    }
    let ids: Vec<_> = cases.iter().map(|c| c["id"].as_str().unwrap().to_string()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
}

#[test]
fn reports_are_deterministic() {
    let strip = |mut v: serde_json::Value| {
        for c in v["cases"].as_array_mut().unwrap() {
            c.as_object_mut().unwrap().remove("millis");
        }
        v
    };
    let a = strip(run_report("det-a", &["--jobs", "1"]));
    let b = strip(run_report("det-b", &["--jobs", "2"]));
    assert_eq!(a, b);
}

#[test]
fn families_lists_keys() {
    let out = yangian(&["families", "center"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("center/scalar"));
}
