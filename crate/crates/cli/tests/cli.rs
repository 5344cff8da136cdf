use std::fs;
use std::process::{Command, Output};

use fbplab_core::presentation::Presentation;
use fbplab_core::transform::Digraph;

fn fbplab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fbplab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = fbplab(args);
    assert!(
        out.status.success(),
        "`fbplab {}` failed: {}",
        args.join(" "),
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8 output")
}

#[test]
fn lists_every_suite() {
    let names: Vec<String> = stdout_of(&["list-suites"])
        .lines()
        .map(str::to_owned)
        .collect();
    assert_eq!(names.len(), 12);
    for required in ["cardinalities", "jm-oracle", "determinism"] {
        assert!(names.iter().any(|n| n == required), "missing {required}");
    }
}

#[test]
fn suite_reports_are_json_and_deterministic() {
    let config = std::env::temp_dir().join("fbplab-cli-test-cell.json");
    fs::write(&config, r#"{"oracle": {"m": 2, "vars": 2, "len": 4}}"#).unwrap();
    let cfg = config.to_str().unwrap();
    let first = stdout_of(&["suite", "jm-oracle", "--config", cfg]);
    let second = stdout_of(&["suite", "jm-oracle", "--config", cfg]);
    assert_eq!(first, second, "repeated runs must serialize identically");

    let report: serde_json::Value = serde_json::from_str(&first).unwrap();
    assert_eq!(report["suite"], "jm-oracle");
    assert_eq!(report["seed"], 1);
    assert_eq!(report["checks"].as_array().unwrap().len(), 1);
    assert_eq!(report["checks"][0]["status"], "pass");

    let reseeded = stdout_of(&["suite", "jm-oracle", "--config", cfg, "--seed", "9"]);
    let report: serde_json::Value = serde_json::from_str(&reseeded).unwrap();
    assert_eq!(report["seed"], 9, "--seed overrides the configuration file");
    fs::remove_file(&config).ok();
}

#[test]
fn text_format_summarizes() {
    let config = std::env::temp_dir().join("fbplab-cli-test-text.json");
    fs::write(&config, r#"{"oracle": {"m": 2, "vars": 2, "len": 4}}"#).unwrap();
    let text = stdout_of(&[
        "suite",
        "jm-oracle",
        "--config",
        config.to_str().unwrap(),
        "--format",
        "text",
    ]);
    assert!(text.contains("summary:"));
    assert!(text.contains("1 pass"));
    fs::remove_file(&config).ok();
}

#[test]
fn unknown_suite_and_bad_config_fail() {
    let out = fbplab(&["suite", "nonexistent"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown suite"));

    let config = std::env::temp_dir().join("fbplab-cli-test-bad.json");
    fs::write(&config, r#"{"sede": 3}"#).unwrap();
    let out = fbplab(&["suite", "jm-oracle", "--config", config.to_str().unwrap()]);
    assert!(!out.status.success());
    fs::remove_file(&config).ok();
}

#[test]
fn built_objects_round_trip_their_file_formats() {
    let digraph = stdout_of(&["build", "digraph", "gamma", "2"]);
    let parsed = Digraph::parse(&digraph).unwrap();
    assert_eq!(parsed.vertex_count(), 5);
    assert_eq!(parsed.to_string(), digraph);

    let presentation = stdout_of(&["build", "presentation", "catalan", "3"]);
    let parsed = Presentation::parse(&presentation).unwrap();
    assert_eq!(parsed.generators().len(), 2);
    assert_eq!(parsed.to_string(), presentation);

    let family = stdout_of(&["build", "family", "c", "3"]);
    assert_eq!(family.lines().count(), 5);
    assert!(family.lines().all(|l| l.starts_with('[')));
}

#[test]
fn build_rejects_unknown_objects() {
    assert!(!fbplab(&["build", "family", "zzz", "3"]).status.success());
    assert!(!fbplab(&["build", "presentation", "catalan"])
        .status
        .success());
    assert!(!fbplab(&["build", "digraph", "cycle", "3"]).status.success());
}
