//! End-to-end runs of the compiled binary against a small group file and the
//! built-in corpus at a low order cap.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn pinilot() -> Command {
    Command::new(env!("CARGO_BIN_EXE_pinilot"))
}

fn s4_file(dir: &Path) -> PathBuf {
    let path = dir.join("s4.group");
    std::fs::write(&path, "name S4\ndegree 4\ngen (1 2)\ngen (1 2 3 4)\n").unwrap();
    path
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr_of(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn analyze_reports_group_structure() {
    let dir = tempfile::tempdir().unwrap();
    let out = pinilot()
        .arg("analyze")
        .arg(s4_file(dir.path()))
        .output()
        .unwrap();
    let text = stdout_of(&out);
    assert!(out.status.success(), "stderr: {}", stderr_of(&out));
    assert!(text.contains("group S4: order 24, degree 4"), "{text}");
    assert!(text.contains("abelian no | nilpotent no | soluble yes"), "{text}");
    assert!(text.contains("subgroups 30 (4 normal)"), "{text}");
    assert!(text.contains("chief factor orders: 4, 3, 2"), "{text}");
    assert!(
        text.contains("subgroups without the pi-property: 9 (orders 2, 4)"),
        "{text}"
    );
    assert!(
        text.contains("p=2: sylow order 8, 2-nilpotent no, 2-soluble yes, 2-supersoluble no"),
        "{text}"
    );
    assert!(
        text.contains("p=3: sylow order 3, 3-nilpotent no, 3-soluble yes, 3-supersoluble yes"),
        "{text}"
    );
}

#[test]
fn pi_check_flags_the_transposition_product() {
    let dir = tempfile::tempdir().unwrap();
    let out = pinilot()
        .arg("pi-check")
        .arg(s4_file(dir.path()))
        .args(["--subgroup", "(1 2)(3 4)"])
        .output()
        .unwrap();
    let text = stdout_of(&out);
    assert!(out.status.success(), "stderr: {}", stderr_of(&out));
    assert!(text.contains("subgroup of order 2 in S4 (order 24)"), "{text}");
    assert!(text.contains("normal: no"), "{text}");
    assert!(text.contains("pi-property: no"), "{text}");
    assert!(
        text.contains("fails at chief pair |K|=1, |L|=4"),
        "{text}"
    );
    assert!(text.contains("offending primes 3"), "{text}");
    assert!(text.contains("pi-supplemented:"), "{text}");
    assert!(text.contains("pi-normal:"), "{text}");
}

#[test]
fn pi_check_witness_for_a_cyclic_subgroup() {
    let dir = tempfile::tempdir().unwrap();
    let out = pinilot()
        .arg("pi-check")
        .arg(s4_file(dir.path()))
        .args(["--subgroup", "(1 2 3)", "--witness"])
        .output()
        .unwrap();
    let text = stdout_of(&out);
    assert!(out.status.success(), "stderr: {}", stderr_of(&out));
    assert!(text.contains("subgroup of order 3 in S4 (order 24)"), "{text}");
    assert!(text.contains("pi-property: yes"), "{text}");
    assert!(text.contains("pi-normal: yes"), "{text}");
    assert!(text.contains("witness: T of order 24"), "{text}");
    assert!(text.contains("I of order 3"), "{text}");
}

#[test]
fn verify_writes_a_json_report_file() {
    let dir = tempfile::tempdir().unwrap();
    let report_path = dir.path().join("report.json");
    let out = pinilot()
        .args(["verify", "--max-order", "24", "--format", "json", "--out"])
        .arg(&report_path)
        .output()
        .unwrap();
    assert!(out.status.success(), "stderr: {}", stderr_of(&out));
    assert!(stdout_of(&out).contains("report written to"), "{}", stdout_of(&out));

    let parsed: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&report_path).unwrap()).unwrap();
    assert_eq!(parsed["config"]["max_order"], 24);
    assert_eq!(parsed["corpus"]["group_count"], 47);
    assert_eq!(parsed["summary"]["CONFIRMED"], 1334);
    assert_eq!(parsed["summary"]["EXPECTED_COUNTEREXAMPLE"], 4);
    assert_eq!(parsed["counterexamples"].as_array().unwrap().len(), 0);
}

#[test]
fn verify_prints_a_text_report_on_stdout() {
    let out = pinilot()
        .args(["verify", "--theorem", "A", "--max-order", "24", "--format", "text"])
        .output()
        .unwrap();
    let text = stdout_of(&out);
    assert!(out.status.success(), "stderr: {}", stderr_of(&out));
    assert!(text.contains("selection A | max order 24 | pair bound 100"), "{text}");
    assert!(text.contains("status totals:"), "{text}");
    assert!(text.contains("thm-A"), "{text}");
    assert!(text.contains("unexpected counterexamples: none"), "{text}");
}

#[test]
fn max_order_comes_from_the_environment_unless_a_flag_overrides_it() {
    let out = pinilot()
        .args(["verify", "--theorem", "A", "--format", "json"])
        .env("PINILOT_MAX_ORDER", "24")
        .output()
        .unwrap();
    assert!(out.status.success(), "stderr: {}", stderr_of(&out));
    let parsed: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(parsed["config"]["max_order"], 24);
    assert_eq!(parsed["corpus"]["group_count"], 47);

    let out = pinilot()
        .args(["verify", "--theorem", "A", "--max-order", "12", "--format", "json"])
        .env("PINILOT_MAX_ORDER", "24")
        .output()
        .unwrap();
    assert!(out.status.success(), "stderr: {}", stderr_of(&out));
    let parsed: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(parsed["config"]["max_order"], 12);
}

#[test]
fn bad_arguments_exit_with_code_2() {
    let out = pinilot()
        .args(["verify", "--max-order", "9999"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(
        stderr_of(&out).contains("max order must be between 1 and 512, got 9999"),
        "{}",
        stderr_of(&out)
    );

    let out = pinilot()
        .args(["analyze", "/no/such/file.group"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).starts_with("error:"), "{}", stderr_of(&out));

    let out = pinilot()
        .args(["verify", "--theorem", "Z"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));

    let dir = tempfile::tempdir().unwrap();
    let out = pinilot()
        .arg("pi-check")
        .arg(s4_file(dir.path()))
        .args(["--subgroup", "(1 9)"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("outside"), "{}", stderr_of(&out));
}
