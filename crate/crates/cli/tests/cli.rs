//! End-to-end CLI checks: exit codes, config handling, report files.

use std::process::Command;

fn nilva() -> Command {
    Command::new(env!("CARGO_BIN_EXE_nilva"))
}

#[test]
fn check_lie_single_params_passes() {
    let out = nilva()
        .args(["check", "lie", "--k", "1", "--j", "1"])
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("lie-jacobi"));
    assert!(stdout.contains("pass"));
}

#[test]
fn as_written_modes_are_reported_not_fatal() {
    let out = nilva()
        .args([
            "check",
            "modes",
            "--k",
            "1",
            "--j",
            "1",
            "--variant",
            "as-written",
            "--mode-grid",
            "1",
            "--monomial-window",
            "8",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("reported"), "{stdout}");
}

#[test]
fn unknown_suite_is_a_config_error() {
    let out = nilva().args(["check", "bogus"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn window_too_small_is_a_config_error() {
    let out = nilva()
        .args(["check", "fields", "--window", "2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn explain_known_and_unknown() {
    let out = nilva().args(["explain", "jacobi"]).output().unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("generator triple"));

    let out = nilva().args(["explain", "bogus"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn config_file_with_flag_override_and_report() {
    let dir = std::env::temp_dir().join(format!("nilva-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cfg_path = dir.join("run.toml");
    std::fs::write(
        &cfg_path,
        "k = 1\nj = 1\nwindow = 6\nseed = 7\nvariant = \"corrected\"\n",
    )
    .unwrap();
    let report1 = dir.join("report1.json");
    let report2 = dir.join("report2.json");
    for report in [&report1, &report2] {
        let out = nilva()
            .args([
                "check",
                "kernels",
                "--config",
                cfg_path.to_str().unwrap(),
                "--window",
                "4",
                "--report",
                report.to_str().unwrap(),
            ])
            .output()
            .unwrap();
        assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    }
    let a = std::fs::read(&report1).unwrap();
    let b = std::fs::read(&report2).unwrap();
    assert_eq!(a, b, "reports must be byte-identical");
    let parsed: serde_json::Value = serde_json::from_slice(&a).unwrap();
    assert_eq!(parsed["version"], 1);
    // the --window flag overrides the config file's value
    assert_eq!(parsed["config"]["window"], 4);
    assert!(parsed["results"].as_array().unwrap().len() >= 8);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn variant_both_emits_diff() {
    let out = nilva()
        .args([
            "check",
            "modes",
            "--k",
            "1",
            "--j",
            "1",
            "--variant",
            "both",
            "--mode-grid",
            "1",
            "--monomial-window",
            "8",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("variant diff"), "{stdout}");
    assert!(stdout.contains("[w2, y3_"), "{stdout}");
}

#[test]
fn negative_parameters_parse() {
    let out = nilva()
        .args(["check", "lie", "--k", "-3", "--j", "-5"])
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
}
