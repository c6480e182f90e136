//! End-to-end tests of the `qedprop` binary: subcommand output, config
//! handling, exit codes.

use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_qedprop"))
}

#[test]
fn check_passes_with_defaults() {
    let out = bin().arg("check").output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let pass_lines = text.lines().filter(|l| l.starts_with("[PASS]")).count();
    assert!(pass_lines >= 12, "expected at least 12 identity groups, saw {pass_lines}");
    assert!(!text.contains("[FAIL]"));
    assert!(text.contains("0 failed"));
}

#[test]
fn check_json_has_stable_keys() {
    let out = bin().args(["check", "--json"]).output().unwrap();
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(value["outcomes"].as_array().unwrap().len() >= 12);
    assert_eq!(value["failed"], 0);
    let first = &value["outcomes"][0];
    for key in ["id", "description", "passed", "detail"] {
        assert!(first.get(key).is_some(), "missing key {key}");
    }
}

#[test]
fn broken_rho_config_fails_counterterm_check() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("broken.cfg");
    std::fs::write(&cfg, "rho = 1\nz_alpha = 3\n").unwrap();
    let out = bin().arg("check").arg("--config").arg(&cfg).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("[FAIL] counterterm-structure"));
}

#[test]
fn propagator_golden_row() {
    let out = bin()
        .args([
            "propagator", "--alpha-b", "2", "--mtilde2", "1", "--k2-min", "1", "--k2-max", "1",
            "--k2-steps", "1",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "k2,d1,d2,transverse,longitudinal");
    let row = lines.next().unwrap();
    // d1 = 1/2, d2 = 1/6, transverse = 1/2, longitudinal = 2/3
    assert_eq!(
        row,
        "1.0000000000000000e0,5.0000000000000000e-1,1.6666666666666666e-1,\
         5.0000000000000000e-1,6.6666666666666663e-1"
    );
}

#[test]
fn propagator_feynman_gauge_has_zero_d2() {
    let out = bin()
        .args([
            "propagator", "--alpha-b", "1", "--mtilde2", "1", "--k2-min", "1", "--k2-max", "5",
            "--k2-steps", "5",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    for line in text.lines().skip(1) {
        let d2 = line.split(',').nth(2).unwrap();
        assert_eq!(d2, "0.0000000000000000e0");
    }
}

#[test]
fn empty_grid_is_config_error_and_writes_nothing() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("table.csv");
    let out = bin()
        .args(["propagator", "--k2-steps", "0", "--out"])
        .arg(&out_path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(!out_path.exists(), "no file may be written on a config error");
}

#[test]
fn renormalized_table_needs_f() {
    // with f the table is the renormalized propagator: f = s gives the bare
    // one back, so d1 at k2 = 1 must match the bare value
    let out = bin()
        .args([
            "propagator", "--alpha-b", "2", "--mtilde2", "1", "--f-num", "0,1", "--k2-min", "1",
            "--k2-max", "1", "--k2-steps", "1",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let row = text.lines().nth(1).unwrap();
    assert!(row.starts_with("1.0000000000000000e0,5.0000000000000000e-1"));
}

#[test]
fn potential_matches_yukawa_closed_form() {
    let out = bin()
        .args([
            "potential", "--spectrum", "yukawa", "--yukawa-m2", "1", "--r-min", "1", "--r-max",
            "2", "--r-steps", "2",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "r,V,model_id");
    let row: Vec<&str> = lines.next().unwrap().split(',').collect();
    let v: f64 = row[1].parse().unwrap();
    let expect = (-1.0f64).exp() / (4.0 * std::f64::consts::PI);
    assert!(((v - expect) / expect).abs() < 1e-6);
    assert_eq!(row[2], "yukawa(m2=1;q=1)");
}

#[test]
fn potential_rejects_flat_spectrum() {
    // f = 0 leaves a constant tail in the corrected spectrum
    let out = bin()
        .args(["potential", "--f-num", "0", "--mtilde2", "1"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("not integrable"), "stderr: {err}");
}

#[test]
fn sweep_reports_identical_spectra() {
    let out = bin()
        .args(["sweep", "--mtilde2", "1", "--alphas", "1/2,1,2,5"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("verdict: IDENTICAL SPECTRA"));
    assert!(text.contains("d2 coefficients pairwise distinct: true"));
}

#[test]
fn sweep_json_verdict() {
    let out = bin()
        .args(["sweep", "--json", "--alphas", "1,2"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["verdict"], "IDENTICAL SPECTRA");
    assert_eq!(value["spectra_identical"], true);
}

#[test]
fn falloff_reports_expected_exponents() {
    let out = bin().arg("falloff").output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("regression exponent: -2.00"));
    assert!(text.contains("exact exponent: -2"));

    let out = bin()
        .args(["falloff", "--target", "massive", "--component", "u2-times-s"])
        .output()
        .unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("regression exponent: 0.00"));
    assert!(text.contains("exact exponent: 0"));
}

#[test]
fn flags_override_config_file() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.cfg");
    std::fs::write(&cfg, "alpha_b = 1\nmtilde2 = 1\nk2_min = 1\nk2_max = 1\nk2_steps = 1\n")
        .unwrap();
    // config alone: alpha_B = 1 gives d2 = 0
    let out = bin().arg("propagator").arg("--config").arg(&cfg).output().unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().nth(1).unwrap().contains(",0.0000000000000000e0,"));
    // flag overrides to alpha_B = 2: d2 = 1/6
    let out = bin()
        .arg("propagator")
        .arg("--config")
        .arg(&cfg)
        .args(["--alpha-b", "2"])
        .output()
        .unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().nth(1).unwrap().contains(",1.6666666666666666e-1,"));
}

#[test]
fn unknown_config_key_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("bad.cfg");
    std::fs::write(&cfg, "not_a_key = 7\n").unwrap();
    let out = bin().arg("check").arg("--config").arg(&cfg).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn singular_model_is_surfaced_with_message() {
    // f = -1 with mtilde2 = 1 makes f + mtilde2 identically zero
    let out = bin()
        .args(["propagator", "--f-num", "-1", "--mtilde2", "1"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("singular symbol"), "stderr: {err}");
}
