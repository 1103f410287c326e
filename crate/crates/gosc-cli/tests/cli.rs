//! End-to-end tests of the `gosc` binary: exit-code contract, file formats,
//! and run-to-run determinism.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use num_complex::Complex64 as C64;

use gosc_core::nim::hstate_prefactor;
use gosc_core::oscillator::{psi_n, PhysParams};

fn gosc(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gosc"))
        .current_dir(dir)
        .args(args)
        .env_remove("GOSC_CONFIG")
        .output()
        .expect("binary runs")
}

fn small_config(dir: &Path) -> String {
    let cfg = r#"{
        "truncation": 12,
        "quadrature_points": 40,
        "grid": {"t_min": 0.0, "t_max": 1.0, "t_count": 41, "x_min": -5.0, "x_max": 5.0, "x_count": 61},
        "out_dir": "out"
    }"#;
    fs::write(dir.join("cfg.json"), cfg).unwrap();
    "cfg.json".into()
}

#[test]
fn unknown_suite_exits_2_and_lists_names() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = small_config(dir.path());
    let out = gosc(dir.path(), &["verify", "--config", &cfg, "--suite", "bogus"]);
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&out.stderr);
    for name in ["algebra", "group", "kernels", "lambda", "nim", "oscillator"] {
        assert!(stderr.contains(name), "stderr missing {name}: {stderr}");
    }
}

#[test]
fn tiny_truncation_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("cfg.json"), r#"{"truncation": 2}"#).unwrap();
    let out = gosc(dir.path(), &["verify", "--config", "cfg.json", "--suite", "lambda"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("protected window"));
}

#[test]
fn algebra_suite_passes_and_report_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = small_config(dir.path());
    let out = gosc(dir.path(), &["verify", "--config", &cfg, "--suite", "algebra"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));

    let report_path = dir.path().join("out/verify_report.json");
    let first = fs::read(&report_path).unwrap();
    let parsed: serde_json::Value = serde_json::from_slice(&first).unwrap();
    assert_eq!(parsed["overall_pass"], true);
    assert!(parsed["suites"][0]["checks"].as_array().unwrap().len() >= 5);

    // identical config + seed reproduces the bytes
    let out2 = gosc(dir.path(), &["verify", "--config", &cfg, "--suite", "algebra"]);
    assert_eq!(out2.status.code(), Some(0));
    assert_eq!(first, fs::read(&report_path).unwrap());
}

#[test]
fn spectrum_rows_and_values() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = small_config(dir.path());
    let out = gosc(dir.path(), &["spectrum", "--config", &cfg, "--nmax", "8"]);
    assert_eq!(out.status.code(), Some(0));
    let csv = fs::read_to_string(dir.path().join("out/spectrum.csv")).unwrap();
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines.len(), 10); // header + 9 rows
    assert_eq!(lines[0], "n,energy,energy_over_hbar_omega");
    assert_eq!(lines[1], "0,0.5,0.5");
    let row5: Vec<&str> = lines[6].split(',').collect();
    assert_eq!(row5[0], "5");
    assert_eq!(row5[2], "5.5");

    // byte-identical rerun
    let bytes = fs::read(dir.path().join("out/spectrum.csv")).unwrap();
    gosc(dir.path(), &["spectrum", "--config", &cfg, "--nmax", "8"]);
    assert_eq!(bytes, fs::read(dir.path().join("out/spectrum.csv")).unwrap());
}

#[test]
fn spectrum_nmax_above_truncation_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = small_config(dir.path());
    let out = gosc(dir.path(), &["spectrum", "--config", &cfg, "--nmax", "30"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn kernel_u0_matches_scaled_ground_state() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = small_config(dir.path());
    let out = gosc(dir.path(), &["kernel", "--config", &cfg, "--u", "0,0", "--path", "both"]);
    assert_eq!(out.status.code(), Some(0));

    let p = PhysParams::natural();
    let pref = hstate_prefactor(&p);
    let csv = fs::read_to_string(dir.path().join("out/kernel.csv")).unwrap();
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines.len(), 1 + 41 * 61);
    let mut worst = 0.0f64;
    for line in &lines[1..] {
        let f: Vec<f64> = line.split(',').map(|v| v.parse().unwrap()).collect();
        let want = pref * psi_n(0, f[0], f[1], &p);
        worst = worst.max((C64::new(f[2], f[3]) - want).norm());
    }
    assert!(worst < 1e-12, "kernel grid deviates from the scaled ground state by {worst}");

    // the residual file stays at rounding level
    let res = fs::read_to_string(dir.path().join("out/kernel_path_residual.csv")).unwrap();
    let max_rel = res
        .lines()
        .skip(1)
        .map(|l| l.rsplit(',').next().unwrap().parse::<f64>().unwrap())
        .fold(0.0f64, f64::max);
    assert!(max_rel <= 1e-9, "path residual {max_rel}");
}

fn synth_setup() -> (tempfile::TempDir, String) {
    let dir = tempfile::tempdir().unwrap();
    let cfg = r#"{
        "truncation": 12,
        "quadrature_points": 40,
        "grid": {"t_min": 0.0, "t_max": 1.0, "t_count": 101, "x_min": -6.0, "x_max": 6.0, "x_count": 401},
        "out_dir": "out"
    }"#;
    fs::write(dir.path().join("scfg.json"), cfg).unwrap();
    (dir, "scfg.json".into())
}

#[test]
fn synthesize_first_excited_passes_residual() {
    let (dir, cfg) = synth_setup();
    fs::write(dir.path().join("coeffs.txt"), "0,0\n1,0\n").unwrap();
    let out = gosc(dir.path(), &["synthesize", "--config", &cfg, "coeffs.txt"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let report: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("out/synthesize_report.json")).unwrap())
            .unwrap();
    assert!(report["schrodinger_residual"].as_f64().unwrap() <= 1e-6);
    assert!(report["norm_identity_rel_err"].as_f64().unwrap() <= 1e-6);
    assert_eq!(report["pass"], true);
}

#[test]
fn synthesize_ground_tracks_psi0() {
    let (dir, cfg) = synth_setup();
    fs::write(dir.path().join("g.txt"), "1\n").unwrap();
    let out = gosc(dir.path(), &["synthesize", "--config", &cfg, "g.txt"]);
    assert_eq!(out.status.code(), Some(0));

    // grid values are proportional to psi_0: normalized correlation ~ 1
    let p = PhysParams::natural();
    let csv = fs::read_to_string(dir.path().join("out/synthesize.csv")).unwrap();
    let mut dot = C64::new(0.0, 0.0);
    let mut na = 0.0;
    let mut nb = 0.0;
    for line in csv.lines().skip(1) {
        let f: Vec<f64> = line.split(',').map(|v| v.parse().unwrap()).collect();
        let a = C64::new(f[2], f[3]);
        let b = psi_n(0, f[0], f[1], &p);
        dot += a.conj() * b;
        na += a.norm_sqr();
        nb += b.norm_sqr();
    }
    let corr = dot.norm() / (na * nb).sqrt();
    assert!(corr >= 1.0 - 1e-6, "correlation {corr}");
}

#[test]
fn synthesize_bad_inputs_exit_2() {
    let (dir, cfg) = synth_setup();

    fs::write(dir.path().join("empty.txt"), "# nothing here\n").unwrap();
    let out = gosc(dir.path(), &["synthesize", "--config", &cfg, "empty.txt"]);
    assert_eq!(out.status.code(), Some(2));

    fs::write(dir.path().join("bad.txt"), "1,0\nnot-a-number\n").unwrap();
    let out = gosc(dir.path(), &["synthesize", "--config", &cfg, "bad.txt"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));

    let too_many = "1\n".repeat(14);
    fs::write(dir.path().join("long.txt"), too_many).unwrap();
    let out = gosc(dir.path(), &["synthesize", "--config", &cfg, "long.txt"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn shipped_default_config_loads_and_matches_builtin() {
    let dir = tempfile::tempdir().unwrap();
    let shipped = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../default-config.json");
    let out = gosc(
        dir.path(),
        &["verify", "--config", shipped.to_str().unwrap(), "--suite", "algebra", "--out", "a"],
    );
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    // built-in defaults produce the identical report
    let out2 = gosc(dir.path(), &["verify", "--suite", "algebra", "--out", "b"]);
    assert_eq!(out2.status.code(), Some(0));
    assert_eq!(
        fs::read(dir.path().join("a/verify_report.json")).unwrap(),
        fs::read(dir.path().join("b/verify_report.json")).unwrap()
    );
}

#[test]
fn impossible_tolerance_scale_exits_1() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(
        dir.path().join("cfg.json"),
        r#"{"tolerance_scale": {"algebra": 1e-12}, "out_dir": "out"}"#,
    )
    .unwrap();
    let out = gosc(dir.path(), &["verify", "--config", "cfg.json", "--suite", "algebra"]);
    assert_eq!(out.status.code(), Some(1));
    let report: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("out/verify_report.json")).unwrap())
            .unwrap();
    assert_eq!(report["overall_pass"], false);
}

#[test]
fn full_default_verify_passes_with_many_checks() {
    let dir = tempfile::tempdir().unwrap();
    let out = gosc(dir.path(), &["verify"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let report: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("out/verify_report.json")).unwrap())
            .unwrap();
    assert_eq!(report["overall_pass"], true);
    let total: usize = report["suites"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s["checks"].as_array().unwrap().len())
        .sum();
    assert!(total >= 25, "only {total} checks in the full report");
}
