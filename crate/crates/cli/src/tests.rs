use std::path::{Path, PathBuf};

use bergman_numrange::bergman::TruncatedSeries;
use bergman_numrange::numrange::boundary_points;
use bergman_numrange::operators::build_weighted_composition;
use bergman_numrange::Complex64;
use serde_json::Value;
use tempfile::TempDir;

use super::execute;

struct Output {
    code: i32,
    stdout: Vec<u8>,
    stderr: Vec<u8>,
}

impl Output {
    fn success(&self) -> bool {
        self.code == 0
    }
}

fn run(args: &[&str]) -> Output {
    let (mut stdout, mut stderr) = (Vec::new(), Vec::new());
    let argv = std::iter::once("bergman-nr").chain(args.iter().copied());
    let code = execute(argv, &mut stdout, &mut stderr) as i32;
    Output { code, stdout, stderr }
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn csv_rows(text: &str) -> Vec<Vec<f64>> {
    text.lines()
        .filter(|l| !l.starts_with("theta"))
        .map(|l| l.split(',').map(|f| f.parse().unwrap()).collect())
        .collect()
}

#[test]
fn build_zsq_toeplitz_diagonal() {
    let dir = TempDir::new().unwrap();
    let cfg = write(
        &dir,
        "zsq.json",
        r#"{"alpha": 0, "truncation": 8, "operator": {"toeplitz": {"terms": [[1, 1, 1, 0]]}}}"#,
    );
    let out = run(&["build", "--config", s(&cfg)]);
    assert!(out.success());
    let rows = csv_rows(&String::from_utf8(out.stdout).unwrap());
    assert_eq!(rows.len(), 8);
    for (i, row) in rows.iter().enumerate() {
        assert_eq!(row.len(), 16);
        for j in 0..8 {
            let expected = if i == j {
                (i as f64 + 1.0) / (i as f64 + 2.0)
            } else {
                0.0
            };
            assert!((row[2 * j] - expected).abs() < 1e-14 && row[2 * j + 1].abs() < 1e-14);
        }
    }
}

#[test]
fn build_rotation_composition_is_diagonal() {
    let dir = TempDir::new().unwrap();
    let cfg = write(
        &dir,
        "rot.json",
        r#"{"alpha": 0.5, "truncation": 6,
            "operator": {"weighted_composition": {"psi": [[1, 0]], "phi": [[0, 0], [0, 1]]}}}"#,
    );
    let out = run(&["build", "--config", s(&cfg)]);
    assert!(out.success());
    let rows = csv_rows(&String::from_utf8(out.stdout).unwrap());
    for (i, row) in rows.iter().enumerate() {
        for j in 0..6 {
            let z = Complex64::new(row[2 * j], row[2 * j + 1]);
            let expected = if i == j {
                Complex64::i().powu(i as u32)
            } else {
                Complex64::new(0.0, 0.0)
            };
            assert!((z - expected).norm() < 1e-15);
        }
    }
}

#[test]
fn config_errors_exit_2_and_name_the_field() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.json", "{ not json");
    assert_eq!(run(&["build", "--config", s(&bad)]).code, 2);
    let unknown = write(
        &dir,
        "unknown.json",
        r#"{"alpha": 0, "truncation": 8, "colour": 1, "operator": {"toeplitz": {"terms": []}}}"#,
    );
    let out = run(&["build", "--config", s(&unknown)]);
    assert_eq!(out.code, 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("colour"));
    let small = write(
        &dir,
        "small.json",
        r#"{"alpha": 0, "truncation": 1, "operator": {"toeplitz": {"terms": []}}}"#,
    );
    let out = run(&["build", "--config", s(&small)]);
    assert_eq!(out.code, 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("truncation"));
    assert_eq!(run(&["range", "--matrix", "/nonexistent/m.csv"]).code, 2);
}

#[test]
fn range_of_nilpotent_is_circle() {
    let dir = TempDir::new().unwrap();
    let m = write(&dir, "nil.csv", "0,0,0,0\n1,0,0,0\n");
    let out = run(&["range", "--matrix", s(&m), "--angles", "360"]);
    assert!(out.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("theta,re,im,support\n"));
    let rows = csv_rows(&text);
    assert_eq!(rows.len(), 360);
    for r in rows {
        assert!((r[1].hypot(r[2]) - 0.5).abs() < 1e-10);
    }
}

#[test]
fn range_of_diagonal_is_square() {
    let dir = TempDir::new().unwrap();
    let m = write(
        &dir,
        "diag.csv",
        "1,0,0,0,0,0,0,0\n0,0,0,1,0,0,0,0\n0,0,0,0,-1,0,0,0\n0,0,0,0,0,0,0,-1\n",
    );
    let out = run(&["range", "--matrix", s(&m), "--format", "json"]);
    assert!(out.success());
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    let hull = doc["hull"].as_array().unwrap();
    assert_eq!(hull.len(), 4);
    for v in hull {
        let (re, im) = (v[0].as_f64().unwrap(), v[1].as_f64().unwrap());
        assert!((re.hypot(im) - 1.0).abs() < 1e-12 && (re.abs() < 1e-12 || im.abs() < 1e-12));
    }
    assert_eq!(doc["seed"], 7);
}

#[test]
fn bergman_shift_support_below_one() {
    let dir = TempDir::new().unwrap();
    let cfg = write(
        &dir,
        "shift.json",
        r#"{"alpha": 0, "truncation": 200,
            "operator": {"weighted_composition": {"psi": [[0, 0], [1, 0]], "phi": [[0, 0], [1, 0]]}}}"#,
    );
    let out = run(&["range", "--config", s(&cfg)]);
    assert!(out.success());
    let max = csv_rows(&String::from_utf8(out.stdout).unwrap())
        .iter()
        .map(|r| r[3])
        .fold(f64::NEG_INFINITY, f64::max);
    assert!((0.98..1.0).contains(&max), "{max}");
}

#[test]
fn build_then_range_matches_in_process_bits() {
    let dir = TempDir::new().unwrap();
    let cfg = write(
        &dir,
        "wc.json",
        r#"{"alpha": 1.5, "truncation": 24, "angles": 64,
            "operator": {"weighted_composition": {"psi": [[1, 0], [0.25, 0.1]], "phi": [[0.1, 0], [0.5, 0.2]]}}}"#,
    );
    let m = dir.path().join("m.csv");
    assert!(run(&["build", "--config", s(&cfg), "--out", s(&m)]).success());
    let from_file = run(&["range", "--matrix", s(&m), "--angles", "64"]);
    let from_cfg = run(&["range", "--config", s(&cfg)]);
    assert_eq!(from_file.stdout, from_cfg.stdout);

    let psi = TruncatedSeries::from_poly(&[Complex64::new(1.0, 0.0), Complex64::new(0.25, 0.1)], 23);
    let phi = TruncatedSeries::from_poly(&[Complex64::new(0.1, 0.0), Complex64::new(0.5, 0.2)], 23);
    let a = build_weighted_composition(&psi, &phi, 24, 1.5).unwrap();
    let pts = boundary_points(&a.matrix, 64).unwrap();
    let rows = csv_rows(&String::from_utf8(from_file.stdout).unwrap());
    assert_eq!(rows.len(), pts.len());
    for (r, b) in rows.iter().zip(&pts) {
        assert_eq!(r[0].to_bits(), b.theta.to_bits());
        assert_eq!(r[1].to_bits(), b.point.re.to_bits());
        assert_eq!(r[2].to_bits(), b.point.im.to_bits());
        assert_eq!(r[3].to_bits(), b.support.to_bits());
    }
}

#[test]
fn plot_writes_svg() {
    let dir = TempDir::new().unwrap();
    let m = write(&dir, "nil.csv", "0,0,0,0\n1,0,0,0\n");
    let svg = dir.path().join("w.svg");
    assert!(run(&["plot", "--matrix", s(&m), "--out", s(&svg)]).success());
    let text = std::fs::read_to_string(svg).unwrap();
    assert!(text.starts_with("<svg") && text.contains("<polyline") && text.contains("<line"));
}

#[test]
fn check_exit_codes() {
    let out = run(&["check", "c2_polygon"]);
    assert_eq!(out.code, 0);
    let r: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(r["pass"], true);
    for key in ["id", "params", "metrics", "tolerance", "notes", "seed"] {
        assert!(r.get(key).is_some(), "missing {key}");
    }
    assert_eq!(run(&["check", "no_such_check"]).code, 2);
    assert_eq!(run(&["check", "c2_polygon", "--set", "bogus=1"]).code, 2);
    let seg = run(&["check", "c2_polygon", "--set", "n=2"]);
    assert_eq!(seg.code, 0);
}

#[test]
fn check_output_is_deterministic_and_records_seed() {
    let a = run(&["check", "mobius_mean_value", "--seed", "11"]);
    let b = run(&["check", "mobius_mean_value", "--seed", "11"]);
    assert!(a.success());
    assert_eq!(a.stdout, b.stdout);
    let r: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(r["seed"], 11);
}

#[test]
fn check_all_reports_every_registered_check() {
    let out = run(&["check", "all"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let reports: Vec<Value> = text.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert!(reports.len() >= 20);
    let failing: Vec<&str> = reports
        .iter()
        .filter(|r| r["pass"] != true)
        .map(|r| r["id"].as_str().unwrap())
        .collect();
    // Exit status mirrors the reports: 0 iff every check passes.
    let expected = if failing.is_empty() { 0 } else { 1 };
    assert_eq!(out.code, expected, "failing: {failing:?}");
}

#[test]
fn list_checks_is_complete() {
    let out = run(&["list-checks"]);
    assert!(out.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let ids: Vec<String> = text
        .lines()
        .map(|l| {
            serde_json::from_str::<Value>(l).unwrap()["id"]
                .as_str()
                .unwrap()
                .to_string()
        })
        .collect();
    assert!(ids.len() >= 20);
    let mut unique = ids.clone();
    unique.sort();
    unique.dedup();
    assert_eq!(unique.len(), ids.len());
}
