//! End-to-end tests of the `simplex-hull` binary: exit codes, file formats,
//! and byte-for-byte determinism of reports.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use simplex_hull::{regular_simplex, Simplex, Vector};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_simplex-hull"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn write_simplex(dir: &Path, name: &str, s: &Simplex) -> String {
    let path = dir.join(name);
    fs::write(&path, s.to_json()).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn verify_theorems_small_range_passes_and_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let out_a = dir.path().join("a.csv");
    let out_b = dir.path().join("b.csv");
    for out in [&out_a, &out_b] {
        let output = run(&[
            "verify-theorems",
            "--n-range",
            "2..2",
            "--samples",
            "8",
            "--seed",
            "5",
            "--output",
            out.to_str().unwrap(),
        ]);
        assert!(
            output.status.success(),
            "stdout: {}\nstderr: {}",
            String::from_utf8_lossy(&output.stdout),
            String::from_utf8_lossy(&output.stderr)
        );
        let text = String::from_utf8(output.stdout).unwrap();
        assert!(text.contains("PASS"));
        assert!(!text.contains("FAIL"));
    }
    assert_eq!(fs::read(&out_a).unwrap(), fs::read(&out_b).unwrap());
}

#[test]
fn verify_theorems_rejects_bad_range_with_exit_2() {
    let output = run(&["verify-theorems", "--n-range", "9..9"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn verify_theorems_writes_json_reports() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.json");
    let output = run(&[
        "verify-theorems",
        "--n-range",
        "2",
        "--samples",
        "8",
        "--format",
        "json",
        "--output",
        out.to_str().unwrap(),
    ]);
    assert!(output.status.success());
    let report: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(report["command"], "verify-theorems");
    assert!(report["verdicts"].as_array().unwrap().len() > 10);
    assert!(report["inputs_digest"].as_str().unwrap().len() == 64);
}

#[test]
fn unknown_flag_is_usage_error() {
    let output = run(&["verify-theorems", "--definitely-not-a-flag"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn oracle_hull_unit_cube_and_simplex() {
    let dir = tempfile::tempdir().unwrap();
    let corners: Vec<Vec<f64>> = (0..8u32)
        .map(|m| (0..3).map(|b| f64::from(m >> b & 1)).collect())
        .collect();
    let cube = dir.path().join("cube.json");
    fs::write(
        &cube,
        serde_json::json!({"n": 3, "points": corners}).to_string(),
    )
    .unwrap();
    let output = run(&["oracle-hull", cube.to_str().unwrap()]);
    assert!(output.status.success());
    let text = String::from_utf8(output.stdout).unwrap();
    let volume: f64 = text
        .lines()
        .find_map(|l| l.strip_prefix("volume = "))
        .unwrap()
        .parse()
        .unwrap();
    assert!((volume - 1.0).abs() < 1e-12, "{text}");
    assert!(text.contains("facets = 6"), "{text}");

    // unit right 4-simplex: volume 1/24
    let mut pts = vec![vec![0.0; 4]];
    for i in 0..4 {
        let mut c = vec![0.0; 4];
        c[i] = 1.0;
        pts.push(c);
    }
    let simplex = dir.path().join("simplex.json");
    fs::write(
        &simplex,
        serde_json::json!({"n": 4, "points": pts}).to_string(),
    )
    .unwrap();
    let output = run(&["oracle-hull", simplex.to_str().unwrap()]);
    assert!(output.status.success());
    let text = String::from_utf8(output.stdout).unwrap();
    let volume: f64 = text
        .lines()
        .find_map(|l| l.strip_prefix("volume = "))
        .unwrap()
        .parse()
        .unwrap();
    assert!((volume - 1.0 / 24.0).abs() < 1e-12);
}

#[test]
fn oracle_hull_degenerate_input_exits_1() {
    let dir = tempfile::tempdir().unwrap();
    let flat = dir.path().join("flat.json");
    fs::write(
        &flat,
        serde_json::json!({"n": 3, "points": [[0,0,0],[1,0,0],[2,0,0],[3,0,0]]}).to_string(),
    )
    .unwrap();
    let output = run(&["oracle-hull", flat.to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(1));
}

#[test]
fn missing_file_exits_2() {
    let output = run(&["oracle-hull", "/nonexistent/points.json"]);
    assert_eq!(output.status.code(), Some(2));
    let output = run(&["reflect-scan", "/nonexistent/simplex.json"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn oracle_hull_matches_formula_on_reflected_configuration() {
    // single-upper-facet configuration: reflect the regular 3-simplex at the
    // hyperplane normal to its vertex-sum direction and compare volumes
    let dir = tempfile::tempdir().unwrap();
    let s = regular_simplex(3).unwrap();
    let u = s.vertex_sum().normalized().unwrap();
    let mut pts: Vec<Vec<f64>> = s.vertices().iter().map(|v| v.0.clone()).collect();
    pts.extend(
        s.vertices()
            .iter()
            .map(|p| p.sub(&u.scale(2.0 * p.dot(&u))).0.clone()),
    );
    let file = dir.path().join("reflected.json");
    fs::write(
        &file,
        serde_json::json!({"n": 3, "points": pts}).to_string(),
    )
    .unwrap();
    let output = run(&["oracle-hull", file.to_str().unwrap()]);
    assert!(output.status.success());
    let text = String::from_utf8(output.stdout).unwrap();
    let volume: f64 = text
        .lines()
        .find_map(|l| l.strip_prefix("volume = "))
        .unwrap()
        .parse()
        .unwrap();
    let ratio = volume / s.volume();
    assert!((ratio - 6.0).abs() < 1e-9, "ratio {ratio}");
}

#[test]
fn reflect_scan_rows_are_consistent_and_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let s = regular_simplex(3).unwrap();
    let path = write_simplex(dir.path(), "regular3.json", &s);
    let out_a = dir.path().join("scan_a.csv");
    let out_b = dir.path().join("scan_b.csv");
    for out in [&out_a, &out_b] {
        let output = run(&[
            "reflect-scan",
            &path,
            "--grid",
            "32",
            "--oracle-check",
            "--output",
            out.to_str().unwrap(),
        ]);
        assert!(
            output.status.success(),
            "{}",
            String::from_utf8_lossy(&output.stderr)
        );
    }
    assert_eq!(fs::read(&out_a).unwrap(), fs::read(&out_b).unwrap());

    let text = fs::read_to_string(&out_a).unwrap();
    let mut lines = text.lines();
    let header: Vec<&str> = lines.next().unwrap().split(',').collect();
    let col = |name: &str| header.iter().position(|h| *h == name).unwrap();
    let (k_col, ratio_col, oracle_col, bound_col) = (
        col("k"),
        col("formula_ratio"),
        col("oracle_ratio"),
        col("remark_bound"),
    );
    let mut max_ratio = f64::NEG_INFINITY;
    let mut rows = 0;
    for line in lines {
        let cells: Vec<&str> = line.split(',').collect();
        let k: usize = cells[k_col].parse().unwrap();
        assert!(k >= 1);
        let ratio: f64 = cells[ratio_col].parse().unwrap();
        let oracle: f64 = cells[oracle_col].parse().unwrap();
        let bound: f64 = cells[bound_col].parse().unwrap();
        assert!((ratio - oracle).abs() <= 1e-8 * oracle.abs());
        assert!(bound >= ratio - 1e-9);
        max_ratio = max_ratio.max(ratio);
        rows += 1;
    }
    assert!(rows >= 32);
    // the anchor row at u = s/|s| puts the maximum at 2n = 6
    assert!((max_ratio - 6.0).abs() < 1e-9, "max ratio {max_ratio}");
}

#[test]
fn search_subcommand_reproduces_known_maxima() {
    let dir = tempfile::tempdir().unwrap();

    let s3 = regular_simplex(3).unwrap();
    let path3 = write_simplex(dir.path(), "regular3.json", &s3);
    let output = run(&["search", &path3, "--family", "point", "--oracle-check"]);
    assert!(output.status.success());
    let result: serde_json::Value =
        serde_json::from_slice(&output.stdout).expect("search prints JSON");
    assert!((result["max_ratio"].as_f64().unwrap() - 8.0).abs() < 1e-9);
    assert!(result["contact_certificate"]
        .as_str()
        .unwrap()
        .contains("single common vertex"));
    assert!(result["oracle_ratio"].as_f64().is_some());

    let tri = Simplex::new(vec![
        Vector::new(vec![0.0, 0.0]),
        Vector::new(vec![1.0, 0.0]),
        Vector::new(vec![0.0, 1.0]),
    ])
    .unwrap();
    let path2 = write_simplex(dir.path(), "tri.json", &tri);
    let output = run(&["search", &path2, "--family", "translation"]);
    assert!(output.status.success());
    let result: serde_json::Value = serde_json::from_slice(&output.stdout).unwrap();
    assert!((result["max_ratio"].as_f64().unwrap() - 3.0).abs() < 1e-8);

    let s4 = regular_simplex(4).unwrap();
    let path4 = write_simplex(dir.path(), "regular4.json", &s4);
    let trace = dir.path().join("trace.csv");
    let output = run(&[
        "search",
        &path4,
        "--family",
        "hyperplane",
        "--output",
        trace.to_str().unwrap(),
    ]);
    assert!(output.status.success());
    let result: serde_json::Value = serde_json::from_slice(&output.stdout).unwrap();
    assert!((result["max_ratio"].as_f64().unwrap() - 8.0).abs() < 1e-4);
    let trace_text = fs::read_to_string(&trace).unwrap();
    assert!(trace_text.starts_with("iteration,best_ratio\n"));
    assert!(trace_text.lines().count() > 2);
}
