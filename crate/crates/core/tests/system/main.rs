//! System layer: the full assemble + solve pipeline and the `heatcg` binary.

use std::process::Command;

use heatcg::{solve_heat, solve_heat_with, CgConfig, HeatProblem, Storage};

fn heatcg(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_heatcg"))
        .args(args)
        .output()
        .expect("run heatcg")
}

#[test]
fn solve_1d_heat_equation() {
    let problem = HeatProblem::new(1.0, 1.0, 100, 0.0, 1.0).unwrap();
    let solution = solve_heat(&problem, &CgConfig::new(1000, 1e-10).unwrap()).unwrap();
    assert!(solution.cg.converged);
    assert!(
        solution.l2_error_vs_analytic < 1e-8,
        "{}",
        solution.l2_error_vs_analytic
    );
}

#[test]
fn heat_discrete_exactness() {
    let cfg = CgConfig::new(10_000, 1e-10).unwrap();
    for n in 1..=200 {
        let p = HeatProblem::new(1.0, 1.0, n, 0.0, 1.0).unwrap();
        let s = solve_heat_with(&p, &cfg, Storage::Crs).unwrap();
        assert!(s.cg.converged, "n = {n}");
        assert!(
            s.l2_error_vs_analytic <= 100.0 * 1e-10,
            "n = {n}: {}",
            s.l2_error_vs_analytic
        );
    }
}

#[test]
fn heat_general_boundaries_and_storage() {
    let p = HeatProblem::new(0.4, 2.5, 37, -3.0, 7.0).unwrap();
    let cfg = CgConfig::new(1000, 1e-10).unwrap();
    let dense = solve_heat_with(&p, &cfg, Storage::Dense).unwrap();
    let crs = solve_heat_with(&p, &cfg, Storage::Crs).unwrap();
    assert_eq!(dense, crs);
    assert!(dense.l2_error_vs_analytic < 1e-8);
}

#[test]
fn cli_solve_defaults() {
    let out = heatcg(&["solve"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("x,temperature"));
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 100);
    let x0: f64 = rows[0].split(',').next().unwrap().parse().unwrap();
    assert_eq!(x0, 0.005);
    assert!(String::from_utf8(out.stderr)
        .unwrap()
        .contains("converged: true"));
}

#[test]
fn cli_storage_outputs_identical() {
    let dir = tempfile::tempdir().unwrap();
    let dense = dir.path().join("dense.csv");
    let crs = dir.path().join("crs.csv");
    assert_eq!(
        heatcg(&[
            "solve",
            "--storage",
            "dense",
            "--out",
            dense.to_str().unwrap()
        ])
        .status
        .code(),
        Some(0)
    );
    assert_eq!(
        heatcg(&["solve", "--storage", "crs", "--out", crs.to_str().unwrap()])
            .status
            .code(),
        Some(0)
    );
    let (a, b) = (std::fs::read(dense).unwrap(), std::fs::read(crs).unwrap());
    assert!(!a.is_empty());
    assert_eq!(a, b);
    assert_eq!(heatcg(&["solve"]).stdout, a);
}

#[test]
fn cli_verify_exit_codes() {
    assert_eq!(heatcg(&["verify"]).status.code(), Some(0));
    assert_eq!(
        heatcg(&["verify", "--t-left", "5", "--t-right", "5"])
            .status
            .code(),
        Some(0)
    );
    assert_eq!(
        heatcg(&["verify", "--max-iters", "1"]).status.code(),
        Some(1)
    );
    assert_eq!(heatcg(&["verify", "--cells", "0"]).status.code(), Some(2));
    assert_eq!(heatcg(&["solve", "--cells", "0"]).status.code(), Some(2));
}

#[test]
fn cli_pyramid_exit_codes() {
    let seven_two_one = concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/tests/fixtures/seven_two_one.csv"
    );
    let out = heatcg(&["pyramid", seven_two_one]);
    assert_eq!(out.status.code(), Some(0));
    let report = String::from_utf8(out.stdout).unwrap();
    assert!(report.contains("Ok: 10\n") && report.contains("pyramid: OK"));
    let inverted = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/fixtures/inverted.csv");
    assert_eq!(heatcg(&["pyramid", inverted]).status.code(), Some(3));
    let failing = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/fixtures/failing.csv");
    let out = heatcg(&["pyramid", failing]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stdout).unwrap().contains("Fail: 1"));
    assert_eq!(
        heatcg(&["pyramid", "/no/such/manifest.csv"]).status.code(),
        Some(2)
    );
}
