//! The `ncweyl` binary: outputs, formats and exit codes.

use std::io::Write;
use std::process::{Command, Output};

fn ncweyl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ncweyl"))
        .args(args)
        .env("NCWEYL_SEED", "11")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn grid_file() -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    write!(f, r#"{{"hbar": 0.25, "a": 0.125, "k_min": 1, "k_max": 4, "l_min": 0, "l_max": 2}}"#).unwrap();
    f
}

#[test]
fn normalize_commutator() {
    let o = ncweyl(&["normalize", "dx*x"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "x*dx + 1 + hbar*dtau");
}

#[test]
fn normalize_json() {
    let o = ncweyl(&["--json", "normalize", "(1/2)*hbar^-1*dtau"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["result"], "(1/2)*hbar^-1*dtau");
}

#[test]
fn kg_classical_branches() {
    let o = ncweyl(&["kg", "--p", "5", "--m", "3", "--hbar", "0"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("E_plus=4\n"), "{s}");
    assert!(s.contains("E_minus=-4\n"), "{s}");
}

#[test]
fn hydrogen_classical_limit() {
    let o = ncweyl(&["hydrogen", "--a", "1", "--b", "1", "--q", "1", "--hbar", "0"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("sigma=0.5\n") && s.contains("E=-0.25\n"), "{s}");
}

#[test]
fn hydrogen_json_scan() {
    let o = ncweyl(&["--json", "hydrogen", "--a", "1", "--b", "1", "--q", "1", "--hbars", "0,0.001,0.01"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let rows = v.as_array().expect("one record per hbar");
    assert_eq!(rows.len(), 3);
}

#[test]
fn act_and_radial() {
    assert_eq!(stdout(&ncweyl(&["act", "dx", "x^2"])).trim(), "2*x");
    assert_eq!(stdout(&ncweyl(&["radial", "boost", "tau^2 - r^2"])).trim(), "-2*hbar*r");
    assert_eq!(stdout(&ncweyl(&["radial", "laplacian", "tau*r^2"])).trim(), "6*tau + 12*hbar");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(ncweyl(&["normalize", "x**2"]).status.code(), Some(2));
    assert_eq!(ncweyl(&["bogus"]).status.code(), Some(2));
    assert_eq!(ncweyl(&["lattice", "radial_laplacian", "1"]).status.code(), Some(2));
    let e = ncweyl(&["normalize", "x**2"]);
    assert!(String::from_utf8_lossy(&e.stderr).contains("column 3"));
}

#[test]
fn domain_errors_exit_one() {
    assert_eq!(ncweyl(&["hydrogen", "--a", "1", "--b", "1", "--q", "1", "--hbars", "-1"]).status.code(), Some(1));
    let mut g = tempfile::NamedTempFile::new().unwrap();
    write!(g, r#"{{"hbar": 0.5, "a": 0.5, "k_min": 0, "k_max": 3, "l_min": 0, "l_max": 1}}"#).unwrap();
    let o = ncweyl(&["--grid", g.path().to_str().unwrap(), "lattice", "radial_laplacian", "1"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn lattice_kernel_to_csv_file() {
    let grid = grid_file();
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("lap.csv");
    let o = ncweyl(&[
        "--grid",
        grid.path().to_str().unwrap(),
        "--csv",
        "--out",
        out.to_str().unwrap(),
        "lattice",
        "radial_laplacian",
        "3 + 2*r^-1",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let mut rd = csv::Reader::from_path(&out).unwrap();
    assert_eq!(rd.headers().unwrap().iter().collect::<Vec<_>>(), ["tau", "r", "value"]);
    let mut n = 0;
    for rec in rd.records() {
        let v: f64 = rec.unwrap()[2].parse().unwrap();
        assert!(v.abs() < 1e-12);
        n += 1;
    }
    assert!(n > 0);
}

#[test]
fn selftest_passes() {
    let o = ncweyl(&["selftest", "--rounds", "5"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}
