//! The `tropab` binary: exit codes, determinism and the solution-file round trip.

use std::path::Path;
use std::process::Command;

use serde_json::Value;
use tropical_abelian::{catalog, io};

fn tropab(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_tropab")).args(args).output().expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

fn write_torus(dir: &Path) -> String {
    let path = dir.join("torus.json");
    std::fs::write(&path, r#"{"period": [["9", "1"], ["1", "7"]], "class": [[2, 0], [0, 2]]}"#).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn enumerated_files_reverify() {
    let dir = tempfile::tempdir().unwrap();
    let torus = write_torus(dir.path());
    let out_dir = dir.path().join("solutions");
    let (code, stdout, _) =
        tropab(&["enumerate", "--torus", &torus, "--seed", "4", "--out", out_dir.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(stdout.contains("solutions: 22"));
    let summary: Value =
        serde_json::from_str(&std::fs::read_to_string(out_dir.join("solutions.json")).unwrap()).unwrap();
    let solutions = summary["solutions"].as_array().unwrap();
    assert_eq!(solutions.len(), 22);
    let mut total = 0;
    for s in solutions {
        let file = out_dir.join(s["file"].as_str().unwrap());
        let file = file.to_str().unwrap();
        let (code, stdout, _) = tropab(&["check", file]);
        assert_eq!(code, 0, "{stdout}");
        assert!(stdout.contains("class: [[2, 0], [0, 2]]"));
        let (code, stdout, _) = tropab(&["--format", "json", "mult", file]);
        assert_eq!(code, 0);
        let report: Value = serde_json::from_str(&stdout).unwrap();
        assert_eq!(report["theta"]["agrees"], true);
        assert_eq!(report["complex_by_product"], s["complex"]);
        assert_eq!(report["refined"], s["refined"]);
        total += s["complex"].as_i64().unwrap();
    }
    assert_eq!(total, 120);
}

#[test]
fn invariants_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let torus = write_torus(dir.path());
    let a = tropab(&["invariants", "--torus", &torus, "--seed", "8"]);
    let b = tropab(&["invariants", "--torus", &torus, "--seed", "8"]);
    assert_eq!(a, b);
    assert_eq!(a.0, 0);
    assert!(a.1.contains("N = 120\n"));
    assert!(a.1.contains("BG = 2q^3 + 4q^2 + 18q + 40 + 18q^-1 + 4q^-2 + 2q^-3\n"));
    let (code, json, _) =
        tropab(&["--format", "json", "invariants", "--torus", &torus, "--class", "2,0,0,2", "--seed", "8"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["N"], "120");
    assert_eq!(v["M"], "88");
}

#[test]
fn check_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("good.json");
    io::write_curve(&good, &catalog::double_theta_marked()).unwrap();
    let (code, stdout, _) = tropab(&["check", good.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(stdout.contains("genus: 2") && stdout.contains("gcd: 2") && stdout.contains("simple: yes"));

    let mut broken = catalog::double_theta_marked();
    broken.curve.graph.edges[2].primitive_slope = [1, 2];
    let bad = dir.path().join("unbalanced.json");
    io::write_curve(&bad, &broken).unwrap();
    let (code, _, stderr) = tropab(&["check", bad.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(stderr.contains("balanced: no") && stderr.contains("vertex 0"));

    let junk = dir.path().join("junk.json");
    std::fs::write(&junk, "{\"torus\": 3}").unwrap();
    assert_eq!(tropab(&["check", junk.to_str().unwrap()]).0, 2);
    assert_eq!(tropab(&["check", dir.path().join("missing.json").to_str().unwrap()]).0, 2);
}

#[test]
fn mult_with_explicit_marks() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("skew.json");
    let mut plain = catalog::skew_theta_heavy_mark();
    plain.marks.clear();
    io::write_curve(&path, &plain).unwrap();
    let file = path.to_str().unwrap();
    for marks in [["1:1/2", "0:1"], ["2:1/2", "0:1"]] {
        let (code, stdout, _) = tropab(&["mult", file, "--marks", marks[0], marks[1]]);
        assert_eq!(code, 0, "{stdout}");
        assert!(stdout.contains("complex (lattice): 4\n") && stdout.contains("agreement: true"));
    }
    // both marks on one edge leave a cycle uncut
    let (code, _, _) = tropab(&["mult", file, "--marks", "0:1/2", "0:1"]);
    assert_eq!(code, 1);
}

#[test]
fn series_and_svg() {
    let (code, stdout, _) = tropab(&["series", "--genus", "3", "--nmax", "8"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("n =  8: closed form 7440  series 7440"));
    assert!(stdout.ends_with("OK\n"));

    let dir = tempfile::tempdir().unwrap();
    let curve = dir.path().join("c.json");
    io::write_curve(&curve, &catalog::double_theta_marked()).unwrap();
    let a = dir.path().join("a.svg");
    let b = dir.path().join("b.svg");
    for out in [&a, &b] {
        assert_eq!(tropab(&["svg", curve.to_str().unwrap(), "--out", out.to_str().unwrap()]).0, 0);
    }
    let svg = std::fs::read_to_string(&a).unwrap();
    assert_eq!(svg, std::fs::read_to_string(&b).unwrap());
    assert_eq!(svg.matches("class=\"vertex\"").count(), 2);
    assert_eq!(svg.matches("class=\"edge\"").count(), 3);
    assert_eq!(svg.matches(">2</text>").count(), 3);
}
