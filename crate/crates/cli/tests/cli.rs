use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn indsat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_indsat"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn construct_vd() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("vd6.g6");
    let o = indsat(&[
        "construct",
        "--family",
        "vd",
        "--t",
        "6",
        "--out",
        path_str(&out),
    ]);
    assert_eq!(code(&o), 0);
    let g = indsat_core::io::read_graph(&out).unwrap();
    assert_eq!(g.order(), 12);
    assert!(String::from_utf8_lossy(&o.stderr).contains("order 12"));
}

#[test]
fn construct_canonical_territory() {
    let o = indsat(&["construct", "--family", "canonical", "--t", "5", "--m", "2"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["t"], 5);
    assert_eq!(v["boundary"].as_array().unwrap().len(), 20);
    assert!(String::from_utf8_lossy(&o.stderr).contains("perimeter 20"));
}

#[test]
fn construct_by_perimeter() {
    let o = indsat(&[
        "construct",
        "--family",
        "canonical",
        "--t",
        "5",
        "--perimeter",
        "126",
    ]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["boundary"].as_array().unwrap().len(), 126);
    let o = indsat(&[
        "construct",
        "--family",
        "canonical",
        "--t",
        "5",
        "--perimeter",
        "16",
    ]);
    assert_eq!(code(&o), 2);
}

#[test]
fn construct_hex_torus_with_dot() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("h.g6");
    let dot = dir.path().join("h.dot");
    let o = indsat(&[
        "construct",
        "--family",
        "hex-torus",
        "--rows",
        "6",
        "--cols",
        "8",
        "--out",
        path_str(&out),
        "--dot",
        path_str(&dot),
    ]);
    assert_eq!(code(&o), 0);
    assert_eq!(indsat_core::io::read_graph(&out).unwrap().order(), 48);
    assert!(std::fs::read_to_string(&dot).unwrap().starts_with("graph"));
}

#[test]
fn verify_dodecahedron() {
    let o = indsat(&["verify", "dodecahedron", "--cycle", "8", "--mode", "is"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["induced_saturated"], true);
    assert!(v["stats"].is_object());
}

#[test]
fn verify_six_by_eight_torus() {
    // The 6x8 torus already contains an induced C10, so saturation fails.
    let o = indsat(&["verify", "hex_torus:6,8", "--cycle", "10", "--mode", "is"]);
    assert_eq!(code(&o), 1);
    assert_eq!(json(&o)["free"], false);
}

#[test]
fn verify_c6_reports_witness() {
    let o = indsat(&["verify", "cycle:6", "--cycle", "6", "--mode", "free"]);
    assert_eq!(code(&o), 1);
    assert_eq!(json(&o)["witness"].as_array().unwrap().len(), 6);
}

#[test]
fn verify_files_and_complements() {
    let dir = tempfile::tempdir().unwrap();
    let edges = dir.path().join("k3.txt");
    std::fs::write(&edges, "0 1\n1 2\n0 2\n").unwrap();
    let o = indsat(&["verify", path_str(&edges), "--path", "3"]);
    assert_eq!(code(&o), 0);
    let o = indsat(&["verify", "icosahedron", "--complement", "--path", "5"]);
    assert_eq!(code(&o), 0);
}

#[test]
fn verify_budget_and_errors() {
    let o = indsat(&["verify", "dodecahedron", "--cycle", "8", "--max-nodes", "1"]);
    assert_eq!(code(&o), 3);
    assert_eq!(code(&indsat(&["verify", "dodecahedron"])), 4);
    assert_eq!(code(&indsat(&["--help"])), 0);
    let o = indsat(&["verify", "no-such-graph", "--cycle", "8"]);
    assert_eq!(code(&o), 4);
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.g6");
    std::fs::write(&bad, "B w").unwrap();
    assert_eq!(
        code(&indsat(&["verify", path_str(&bad), "--cycle", "3"])),
        4
    );
}

#[test]
fn verify_report_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for (out, workers) in [(&a, "1"), (&b, "3")] {
        let o = indsat(&[
            "verify",
            "icosahedron",
            "--cycle",
            "4",
            "--workers",
            workers,
            "--out",
            path_str(out),
        ]);
        assert_eq!(code(&o), 0);
    }
    let strip = |p: &Path| {
        let mut v: Value = serde_json::from_str(&std::fs::read_to_string(p).unwrap()).unwrap();
        v.as_object_mut().unwrap().remove("stats");
        v
    };
    assert_eq!(strip(&a), strip(&b));
}

#[test]
fn assemble_heawood() {
    let o = indsat(&[
        "assemble",
        "--base",
        "heawood",
        "--t",
        "5",
        "--provider",
        "canonical",
    ]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["base"], "heawood");
    let cycles = v["cycles"].as_array().unwrap();
    assert_eq!(cycles.len(), 3);
    assert!(cycles
        .iter()
        .all(|c| c["length"] == 14 && c["territory_vertices"] == 17));
    assert_eq!(v["audit"]["violations"].as_array().unwrap().len(), 0);
    assert_eq!(v["girth"]["base"], 6);
    assert!(v["graph6"].is_string());
}

#[test]
fn assemble_k4_is_infeasible() {
    let o = indsat(&["assemble", "--base", "k4", "--t", "5"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("lengths 4"));
}

#[test]
fn assemble_trivial_is_the_base() {
    let dir = tempfile::tempdir().unwrap();
    let g6 = dir.path().join("g.g6");
    let o = indsat(&[
        "assemble",
        "--base",
        "heawood",
        "--t",
        "5",
        "--provider",
        "trivial",
        "--graph-out",
        path_str(&g6),
    ]);
    assert_eq!(code(&o), 0);
    let got = indsat_core::io::read_graph(&g6).unwrap();
    let heawood: indsat_core::Family = "heawood".parse().unwrap();
    assert_eq!(got, heawood.build().unwrap());
}

#[test]
fn assemble_from_files() {
    let dir = tempfile::tempdir().unwrap();
    let g6 = dir.path().join("k33.g6");
    let ham = dir.path().join("k33.ham");
    let g = indsat_core::Family::CompleteBipartite(3, 3)
        .build()
        .unwrap();
    std::fs::write(&g6, indsat_core::graph6::encode(&g).unwrap()).unwrap();
    std::fs::write(&ham, "0 3 1 4 2 5\n").unwrap();
    let o = indsat(&[
        "assemble",
        "--graph",
        path_str(&g6),
        "--ham",
        path_str(&ham),
        "--t",
        "6",
    ]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["base"], "k33");
    std::fs::write(&ham, "0 1 2 3 4 5\n").unwrap();
    let o = indsat(&[
        "assemble",
        "--graph",
        path_str(&g6),
        "--ham",
        path_str(&ham),
        "--t",
        "6",
    ]);
    assert_eq!(code(&o), 2);
}

#[test]
fn oracle_runs_clean() {
    let o = indsat(&["oracle", "--seed", "7", "--count", "60"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["graphs"], 60);
    assert_eq!(v["disagreements"].as_array().unwrap().len(), 0);
    assert_eq!(
        o.stdout,
        indsat(&["oracle", "--seed", "7", "--count", "60"]).stdout
    );
}
