//! End-to-end checks of the command-line surface and the file formats.

use std::process::Command;

fn run(args: &[&str]) -> (String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_enveloping"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        String::from_utf8_lossy(&out.stdout).to_string(),
        out.status.code().unwrap_or(-1),
    )
}

#[test]
fn algebra_show_and_verify() {
    let (json, code) = run(&["algebra", "show", "b2"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["dim"], 10);
    assert_eq!(v["rank"], 2);
    assert_eq!(v["basis"][2], "E1");
    // rationals in the schema are decimal-free strings
    assert!(json.contains("\"1\"") || json.contains("\"-1\""));

    let (_, code) = run(&["algebra", "verify", "g2"]);
    assert_eq!(code, 0);
}

#[test]
fn algebra_generate_round_trip() {
    let dir = std::env::temp_dir().join(format!("envcli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cartan = dir.join("g2.json");
    std::fs::write(&cartan, r#"{"series": "G2", "entries": [[2, -3], [-1, 2]]}"#).unwrap();
    let (json, code) = run(&["algebra", "generate", "--cartan", cartan.to_str().unwrap()]);
    assert_eq!(code, 0);
    let alg_file = dir.join("alg.json");
    std::fs::write(&alg_file, &json).unwrap();
    let (out, code) = run(&["algebra", "verify", alg_file.to_str().unwrap()]);
    assert_eq!(code, 0, "{out}");
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn uea_operations_and_text_format() {
    let (out, code) = run(&["uea", "comm", "--algebra", "a2", "E12", "E21"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "1 * H1");

    let (out, code) = run(&["uea", "mul", "--algebra", "g2", "X4", "X3"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "1 * X3 X4 + -1 * X1");

    let (out, code) = run(&["uea", "normal-form", "--algebra", "g2", "3/2 * X1^2 X4 + -1 * X13"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "3/2 * X1^2 X4 + -1 * X13");

    // json element schema
    let (out, _) = run(&["--json", "uea", "comm", "--algebra", "a2", "E12", "E21"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["algebra"], "a2");
    assert_eq!(v["terms"][0][1], "1");
}

#[test]
fn pde_and_invariants() {
    let (out, code) = run(&["pde", "kernel", "--algebra", "a2", "--sub", "nilradical", "--degree", "1"]);
    assert_eq!(code, 0);
    assert!(out.contains("kernel dimension 1"));
    assert!(out.contains("E13"));

    let (out, code) = run(&["pde", "rank", "--algebra", "g2", "--sub", "nilradical"]);
    assert_eq!(code, 0);
    assert!(out.contains("independent 8"));

    let (out, code) = run(&["invariants", "count", "--algebra", "b2", "--sub", "nilradical"]);
    assert_eq!(code, 0);
    assert!(out.contains("invariants = 2"));

    let (out, code) = run(&["invariants", "table", "--series", "A", "--rank", "5"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "3");
}

#[test]
fn commutant_solve_and_decomp() {
    let (out, code) = run(&["commutant", "solve", "--algebra", "a2", "--degree", "1", "--weight", "1,1"]);
    assert_eq!(code, 0);
    assert!(out.contains("dimension 1"));
    assert!(out.contains("E13"));

    let (out, code) = run(&["decomp", "verify", "--algebra", "g2", "--pmax", "4"]);
    assert_eq!(code, 0);
    assert!(out.contains("terms=   10"));

    // json report schema: {p, total_terms, distinct, labels}
    let (out, _) = run(&["--json", "decomp", "verify", "--algebra", "g2", "--pmax", "2"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["layers"][1]["total_terms"], 3);
    assert_eq!(v["layers"][1]["labels"].as_array().unwrap().len(), 3);
}

#[test]
fn verify_paper_exit_codes() {
    let (_, code) = run(&["verify", "paper", "--suite", "a2"]);
    assert_eq!(code, 0);
    let (_, code) = run(&["verify", "paper", "--suite", "nonexistent"]);
    assert_ne!(code, 0);
}

#[test]
fn deterministic_reports() {
    let (a, _) = run(&["--seed", "7", "pde", "rank", "--algebra", "b2", "--sub", "nilradical"]);
    let (b, _) = run(&["--seed", "7", "pde", "rank", "--algebra", "b2", "--sub", "nilradical"]);
    assert_eq!(a, b);
    let (c, _) = run(&["--json", "decomp", "verify", "--algebra", "g2", "--pmax", "3"]);
    let (d, _) = run(&["--json", "decomp", "verify", "--algebra", "g2", "--pmax", "3"]);
    assert_eq!(c, d);
}
