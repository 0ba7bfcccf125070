use std::process::{Command, Output};

use serde_json::{json, Value};

fn wickstar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wickstar")).args(args).output().unwrap()
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{e}: {}", String::from_utf8_lossy(&out.stdout));
    })
}

fn value_at(v: &Value, k: usize) -> (f64, f64) {
    let p = &v["results"][k]["value"];
    (p[0].as_f64().unwrap(), p[1].as_f64().unwrap())
}

#[test]
fn disk_commutator_example() {
    let out = wickstar(&[
        "star", "eval", "--surface", "disk", "--f", r#"{"type":"zbar"}"#, "--g", r#"{"type":"z"}"#, "--hbar", "0.5",
        "--at", "0",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v = json_of(&out);
    let (re, im) = value_at(&v, 0);
    assert!((re - 0.5).abs() < 1e-15 && im.abs() < 1e-15);
    assert_eq!(v["results"][0]["converged"], json!(true));
}

#[test]
fn annulus_example_on_the_unit_circle() {
    let id = r#"{"type":"poly","coeffs":[[0,0],[1,0]]}"#;
    let out = wickstar(&[
        "star", "eval", "--surface", "annulus", "--R", "2", "--f", id, "--g", id, "--hbar", "0.3,0.1", "--at", "1",
        "--at", "0,1", "--exact-finite",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    for k in 0..2 {
        let (re, im) = value_at(&v, k);
        assert!((re + 0.3).abs() < 1e-15 && (im + 0.1).abs() < 1e-15);
    }
}

#[test]
fn punctured_unit_example() {
    let one = r#"{"type":"poly","coeffs":[[1,0]]}"#;
    let g = r#"{"type":"exp","scale":[0.5,0]}"#;
    let out = wickstar(&[
        "star", "eval", "--surface", "punctured", "--f", one, "--g", g, "--hbar", "0.2", "--at", "1.5", "--chart",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let (re, _) = value_at(&json_of(&out), 0);
    assert!((re - 0.75f64.exp()).abs() < 1e-14);
}

#[test]
fn domain_errors_exit_2() {
    let id = r#"{"type":"poly","coeffs":[[0,0],[1,0]]}"#;
    let pole = wickstar(&["star", "eval", "--surface", "punctured", "--f", id, "--g", id, "--hbar", "-0.5", "--at", "0.5"]);
    assert_eq!(pole.status.code(), Some(2));
    assert_eq!(json_of(&pole)["error"]["kind"], json!("domain"));

    let outside = wickstar(&["star", "eval", "--surface", "punctured", "--f", id, "--g", id, "--hbar", "0.5", "--at", "2"]);
    assert_eq!(outside.status.code(), Some(2));

    let bad = wickstar(&["star", "eval", "--surface", "disk", "--f", "{", "--g", id, "--hbar", "0.5", "--at", "0"]);
    assert_eq!(bad.status.code(), Some(2));
    assert_eq!(json_of(&bad)["error"]["kind"], json!("input"));

    let usage = wickstar(&["star", "eval", "--surface", "torus"]);
    assert_eq!(usage.status.code(), Some(2));
}

#[test]
fn non_convergence_exits_3() {
    let e = r#"{"type":"exp","scale":[3,0]}"#;
    let out = wickstar(&[
        "star", "eval", "--surface", "annulus", "--R", "2", "--chart", "--f", e, "--g", e, "--hbar", "0.9", "--at", "2",
        "--max-terms", "4",
    ]);
    assert_eq!(out.status.code(), Some(3));
    let v = json_of(&out);
    assert_eq!(v["error"]["kind"], json!("non-convergence"));
    assert_eq!(v["results"][0]["converged"], json!(false));
}

#[test]
fn verify_is_deterministic() {
    let a = wickstar(&["verify", "--seed", "42"]);
    let b = wickstar(&["verify", "--seed", "42"]);
    assert_eq!(a.status.code(), Some(0), "{}", String::from_utf8_lossy(&a.stderr));
    assert_eq!(a.stdout, b.stdout);
    let v = json_of(&a);
    assert_eq!(v["metadata"]["seed"], json!(42));
    assert_eq!(v["metadata"]["mode"], json!("exact"));
    for c in v["checks"].as_array().unwrap() {
        assert!(c["paper_ref"].as_str().is_some_and(|s| !s.is_empty()));
        assert!(c.get("runtime_ms").is_none());
    }
    let c = wickstar(&["verify", "--seed", "7", "--mode", "float"]);
    assert_eq!(c.status.code(), Some(0));
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn verify_single_suite_with_tolerance() {
    let out = wickstar(&["verify", "--suite", "conformal", "--tol", "1e-6"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    let checks = v["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 1);
    assert!(checks[0]["max_residual"].as_f64().unwrap() < 1e-8);

    let out = wickstar(&["verify", "--suite", "nope"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn injected_weight_fails_lift_coherence() {
    let out = wickstar(&["verify", "--suite", "lift-coherence", "--inject", "printed-punctured-weight"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json_of(&out);
    assert_eq!(v["checks"][0]["status"], json!("fail"));
    assert!(String::from_utf8_lossy(&out.stderr).contains("lift-coherence"));
}

#[test]
fn timings_are_opt_in() {
    let out = wickstar(&["verify", "--suite", "unit", "--timings"]);
    assert!(json_of(&out)["checks"][0]["runtime_ms"].is_u64());
}

#[test]
fn rigidity_bundles() {
    let dir = std::env::temp_dir().join(format!("wickstar-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let csv = dir.join("spectrum.csv");
    let out = wickstar(&["rigidity", "--bundled", "two-hyperbolic-d3", "--csv", csv.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["experiment"], json!("invariant-dimension"));
    assert_eq!(v["dim"], json!(1));
    let text = std::fs::read_to_string(&csv).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("index,singular_value"));
    assert_eq!(lines.count(), 16);

    let out = wickstar(&["rigidity", "--bundled", "elliptic-N2-d2"]);
    assert_eq!(json_of(&out)["invariant_indices"], json!([0, 2, 4, 6, 8]));

    let out = wickstar(&["rigidity", "--bundled", "annulus-punctured-obstruction"]);
    assert_eq!(json_of(&out)["verdict"], json!("obstructed"));

    let spec = dir.join("spec.json");
    std::fs::write(&spec, r#"{"experiment":"obstruction","R":2.0,"hbar":[[0.05,0],[-0.05,0],[0,0.08],[0,-0.08]],"degree":3}"#)
        .unwrap();
    let out = wickstar(&["rigidity", "--spec", spec.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json_of(&out)["error"]["kind"], json!("domain"));

    std::fs::write(&spec, r#"{"experiment":"unknown"}"#).unwrap();
    let out = wickstar(&["rigidity", "--spec", spec.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn thread_cap_does_not_change_reports() {
    let capped = Command::new(env!("CARGO_BIN_EXE_wickstar"))
        .args(["verify", "--mode", "float"])
        .env("WICKSTAR_THREADS", "1")
        .output()
        .unwrap();
    let free = wickstar(&["verify", "--mode", "float"]);
    assert_eq!(capped.status.code(), Some(0));
    assert_eq!(capped.stdout, free.stdout);
}

#[test]
fn listings() {
    let out = wickstar(&["verify", "--list"]);
    let names = String::from_utf8(out.stdout).unwrap();
    assert!(names.lines().any(|l| l == "obstruction"));
    let out = wickstar(&["rigidity", "--list"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 4);
}
