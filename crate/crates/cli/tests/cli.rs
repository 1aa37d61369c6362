use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../core/fixtures")
        .join(name)
        .display()
        .to_string()
}

fn eqos(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eqos"))
        .args(args)
        .env_remove("EQOS_MAX_FM_ROWS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut all = args.to_vec();
    all.push("--json");
    let o = eqos(&all);
    let code = o.status.code().unwrap();
    assert!(code != 2, "{}", String::from_utf8_lossy(&o.stderr));
    (serde_json::from_slice(&o.stdout).expect("json report"), code)
}

fn body(text: &str) -> String {
    text.lines().filter(|l| !l.starts_with("timing:")).collect::<Vec<_>>().join("\n")
}

#[test]
fn presentation_of_one_hyperplane() {
    let p = fixture("single_point.arr");
    let o = eqos(&["presentation", &p, "--ring", "eq", "--degree", "4"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("  e1^2+e1*x    [family 1, i=1]\n"));
    assert!(text.contains("hilbert_function: [1,2,2,2,2]\n"));
    assert!(text.contains("PASS free"));
}

#[test]
fn os_rings_of_falk_pair_agree() {
    let (a, _) = json(&["presentation", &fixture("falk_a.arr"), "--ring", "os"]);
    let (b, _) = json(&["presentation", &fixture("falk_a_prime.arr"), "--ring", "os"]);
    assert_eq!(a["sections"]["hilbert"], b["sections"]["hilbert"]);
    assert_eq!(a["status"], "PASS");
}

#[test]
fn vg_dimension_counts_chambers() {
    let (r, code) = json(&["presentation", &fixture("falk_a.arr"), "--ring", "vg"]);
    assert_eq!(code, 0);
    assert_eq!(r["sections"]["dimension"]["total_dimension"], 14);
    assert_eq!(r["sections"]["dimension"]["chambers"], 14);
}

#[test]
fn compare_verdicts() {
    let (j, jp) = (fixture("falk_j.ideal"), fixture("falk_j_prime.ideal"));
    let (r, code) = json(&["compare", "--ideals", &j, &jp]);
    assert_eq!(code, 0);
    assert_eq!(r["sections"]["verdict"]["verdict"], "DISTINGUISHED");
    assert_eq!(r["sections"]["verdict"]["certificate_json"]["invariant"], "fingerprint");

    let (v, vp) = (fixture("vertical_a.ideal"), fixture("vertical_a_prime.ideal"));
    let (r, _) = json(&["compare", "--ideals", &v, &vp]);
    assert_eq!(r["sections"]["verdict"]["verdict"], "DISTINGUISHED");
    let separating = r["sections"]["verdict"]["separating"].as_array().unwrap();
    assert!(separating.iter().any(|c| c.as_str().unwrap().contains("Ann(e2) = <e3, e2+x>")));

    let o = eqos(&["compare", "--ideals", &v, &v]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("verdict: NOT-DISTINGUISHED\n"));
    assert!(text.contains("no implemented invariant separates these rings"));

    let (r, _) = json(&["compare", &fixture("falk_a.arr"), &fixture("falk_a_prime.arr")]);
    assert_eq!(r["sections"]["verdict"]["verdict"], "DISTINGUISHED");

    let o = eqos(&["compare", "--ideals", &v, &fixture("single_point.arr")]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn salvetti_of_one_hyperplane() {
    let (r, code) = json(&["salvetti", &fixture("single_point.arr"), "--equivariant", "--degree", "5"]);
    assert_eq!(code, 0);
    let c = &r["sections"]["complex"];
    assert_eq!(c["fixed_points"], 2);
    assert_eq!(c["simplices_by_dimension"], serde_json::json!([4, 4]));
    assert_eq!(r["sections"]["homology"]["betti"], serde_json::json!([1, 1]));
    assert_eq!(r["sections"]["equivariant"]["borel_dimensions"], serde_json::json!([1, 2, 2, 2, 2]));
}

#[test]
fn salvetti_realized_and_abstract_agree() {
    let (geo, code) = json(&["salvetti", &fixture("falk_a.arr"), "--equivariant"]);
    assert_eq!(code, 0);
    assert!(geo["notes"][0].as_str().unwrap().contains("coned"));
    let (abs, code) = json(&[
        "salvetti",
        "--topes",
        &fixture("falk_a_cone.topes"),
        "--covectors",
        &fixture("falk_a_cone.covectors"),
        "--equivariant",
    ]);
    assert_eq!(code, 0);
    assert_eq!(geo["sections"], abs["sections"]);
    assert_eq!(geo["checks"], abs["checks"]);
}

#[test]
fn reproductions_pass() {
    for example in ["falk", "vertical", "cone"] {
        let o = eqos(&["reproduce", "--example", example]);
        let text = stdout(&o);
        assert!(o.status.success(), "{text}");
        assert!(!text.contains("FAIL"));
        assert!(text.contains("== status: PASS =="));
    }
}

#[test]
fn reports_are_deterministic() {
    let args = ["compare", "--ideals", &fixture("falk_j.ideal"), &fixture("falk_j_prime.ideal")];
    let (a, b) = (stdout(&eqos(&args)), stdout(&eqos(&args)));
    assert_eq!(body(&a), body(&b));
    assert!(a.lines().last().unwrap().starts_with("timing:"));
}

#[test]
fn bad_inputs_exit_with_an_error() {
    let dir = tempfile::tempdir().unwrap();
    let zero = dir.path().join("zero.arr");
    std::fs::write(&zero, "2 1\n0 0 3\n").unwrap();
    let o = eqos(&["presentation", zero.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("line 2"), "{err}");

    let bad = dir.path().join("bad.ideal");
    std::fs::write(&bad, "n 2 x 1\ne1*e3\n").unwrap();
    let o = eqos(&["compare", "--ideals", bad.to_str().unwrap(), bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));

    let o = eqos(&["presentation", dir.path().join("missing.arr").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn fourier_motzkin_cap_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_eqos"))
        .args(["presentation", &fixture("falk_a.arr")])
        .env("EQOS_MAX_FM_ROWS", "1")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("Fourier-Motzkin"));
}
