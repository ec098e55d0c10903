use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn atl(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_atl"))
        .args(args)
        .current_dir(dir)
        .env_remove("ATL_MODE")
        .env_remove("ATL_MAX_STRANDS")
        .output()
        .expect("atl runs")
}

fn stdout(o: &Output) -> String {
    assert!(o.status.success(), "stderr: {}", String::from_utf8_lossy(&o.stderr));
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(text: &str) -> serde_json::Value {
    serde_json::from_str(text).unwrap()
}

const D: &str = r#"{"dom":1,"cod":1,"terms":[{"coeff":"1","diagram":{"seam":1,"ess":0,"arcs":[["I0","L0"],["R0","O0"]]}}]}"#;
const MINUS_ID: &str = r#"{"dom":1,"cod":1,"terms":[{"coeff":"-1","diagram":{"seam":0,"ess":0,"arcs":[["I0","O0"]]}}]}"#;
const W2: &str = r#"{"dom":0,"cod":2,"terms":[{"coeff":"1","diagram":{"seam":1,"ess":0,"arcs":[["O1","R0"],["L0","O0"]]}}]}"#;

#[test]
fn projector_terms() {
    let dir = tempfile::tempdir().unwrap();
    let t2 = json(&stdout(&atl(&["projector", "extremal", "2", "--out", "json"], dir.path())));
    assert_eq!(t2["terms"].as_array().unwrap().len(), 3);
    let t0 = json(&stdout(&atl(&["projector", "extremal", "0"], dir.path())));
    assert_eq!(t0["dom"], 0);
    assert_eq!(t0["terms"][0]["coeff"], "2");
    let p2 = json(&stdout(&atl(&["projector", "jw", "2"], dir.path())));
    let mut coeffs: Vec<String> = p2["terms"].as_array().unwrap().iter().map(|t| t["coeff"].as_str().unwrap().to_string()).collect();
    coeffs.sort();
    assert_eq!(coeffs, ["1", "1/2"]);
    let m = json(&stdout(&atl(&["projector", "extremal", "3", "--out", "matrix"], dir.path())));
    assert_eq!(m["entries"], json(r#"[["+++","+++","1"],["---","---","1"]]"#));
}

#[test]
fn bound_is_enforced() {
    let dir = tempfile::tempdir().unwrap();
    let o = atl(&["--max-strands", "2", "projector", "extremal", "3"], dir.path());
    assert_eq!(o.status.code(), Some(2));
    let o = Command::new(env!("CARGO_BIN_EXE_atl"))
        .args(["projector", "extremal", "3"])
        .env("ATL_MAX_STRANDS", "2")
        .output()
        .unwrap();
    assert!(!o.status.success());
}

#[test]
fn wraps_square_to_minus_identity() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("D.json"), D).unwrap();
    fs::write(dir.path().join("m.json"), MINUS_ID).unwrap();
    stdout(&atl(&["eval", "D.json", "D.json", "compose", "-o", "DD.json"], dir.path()));
    let eq = stdout(&atl(&["eval", "DD.json", "m.json", "eq"], dir.path()));
    assert!(eq.contains("ess true"), "{eq}");
    // Without the quotient normal form the double wind stays a diagram.
    let raw = json(&stdout(&atl(&["--mode", "raw", "eval", "D.json", "D.json", "compose"], dir.path())));
    assert_eq!(raw["terms"][0]["diagram"]["seam"], 2);
    fs::write(dir.path().join("raw.json"), raw.to_string()).unwrap();
    let eq = stdout(&atl(&["--mode", "raw", "eval", "raw.json", "m.json", "eq"], dir.path()));
    assert_eq!(eq, "syntactic false\ness true\n");
}

#[test]
fn partial_trace_of_t2() {
    let dir = tempfile::tempdir().unwrap();
    stdout(&atl(&["projector", "extremal", "2", "-o", "T2.json"], dir.path()));
    let p = json(&stdout(&atl(&["eval", "T2.json", "ptrace"], dir.path())));
    assert_eq!(p["terms"], json(r#"[{"coeff":"-1","diagram":{"seam":0,"ess":0,"arcs":[["I0","O0"]]}}]"#));
}

#[test]
fn phi_and_coordinates_of_w2() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("w2.json"), W2).unwrap();
    let m = json(&stdout(&atl(&["eval", "w2.json", "phi"], dir.path())));
    assert_eq!(m["entries"], json(r#"[["+-","","i"],["-+","","i"]]"#));
    let c = json(&stdout(&atl(&["eval", "w2.json", "coords"], dir.path())));
    assert_eq!(c, json(r#"[{"labels":"io","coeff":"0"},{"labels":"oi","coeff":"1"}]"#));
}

#[test]
fn verify_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let o = atl(&["verify", "faithfulness", "3"], dir.path());
    let text = stdout(&o);
    assert!(text.contains("PASS n=3 rank 20 of 20"), "{text}");
    assert!(!text.contains("FAIL"));
    stdout(&atl(&["verify", "technical", "4"], dir.path()));
    let o = atl(&["verify", "bogus"], dir.path());
    assert!(!o.status.success());
}

#[test]
fn render_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    stdout(&atl(&["projector", "extremal", "1", "-o", "id.json"], dir.path()));
    let svg = stdout(&atl(&["render", "id.json"], dir.path()));
    assert!(svg.starts_with("<?xml"));
    assert_eq!(svg.matches("<polyline").count(), 1);
    assert_eq!(svg, stdout(&atl(&["render", "id.json"], dir.path())));
    stdout(&atl(&["projector", "extremal", "2", "-o", "T2.json"], dir.path()));
    for f in ["svg", "tikz", "ascii"] {
        let a = stdout(&atl(&["render", "T2.json", "--format", f], dir.path()));
        assert_eq!(a, stdout(&atl(&["render", "T2.json", "--format", f], dir.path())));
    }
    let tikz = stdout(&atl(&["render", "T2.json", "--format", "tikz"], dir.path()));
    assert!(tikz.starts_with("\\begin{tikzpicture}"));
}
