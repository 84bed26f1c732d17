use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

fn fixture(name: &str) -> String {
  PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name).display().to_string()
}

struct Outcome {
  code:   i32,
  stdout: String,
  stderr: String,
}

impl Outcome {
  fn json(&self) -> Value {
    assert_eq!(self.code, 0, "stderr: {}", self.stderr);
    serde_json::from_str(&self.stdout).unwrap()
  }
}

fn gammahom(args: &[&str]) -> Outcome {
  let out = Command::new(env!("CARGO_BIN_EXE_gammahom")).args(args).output().unwrap();
  Outcome {
    code:   out.status.code().unwrap(),
    stdout: String::from_utf8(out.stdout).unwrap(),
    stderr: String::from_utf8(out.stderr).unwrap(),
  }
}

#[test]
fn sphere_homology_has_two_elements() {
  let sphere = fixture("sphere2.json");
  let r = gammahom(&["homology", "--space", &sphere, "--coeff", "s", "--degree", "2", "--kmax", "1"]).json();
  assert_eq!(r["results"]["values"]["1"].as_array().unwrap().len(), 2);
  assert_eq!(r["results"]["values"]["0"].as_array().unwrap().len(), 1);
  assert!(r["inputs"][&sphere].as_str().unwrap().len() == 64);
}

#[test]
fn homology_with_monoid_coefficients() {
  let z3 = format!("ha:{}", fixture("z3.json"));
  let r = gammahom(&["homology", "--space", &fixture("circle.json"), "--coeff", &z3, "--degree", "1", "--kmax", "2"]).json();
  assert_eq!(r["results"]["values"]["2"].as_array().unwrap().len(), 9);
  let hb = gammahom(&["homology", "--space", &fixture("circle.json"), "--coeff", "hb", "--degree", "1", "--kmax", "2"]).json();
  assert_eq!(hb["results"]["values"]["2"].as_array().unwrap().len(), 4);
}

#[test]
fn pi_comb_and_pi_two() {
  let torus = fixture("torus.json");
  let r = gammahom(&["pi-comb", "--space", &torus, "--degree", "0"]).json();
  assert_eq!(r["results"]["classes"].as_array().unwrap().len(), 1);
  let r = gammahom(&["pi-two", "--space", &fixture("circle.json"), "--degree", "1"]).json();
  assert_eq!(r["results"]["components"].as_array().unwrap().len(), 2);
}

#[test]
fn classify_names_edges() {
  let r = gammahom(&["classify", "--two-set", &fixture("arrow.json"), "--sub", "v"]).json();
  let edges = &r["results"]["edges"];
  assert_eq!(edges["sv"], "True");
  assert_eq!(edges["sw"], "False");
  assert_eq!(edges["e"], "Doubt");
  assert_eq!(edges["f"], "Repair");
  assert_eq!(r["results"]["vertices"]["w"], "False");
}

#[test]
fn torus_norms() {
  let (torus, cycle) = (fixture("torus.json"), fixture("torus_cycle.json"));
  let l1 = gammahom(&["norm", "--space", &torus, "--cycle", &cycle, "--mode", "l1"]).json();
  let nor = gammahom(&["norm", "--space", &torus, "--cycle", &cycle, "--mode", "nor", "--lambda", "100"]).json();
  assert_eq!(l1["results"]["value"], "2");
  assert_eq!(nor["results"]["below_lambda"], true);
  assert_eq!(nor["results"]["witness"]["degree"], 2);
}

#[test]
fn surface_report() {
  let r = gammahom(&["surface", "--genus", "2", "--lambda", "401/100", "--nmax", "1000"]).json();
  let res = &r["results"];
  assert_eq!(res["norm_l1"], "64");
  assert_eq!(res["boundaries_zero"], true);
  assert_eq!(res["class_multiplicity"], 8);
  assert_eq!(res["euler_characteristic"], -2);
  assert_eq!(res["decision"]["verdict"], "True");
  assert_eq!(res["decision"]["detail"]["cover_degree"], 401);
  let low = gammahom(&["surface", "--genus", "2", "--lambda", "4"]).json();
  assert_eq!(low["results"]["decision"]["verdict"], "False");
  assert_eq!(low["results"]["decision"]["detail"]["lower_source"], "paper-supplied bound");
}

#[test]
fn surface_class_check() {
  let r = gammahom(&["surface", "--genus", "2", "--check-class"]).json();
  let class = &r["results"]["class"];
  assert_eq!(class["z_nontrivial"], true);
  assert_eq!(class["literal_certificates_found"], false);
  assert_eq!(class["corrected_certificates"].as_array().unwrap().len(), 8);
}

#[test]
fn validate_reports_broken_identity() {
  let ok = gammahom(&["validate", "--space", &fixture("torus.json")]).json();
  assert_eq!(ok["results"]["valid"], true);
  let bad = gammahom(&["validate", "--space", &fixture("bad.json")]);
  assert_eq!(bad.code, 1);
  assert!(bad.stderr.contains("d0 d2 = d1 d0"), "{}", bad.stderr);
}

#[test]
fn usage_errors_exit_two() {
  let malformed = gammahom(&["validate", "--space", &fixture("truncated.json")]);
  assert_eq!(malformed.code, 2);
  assert!(malformed.stderr.contains("line"), "{}", malformed.stderr);
  assert_eq!(gammahom(&["validate", "--space", "/nonexistent.json"]).code, 2);
  assert_eq!(gammahom(&["frobnicate"]).code, 2);
  assert_eq!(gammahom(&["homology", "--space", &fixture("circle.json"), "--coeff", "zz", "--degree", "1"]).code, 2);
}

#[test]
fn domain_errors_exit_one() {
  assert_eq!(gammahom(&["surface", "--genus", "1"]).code, 1);
  let r = gammahom(&["norm", "--space", &fixture("torus.json"), "--cycle", &fixture("torus_cycle.json"), "--mode", "l1", "--lambda", "0"]);
  assert_eq!(r.code, 1);
}

#[test]
fn enumeration_guard_is_configurable() {
  let r = Command::new(env!("CARGO_BIN_EXE_gammahom"))
    .args(["homology", "--space", &fixture("torus.json"), "--coeff", "s", "--degree", "2", "--kmax", "1"])
    .env("GAMMAHOM_ENUM_LIMIT", "4")
    .output()
    .unwrap();
  assert_eq!(r.status.code(), Some(1));
  assert!(String::from_utf8_lossy(&r.stderr).contains("enumeration bound"));
}

#[test]
fn output_is_byte_identical_and_written_to_file() {
  let dir = tempfile::tempdir().unwrap();
  let path = dir.path().join("report.json");
  let args = ["surface", "--genus", "3", "--out", path.to_str().unwrap()];
  let a = gammahom(&args);
  let b = gammahom(&args);
  assert_eq!(a.code, 0);
  assert_eq!(a.stdout, b.stdout);
  assert_eq!(std::fs::read_to_string(&path).unwrap(), a.stdout);
}
