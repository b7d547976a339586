use std::fs;
use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

use gridlabel_cli::{run_cli, EXIT_FAIL, EXIT_OK, EXIT_TIMEOUT, EXIT_USAGE};
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gridlabel")).args(args).output().unwrap()
}

fn run_with_stdin(args: &[&str], input: &[u8]) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_gridlabel"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input).unwrap();
    child.wait_with_output().unwrap()
}

fn json(path: &Path) -> Value {
    serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap()
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn gen_oct_gadget_has_86_edges() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("oct.json");
    assert_eq!(run(&["gen", "--grid", "king8", "--shape", "oct-gh", "-o", s(&out)]).status.code(), Some(EXIT_OK));
    let v = json(&out);
    assert_eq!(v["edges"].as_array().unwrap().len(), 86);
    assert_eq!(v["mode"], "edge");
    assert_eq!(v["format_version"], 1);
    let size = |name: &str| v["partitions"][name].as_array().unwrap().len();
    assert_eq!((size("H"), size("G-H"), size("H'")), (26, 60, 14));
}

#[test]
fn gen_rejects_a_shape_on_the_wrong_grid() {
    assert_eq!(run(&["gen", "--grid", "square4", "--shape", "oct-gh"]).status.code(), Some(EXIT_USAGE));
}

#[test]
fn gen_ball_round_trips_through_solve() {
    let dir = tempfile::tempdir().unwrap();
    let inst = dir.path().join("sq.json");
    let wit = dir.path().join("w.json");
    assert!(run(&["gen", "--grid", "square4", "--radius", "1", "-o", s(&inst)]).status.success());
    let out = run(&["solve", "--instance", s(&inst), "--witness", s(&wit)]);
    assert_eq!(out.status.code(), Some(EXIT_OK));
    let result: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(result["result"], "found");
    // a star with four edges: all pairwise adjacent, so labels 0..3 suffice
    assert_eq!(result["span"], 3);
    let verified = run(&["verify", "--instance", s(&inst), "--labeling", s(&wit)]);
    assert_eq!(verified.status.code(), Some(EXIT_OK));
}

#[test]
fn formula_pipes_into_verify() {
    let formula = run(&["formula", "--radius", "4"]);
    assert!(formula.status.success());
    let verified = run_with_stdin(&["verify"], &formula.stdout);
    assert_eq!(verified.status.code(), Some(EXIT_OK));
    let text = String::from_utf8(verified.stdout).unwrap();
    assert!(text.trim_end().ends_with("max label 7"), "{text}");
}

#[test]
fn verify_reports_violations_and_fails() {
    let dir = tempfile::tempdir().unwrap();
    let (inst, lab) = (dir.path().join("i.json"), dir.path().join("l.json"));
    assert!(run(&["formula", "--side", "3", "--instance-out", s(&inst), "--labeling-out", s(&lab)]).status.success());
    let mut l = json(&lab);
    let first = l["labels"]["0"].clone();
    l["labels"]["1"] = first;
    fs::write(&lab, l.to_string()).unwrap();
    let out = run(&["verify", "--instance", s(&inst), "--labeling", s(&lab)]);
    assert_eq!(out.status.code(), Some(EXIT_FAIL));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().next().unwrap().starts_with("0 1: "), "{text}");
    assert!(text.contains("FAIL"));
}

#[test]
fn verify_refuses_a_labeling_for_another_instance() {
    let dir = tempfile::tempdir().unwrap();
    let (inst, lab) = (dir.path().join("i.json"), dir.path().join("l.json"));
    assert!(run(&["formula", "--side", "3", "--instance-out", s(&inst), "--labeling-out", s(&lab)]).status.success());
    let mut i = json(&inst);
    i["k"] = Value::from(3);
    fs::write(&inst, i.to_string()).unwrap();
    let out = run(&["verify", "--instance", s(&inst), "--labeling", s(&lab)]);
    assert_eq!(out.status.code(), Some(EXIT_USAGE));
    assert!(String::from_utf8(out.stderr).unwrap().contains("digest"));
}

#[test]
fn certify_g1_writes_an_unsat_certificate() {
    let out = run(&["certify", "--shape", "square-g1", "--claimed-lb", "11"]);
    assert_eq!(out.status.code(), Some(EXIT_OK));
    let cert: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(cert["verdict"], "UNSAT");
    assert_eq!(cert["palette_size"], 11);
    assert_eq!(cert["config"]["max_label"], 10);
    assert_eq!(cert["instance_digest"].as_str().unwrap().len(), 64);
}

#[test]
fn certify_too_high_a_claim_is_refuted_with_a_witness() {
    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("c.json");
    let out = run(&["certify", "--shape", "square-g1", "--max-label", "11", "-o", s(&cert)]);
    assert_eq!(out.status.code(), Some(EXIT_FAIL));
    let c = json(&cert);
    assert_eq!(c["verdict"], "REFUTED");
    assert_eq!(c["witness"]["labels"].as_object().unwrap().len(), 32);
    assert_eq!(c["witness"]["instance_digest"], c["instance_digest"]);
}

#[test]
fn exhausted_budget_exits_with_timeout() {
    let out = run(&["certify", "--shape", "tri-gv", "--claimed-lb", "16", "--budget", "0.05"]);
    assert_eq!(out.status.code(), Some(EXIT_TIMEOUT));
    assert!(out.stdout.is_empty());
}

#[test]
fn audit_writes_a_json_report() {
    let out = run(&["audit", "--suite", "square"]);
    assert_eq!(out.status.code(), Some(EXIT_OK));
    let report: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["suite"], "square");
    assert!(report["claims"].as_array().unwrap().iter().all(|c| c["passed"] == true));
}

#[test]
fn oct_audit_exits_with_failure_for_the_exact_fork_claim() {
    let out = run(&["audit", "--suite", "oct"]);
    assert_eq!(out.status.code(), Some(EXIT_FAIL));
    let report: Value = serde_json::from_slice(&out.stdout).unwrap();
    let failing: Vec<&str> =
        report["claims"].as_array().unwrap().iter().filter(|c| c["passed"] == false).map(|c| c["id"].as_str().unwrap()).collect();
    assert_eq!(failing, ["fork-eligibility-exact"]);
}

#[test]
fn render_svg_has_one_text_per_label() {
    let formula = run(&["formula", "--radius", "2"]);
    let svg = run_with_stdin(&["render", "--format", "svg"], &formula.stdout);
    assert!(svg.status.success());
    let text = String::from_utf8(svg.stdout).unwrap();
    let bundle: Value = serde_json::from_slice(&formula.stdout).unwrap();
    assert_eq!(text.matches("<text").count(), bundle["instance"]["vertices"].as_array().unwrap().len());
}

#[test]
fn unreadable_files_are_usage_errors() {
    let out = run(&["verify", "--instance", "/nonexistent/i.json", "--labeling", "/nonexistent/l.json"]);
    assert_eq!(out.status.code(), Some(EXIT_USAGE));
    assert!(String::from_utf8(out.stderr).unwrap().contains("cannot read"));
    let garbage = run_with_stdin(&["verify"], b"{not json");
    assert_eq!(garbage.status.code(), Some(EXIT_USAGE));
}

#[test]
fn argument_errors_are_usage_errors() {
    let code = |args: &[&str]| run(args).status.code();
    assert_eq!(code(&["frobnicate"]), Some(EXIT_USAGE));
    assert_eq!(code(&["gen", "--grid", "hex9", "--radius", "1"]), Some(EXIT_USAGE));
    assert_eq!(code(&["certify", "--shape", "square-g", "--claimed-lb", "3", "--max-label", "2"]), Some(EXIT_USAGE));
    assert_eq!(code(&["solve", "--shape", "square-g", "--max-label", "64"]), Some(EXIT_USAGE));
    assert_eq!(code(&["--help"]), Some(EXIT_OK));
}

#[test]
fn run_cli_returns_the_exit_code() {
    assert_eq!(run_cli(["gridlabel", "audit", "--suite", "tri", "-o", "/nonexistent/dir/report.json"]), EXIT_USAGE);
}
