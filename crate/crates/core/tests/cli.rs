use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

const ONES: &str = "l12=1,l13=1,l14=1,l23=1,l24=1,l34=1";

fn hytet(args: &[&str], envs: &[(&str, &str)], stdin: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_hytet"));
    cmd.args(args)
        .env_remove("HYTET_TOL")
        .env_remove("HYTET_MC_SAMPLES")
        .env_remove("HYTET_SEED")
        .envs(envs.iter().copied())
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped());
    let mut child = cmd.spawn().expect("spawn hytet");
    if let Some(text) = stdin {
        child.stdin.take().unwrap().write_all(text.as_bytes()).unwrap();
    }
    drop(child.stdin.take());
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

#[test]
fn check_reports_upper_bound() {
    let out = hytet(&["check", "--edges", ONES], &[], None);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["existence"]["exists"], true);
    let l2 = v["existence"]["bounds"]["l2"].as_f64().unwrap();
    assert!((l2 - 1.668_050_457_962_66).abs() < 1e-12);
}

#[test]
fn check_names_failed_triangle() {
    let out = hytet(&["check", "--edges", "l12=3,l13=1,l14=1,l23=1,l24=1,l34=1"], &[], None);
    assert_eq!(code(&out), 2);
    let v = json(&out);
    assert_eq!(v["existence"]["exists"], false);
    assert!(v["failed_conditions"].as_array().unwrap().contains(&Value::from("(i)")));
    assert!(String::from_utf8_lossy(&out.stderr).contains("condition (i)"));
}

#[test]
fn folded_volume_is_zero() {
    let out = hytet(&["volume", "--edges", "l12=1,l13=1,l14=1,l23=1,l24=1,l34=0"], &[], None);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["volume"]["value"].as_f64(), Some(0.0));
    assert_eq!(v["degenerate"], true);
}

#[test]
fn nonexistent_volume_exits_2() {
    let out = hytet(&["volume", "--edges", "l12=1,l13=1,l14=1,l23=1,l24=1,l34=2"], &[], None);
    assert_eq!(code(&out), 2);
    let out = hytet(&["angles", "--edges", "l12=1,l13=1,l14=1,l23=1,l24=1,l34=2"], &[], None);
    assert_eq!(code(&out), 2);
}

#[test]
fn angles_in_radians_and_degrees() {
    let out = hytet(&["angles", "--edges", ONES], &[], None);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    let th = &v["angles"]["th34"];
    let rad = th["radians"].as_f64().unwrap();
    assert!((rad - 1.183_554_660_218_056).abs() < 1e-12);
    assert!((th["degrees"].as_f64().unwrap() - rad.to_degrees()).abs() < 1e-12);
}

#[test]
fn input_errors_exit_64() {
    for args in [
        vec!["check", "--edges", "l12=1,l13=1"],
        vec!["check", "--edges", "l12=1,l13=-1,l14=1,l23=1,l24=1,l34=1"],
        vec!["check", "--edges", "l12=1,l13=x,l14=1,l23=1,l24=1,l34=1"],
        vec!["angles", "--format", "csv", "--edges", ONES],
        vec!["volume", "--tol", "0", "--edges", ONES],
        vec!["frobnicate"],
        vec!["check", "/nonexistent/input.json"],
    ] {
        let out = hytet(&args, &[], None);
        assert_eq!(code(&out), 64, "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
        assert!(out.stdout.is_empty(), "{args:?}");
    }
    let doc = r#"{"edges": {"l12": 1, "l13": 1, "l14": 1, "l23": 1, "l24": 1, "l34": 1, "l56": 1}}"#;
    assert_eq!(code(&hytet(&["check", "-"], &[], Some(doc))), 64);
}

#[test]
fn help_exits_0() {
    let out = hytet(&["--help"], &[], None);
    assert_eq!(code(&out), 0);
    assert!(String::from_utf8_lossy(&out.stdout).contains("sweep"));
}

#[test]
fn flags_override_environment() {
    let out = hytet(
        &["check", "--edges", ONES],
        &[("HYTET_SEED", "7"), ("HYTET_TOL", "1e-9")],
        None,
    );
    let v = json(&out);
    assert_eq!(v["input"]["config"]["seed"], 7);
    assert_eq!(v["input"]["config"]["tol"].as_f64(), Some(1e-9));
    let out = hytet(&["check", "--seed", "9", "--edges", ONES], &[("HYTET_SEED", "7")], None);
    assert_eq!(json(&out)["input"]["config"]["seed"], 9);
}

#[test]
fn document_config_is_used_unless_overridden() {
    let doc = r#"{"edges": {"l12": "1", "l13": 1, "l14": 1, "l23": 1, "l24": 1, "l34": 1}, "config": {"seed": 3}}"#;
    let out = hytet(&["check", "-"], &[], Some(doc));
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["input"]["config"]["seed"], 3);
    let out = hytet(&["check", "-"], &[("HYTET_SEED", "4")], Some(doc));
    assert_eq!(json(&out)["input"]["config"]["seed"], 4);
}

#[test]
fn echo_round_trips() {
    let args = ["volume", "--validate", "--mc-samples", "20000", "--seed", "11"];
    let edges = "l12=1.1,l13=0.9,l14=1,l23=1.2,l24=0.8,l34=1.05";
    let first = hytet(&[&args[..], &["--edges", edges]].concat(), &[], None);
    assert_eq!(code(&first), 0, "{}", String::from_utf8_lossy(&first.stderr));
    let echo = json(&first)["input"].to_string();
    let second = hytet(&["volume", "--validate", "-"], &[], Some(&echo));
    assert_eq!(code(&second), 0);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn sweep_endpoints_vanish() {
    let out = hytet(&["sweep", "--samples", "9", "--edges", ONES], &[], None);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("t,dVdt,V"));
    let rows: Vec<Vec<f64>> = lines
        .map(|l| l.split(',').map(|x| x.parse::<f64>().unwrap()).collect())
        .collect();
    assert_eq!(rows.len(), 9);
    assert!(rows[0][2].abs() < 1e-6);
    assert!(rows[8][2].abs() < 1e-6);
    assert!(rows.windows(2).all(|w| w[1][0] > w[0][0]));
    assert!(rows[4][2] > 0.05);
}

#[test]
fn validate_passes_on_regular_tetrahedron() {
    let out = hytet(&["validate", "--mc-samples", "20000", "--edges", ONES], &[], None);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stdout));
    let v = json(&out);
    assert_eq!(v["passed"], true);
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["passed"] != false));
}

#[test]
fn floats_use_fixed_precision() {
    let out = hytet(&["volume", "--edges", ONES], &[], None);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("\"value\":9.0597925377724"), "{text}");
    assert!(text.ends_with('\n'));
}
