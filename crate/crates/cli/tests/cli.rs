use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn liyorke(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_liyorke"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_owned()
}

const CANTOR: &str = r#"{"w": 1, "K": [[0, 1]], "maps": [
    {"ratio": 0.3333333333333333, "orth": [1], "t": [0]},
    {"ratio": 0.3333333333333333, "orth": [1], "t": [0.6666666666666667]}
]}"#;

const OVERLAPPING: &str = r#"{"w": 1, "K": [[0, 1]], "maps": [
    {"ratio": 0.6, "orth": [1], "t": [0]},
    {"ratio": 0.6, "orth": [1], "t": [0.4]}
]}"#;

#[test]
fn tent_dimension_is_one_half() {
    let v = json_of(&liyorke(&["dimension", "--system", "tent", "--a", "2"]));
    assert!((v["moran"]["dimension"].as_f64().unwrap() - 0.5).abs() < 1e-12);
}

#[test]
fn cantor_file_dimension() {
    let dir = TempDir::new().unwrap();
    let ifs = write(&dir, "cantor.json", CANTOR);
    let v = json_of(&liyorke(&["dimension", "--ifs", &ifs]));
    let d = 2f64.ln() / 3f64.ln();
    assert!((v["moran"]["dimension"].as_f64().unwrap() - d).abs() < 1e-12);
}

#[test]
fn overlapping_ifs_is_rejected() {
    let dir = TempDir::new().unwrap();
    let ifs = write(&dir, "overlap.json", OVERLAPPING);
    let out = liyorke(&["dimension", "--ifs", &ifs]);
    assert_eq!(out.status.code(), Some(2));
    assert!(
        stderr(&out).contains("no strong separation"),
        "{}",
        stderr(&out)
    );
}

#[test]
fn construct_all_ones_without_gaps() {
    let v = json_of(&liyorke(&[
        "construct",
        "--base",
        "111111",
        "--gaps",
        "zero",
        "--length",
        "6",
    ]));
    let digits: Vec<u64> = v["partner"]["digits"]
        .as_array()
        .unwrap()
        .iter()
        .map(|d| d.as_u64().unwrap())
        .collect();
    assert_eq!(digits, [1, 2, 1, 1, 2, 1]);
}

#[test]
fn construct_then_extract_returns_filler() {
    let base = "2121121211221112121211211122121";
    let filler = "1122121211212121121121211121112";
    let v = json_of(&liyorke(&[
        "construct",
        "--base",
        base,
        "--filler",
        filler,
        "--gaps",
        "linear",
        "--length",
        "31",
    ]));
    let partner: String = v["partner"]["digits"]
        .as_array()
        .unwrap()
        .iter()
        .map(|d| d.to_string())
        .collect();
    let back = json_of(&liyorke(&[
        "construct",
        "--base",
        base,
        "--gaps",
        "linear",
        "--extract",
        "--partner",
        &partner,
    ]));
    let got: String = back["filler"]["digits"]
        .as_array()
        .unwrap()
        .iter()
        .map(|d| d.to_string())
        .collect();
    assert!(!got.is_empty());
    assert!(filler.starts_with(&got));
}

#[test]
fn construct_reports_failing_gap_rule() {
    let out = liyorke(&[
        "construct",
        "--gaps",
        "linear",
        "--seed",
        "1",
        "--length",
        "20",
    ]);
    assert!(out.status.success());
    assert!(stderr(&out).contains("gap condition: fail"));
    let v = json_of(&out);
    assert_eq!(v["gap_condition"]["verdict"], "fail");
}

#[test]
fn extract_rejects_non_member() {
    let out = liyorke(&[
        "construct",
        "--base",
        "1111",
        "--gaps",
        "zero",
        "--extract",
        "--partner",
        "1111",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_verdicts() {
    for system in ["tent", "horseshoe"] {
        let v = json_of(&liyorke(&["verify", "--system", system, "--seed", "5"]));
        assert_eq!(v["verdict"]["pass"], true, "{system}");
        assert_eq!(v["partner_in_subset"], true);
    }
    let v = json_of(&liyorke(&[
        "verify",
        "--system",
        "tent",
        "--seed",
        "5",
        "--control",
        "identical",
    ]));
    assert_eq!(v["verdict"]["pass"], false);
    assert_eq!(v["verdict"]["witness"]["kind"], "separation");
}

#[test]
fn unsafe_iterate_reports_drift() {
    let v = json_of(&liyorke(&[
        "verify",
        "--system",
        "tent",
        "--seed",
        "2",
        "--unsafe-iterate",
    ]));
    let steps = v["naive_iteration"]["steps"].as_array().unwrap();
    assert_eq!(steps[0]["drift"].as_f64().unwrap(), 0.0);
    let worst = steps
        .iter()
        .map(|s| s["drift"].as_f64().unwrap())
        .fold(0.0, f64::max);
    assert!(worst > 1e-3, "naive orbit never drifted: {worst}");
}

#[test]
fn verify_needs_a_system() {
    let dir = TempDir::new().unwrap();
    let ifs = write(&dir, "cantor.json", CANTOR);
    let out = liyorke(&["verify", "--ifs", &ifs, "--seed", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn cantor_boxdim_slope() {
    let dir = TempDir::new().unwrap();
    let ifs = write(&dir, "cantor.json", CANTOR);
    let v = json_of(&liyorke(&[
        "boxdim", "--ifs", &ifs, "--count", "1000000", "--seed", "11",
    ]));
    let slope = v["estimate"]["slope"].as_f64().unwrap();
    assert!((slope - 0.631).abs() <= 0.02, "{slope}");
}

#[test]
fn boxdim_csv_has_header_and_ladder_rows() {
    let out = liyorke(&[
        "boxdim",
        "--system",
        "tent",
        "--count",
        "50000",
        "--seed",
        "1",
        "--format",
        "csv",
        "--eps-max",
        "0.25",
        "--eps-min",
        "0.001",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "neg_log_eps,log_count");
    // 2^-2 .. 2^-9
    assert_eq!(lines.len(), 1 + 8);
}

#[test]
fn sample_csv_rows() {
    let out = liyorke(&[
        "sample",
        "--system",
        "solenoid",
        "--target",
        "invariant",
        "--count",
        "100",
        "--seed",
        "4",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("x1,x2,x3"));
    assert_eq!(lines.count(), 100);
}

#[test]
fn seed_is_mandatory_for_sampling() {
    let out = liyorke(&["sample", "--system", "tent"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("--seed"));
}

#[test]
fn validation_failure_leaves_no_output_file() {
    let dir = TempDir::new().unwrap();
    let out_path = dir.path().join("out.csv");
    let out = liyorke(&[
        "boxdim",
        "--system",
        "tent",
        "--seed",
        "1",
        "--gaps",
        "bogus",
        "--target",
        "restricted",
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out_path.exists());
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 0);
}

#[test]
fn degenerate_fit_is_a_numerical_failure() {
    let dir = TempDir::new().unwrap();
    let out_path = dir.path().join("fit.json");
    let out = liyorke(&[
        "boxdim",
        "--system",
        "tent",
        "--seed",
        "1",
        "--count",
        "20",
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(3));
    assert!(!out_path.exists());
}

#[test]
fn config_file_below_flags() {
    let dir = TempDir::new().unwrap();
    let cfg = write(&dir, "cfg.json", r#"{"system": "tent", "a": 3}"#);
    let v = json_of(&liyorke(&["dimension", "--config", &cfg]));
    let d = v["moran"]["dimension"].as_f64().unwrap();
    assert!((d - 2f64.ln() / 6f64.ln()).abs() < 1e-12);
    let v = json_of(&liyorke(&["dimension", "--config", &cfg, "--a", "2"]));
    assert!((v["moran"]["dimension"].as_f64().unwrap() - 0.5).abs() < 1e-12);
}

#[test]
fn config_rejects_unknown_keys() {
    let dir = TempDir::new().unwrap();
    let cfg = write(&dir, "cfg.json", r#"{"system": "tent", "colour": "red"}"#);
    let out = liyorke(&["dimension", "--config", &cfg]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn gap_list_from_file() {
    let dir = TempDir::new().unwrap();
    let list = write(&dir, "gaps.txt", "0\n1 1\n2,3\n");
    let rule = format!("list:{list}");
    let v = json_of(&liyorke(&[
        "construct",
        "--base",
        "11111111111111",
        "--gaps",
        &rule,
        "--length",
        "14",
        "--seed",
        "0",
    ]));
    assert_eq!(v["gaps"]["values"], serde_json::json!([0, 1, 1, 2, 3]));
}

#[test]
fn help_lists_defaults() {
    let out = liyorke(&["boxdim", "--help"]);
    let text = String::from_utf8(out.stdout).unwrap();
    for needle in [
        "[default: 40]",
        "[default: 100000]",
        "[default: quadratic]",
        "[default: json]",
    ] {
        assert!(text.contains(needle), "missing {needle}");
    }
}

#[test]
fn output_written_to_file() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("d.json");
    let out = liyorke(&[
        "dimension",
        "--system",
        "baker",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_slice(&std::fs::read(Path::new(&path)).unwrap()).unwrap();
    assert!(
        (v["invariant_set_dimension"].as_f64().unwrap() - (1.0 + 2f64.ln() / 3f64.ln())).abs()
            < 1e-12
    );
}
