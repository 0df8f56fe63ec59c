mod common;

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use common::{random_hermitian, rng};
use noisy_sep::io::{matrix_to_json, read_coeffs, read_matrix, write_coeffs, write_matrix};
use noisy_sep::scan::CSV_HEADER;
use noisy_sep::scenario::{run_scenario, SCENARIOS, UNEQUAL_COEFFS};
use noisy_sep::{from_coefficients, Error, PauliCoefficients};

fn fixture(name: &str) -> std::path::PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn cli(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_noisy-sep")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn matrix_file_round_trip_is_bit_exact() {
    let dir = tempfile::tempdir().unwrap();
    let mut rng = rng(41);
    for (k, dim) in [2, 4, 8, 16, 32].into_iter().enumerate() {
        let h = random_hermitian(&mut rng, dim);
        let path = dir.path().join(format!("m{k}.json"));
        write_matrix(&h, &path).unwrap();
        assert_eq!(read_matrix(&path).unwrap(), h);
    }
}

#[test]
fn coeff_file_round_trip_is_bit_exact() {
    let dir = tempfile::tempdir().unwrap();
    let mut rng = rng(42);
    for n in 1..=3 {
        let c = common::random_coefficients(&mut rng, n, 1e3);
        let path = dir.path().join("c.json");
        write_coeffs(&c, &path).unwrap();
        assert_eq!(read_coeffs(&path).unwrap(), c);
    }
}

#[test]
fn shipped_fixture_matches_builder() {
    let m = read_matrix(fixture("eq8.json")).unwrap();
    let built = from_coefficients(&PauliCoefficients::uniform(2, -0.15).unwrap());
    assert!(m.max_abs_diff(&built) <= 1e-12);

    let c = read_coeffs(fixture("unequal_coeffs.json")).unwrap();
    assert_eq!(&c.as_slice()[1..], &UNEQUAL_COEFFS[..]);
}

#[test]
fn non_hermitian_file_is_schema_violation() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    let h = random_hermitian(&mut rng(43), 4);
    let text = matrix_to_json(&h);
    let mut value: serde_json::Value = serde_json::from_str(&text).unwrap();
    let re = value["entries"][0][1][0].as_f64().unwrap();
    value["entries"][0][1][0] = serde_json::json!(re + 1e-6);
    fs::write(&path, value.to_string()).unwrap();
    assert!(matches!(read_matrix(&path), Err(Error::SchemaViolation(_))));
}

#[test]
fn malformed_files_report_context() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.json");
    fs::write(&path, "{\n  \"n_qubits\": 1,\n  \"entries\": [[[1, 0], [0, 0]],\n   [[0, 0] [0, 0]]]\n}").unwrap();
    match read_matrix(&path) {
        Err(Error::Parse(msg)) => assert!(msg.contains("line 4"), "{msg}"),
        other => panic!("expected parse error, got {other:?}"),
    }

    fs::write(&path, r#"{"n_qubits": 2, "entries": [[[1, 0], [0, 0]], [[0, 0], [0, 0]]]}"#).unwrap();
    assert!(matches!(read_matrix(&path), Err(Error::SchemaViolation(_))));

    fs::write(&path, r#"{"n_qubits": 1, "coeffs": [0.5, 0, 0, 0]}"#).unwrap();
    assert!(matches!(read_coeffs(&path), Err(Error::SchemaViolation(_))));

    fs::write(&path, r#"{"n_qubits": 1, "coeffs": [1, 0, 0, 0], "extra": 1}"#).unwrap();
    assert!(matches!(read_coeffs(&path), Err(Error::Parse(_))));
}

#[test]
fn scenario_reports_are_deterministic() {
    for id in SCENARIOS {
        let a = serde_json::to_string(&run_scenario(id).unwrap()).unwrap();
        let b = serde_json::to_string(&run_scenario(id).unwrap()).unwrap();
        assert_eq!(a, b, "{id}");
        assert_eq!(run_scenario(id).unwrap().render_text(), run_scenario(id).unwrap().render_text());
    }
}

#[test]
fn cli_scenarios_pass_and_are_byte_identical() {
    let first = cli(&["scenario", "all"]);
    assert_eq!(first.status.code(), Some(0), "{}", stdout(&first));
    assert_eq!(stdout(&first), stdout(&cli(&["scenario", "all"])));
    assert!(!stdout(&first).contains("FAIL"));

    let json = cli(&["--json", "scenario", "eq3"]);
    assert_eq!(json.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&json.stdout).unwrap();
    assert_eq!(v["scenario_id"], "eq3");
    assert_eq!(v["verdicts"][0]["value"]["kind"], "NonPhysical");
}

#[test]
fn cli_input_errors_exit_two() {
    assert_eq!(cli(&["scenario", "eq99"]).status.code(), Some(2));
    assert_eq!(cli(&["analyze", "--matrix", "/nonexistent/file.json"]).status.code(), Some(2));
    assert_eq!(cli(&["scan", "--c", "1:0:0.1", "--eps", "0.5"]).status.code(), Some(2));
    assert_eq!(cli(&["scan", "--c", "0:1:1e-4", "--eps", "0:1:1e-4"]).status.code(), Some(2));
    assert_eq!(cli(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        cli(&["analyze", "--matrix", fixture("eq8.json").to_str().unwrap(), "--epsilon", "2"]).status.code(),
        Some(2)
    );
}

#[test]
fn cli_scan_writes_fixed_csv() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("plane.csv");
    let o = cli(&["scan", "--n", "2", "--c", "-1:0:0.5", "--eps", "0.5:1:0.5", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let csv = fs::read_to_string(&out).unwrap();
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], CSV_HEADER);
    assert_eq!(lines.len(), 1 + 3 * 2);
    let keys: Vec<String> = lines[1..].iter().map(|l| l.split(',').take(2).collect::<Vec<_>>().join(",")).collect();
    assert_eq!(keys, ["-1,0.5", "-1,1", "-0.5,0.5", "-0.5,1", "0,0.5", "0,1"]);
    // c = -1, ε = 1 is the all-minus-one state: not physical, no PT column.
    let fields: Vec<&str> = lines[2].split(',').collect();
    assert_eq!((fields[2], fields[4]), ("false", ""));

    let again = cli(&["scan", "--n", "2", "--c", "-1:0:0.5", "--eps", "0.5:1:0.5"]);
    assert_eq!(stdout(&again), csv);
}

#[test]
fn cli_analyze_fixture() {
    let path = fixture("eq8.json");
    let o = cli(&["--json", "analyze", "--matrix", path.to_str().unwrap(), "--epsilon", "0.4"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["ppt"]["kind"], "PPTSeparable");
    assert!((v["spectrum"]["eigenvalues"][0].as_f64().unwrap() - 0.153038).abs() < 1e-6);

    let coeffs = fixture("unequal_coeffs.json");
    let o = cli(&["--json", "analyze", "--coeffs", coeffs.to_str().unwrap(), "--epsilon", "0.13"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["witness"]["terms"][0][0].as_f64().unwrap() < 0.0);

    let o = cli(&["analyze", "--coeffs", fixture("uniform_minus_one_coeffs.json").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("NonPhysical"));
}

#[test]
fn cli_intervals_table() {
    let o = cli(&["intervals", "--max-n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 4);
    assert!(lines[0].starts_with("n_qubits,c_min,c_max,a_n,b_n"));
    assert!(lines[2].starts_with("2,-0.1547"));
}

#[test]
fn cli_build_then_analyze() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("three.json");
    let o = cli(&["build", "--n", "3", "--c", "-0.05", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let m = read_matrix(&path).unwrap();
    assert_eq!(m, from_coefficients(&PauliCoefficients::uniform(3, -0.05).unwrap()));
    let o = cli(&["--json", "analyze", "--matrix", path.to_str().unwrap()]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["ppt"]["kind"], "PPTInconclusive");
    assert!(v["witness"].is_null());
}
