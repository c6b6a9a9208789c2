use std::fs;
use std::process::{Command, Output};

use quatdix::dixon::dixon_determinant;
use quatdix::rational::ratio;
use quatdix::solver::FdpReport;
use quatdix::spm::{build_3rrrr_system, MotorAngles};
use serde_json::Value;
use tempfile::TempDir;

const CASE: [&str; 4] = ["--sincos", "3/5,4/5", "5/13,12/13", "7/25,24/25"];

fn quatdix(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quatdix")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    assert!(o.status.success(), "stderr: {}", String::from_utf8_lossy(&o.stderr));
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn case_system_file(dir: &TempDir) -> String {
    let m = MotorAngles::from_sin_cos([
        (ratio(3, 5), ratio(4, 5)),
        (ratio(5, 13), ratio(12, 13)),
        (ratio(7, 25), ratio(24, 25)),
    ])
    .unwrap();
    let path = dir.path().join("sys.json");
    fs::write(&path, build_3rrrr_system(&m).to_json()).unwrap();
    path.to_str().unwrap().to_string()
}

fn with(extra: &[&'static str]) -> Vec<&'static str> {
    let mut v = vec!["solve"];
    v.extend(CASE);
    v.extend(extra);
    v
}

#[test]
fn solve_json_reproduces_the_case_study() {
    let out = stdout(&quatdix(&with(&["--format", "json"])));
    let v: Value = serde_json::from_str(&out).unwrap();
    let sols = v["solutions"].as_array().unwrap();
    assert_eq!(sols.len(), 8);
    let q0 = sols[0]["q"][0].as_f64().unwrap();
    assert_eq!(q0, "0.22420547189459832".parse::<f64>().unwrap());
    let report = FdpReport::from_json(&out).unwrap();
    assert_eq!(report.to_json(), out.trim_end());
}

#[test]
fn text_and_json_agree() {
    let json: Value = serde_json::from_str(&stdout(&quatdix(&with(&["--format", "json", "--precision", "12"])))).unwrap();
    let text = stdout(&quatdix(&with(&["--precision", "12"])));
    let table: Vec<Vec<f64>> = text
        .lines()
        .skip_while(|l| !l.trim_start().starts_with('#'))
        .skip(1)
        .map(|l| l.split_whitespace().skip(1).take(4).map(|x| x.parse().unwrap()).collect())
        .collect();
    assert!(text.contains("0.224205471895"));
    let sols = json["solutions"].as_array().unwrap();
    assert_eq!(table.len(), sols.len());
    for (row, s) in table.iter().zip(sols) {
        let q: Vec<f64> = s["q"].as_array().unwrap().iter().map(|x| x.as_f64().unwrap()).collect();
        assert_eq!(row, &q);
    }
}

#[test]
fn extraneous_points_on_request() {
    let v: Value = serde_json::from_str(&stdout(&quatdix(&with(&["--format", "json", "--include-extraneous"])))).unwrap();
    let sols = v["solutions"].as_array().unwrap();
    assert_eq!(sols.len(), 16);
    assert_eq!(sols.iter().filter(|s| s["extraneous"] == Value::Bool(true)).count(), 8);
}

#[test]
fn verify_flags_an_extraneous_point() {
    let dir = TempDir::new().unwrap();
    let sys = case_system_file(&dir);
    let out = stdout(&quatdix(&["verify", "--system", &sys, "--point", "0.5,0.5,0.5,0.5", "--format", "json"]));
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["max_residual"].as_f64(), Some(0.0));
    assert!(v["exact_residuals"].as_array().unwrap().iter().all(|r| r == "0"));
    assert_eq!(v["extraneous"], Value::Bool(true));
    let text = stdout(&quatdix(&["verify", "--system", &sys, "--point", "1,0,0,0"]));
    assert!(text.contains("f3 = 0.28") && text.contains("(exact 7/25)"), "{text}");
}

#[test]
fn determinant_matches_the_library() {
    let dir = TempDir::new().unwrap();
    let sys = case_system_file(&dir);
    let v: Value = serde_json::from_str(&stdout(&quatdix(&["dixon-det", "--system", &sys, "--retain", "q0", "--format", "json"]))).unwrap();
    assert_eq!(v["degree"], 16);
    let lib = dixon_determinant(&quatdix::dixon::QuadricSystem::from_json(&fs::read_to_string(&sys).unwrap()).unwrap()).unwrap();
    let coeffs: Vec<String> = lib.coeffs().iter().map(|c| c.to_string()).collect();
    assert_eq!(v["coeffs"], serde_json::to_value(coeffs).unwrap());
    let text = stdout(&quatdix(&["dixon-det", "--system", &sys, "--retain", "q3"]));
    assert!(text.starts_with("degree 16 in q3"));
}

#[test]
fn motor_angles_from_a_file() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("m.json");
    fs::write(&path, r#"{"exact": [["3/5", "4/5"], ["5/13", "12/13"], ["7/25", "24/25"]]}"#).unwrap();
    let v: Value = serde_json::from_str(&stdout(&quatdix(&["solve", "--input", path.to_str().unwrap(), "--format", "json"]))).unwrap();
    assert_eq!(v["solutions"].as_array().unwrap().len(), 8);
}

#[test]
fn bad_input_exits_one() {
    for args in [
        vec!["solve", "--theta", "1,2"],
        vec!["solve", "--theta", "1,2,3", "--sincos", "1,0", "1,0", "1,0"],
        vec!["solve"],
        vec!["solve", "--sincos", "1/2,1/2", "1,0", "1,0"],
        vec!["verify", "--theta", "1,2,3", "--point", "1,0"],
        vec!["solve", "--theta", "1,2,3", "--precision", "0"],
    ] {
        let o = quatdix(&args);
        assert_eq!(o.status.code(), Some(1), "{args:?}");
        let err = String::from_utf8_lossy(&o.stderr);
        assert!(err.starts_with("error["), "{args:?}: {err}");
    }
}

#[test]
fn degenerate_system_exits_two() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("axis.json");
    fs::write(
        &path,
        r#"{"polys": ["q1", "q2", "q3", "q0^2 + q1^2 + q2^2 + q3^2 - 1"],
            "eliminated": ["q1", "q2", "q3"], "retained": "q0", "parameters": [], "bindings": {}}"#,
    )
    .unwrap();
    let o = quatdix(&["dixon-det", "--system", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("error[degenerate_system]"));
    let out = stdout(&quatdix(&["oracle", "--system", path.to_str().unwrap()]));
    assert!(out.starts_with("2 points"));
}

#[test]
fn oracle_is_hidden_but_runs() {
    assert!(!stdout(&quatdix(&["--help"])).contains("oracle"));
    let v: Value = serde_json::from_str(&stdout(&quatdix(&["oracle", "--sincos", "3/5,4/5", "5/13,12/13", "7/25,24/25", "--format", "json"]))).unwrap();
    assert_eq!(v["count"], 16);
}
