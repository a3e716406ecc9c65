use std::process::{Command, Output};

use su3squeeze::squeezing::{ScalingSweep, SqueezeResult};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_su3squeeze"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn algebra_report_json_has_six_roots_and_two_lambdas() {
    let o = run(&["algebra-report", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["roots"].as_array().unwrap().len(), 6);
    assert_eq!(v["distinct_lambdas"].as_array().unwrap().len(), 2);
    let triads = v["triads"].as_array().unwrap();
    assert_eq!(triads.len(), 9);
    assert_eq!(triads[0]["members"].as_array().unwrap().len(), 3);
}

#[test]
fn algebra_report_text_exits_zero() {
    let o = run(&["algebra-report"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("distinct lambdas"));
}

#[test]
fn squeeze_summary_and_json_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let o = run(&[
        "squeeze",
        "--n",
        "100",
        "--spinor",
        "0,1,0",
        "--type",
        "1",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let line = stdout(&o);
    assert!(line.starts_with("N=100 type=1 min_var="));
    let min_var: f64 = line
        .split_whitespace()
        .find_map(|t| t.strip_prefix("min_var="))
        .unwrap()
        .parse()
        .unwrap();
    assert!((min_var - 1.5206).abs() < 0.25 * 1.5206);

    let text = std::fs::read_to_string(&path).unwrap();
    let parsed: SqueezeResult = serde_json::from_str(&text).unwrap();
    assert_eq!(parsed.min_variance, min_var);
    // re-serializing the parsed value reproduces the file byte for byte
    let again = serde_json::to_string_pretty(&parsed).unwrap() + "\n";
    assert_eq!(again, text);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["N"], 100);
    assert_eq!(v["type"], 1);
    assert_eq!(
        v["series"].as_array().unwrap()[0].as_array().unwrap().len(),
        3
    );
}

#[test]
fn type2_summary() {
    let o = run(&[
        "squeeze", "--n", "100", "--spinor", "1,0,0", "--type", "2", "--format", "text",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let first = stdout(&o).lines().next().unwrap().to_string();
    let min_var: f64 = first
        .split_whitespace()
        .find_map(|t| t.strip_prefix("min_var="))
        .unwrap()
        .parse()
        .unwrap();
    assert!((min_var - 4.8275).abs() < 0.25 * 4.8275);
}

#[test]
fn output_is_deterministic() {
    let args = [
        "squeeze",
        "--n",
        "40",
        "--spinor",
        "0.36:0.48,0.8,0",
        "--type",
        "2",
        "--seed",
        "11",
    ];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(
        a.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&a.stderr)
    );
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn spinor_validation() {
    let o = run(&["squeeze", "--n", "100", "--spinor", "2,0,0"]);
    assert_eq!(o.status.code(), Some(3));
    let o = run(&["squeeze", "--n", "20", "--spinor", "0,1.0000004,0"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stderr).contains("warning"));
    let o = run(&["squeeze", "--n", "20", "--spinor", "0,1"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn usage_errors_exit_three() {
    assert_eq!(run(&["sweep", "--n-list", "100"]).status.code(), Some(3));
    assert_eq!(
        run(&["sweep", "--n-list", "20,40,30,50"]).status.code(),
        Some(3)
    );
    assert_eq!(
        run(&["squeeze", "--n", "301", "--spinor", "1,0,0"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        run(&["squeeze", "--n", "10", "--spinor", "1,0,0", "--type", "3"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(run(&["frobnicate"]).status.code(), Some(3));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn schedule_miss_exits_two() {
    let o = run(&[
        "squeeze",
        "--n",
        "50",
        "--spinor",
        "0,1,0",
        "--chi-t-min",
        "1e-6",
        "--chi-t-max",
        "1e-5",
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn sweep_csv_rows_and_slope() {
    let o = run(&[
        "sweep",
        "--type",
        "2",
        "--spinor",
        "1,0,0",
        "--n-list",
        "50,100,150,200",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "N,min_variance,chi_t_opt");
    assert_eq!(lines.len(), 6);
    let slope: f64 = lines[5]
        .strip_prefix("# slope=")
        .unwrap()
        .split_whitespace()
        .next()
        .unwrap()
        .parse()
        .unwrap();
    assert!((slope - 1.0 / 3.0).abs() < 0.05);
}

#[test]
fn sweep_type1_slope_and_json() {
    let o = run(&[
        "sweep",
        "--n-list",
        "50,75,100,150,200",
        "--type",
        "1",
        "--spinor",
        "0,1,0",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let s: ScalingSweep = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(s.results.len(), 5);
    assert!((s.slope - 1.0 / 3.0).abs() < 0.05);
}
