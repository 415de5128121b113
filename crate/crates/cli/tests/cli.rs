use std::process::{Command, Output};

use rdp_cli::commands::AnalyzeResult;
use rdp_cli::suites::SuiteReport;
use rdp_cli::ReportEnvelope;

fn rdp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rdp"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = rdp(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn eval_examples() {
    assert_eq!(
        stdout(&["eval", "--kind", "D", "--n", "2", "--mod", "5", "--all-x"]),
        "1,4,2,0,3\n"
    );
    assert_eq!(
        stdout(&["eval", "--kind", "E", "--n", "15", "--mod", "5", "--x", "4"]),
        "2\n"
    );
    assert_eq!(
        stdout(&["eval", "--kind", "D", "--n", "0", "--mod", "7", "--x", "3"]),
        "2\n"
    );
    assert_eq!(
        stdout(&[
            "eval",
            "--kind",
            "E",
            "--n",
            "15",
            "--mod",
            "5",
            "--x",
            "-1",
            "--route",
            "functional"
        ]),
        "2\n"
    );
}

#[test]
fn tables_reproduce_golden_files() {
    let t1 = stdout(&["table", "--kind", "D", "--mod", "5", "--n", "0..23"]);
    assert_eq!(t1, include_str!("../testdata/table1_d_z5.csv"));
    let t2 = stdout(&["table", "--kind", "D", "--mod", "7", "--n", "0..47"]);
    assert_eq!(t2, include_str!("../testdata/table2_d_z7.csv"));
    let row = stdout(&[
        "table", "--kind", "E", "--mod", "3", "--n", "0..7", "--x", "-1",
    ]);
    assert_eq!(row, "1,1,2,0,2,2,1,0\n");
    let b6 = stdout(&[
        "table",
        "--kind",
        "E",
        "--mod",
        "5",
        "--n",
        "0..19",
        "--x",
        "1/4",
        "--derivative",
    ]);
    assert_eq!(b6, "0,0,4,3,0,0,0,2,4,0,0,0,1,2,0,0,0,3,1,0\n");
}

#[test]
fn analyze_reports_round_trip() {
    let json = stdout(&[
        "analyze",
        "--kind",
        "D",
        "--n",
        "2",
        "--mod",
        "5",
        "--cycle-type",
    ]);
    let env: ReportEnvelope<AnalyzeResult> = ReportEnvelope::from_json(&json).unwrap();
    assert!(env.results.report.is_pp);
    assert_eq!(env.results.cycle_lengths, Some(vec![4, 1]));
    assert_eq!(env.to_json().unwrap(), json);

    let json = stdout(&["analyze", "--kind", "E", "--n", "3", "--mod", "7", "--cpp"]);
    let env: ReportEnvelope<AnalyzeResult> = ReportEnvelope::from_json(&json).unwrap();
    assert_eq!(env.results.report.is_cpp, Some(true));

    let json = stdout(&["analyze", "--kind", "D", "--n", "4", "--mod", "5"]);
    let env: ReportEnvelope<AnalyzeResult> = ReportEnvelope::from_json(&json).unwrap();
    let w = env.results.report.witness.unwrap();
    assert!(!env.results.report.is_pp);
    assert_eq!((w.x1, w.x2), (0, 2));
}

#[test]
fn verify_reports_round_trip_and_are_deterministic() {
    let args = ["verify", "--suite", "periods", "--prime-cap", "13"];
    let first = stdout(&args);
    assert_eq!(stdout(&args), first);
    let env: ReportEnvelope<SuiteReport> = ReportEnvelope::from_json(&first).unwrap();
    assert!(env.results.passed);
    assert_eq!(env.to_json().unwrap(), first);
    assert_eq!(env.parameters["suite"], "periods");
}

#[test]
fn thread_count_does_not_change_output() {
    let args = ["verify", "--suite", "t7"];
    let one = Command::new(env!("CARGO_BIN_EXE_rdp"))
        .args(args)
        .env("RDP_THREADS", "1")
        .output()
        .unwrap();
    let many = Command::new(env!("CARGO_BIN_EXE_rdp"))
        .args(args)
        .env("RDP_THREADS", "4")
        .output()
        .unwrap();
    assert!(one.status.success());
    assert_eq!(one.stdout, many.stdout);
    let bad = Command::new(env!("CARGO_BIN_EXE_rdp"))
        .args(args)
        .env("RDP_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn exit_status_contract() {
    assert_eq!(rdp(&["verify", "--suite", "t5"]).status.code(), Some(0));
    assert_eq!(
        rdp(&["verify", "--suite", "golden-appendix"]).status.code(),
        Some(0)
    );
    let failing = rdp(&["verify", "--suite", "synthetic-failure"]);
    assert_eq!(failing.status.code(), Some(1));
    let env: ReportEnvelope<SuiteReport> =
        ReportEnvelope::from_json(&String::from_utf8(failing.stdout).unwrap()).unwrap();
    assert_eq!(env.results.violations.len(), 1);
    assert_eq!(
        rdp(&["verify", "--suite", "nonsense"]).status.code(),
        Some(2)
    );
    assert_eq!(
        rdp(&["eval", "--kind", "D", "--n", "2", "--mod", "1", "--x", "0"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        rdp(&["eval", "--kind", "Q", "--n", "2", "--mod", "5", "--x", "0"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        rdp(&[
            "eval",
            "--kind",
            "D",
            "--n",
            "2",
            "--mod",
            "9",
            "--x",
            "1",
            "--route",
            "functional"
        ])
        .status
        .code(),
        Some(2)
    );
}

#[test]
fn table_writes_csv_that_round_trips_through_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.csv");
    std::fs::write(
        &path,
        stdout(&["table", "--kind", "E", "--mod", "9", "--n", "0..30"]),
    )
    .unwrap();
    let text = std::fs::read_to_string(&path).unwrap();
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(rows.len(), 10);
    assert!(rows.iter().skip(1).all(|r| r.split(',').count() == 32));
}
