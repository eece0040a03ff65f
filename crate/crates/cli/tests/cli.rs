use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn randic(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_randic"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

/// JSON records after the header line.
fn records(o: &Output) -> Vec<Value> {
    let text = stdout(o);
    let mut lines = text.lines();
    let header: Value = serde_json::from_str(lines.next().expect("header line")).unwrap();
    assert!(header.get("header").is_some());
    lines.map(|l| serde_json::from_str(l).unwrap()).collect()
}

fn enumerate(args: &[&str]) -> Vec<String> {
    let o = randic(&[&["enumerate"], args].concat(), "");
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    stdout(&o).lines().map(String::from).collect()
}

#[test]
fn enumerate_counts() {
    assert_eq!(enumerate(&["4"]).len(), 6);
    assert_eq!(enumerate(&["3"]).len(), 2);
    assert_eq!(enumerate(&["6", "--min-degree", "5"]), vec!["E~~w"]);
    assert_eq!(enumerate(&["4", "--include-disconnected"]).len(), 11);
}

#[test]
fn enumerate_rejects_large_order() {
    let o = randic(&["enumerate", "9"], "");
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("geng"));
}

#[test]
fn check_five_vertex_corpus() {
    let corpus = enumerate(&["5"]).join("\n");
    let o = randic(&["check"], &corpus);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let recs = records(&o);
    assert_eq!(recs.len(), 21);
    let lines: Vec<u64> = recs.iter().map(|r| r["line"].as_u64().unwrap()).collect();
    assert_eq!(lines, (1..=21).collect::<Vec<_>>());
    for r in &recs {
        assert_eq!(r["anomalies"], "");
        let path = r["is_path"].as_bool().unwrap();
        assert_eq!(r["c1_add_equality"].as_bool().unwrap(), path);
        assert_eq!(r["c1_ratio_equality"].as_bool().unwrap(), path);
    }
    assert_eq!(recs.iter().filter(|r| r["is_path"] == true).count(), 1);
}

#[test]
fn check_disconnected_line() {
    let o = randic(&["check"], "C_\n");
    assert_eq!(code(&o), 0);
    let recs = records(&o);
    assert_eq!(recs.len(), 1);
    assert_eq!(recs[0]["anomalies"], "disconnected");
    assert!(recs[0]["diameter"].is_null());
    assert!(recs[0]["avg_distance"].is_null());
}

#[test]
fn check_empty_input() {
    let o = randic(&["check"], "");
    assert_eq!(code(&o), 0);
    assert!(records(&o).is_empty());
    let o = randic(&["check", "--format", "csv"], "\n\n");
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).lines().all(|l| l.starts_with('#')));
}

#[test]
fn check_malformed_lines() {
    let input = "Ch\nnot graph6\nC~\n";
    let o = randic(&["check"], input);
    assert_eq!(code(&o), 2);
    assert_eq!(records(&o).len(), 2);
    assert!(stderr(&o).contains("line 2"));

    let o = randic(&["check", "--strict"], input);
    assert_eq!(code(&o), 2);
    assert_eq!(records(&o).len(), 1);
}

#[test]
fn check_reads_sparse6_and_headers() {
    let o = randic(&["check"], ">>graph6<<Ch\n>>sparse6<<:Cdv\n:DaY_~\n");
    assert_eq!(code(&o), 0);
    let recs = records(&o);
    assert_eq!(recs.len(), 3);
    assert_eq!(recs[0]["graph6"], "Ch");
    assert_eq!(recs[1]["graph6"], "Ch");
    assert_eq!(recs[2]["graph6"], "Dhc");
}

#[test]
fn check_reads_file_argument() {
    let dir = std::env::temp_dir().join(format!("randic-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let input = dir.join("in.g6");
    let out = dir.join("out.jsonl");
    std::fs::write(&input, "Ch\nC~\n").unwrap();
    let o = randic(&["check", input.to_str().unwrap(), "--out", out.to_str().unwrap()], "");
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).is_empty());
    assert_eq!(std::fs::read_to_string(&out).unwrap().lines().count(), 3);
    let _ = std::fs::remove_dir_all(&dir);
}

#[test]
fn csv_and_jsonl_agree() {
    let corpus = enumerate(&["5"]).join("\n") + "\nC_\n";
    let json = records(&randic(&["check"], &corpus));
    let csv_out = stdout(&randic(&["check", "--format", "csv"], &corpus));
    let data: String = csv_out.lines().filter(|l| !l.starts_with('#')).map(|l| format!("{l}\n")).collect();
    let mut rdr = csv::Reader::from_reader(data.as_bytes());
    let cols: Vec<String> = rdr.headers().unwrap().iter().map(String::from).collect();
    let rows: Vec<csv::StringRecord> = rdr.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), json.len());
    for (row, obj) in rows.iter().zip(&json) {
        let obj = obj.as_object().unwrap();
        assert_eq!(obj.keys().collect::<Vec<_>>(), cols.iter().collect::<Vec<_>>());
        for (col, text) in cols.iter().zip(row.iter()) {
            match &obj[col] {
                Value::Null => assert_eq!(text, ""),
                Value::Bool(b) => assert_eq!(text, b.to_string()),
                Value::String(s) => assert_eq!(text, s),
                Value::Number(x) => assert_eq!(text.parse::<f64>().unwrap(), x.as_f64().unwrap()),
                other => panic!("unexpected value {other}"),
            }
        }
    }
}

#[test]
fn survey_exit_codes() {
    let o = randic(&["survey", "--n-max", "300"], "");
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let recs = records(&o);
    let summaries: Vec<&Value> = recs.iter().filter(|r| r["kind"] == "summary").collect();
    assert_eq!(summaries.len(), 9);
    assert!(summaries.iter().all(|r| r["passed"] == true));
    let boundary: Vec<&Value> = recs.iter().filter(|r| r["kind"] == "boundary").collect();
    assert_eq!(boundary.len(), 1);
    assert_eq!((boundary[0]["family"].as_str(), boundary[0]["n"].as_u64()), (Some("slope_floor"), Some(2)));

    // a negative tolerance turns exact-zero boundary cells into violations
    let o = randic(&["survey", "--n-max", "10", "--tol=-1e-9"], "");
    assert_eq!(code(&o), 1);

    assert_eq!(code(&randic(&["survey", "--n-max", "3"], "")), 2);
}

#[test]
fn hunt_finds_path() {
    let o = randic(&["hunt", "6", "--min-degree", "1", "--claim", "C1_ADD", "--budget", "1000", "--seed", "42"], "");
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let recs = records(&o);
    assert_eq!(recs.len(), 1);
    assert!(recs[0]["best_slack"].as_f64().unwrap().abs() < 1e-9);
    assert_eq!(recs[0]["best_is_path"], true);
    assert_eq!(recs[0]["counterexample"], false);
}

#[test]
fn hunt_mean_distance_regime() {
    let o = randic(&["hunt", "20", "--min-degree", "4", "--claim", "C2", "--budget", "2000", "--seed", "1"], "");
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    assert!(records(&o)[0]["best_slack"].as_f64().unwrap() >= 0.0);
}

#[test]
fn hunt_trace_file() {
    let path = std::env::temp_dir().join(format!("randic-trace-{}.csv", std::process::id()));
    let o = randic(
        &["hunt", "7", "--claim", "c2", "--budget", "50", "--format", "csv", "--trace", path.to_str().unwrap()],
        "",
    );
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let trace = std::fs::read_to_string(&path).unwrap();
    let rows: Vec<&str> = trace.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(rows[0], "step,event,u,v,slack,best_slack");
    assert_eq!(rows.len(), 51);
    assert!(rows[1].starts_with("0,start,,,"));
    let _ = std::fs::remove_file(&path);
}

#[test]
fn hunt_infeasible() {
    let o = randic(&["hunt", "5", "--min-degree", "5", "--claim", "C2"], "");
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("infeasible"));
    assert_eq!(code(&randic(&["hunt", "5", "--claim", "C3"], "")), 2);
}

#[test]
fn header_records_run_settings() {
    let o = randic(&["hunt", "6", "--claim", "C2", "--seed", "9", "--tol", "1e-6", "--budget", "5"], "");
    let header: Value = serde_json::from_str(stdout(&o).lines().next().unwrap()).unwrap();
    let h = &header["header"];
    assert_eq!(h["seed"], 9);
    assert_eq!(h["tol"], 1e-6);
    assert!(h["rng"].as_str().unwrap().contains("ChaCha8"));
    assert_eq!(h["tool"], "randic");
}
