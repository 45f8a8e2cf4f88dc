use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn eccx(args: &[&str]) -> Output {
    eccx_with_env(args, &[])
}

fn eccx_with_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_eccx"));
    cmd.args(args).env_remove("ECCX_THREADS");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "{e}: {}{}",
            String::from_utf8_lossy(&out.stdout),
            String::from_utf8_lossy(&out.stderr)
        )
    })
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

#[test]
fn analyze_reports_invariants() {
    let out = eccx(&["analyze", "prism"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["order"], 6);
    assert_eq!(v["wiener"], 12);
    assert_eq!(v["energy"], 16.0);
    assert_eq!(v["spectrum"][0]["value"], 4.0);
    assert_eq!(v["irreducible"], true);
}

#[test]
fn analyze_reads_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p4.json");
    fs::write(&path, r#"{"n": 4, "edges": [[0, 1], [1, 2], [2, 3]]}"#).unwrap();
    let out = eccx(&["analyze", "--input", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["epsilon_regular"], false);

    let operand = format!("@{}", path.display());
    let same = eccx(&["analyze", &operand]);
    assert_eq!(json(&same)["wiener"], json(&out)["wiener"]);
}

#[test]
fn exit_codes() {
    assert_eq!(code(&eccx(&["verify", "sv-join", "C4", "K2"])), 0);
    assert_eq!(code(&eccx(&["verify", "sv-join", "P3", "K2"])), 3);
    assert_eq!(code(&eccx(&["verify", "join-k1", "K4"])), 3);
    assert_eq!(code(&eccx(&["analyze", "g6:A?"])), 2, "disconnected input");
    assert_eq!(code(&eccx(&["analyze", "nonsense"])), 2);
    assert_eq!(code(&eccx(&["verify", "no-such-theorem", "C4"])), 2);
    assert_eq!(code(&eccx(&["scan", "k3-svjoin-kn", "500"])), 2);
    assert_eq!(code(&eccx(&["frobnicate"])), 2);
    assert_eq!(code(&eccx(&["--help"])), 0);
}

#[test]
fn corpus_statuses_follow_input_order() {
    let dir = tempfile::tempdir().unwrap();
    let corpus = dir.path().join("corpus.txt");
    fs::write(
        &corpus,
        "# sv-join operands\nC4 K2\npetersen C3\nP3 K2\nX9 K1\n",
    )
    .unwrap();
    let out = eccx(&["verify", "sv-join", "--corpus", corpus.to_str().unwrap()]);
    let statuses: Vec<String> = json(&out)
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["status"].as_str().unwrap().to_string())
        .collect();
    assert_eq!(statuses, ["PASS", "PASS", "HYPOTHESIS", "ERROR"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn construct_and_scan() {
    let out = eccx(&["construct", "pair12t", "3"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    for e in v["energies"].as_array().unwrap() {
        assert!((e.as_f64().unwrap() - 160.0).abs() < 1e-6);
    }

    let out = eccx(&["scan", "k11-sejoin-kn", "46", "--nmin", "44"]);
    assert_eq!(code(&out), 0);
    let rows = json(&out);
    let flagged: Vec<&Value> = rows
        .as_array()
        .unwrap()
        .iter()
        .filter(|r| r["numeric_integral"] == true)
        .map(|r| &r["params"][0])
        .collect();
    assert_eq!(flagged, [&Value::from(45)]);
}

#[test]
fn csv_output() {
    let out = eccx(&["--format", "csv", "scan", "k3-svjoin-kn", "6"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(
        lines[0],
        "params,order,numeric_integral,predicate,certificate,agrees"
    );
    assert_eq!(lines.last().unwrap(), &"6,12,true,true,9,true");
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c5.json");
    let out = eccx(&["analyze", "C5", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert!(out.stdout.is_empty());
    let written: Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(written["graph"], "C5");
}

#[test]
fn output_is_byte_identical_across_thread_counts() {
    let args = ["construct", "triplet-se", "3", "--base", "C4"];
    let single = eccx_with_env(&args, &[("ECCX_THREADS", "1")]);
    let many = eccx_with_env(&args, &[("ECCX_THREADS", "4")]);
    let default = eccx(&args);
    assert_eq!(code(&single), 0);
    assert_eq!(single.stdout, many.stdout);
    assert_eq!(single.stdout, default.stdout);

    let scan = ["scan", "join-union-complete", "5"];
    assert_eq!(
        eccx_with_env(&scan, &[("ECCX_THREADS", "1")]).stdout,
        eccx_with_env(&scan, &[("ECCX_THREADS", "3")]).stdout
    );
}

#[test]
fn thread_cap_must_be_positive() {
    for bad in ["0", "-2", "many"] {
        let out = eccx_with_env(&["analyze", "K3"], &[("ECCX_THREADS", bad)]);
        assert_eq!(code(&out), 2, "{bad}");
        assert!(String::from_utf8_lossy(&out.stderr).contains("ECCX_THREADS"));
    }
}
