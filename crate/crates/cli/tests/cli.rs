use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn ordsize(args: &[&str], cwd: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ordsize")).args(args).current_dir(cwd).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn json_file(p: &Path) -> Value {
    serde_json::from_str(&std::fs::read_to_string(p).unwrap()).unwrap()
}

#[test]
fn gr_table_powers_of_two() {
    let dir = tempfile::tempdir().unwrap();
    let o = ordsize(&["values", "gr-table", "--r", "3..6"], dir.path());
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 4);
    for (row, r) in rows.iter().zip(3..) {
        assert_eq!(row["m"], (2 * r).to_string());
        assert_eq!(row["g"], (1u64 << r).to_string());
    }
}

#[test]
fn buildh_checked_weight() {
    let dir = tempfile::tempdir().unwrap();
    let o = ordsize(&["buildh", "--r", "4", "--m", "80", "--f", "12345", "--check", "--out", "o"], dir.path());
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let rep = json_file(&dir.path().join("o/report.json"));
    assert_eq!(rep["checks"]["weight"], 12345);
    assert_eq!(rep["checks"]["weight_ok"], true);
    // recompute Σ_{(u,v)} C(m−1−v, r−2) over the reported edges of the pattern
    let m = 80u128;
    let binom2 = |n: u128| n * n.saturating_sub(1) / 2;
    let total: u128 = rep["edges"].as_array().unwrap().iter().map(|e| binom2(m - 1 - e[1].as_u64().unwrap() as u128)).sum();
    let want = if rep["complemented"] == true { 1_581_580 - 12345 } else { 12345 };
    assert_eq!(total, want);
}

#[test]
fn eq1_thousand_trials() {
    let dir = tempfile::tempdir().unwrap();
    let o = ordsize(&["verify", "eq1", "--trials", "1000", "--seed", "7", "--format", "text"], dir.path());
    assert_eq!(code(&o), 0);
    assert!(String::from_utf8_lossy(&o.stdout).contains("PASS (1000 cases"));
}

#[test]
fn unknown_flag_is_an_error() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(code(&ordsize(&["homog", "--input", "x.hg", "--frobnicate"], dir.path())), 2);
    assert_eq!(code(&ordsize(&["values", "gr-table", "--r", "6..3"], dir.path())), 2);
    assert_eq!(code(&ordsize(&["homog", "--input", "missing.hg"], dir.path())), 2);
}

#[test]
fn config_file_precedence() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("c.json"), r#"{"seed": 11, "format": "text"}"#).unwrap();
    let a = ordsize(&["gen", "random", "--r", "3", "--n", "9", "--config", "c.json"], dir.path());
    let b = ordsize(&["gen", "random", "--r", "3", "--n", "9", "--seed", "11"], dir.path());
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let c = ordsize(&["gen", "random", "--r", "3", "--n", "9", "--config", "c.json", "--seed", "12"], dir.path());
    assert_ne!(a.stdout, c.stdout);
    std::fs::write(dir.path().join("bad.json"), r#"{"sead": 1}"#).unwrap();
    assert_eq!(code(&ordsize(&["gen", "cyclic", "--n", "5", "--config", "bad.json"], dir.path())), 2);
}

#[test]
fn defaulted_seed_is_logged() {
    let dir = tempfile::tempdir().unwrap();
    let o = ordsize(&["gen", "cyclic", "--n", "6"], dir.path());
    assert_eq!(code(&o), 0);
    assert!(String::from_utf8_lossy(&o.stderr).contains("using seed 0"));
}

#[test]
fn budget_exhaustion_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(code(&ordsize(&["gen", "random", "--r", "3", "--n", "30", "--seed", "1", "--out", "g"], dir.path())), 0);
    let o = ordsize(&["homog", "--input", "g/graph.hg", "--budget", "10"], dir.path());
    assert_eq!(code(&o), 3);
    // f = 56 asks for an 8-clique; 5 evaluations cannot settle that
    let o = ordsize(&["spectrum", "--input", "g/graph.hg", "--m", "8", "--f", "56", "--budget", "5", "--seed", "1"], dir.path());
    assert_eq!(code(&o), 3);
}

#[test]
fn manifest_digests_and_replay() {
    let dir = tempfile::tempdir().unwrap();
    let o = ordsize(&["verify", "blowup", "--instances", "40", "--seed", "3", "--format", "csv", "--out", "run"], dir.path());
    assert_eq!(code(&o), 0);
    let man = json_file(&dir.path().join("run/manifest.json"));
    let outputs = man["outputs"].as_object().unwrap();
    assert!(outputs.contains_key("report.json") && outputs.contains_key("report.csv"));
    for (name, digest) in outputs {
        let bytes = std::fs::read(dir.path().join("run").join(name)).unwrap();
        let hex: String = sha2_hex(&bytes);
        assert_eq!(digest.as_str().unwrap(), hex);
    }
    assert_eq!(man["settings"]["seed"], 3);
    let r = ordsize(&["replay", "--manifest", "run/manifest.json"], dir.path());
    assert_eq!(code(&r), 0, "{}", String::from_utf8_lossy(&r.stderr));
    assert_eq!(
        std::fs::read(dir.path().join("run/report.json")).unwrap(),
        std::fs::read(dir.path().join("run/replay/report.json")).unwrap()
    );
}

#[test]
fn replay_detects_tampering() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(code(&ordsize(&["values", "lemma33", "--m", "5..9", "--out", "run"], dir.path())), 0);
    std::fs::write(dir.path().join("run/report.json"), "{}").unwrap();
    let p = dir.path().join("run/manifest.json");
    let mut man = json_file(&p);
    man["outputs"]["report.json"] = Value::String(sha2_hex(b"{}"));
    std::fs::write(&p, serde_json::to_string(&man).unwrap()).unwrap();
    assert_eq!(code(&ordsize(&["replay", "--manifest", "run/manifest.json"], dir.path())), 1);
}

#[test]
fn thread_count_does_not_change_reports() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(code(&ordsize(&["gen", "cyclic", "--n", "24", "--seed", "5", "--out", "g"], dir.path())), 0);
    let mut reports = Vec::new();
    for t in ["1", "3", "8"] {
        let out = format!("s{t}");
        let o = ordsize(
            &["spectrum", "--input", "g/graph.hg", "--m", "7", "--samples", "5000", "--seed", "2", "--threads", t, "--out", &out],
            dir.path(),
        );
        assert_eq!(code(&o), 0);
        let o =
            ordsize(&["spectrum", "--input", "g/graph.hg", "--m", "5", "--threads", t, "--out", &format!("e{t}")], dir.path());
        assert_eq!(code(&o), 0);
        reports.push((
            std::fs::read(dir.path().join(&out).join("report.json")).unwrap(),
            std::fs::read(dir.path().join(format!("e{t}/report.json"))).unwrap(),
        ));
    }
    assert!(reports.windows(2).all(|w| w[0] == w[1]));
}

#[test]
fn cyclic_spectrum_respects_bound() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(code(&ordsize(&["gen", "cyclic", "--n", "14", "--seed", "8", "--out", "g"], dir.path())), 0);
    let o = ordsize(&["spectrum", "--input", "g/graph.hg", "--m", "6"], dir.path());
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    // m(m²−1)/24 for m = 6
    assert!(v["achieved"].as_array().unwrap().iter().all(|e| e.as_u64().unwrap() <= 8));
}

#[test]
fn identity_and_csv_output() {
    let dir = tempfile::tempdir().unwrap();
    let o = ordsize(&["values", "identity", "--params", "1,-1,1,0,-1", "--m", "1..9", "--format", "csv"], dir.path());
    assert_eq!(code(&o), 0);
    let text = String::from_utf8(o.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("m,general_params,checked,mismatches"));
    assert!(lines.all(|l| l.ends_with(",0")));
}

#[test]
fn violation_writes_witnesses() {
    // criterion 7 is a known failure of the literal statement
    let dir = tempfile::tempdir().unwrap();
    let o = ordsize(&["verify", "acceptance", "--only", "7", "--out", "acc"], dir.path());
    assert_eq!(code(&o), 1);
    let w = json_file(&dir.path().join("acc/witnesses.json"));
    assert_eq!(w[0]["id"], 7);
    assert!(json_file(&dir.path().join("acc/manifest.json"))["outputs"].get("witnesses.json").is_some());
}

#[test]
fn stepdown_and_structure_run() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(code(&ordsize(&["gen", "random", "--r", "4", "--n", "40", "--seed", "2", "--out", "g"], dir.path())), 0);
    let o = ordsize(&["stepdown", "--input", "g/graph.hg", "--l", "5", "--k", "2"], dir.path());
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["x"].as_array().unwrap().len(), 5);
    assert_eq!(v["chi"]["arity"], 2);

    assert_eq!(code(&ordsize(&["gen", "random", "--r", "3", "--n", "24", "--seed", "2", "--out", "h"], dir.path())), 0);
    let o = ordsize(&["structure", "--input", "h/graph.hg", "--m", "2", "--seed", "1"], dir.path());
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
}

fn sha2_hex(bytes: &[u8]) -> String {
    use sha2::Digest;
    sha2::Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}
