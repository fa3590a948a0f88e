use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn bichain(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bichain"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json on stdout")
}

#[test]
fn generated_z_grid_is_bichain() {
    let dir = tempfile::tempdir().unwrap();
    let gen = bichain(&["generate", "z", "--n", "7", "--k", "6", "-o", "z.json"], dir.path());
    assert!(gen.status.success());
    let rec = bichain(&["recognize", "bichain", "z.json", "--json"], dir.path());
    assert_eq!(rec.status.code(), Some(0));
    assert_eq!(stdout_json(&rec)["verdict"], true);
}

#[test]
fn rejection_exits_one_with_witness() {
    let dir = tempfile::tempdir().unwrap();
    // C6 is a forbidden bichain graph
    let c6 = r#"{"n":6,"edges":[[0,1],[1,2],[2,3],[3,4],[4,5],[0,5]]}"#;
    std::fs::write(dir.path().join("c6.json"), c6).unwrap();
    let rec = bichain(&["--json", "recognize", "bichain", "c6.json"], dir.path());
    assert_eq!(rec.status.code(), Some(1));
    let v = stdout_json(&rec);
    assert_eq!(v["verdict"], false);
    assert_eq!(v["witness"]["kind"], "forbidden");
}

#[test]
fn missing_file_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let out = bichain(&["width", "rank", "missing.json"], dir.path());
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
}

#[test]
fn usage_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(bichain(&["frobnicate"], dir.path()).status.code(), Some(2));
    assert_eq!(bichain(&["verify", "no-such-suite"], dir.path()).status.code(), Some(2));
    std::fs::write(dir.path().join("bad.json"), "{\"n\": 2, \"edges\": [[0, 5]]}").unwrap();
    assert_eq!(bichain(&["decompose", "bad.json"], dir.path()).status.code(), Some(2));
}

#[test]
fn pivot_lemma_suite_passes() {
    let dir = tempfile::tempdir().unwrap();
    let out = bichain(&["verify", "pivot-lemma", "--max-n", "5", "--json"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["suite"], "pivot-lemma");
    let checks = v["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 10);
    assert!(checks.iter().all(|c| c["pass"] == true && c["millis"].is_number() && c["name"].is_string()));
}

#[test]
fn transformed_graphs_round_trip_as_json() {
    let dir = tempfile::tempdir().unwrap();
    assert!(bichain(&["transform", "x2y", "--n", "2", "-o", "p.json"], dir.path()).status.success());
    assert!(bichain(&["generate", "y", "--n", "4", "-o", "y.json"], dir.path()).status.success());
    let read = |f: &str| -> Value { serde_json::from_str(&std::fs::read_to_string(dir.path().join(f)).unwrap()).unwrap() };
    assert_eq!(read("p.json")["edges"], read("y.json")["edges"]);

    let lc = bichain(&["transform", "lc", "p.json", "--vertex", "0", "-o", "q.json"], dir.path());
    assert!(lc.status.success());
    let back = bichain(&["transform", "lc", "q.json", "--vertex", "0"], dir.path());
    assert_eq!(stdout_json(&back)["edges"], read("p.json")["edges"]);
}

#[test]
fn letters_and_decomposition() {
    let dir = tempfile::tempdir().unwrap();
    let enc = bichain(&["letters", "encode-z", "--n", "3", "--k", "2"], dir.path());
    std::fs::write(dir.path().join("sys.json"), &enc.stdout).unwrap();
    let dec = bichain(&["letters", "decode", "sys.json"], dir.path());
    assert!(dec.status.success());
    assert_eq!(stdout_json(&dec)["n"], 6);

    std::fs::write(dir.path().join("m.json"), r#"{"n":4,"edges":[[0,1],[2,3]]}"#).unwrap();
    let d = bichain(&["decompose", "m.json", "--json"], dir.path());
    assert_eq!(stdout_json(&d)["op"], "+");
}

#[test]
fn width_witness_is_written() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("p4.json"), r#"{"n":4,"edges":[[0,1],[1,2],[2,3]]}"#).unwrap();
    let out = bichain(&["width", "clique", "p4.json", "--max-k", "3", "--witness", "w.json"], dir.path());
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "3");
    assert!(dir.path().join("w.json").exists());
    let low = bichain(&["width", "clique", "p4.json", "--max-k", "2"], dir.path());
    assert_eq!(low.status.code(), Some(1));
}
