use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn snmarkov(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_snmarkov")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn analyze_writes_tables() {
    let dir = tempfile::tempdir().unwrap();
    let o = snmarkov(&["analyze", "apa", "--exact", "--out", path(dir.path())]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let lengths = fs::read_to_string(dir.path().join("projection_lengths.csv")).unwrap();
    assert!(lengths.starts_with("partition,length,rounded,exact\n"));
    assert!(lengths.contains("\"3,2\",459.1535,459,"));
    let first = fs::read_to_string(dir.path().join("first_order.csv")).unwrap();
    assert_eq!(first.lines().nth(1).unwrap(), "1,18.3,26.4,22.8,17.4,14.8");
    let second = fs::read_to_string(dir.path().join("second_order.csv")).unwrap();
    assert_eq!(second.lines().count(), 11);

    let report: serde_json::Value = serde_json::from_str(&fs::read_to_string(dir.path().join("report.json")).unwrap()).unwrap();
    assert_eq!(report["provenance"]["total"], 5738);
    assert_eq!(report["provenance"]["tool"], "snmarkov");
    assert!(report["projection_lengths"][0]["exact"].is_string());
}

#[test]
fn analyze_json_without_exact_omits_rationals() {
    let o = snmarkov(&["analyze", "apa", "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["projection_lengths"][0].get("exact").is_none());
    assert_eq!(v["second_order"]["pairs"][0], "1-2");
}

#[test]
fn analyze_custom_csv_and_bad_input() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("small.csv");
    fs::write(&good, "ranking,count\n123,4\n321,2\n").unwrap();
    let o = snmarkov(&["analyze", path(&good)]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(!stdout(&o).contains("second order"));

    let bad = dir.path().join("bad.csv");
    fs::write(&bad, "ranking,count\n123,4\n12,2\n").unwrap();
    let o = snmarkov(&["analyze", path(&bad)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));

    let o = snmarkov(&["analyze", "no-such-dataset"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn basis_round_trip_and_verify() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("b4.json");
    let o = snmarkov(&["basis", "4", "--verify", "-o", path(&file)]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(&file).unwrap()).unwrap();
    assert_eq!(v["schema"], "sn-markov-basis/1");
    assert_eq!(v["moves"].as_array().unwrap().len(), 178);
    assert_eq!(v["verification"]["connected"], true);
    assert_eq!(v["classes"].as_array().unwrap().len(), 3);
}

#[test]
fn truncated_basis_fails_verification() {
    // S_3 has no degree-2 moves, so the all-ones fiber is disconnected.
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("b.json");
    let o = snmarkov(&["basis", "3", "--max-degree", "2", "--verify-to", "3", "-o", path(&file)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("[[1, 1, 1], [1, 1, 1], [1, 1, 1]]"));
    let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(&file).unwrap()).unwrap();
    assert_eq!(v["verification"]["connected"], false);
    assert!(v["verification"]["certificate"].is_array());

    let o = snmarkov(&["basis", "3", "--verify-to", "3", "--no-norm-pruning"]);
    assert!(o.status.success());
}

#[test]
fn rejects_bad_degree_and_unknown_schema() {
    assert_eq!(snmarkov(&["basis", "9"]).status.code(), Some(1));

    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("b3.json");
    assert!(snmarkov(&["basis", "3", "-o", path(&file)]).status.success());
    let text = fs::read_to_string(&file).unwrap().replace("sn-markov-basis/1", "sn-markov-basis/99");
    fs::write(&file, text).unwrap();
    let data = dir.path().join("d3.csv");
    fs::write(&data, "ranking,count\n123,1\n").unwrap();
    let o = snmarkov(&["sample", path(&data), "--basis", path(&file), "--samples", "2", "--steps", "5"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("schema"));
}

#[test]
fn sample_rejects_mismatched_basis() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("b3.json");
    assert!(snmarkov(&["basis", "3", "-o", path(&file)]).status.success());
    let o = snmarkov(&["sample", "apa", "--basis", path(&file), "--samples", "2", "--steps", "5"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("n = 3"));
}

#[test]
fn sampling_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let basis = dir.path().join("b5.json");
    assert!(snmarkov(&["basis", "5", "--classes-only", "-o", path(&basis)]).status.success());
    let run = |name: &str, seed: &str| {
        let out = dir.path().join(name);
        let o = snmarkov(&[
            "sample", "apa", "--basis", path(&basis), "--steps", "200", "--samples", "10", "--seed", seed, "--out",
            path(&out),
        ]);
        assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
        (fs::read(out.join("samples.jsonl")).unwrap(), stdout(&o))
    };
    let a = run("a", "3");
    let b = run("b", "3");
    let c = run("c", "4");
    assert_eq!(a, b);
    assert_ne!(a.0, c.0);
    let lines = String::from_utf8(a.0).unwrap();
    assert_eq!(lines.lines().count(), 10);
    let first: serde_json::Value = serde_json::from_str(lines.lines().next().unwrap()).unwrap();
    assert_eq!(first["step"], 200);
    let hist = fs::read_to_string(dir.path().join("a/histogram.csv")).unwrap();
    assert!(hist.starts_with("bin_low,bin_high,count\n"));
    let total: u64 = hist.lines().skip(1).map(|l| l.rsplit(',').next().unwrap().parse::<u64>().unwrap()).sum();
    assert_eq!(total, 10);
}

#[test]
fn bootstrap_is_seeded() {
    let a = snmarkov(&["bootstrap", "apa", "--samples", "5", "--seed", "1"]);
    let b = snmarkov(&["bootstrap", "apa", "--samples", "5", "--seed", "1"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(stdout(&a).lines().count(), 8);
}

#[test]
fn d2_values() {
    let got: Vec<String> = (4..=7).map(|n| stdout(&snmarkov(&["d2", &n.to_string()])).trim().to_string()).collect();
    assert_eq!(got, ["1", "2", "7", "12"]);
}
