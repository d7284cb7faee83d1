use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn optcolor(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_optcolor")).args(args).output().expect("spawn optcolor")
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

const G1: &str = "%%MatrixMarket matrix coordinate pattern general\n2 4 5\n1 1\n1 2\n1 3\n2 3\n2 4\n";
const PATH4: &str = "%%MatrixMarket matrix coordinate pattern symmetric\n4 4 3\n2 1\n3 2\n4 3\n";
const ASYM: &str = "%%MatrixMarket matrix coordinate pattern general\n2 2 1\n1 2\n";

#[test]
fn color_then_verify_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let mtx = dir.path().join("g1.mtx");
    let col = dir.path().join("g1.col");
    let stats = dir.path().join("g1.json");
    fs::write(&mtx, G1).unwrap();
    let out = optcolor(&[
        "color", "--input", path(&mtx), "--algo", "V-V", "--threads", "1",
        "--write-coloring", path(&col), "--stats", path(&stats),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(fs::read_to_string(&col).unwrap(), "0\n1\n2\n0\n");
    let json: serde_json::Value = serde_json::from_str(&fs::read_to_string(&stats).unwrap()).unwrap();
    assert_eq!(json["num_colors"], 3);

    let out = optcolor(&["verify", "--input", path(&mtx), "--coloring", path(&col)]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn verify_reports_witness_and_length_mismatch() {
    let dir = tempfile::tempdir().unwrap();
    let mtx = dir.path().join("g1.mtx");
    let col = dir.path().join("bad.col");
    fs::write(&mtx, G1).unwrap();
    fs::write(&col, "0\n1\n2\n2\n").unwrap();
    let out = optcolor(&["verify", "--input", path(&mtx), "--coloring", path(&col)]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("vertices 2 and 3"), "{err}");

    fs::write(&col, "0\n1\n2\n").unwrap();
    let out = optcolor(&["verify", "--input", path(&mtx), "--coloring", path(&col)]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn d2gc_on_symmetric_and_asymmetric_input() {
    let dir = tempfile::tempdir().unwrap();
    let sym = dir.path().join("path.mtx");
    let asym = dir.path().join("asym.mtx");
    fs::write(&sym, PATH4).unwrap();
    fs::write(&asym, ASYM).unwrap();
    let out = optcolor(&["color", "--problem", "d2gc", "--input", path(&sym), "--algo", "N1-N2"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let out = optcolor(&["color", "--problem", "d2gc", "--input", path(&asym)]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn bad_input_and_usage_errors() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.mtx");
    fs::write(&bad, "%%MatrixMarket matrix coordinate pattern general\n2 2 1\n3 1\n").unwrap();
    let out = optcolor(&["color", "--input", path(&bad)]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("index out of range"));

    assert_eq!(optcolor(&["color", "--gen", "50,20,4,1", "--algo", "nope"]).status.code(), Some(1));
    assert_eq!(optcolor(&["color", "--input", "/no/such/file.mtx"]).status.code(), Some(1));
    assert_eq!(optcolor(&["frobnicate"]).status.code(), Some(1));
}

#[test]
fn generate_writes_loadable_matrices() {
    let dir = tempfile::tempdir().unwrap();
    let b = dir.path().join("b.mtx");
    let u = dir.path().join("u.mtx");
    assert_eq!(optcolor(&["generate", "--gen", "300,150,5,2", "--output", path(&b)]).status.code(), Some(0));
    assert_eq!(
        optcolor(&["generate", "--problem", "d2gc", "--gen", "200,200,4,2", "--output", path(&u)]).status.code(),
        Some(0)
    );
    let out = optcolor(&["color", "--input", path(&b), "--algo", "V-N2", "--threads", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let out = optcolor(&["color", "--problem", "d2gc", "--input", path(&u), "--balance", "b2"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn bench_writes_quoted_csv_and_summary() {
    let dir = tempfile::tempdir().unwrap();
    let data = dir.path().join("bench.csv");
    let summary = dir.path().join("summary.csv");
    let out = optcolor(&[
        "bench", "--gen", "500,250,5,1", "--gen", "400,200,4,2", "--algo", "V-V,N1-N2",
        "--balance", "none,b1", "--threads", "1,2", "--trials", "2",
        "--out", path(&data), "--summary", path(&summary),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));

    let mut rd = csv::Reader::from_path(&data).unwrap();
    let header: Vec<String> = rd.headers().unwrap().iter().map(String::from).collect();
    assert_eq!(
        header,
        ["graph", "preset", "balance", "order", "threads", "trial", "total_ms", "iters", "colors", "stddev_card", "per_iter_ms"]
    );
    assert_eq!(rd.records().count(), 2 * 2 * 2 * 2 * 2);
    assert!(fs::read_to_string(&data).unwrap().lines().nth(1).unwrap().starts_with('"'));

    let mut rd = csv::Reader::from_path(&summary).unwrap();
    let rows: Vec<csv::StringRecord> = rd.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 2 * 2 * 2);
}
