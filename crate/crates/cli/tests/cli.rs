use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_richdegen")).args(args).env_remove("RICHDEGEN_CACHE_DIR").output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?} failed: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    serde_json::from_str(&stdout(&full)).unwrap()
}

#[test]
fn classify_flag_toric() {
    let r = json(&["classify", "flag", "--n", "3", "--ell", "0", "--v", "1,3,2", "--w", "2,3,1"]);
    assert_eq!(r["verdict"], "toric");
}

#[test]
fn classify_gr_nontoric_with_witness() {
    let r = json(&["classify", "gr", "--k", "3", "--n", "5", "--ell", "3", "--v", "135", "--w", "245"]);
    assert_eq!(r["verdict"], "nontoric");
    assert_eq!(r["witness"], "P[135]*P[245]");
    assert_eq!(r["k"], 3);
}

#[test]
fn classify_flag_zero_both_methods_agree() {
    let r = json(&["classify", "flag", "--n", "3", "--ell", "0", "--v", "1,2,3", "--w", "1,3,2", "--method", "both"]);
    assert_eq!(r["verdict"], "zero");
    assert!(r["witness"].is_null());
}

#[test]
fn csv_header_is_fixed() {
    let out = stdout(&["--format", "csv", "classify", "flag", "--n", "3", "--v", "123", "--w", "132"]);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("family,k,n,ell,convention,v,w,verdict,witness"));
    assert_eq!(lines.next(), Some("flag,,3,0,,\"1,2,3\",\"1,3,2\",zero,"));
}

#[test]
fn invalid_input_exits_2() {
    assert_eq!(run(&["classify", "flag", "--n", "3", "--v", "1,1,2", "--w", "3,2,1"]).status.code(), Some(2));
    assert_eq!(run(&["classify", "gr", "--k", "2", "--n", "4", "--v", "34", "--w", "12"]).status.code(), Some(2));
    assert_eq!(run(&["table", "flag", "--n", "6"]).status.code(), Some(2));
    assert_eq!(run(&["classify", "flag", "--n", "3", "--ell", "1", "--v", "123", "--w", "321", "--method", "theorem"]).status.code(), Some(2));
}

#[test]
fn method_mismatch_exits_3() {
    // Brute force finds P[24]*P[35] - P[25]*P[34] surviving with no monomial;
    // the Richardson closed form calls this pair nontoric.
    let out = run(&["classify", "gr", "--k", "2", "--n", "5", "--ell", "1", "--v", "23", "--w", "35", "--method", "both"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn table_flag_rows() {
    let rows = json(&["table", "flag", "--n", "4", "--ell", "0"]);
    assert_eq!((rows[0]["toric"].as_u64(), rows[0]["zero"].as_u64(), rows[0]["nontoric"].as_u64()), (Some(39), Some(20), Some(130)));
    let rows = json(&["table", "flag", "--n", "3", "--ell", "2"]);
    assert_eq!((rows[0]["toric"].as_u64(), rows[0]["zero"].as_u64(), rows[0]["nontoric"].as_u64()), (Some(1), Some(6), Some(6)));
}

#[test]
fn table_gr_small_rows() {
    for (k, n, rich, opp) in [("2", "4", 10, 6), ("2", "5", 49, 17)] {
        let row = json(&["table", "gr", "--k", k, "--n", n]);
        assert_eq!((row["richardson_toric"].as_u64(), row["opposite_toric"].as_u64()), (Some(rich), Some(opp)), "Gr({k},{n})");
    }
}

fn pairs(records: &Value) -> Vec<(String, String)> {
    records.as_array().unwrap().iter().map(|r| (r["v"].as_str().unwrap().to_string(), r["w"].as_str().unwrap().to_string())).collect()
}

fn expect_pairs(list: &[(&str, &str)]) -> Vec<(String, String)> {
    list.iter().map(|(v, w)| (v.to_string(), w.to_string())).collect()
}

#[test]
fn list_antidiagonal_flag3() {
    let toric = json(&["list", "flag", "--n", "3", "--convention", "antidiagonal", "--verdict", "toric"]);
    assert_eq!(pairs(&toric), expect_pairs(&[("1,2,3", "3,1,2"), ("1,2,3", "3,2,1"), ("2,1,3", "3,1,2"), ("2,1,3", "3,2,1")]));
    let zero = json(&["list", "flag", "--n", "3", "--convention", "antidiagonal", "--verdict", "zero"]);
    assert_eq!(pairs(&zero), expect_pairs(&[("1,2,3", "1,3,2"), ("1,2,3", "2,1,3"), ("2,3,1", "3,2,1"), ("3,1,2", "3,2,1")]));
}

#[test]
fn list_diagonal_flag3_toric() {
    let toric = json(&["list", "flag", "--n", "3", "--ell", "0", "--verdict", "toric"]);
    assert_eq!(pairs(&toric), expect_pairs(&[("1,2,3", "2,3,1"), ("1,2,3", "3,2,1"), ("1,3,2", "2,3,1"), ("1,3,2", "3,2,1")]));
}

#[test]
fn output_independent_of_jobs() {
    let a = stdout(&["--jobs", "1", "--format", "csv", "list", "flag", "--n", "4"]);
    let b = stdout(&["--jobs", "3", "--format", "csv", "list", "flag", "--n", "4"]);
    assert_eq!(a, b);
}

#[test]
fn init_term_example() {
    let r = json(&["mf", "init-term", "--k", "3", "--n", "5", "--ell", "3", "--subset", "145"]);
    assert_eq!(r["column"], serde_json::json!([4, 1, 5]));
    assert_eq!(r["sign"], -1);
}

#[test]
fn weights_example() {
    let r = json(&["mf", "weights", "--k", "3", "--n", "5", "--ell", "3"]);
    let w: Vec<i64> = r["weights"].as_array().unwrap().iter().map(|e| e["weight"].as_i64().unwrap()).collect();
    assert_eq!(w, vec![8, 6, 4, 5, 3, 5, 5, 3, 4, 3]);
    assert_eq!(r["matrix"], serde_json::json!([[0, 0, 0, 0, 0], [3, 2, 1, 5, 4], [10, 8, 6, 4, 2]]));
}

#[test]
fn custom_matrix_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("m.txt");
    std::fs::write(&path, "3 5\n0 0 0 0 0\n3 2 1 5 4\n10 8 6 4 2\n").unwrap();
    let p = path.to_str().unwrap();
    let r = json(&["mf", "init-term", "--k", "3", "--n", "5", "--matrix", p, "--subset", "145", "--method", "bruteforce"]);
    assert_eq!(r["column"], serde_json::json!([4, 1, 5]));
    let r = json(&["classify", "gr", "--k", "3", "--n", "5", "--matrix", p, "--v", "135", "--w", "245"]);
    assert_eq!(r["verdict"], "nontoric");
}

#[test]
fn verify_small_suites_pass() {
    let out = run(&["verify", "--suite", "initial-terms", "--suite", "flag-theorems", "--max-n", "4"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("PASS initial-terms") && text.contains("PASS flag-theorems"), "{text}");
}

#[test]
fn cache_dir_is_populated() {
    let dir = tempfile::tempdir().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_richdegen"))
        .args(["table", "flag", "--n", "3", "--ell", "1"])
        .env("RICHDEGEN_CACHE_DIR", dir.path())
        .output()
        .unwrap();
    assert!(out.status.success());
    let files: Vec<_> = std::fs::read_dir(dir.path()).unwrap().collect();
    assert_eq!(files.len(), 1);
    let bytes = std::fs::read(files[0].as_ref().unwrap().path()).unwrap();
    assert_eq!(&bytes[..4], b"RDK1");
}
