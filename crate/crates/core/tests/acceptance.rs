//! Acceptance criteria: reproduces the published tables and lists exactly and
//! runs the exhaustive theorem checks. Prints one PASS/FAIL line per
//! criterion and exits nonzero if any fails.
//!
//! Criterion 2 (the `n = 6` rows of the flag table) runs by default;
//! set `RICHDEGEN_SKIP_LARGE=1` to skip it.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use richdegen_core::cache::KernelStore;
use richdegen_core::ideal::Verdict;
use richdegen_core::survey::{flag_pair_list, flag_table_row, gr_table_row, Convention, GrSweep};
use richdegen_core::verify;

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome { passed, detail: detail.into() }
}

const TABLE1: &[(usize, usize, (usize, usize, usize))] = &[
    (3, 0, (4, 4, 5)),
    (3, 1, (4, 4, 5)),
    (3, 2, (1, 6, 6)),
    (4, 0, (39, 20, 130)),
    (4, 1, (38, 20, 131)),
    (4, 2, (28, 23, 138)),
    (4, 3, (22, 24, 143)),
    (5, 0, (343, 114, 3204)),
    (5, 1, (329, 114, 3218)),
    (5, 2, (269, 125, 3267)),
    (5, 3, (228, 125, 3308)),
    (5, 4, (255, 133, 3274)),
];

const TABLE1_N6: &[(usize, usize, (usize, usize, usize))] = &[
    (6, 0, (3066, 750, 93871)),
    (6, 1, (2907, 750, 94030)),
    (6, 2, (2490, 796, 94401)),
    (6, 3, (2180, 803, 94704)),
    (6, 4, (2318, 818, 94551)),
    (6, 5, (2598, 851, 94238)),
];

/// `(k, n, richardson toric triples, opposite toric pairs)`.
const TABLE2: &[(usize, usize, usize, usize)] = &[(2, 4, 10, 6), (2, 5, 49, 17), (3, 5, 71, 23), (2, 6, 151, 34), (3, 6, 902, 74)];

const FLAG3_TORIC: &[(&str, &str)] = &[("123", "312"), ("123", "321"), ("213", "312"), ("213", "321")];
const FLAG3_NONTORIC: &[(&str, &str)] = &[("123", "231"), ("132", "231"), ("132", "312"), ("132", "321"), ("213", "231")];
const FLAG3_ZERO: &[(&str, &str)] = &[("123", "132"), ("123", "213"), ("231", "321"), ("312", "321")];

const FLAG4_TORIC: &[(&str, &str)] = &[
    ("1234", "1423"), ("1234", "1432"), ("1234", "3124"), ("1234", "3214"), ("1234", "4123"),
    ("1234", "4132"), ("1234", "4213"), ("1234", "4312"), ("1234", "4321"), ("1324", "1423"),
    ("1324", "1432"), ("2134", "3124"), ("2134", "3214"), ("2134", "4123"), ("2134", "4132"),
    ("2134", "4213"), ("2134", "4312"), ("2134", "4321"), ("2314", "2413"), ("2314", "4213"),
    ("2314", "4312"), ("2314", "4321"), ("2341", "4231"), ("2341", "4321"), ("3124", "4123"),
    ("3124", "4132"), ("3124", "4213"), ("3124", "4312"), ("3124", "4321"), ("3142", "4132"),
    ("3214", "4213"), ("3214", "4312"), ("3214", "4321"), ("3241", "4231"), ("3241", "4321"),
    ("4123", "4312"), ("4123", "4321"), ("4213", "4312"), ("4213", "4321"),
];

const FLAG4_ZERO: &[(&str, &str)] = &[
    ("1234", "1243"), ("1234", "1324"), ("1234", "2134"), ("1234", "2143"), ("1243", "2143"),
    ("1342", "1432"), ("1423", "1432"), ("2134", "2143"), ("2314", "3214"), ("2341", "2431"),
    ("2341", "3241"), ("3124", "3214"), ("3412", "3421"), ("3412", "4312"), ("3421", "4321"),
    ("4123", "4132"), ("4123", "4213"), ("4231", "4321"), ("4312", "4321"),
];

fn to_commas(p: &str) -> String {
    p.chars().map(String::from).collect::<Vec<_>>().join(",")
}

fn expected_set(pairs: &[(&str, &str)]) -> BTreeSet<(String, String)> {
    pairs.iter().map(|(v, w)| (to_commas(v), to_commas(w))).collect()
}

fn table1_rows(store: &KernelStore, rows: &[(usize, usize, (usize, usize, usize))]) -> Outcome {
    let mut bad = Vec::new();
    for &(n, ell, want) in rows {
        match flag_table_row(store, n, Convention::BlockDiagonal { ell }, None) {
            Ok(c) if c.as_triple() == want => {}
            Ok(c) => bad.push(format!("n={n} ell={ell}: got {:?}, want {want:?}", c.as_triple())),
            Err(e) => bad.push(format!("n={n} ell={ell}: {e}")),
        }
    }
    let detail = if bad.is_empty() { format!("{} rows exact", rows.len()) } else { bad.join("; ") };
    outcome(bad.is_empty(), detail)
}

fn criterion_1(store: &KernelStore) -> Outcome {
    table1_rows(store, TABLE1)
}

fn criterion_2(store: &KernelStore) -> Outcome {
    table1_rows(store, TABLE1_N6)
}

fn criterion_3(store: &KernelStore) -> Outcome {
    let mut bad = Vec::new();
    for &(k, n, rich, opp) in TABLE2 {
        match gr_table_row(store, k, n, &GrSweep::standard(n)) {
            Ok(r) if (r.richardson_toric, r.opposite_toric) == (rich, opp) => {}
            Ok(r) => bad.push(format!("Gr({k},{n}): got ({}, {}), want ({rich}, {opp})", r.richardson_toric, r.opposite_toric)),
            Err(e) => bad.push(format!("Gr({k},{n}): {e}")),
        }
    }
    let detail = if bad.is_empty() { "5 Richardson and 5 opposite counts exact".to_string() } else { bad.join("; ") };
    outcome(bad.is_empty(), detail)
}

fn listed(store: &KernelStore, n: usize, verdict: Verdict) -> BTreeSet<(String, String)> {
    flag_pair_list(store, n, Convention::Antidiagonal, Some(verdict))
        .expect("antidiagonal sweep")
        .into_iter()
        .map(|r| (r.v, r.w))
        .collect()
}

fn criterion_4(store: &KernelStore) -> Outcome {
    let checks = [
        ("Flag_3 toric", 3, Verdict::Toric, FLAG3_TORIC),
        ("Flag_3 nontoric", 3, Verdict::NonToric, FLAG3_NONTORIC),
        ("Flag_3 zero", 3, Verdict::Zero, FLAG3_ZERO),
        ("Flag_4 toric", 4, Verdict::Toric, FLAG4_TORIC),
        ("Flag_4 zero", 4, Verdict::Zero, FLAG4_ZERO),
    ];
    let mut bad = Vec::new();
    for (name, n, verdict, table) in checks {
        let got = listed(store, n, verdict);
        let want = expected_set(table);
        if got != want {
            let extra: Vec<_> = got.difference(&want).collect();
            let missing: Vec<_> = want.difference(&got).collect();
            bad.push(format!("{name}: computed {} vs listed {}; extra {extra:?}, missing {missing:?}", got.len(), want.len()));
        }
    }
    let detail = if bad.is_empty() { "5 pair sets equal".to_string() } else { bad.join("; ") };
    outcome(bad.is_empty(), detail)
}

fn suites(store: &KernelStore, names: &[(&str, usize)]) -> Outcome {
    let mut lines = Vec::new();
    let mut passed = true;
    for &(name, max_n) in names {
        match verify::run_suite(name, store, max_n) {
            Ok(r) => {
                passed &= r.passed() && r.checked > 0;
                let mut line = format!("{name}: {} cases, {} failures", r.checked, r.failures.len());
                if let Some(first) = r.failures.first() {
                    line.push_str(&format!(" (first: {first})"));
                }
                lines.push(line);
            }
            Err(e) => {
                passed = false;
                lines.push(format!("{name}: {e}"));
            }
        }
    }
    outcome(passed, lines.join("; "))
}

fn main() -> ExitCode {
    let store = KernelStore::in_memory();
    let skip_large = std::env::var_os("RICHDEGEN_SKIP_LARGE").is_some_and(|v| !v.is_empty() && v != "0");
    type Check = fn(&KernelStore) -> Outcome;
    let criteria: Vec<(usize, &str, Option<Duration>, Check)> = vec![
        (1, "flag table, n <= 5", Some(Duration::from_secs(120)), criterion_1),
        (2, "flag table, n = 6", Some(Duration::from_secs(600)), criterion_2),
        (3, "Grassmannian toric counts", Some(Duration::from_secs(120)), criterion_3),
        (4, "antidiagonal pair lists", None, criterion_4),
        (5, "closed forms vs brute force", None, |s| suites(s, &[("gr-theorems", 6), ("flag-theorems", 5)])),
        (6, "zero verdict independent of ell", None, |s| suites(s, &[("zero-ell-invariance", 6)])),
        (7, "initial-term closed forms", None, |s| suites(s, &[("initial-terms", 8)])),
        (8, "standard monomials and gamma bijection", None, |s| suites(s, &[("gamma-bijection", 6)])),
        (9, "restricted generators equal restricted kernel", None, |s| suites(s, &[("kernel-identity", 6)])),
        (10, "principal opposite Schubert ideals", None, |s| suites(s, &[("principality", 6)])),
    ];
    let mut failed = 0;
    for (id, name, budget, check) in criteria {
        if id == 2 && skip_large {
            println!("SKIP criterion {id:>2} {name}: RICHDEGEN_SKIP_LARGE is set");
            continue;
        }
        let start = Instant::now();
        let mut result = check(&store);
        let elapsed = start.elapsed();
        if let Some(limit) = budget {
            if elapsed > limit {
                result.passed = false;
                result.detail.push_str(&format!("; over the {limit:?} budget"));
            }
        }
        if !result.passed {
            failed += 1;
        }
        let status = if result.passed { "PASS" } else { "FAIL" };
        println!("{status} criterion {id:>2} {name} [{elapsed:.2?}]: {}", result.detail);
    }
    if failed == 0 {
        println!("all acceptance criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("{failed} acceptance criteria failed");
        ExitCode::FAILURE
    }
}
