//! `richdegen`: classify restricted matching-field ideals of Grassmannian and
//! flag Richardson varieties, reproduce the survey tables, and run the
//! verification suites.

use std::io::{IsTerminal, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use richdegen_core::cache::KernelStore;
use richdegen_core::classifiers::{flag_richardson_classify, grass_richardson_classify};
use richdegen_core::combinatorics::{bruhat_leq_perms, bruhat_leq_subsets, Permutation, Subset};
use richdegen_core::ideal::{Classification, Family, Verdict};
use richdegen_core::matching_field::{initial_column_bruteforce, FieldKind, MatchingField, WeightMatrix};
use richdegen_core::survey::{
    check_flag_size, flag_mask, flag_pairs, flag_pair_list, flag_table_row, gr_mask, gr_pair_list, gr_table_row, ClassificationRecord,
    Convention, GrSweep,
};
use richdegen_core::verify::{default_max_n, run_suite, SUITES};
use richdegen_core::Error;

/// Largest flag size the sweeps accept; `n = 6` additionally needs `--large`.
const MAX_FLAG_N: usize = 6;

#[derive(Parser)]
#[command(name = "richdegen", version, about = "Toric degenerations of Richardson varieties via matching fields")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Worker threads (default: available parallelism). Output does not depend on it.
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Bruteforce,
    Theorem,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ConventionArg {
    Blockdiag,
    Antidiagonal,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VerdictArg {
    Zero,
    Toric,
    Nontoric,
}

impl From<VerdictArg> for Verdict {
    fn from(v: VerdictArg) -> Self {
        match v {
            VerdictArg::Zero => Verdict::Zero,
            VerdictArg::Toric => Verdict::Toric,
            VerdictArg::Nontoric => Verdict::NonToric,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Matching-field utilities.
    #[command(subcommand)]
    Mf(MfCommand),
    /// Classify a single Richardson ideal.
    #[command(subcommand)]
    Classify(ClassifyCommand),
    /// Verdict counts over all pairs v < w.
    #[command(subcommand)]
    Table(TableCommand),
    /// Every pair v < w with its verdict and witness.
    #[command(subcommand)]
    List(ListCommand),
    /// Run verification suites (closed forms against brute force and friends).
    Verify(VerifyArgs),
}

#[derive(Subcommand)]
enum MfCommand {
    /// Initial term (true order and sign) of one Plücker minor.
    InitTerm(InitTermArgs),
    /// The weight matrix and the induced Plücker weights.
    Weights(WeightsArgs),
}

#[derive(Args)]
struct FieldArgs {
    #[arg(long, default_value_t = 0)]
    ell: usize,
    #[arg(long, value_enum, default_value_t = ConventionArg::Blockdiag)]
    convention: ConventionArg,
    /// Custom weight matrix: a "rows cols" header followed by the rows.
    #[arg(long, value_name = "FILE", conflicts_with = "convention")]
    matrix: Option<PathBuf>,
}

#[derive(Args)]
struct InitTermArgs {
    #[arg(long)]
    k: usize,
    #[arg(long)]
    n: usize,
    /// The subset J, as digits ("145") or a comma list ("1,4,5").
    #[arg(long)]
    subset: String,
    #[command(flatten)]
    field: FieldArgs,
    /// `bruteforce` minimizes over all |J|! terms; `theorem` uses the closed form.
    #[arg(long, value_enum, default_value_t = Method::Both)]
    method: Method,
}

#[derive(Args)]
struct WeightsArgs {
    #[arg(long)]
    k: usize,
    #[arg(long)]
    n: usize,
    #[command(flatten)]
    field: FieldArgs,
}

#[derive(Subcommand)]
enum ClassifyCommand {
    /// Gr(k,n) Richardson variety X_w^v, v and w k-subsets.
    Gr {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        v: String,
        #[arg(long)]
        w: String,
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long, value_enum, default_value_t = Method::Bruteforce)]
        method: Method,
    },
    /// Flag_n Richardson variety X_w^v, v and w permutations.
    Flag {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        v: String,
        #[arg(long)]
        w: String,
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long, value_enum, default_value_t = Method::Bruteforce)]
        method: Method,
    },
}

#[derive(Args)]
struct EllSelection {
    /// A single ell.
    #[arg(long, conflicts_with = "ell_range")]
    ell: Option<usize>,
    /// Inclusive range "A:B" of ell values.
    #[arg(long, value_name = "A:B")]
    ell_range: Option<String>,
}

#[derive(Subcommand)]
enum TableCommand {
    /// Flag_n (toric, zero, nontoric) per ell; all ell in 0..n-1 by default.
    Flag {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        ells: EllSelection,
        #[arg(long, value_enum, default_value_t = ConventionArg::Blockdiag)]
        convention: ConventionArg,
        /// Allow n = 6 (about 97k pairs per row).
        #[arg(long)]
        large: bool,
    },
    /// Gr(k,n) toric triple counts (ell, v, w) and opposite Schubert toric pairs (v, ell).
    Gr {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        ells: EllSelection,
        /// Count v = w pairs too.
        #[arg(long)]
        include_equal_pairs: bool,
    },
}

#[derive(Args)]
struct ListArgs {
    #[command(flatten)]
    field: FieldArgs,
    #[arg(long, value_enum)]
    verdict: Option<VerdictArg>,
}

#[derive(Subcommand)]
enum ListCommand {
    Flag {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        list: ListArgs,
        #[arg(long)]
        large: bool,
    },
    Gr {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        list: ListArgs,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// Suites to run (repeatable); all by default.
    #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(SUITES))]
    suite: Vec<String>,
    /// Size bound; each suite has its own default.
    #[arg(long)]
    max_n: Option<usize>,
}

enum Failure {
    Invalid(String),
    Mismatch(String),
    Failed(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Invalid(_) => 2,
            Failure::Mismatch(_) => 3,
            Failure::Failed(_) => 1,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Invalid(m) | Failure::Mismatch(m) | Failure::Failed(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Cache(_) | Error::Inconsistent(_) => Failure::Failed(e.to_string()),
            _ => Failure::Invalid(e.to_string()),
        }
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

fn invalid<T>(msg: impl Into<String>) -> CliResult<T> {
    Err(Failure::Invalid(msg.into()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            eprintln!("error: --jobs must be at least 1");
            return ExitCode::from(2);
        }
        rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global().expect("thread pool is configured once");
    }
    let store = KernelStore::from_env();
    let mut out = String::new();
    let result = match &cli.command {
        Command::Mf(MfCommand::InitTerm(a)) => cmd_init_term(a, cli.format, &mut out),
        Command::Mf(MfCommand::Weights(a)) => cmd_weights(a, cli.format, &mut out),
        Command::Classify(c) => cmd_classify(c, &store, cli.format, &mut out),
        Command::Table(t) => cmd_table(t, &store, cli.format, &mut out),
        Command::List(l) => cmd_list(l, &store, cli.format, &mut out),
        Command::Verify(a) => cmd_verify(a, &store, cli.format, &mut out),
    };
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(out.as_bytes());
    let _ = stdout.flush();
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

fn read_matrix(path: &PathBuf) -> CliResult<WeightMatrix> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))?;
    Ok(WeightMatrix::parse(&text)?)
}

fn convention(arg: ConventionArg, ell: usize) -> Convention {
    match arg {
        ConventionArg::Blockdiag => Convention::BlockDiagonal { ell },
        ConventionArg::Antidiagonal => Convention::Antidiagonal,
    }
}

/// Field for `family` plus the convention it is reported under. Custom
/// matrices are reported under the block-diagonal label with no `ell`.
fn resolve_field(args: &FieldArgs, family: Family) -> CliResult<(MatchingField, Option<Convention>)> {
    match &args.matrix {
        Some(path) => {
            let m = read_matrix(path)?;
            if m.cols() != family.n() || m.rows() < family.max_size() {
                return invalid(format!("matrix is {}×{}, {family} needs at least {}×{}", m.rows(), m.cols(), family.max_size(), family.n()));
            }
            Ok((MatchingField::custom(m), None))
        }
        None => {
            let c = convention(args.convention, args.ell);
            Ok((c.field(family)?, Some(c)))
        }
    }
}

fn json_line(out: &mut String, value: &Value) {
    out.push_str(&serde_json::to_string_pretty(value).expect("json values serialize"));
    out.push('\n');
}

fn cmd_init_term(a: &InitTermArgs, format: Format, out: &mut String) -> CliResult<()> {
    let family = Family::Grassmannian { k: a.k, n: a.n };
    family.validate()?;
    let j = Subset::parse(&a.subset, a.n)?;
    if j.len() > a.k || j.is_empty() {
        return invalid(format!("subset {j} must have between 1 and {} elements", a.k));
    }
    let (field, _) = resolve_field(&a.field, family)?;
    let brute = initial_column_bruteforce(field.matrix(), &j)?;
    let theorem = match field.kind() {
        FieldKind::Custom => None,
        _ => Some(field.true_order(&j)?),
    };
    let (column, mismatch) = match a.method {
        Method::Theorem => match theorem {
            Some(t) => (t, None),
            None => return invalid("the closed form covers block-diagonal and antidiagonal fields only"),
        },
        Method::Bruteforce => match brute.as_slice() {
            [only] => (only.clone(), None),
            _ => return Err(Failure::Failed(format!("{} minimal terms tie at {j}: not coherent", brute.len()))),
        },
        Method::Both => {
            if brute.len() != 1 {
                return Err(Failure::Failed(format!("{} minimal terms tie at {j}: not coherent", brute.len())));
            }
            let b = brute[0].clone();
            match theorem {
                Some(t) if t != b => (b.clone(), Some(format!("brute force gives {b} (sign {}), closed form gives {t} (sign {})", b.sign, t.sign))),
                _ => (b, None),
            }
        }
    };
    let weight: i64 = column.entries.iter().enumerate().map(|(row, &c)| field.matrix().get(row + 1, c)).sum();
    match format {
        Format::Text => out.push_str(&format!("subset {j}: column {column}, sign {:+}, weight {weight}\n", column.sign)),
        Format::Json => json_line(out, &json!({"subset": j.to_string(), "column": column.entries, "sign": column.sign, "weight": weight})),
        Format::Csv => out.push_str(&format!("subset,column,sign,weight\n{j},\"{}\",{},{weight}\n", column.entries.iter().map(ToString::to_string).collect::<Vec<_>>().join(","), column.sign)),
    }
    match mismatch {
        Some(m) => Err(Failure::Mismatch(m)),
        None => Ok(()),
    }
}

fn cmd_weights(a: &WeightsArgs, format: Format, out: &mut String) -> CliResult<()> {
    let family = Family::Grassmannian { k: a.k, n: a.n };
    family.validate()?;
    let (field, _) = resolve_field(&a.field, family)?;
    let weights = Subset::all_of_size(a.k, a.n)
        .into_iter()
        .map(|j| field.weight(&j).map(|w| (j, w)))
        .collect::<richdegen_core::Result<Vec<_>>>()?;
    let matrix = field.matrix().truncate_rows(a.k);
    match format {
        Format::Text => {
            out.push_str(&format!("matrix ({})\n", field.label()));
            for row in matrix.to_rows() {
                out.push_str(&row.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "));
                out.push('\n');
            }
            out.push_str("weights\n");
            for (j, w) in &weights {
                out.push_str(&format!("P[{j}] {w}\n"));
            }
        }
        Format::Json => json_line(
            out,
            &json!({
                "field": field.label(),
                "matrix": matrix.to_rows(),
                "weights": weights.iter().map(|(j, w)| json!({"subset": j.to_string(), "weight": w})).collect::<Vec<_>>(),
            }),
        ),
        Format::Csv => {
            out.push_str("subset,weight\n");
            for (j, w) in &weights {
                let j = j.to_string();
                let j = if j.contains(',') { format!("\"{j}\"") } else { j };
                out.push_str(&format!("{j},{w}\n"));
            }
        }
    }
    Ok(())
}

/// The field agrees with the diagonal one on every variable of `family`.
fn is_diagonal(field: &MatchingField, family: Family) -> CliResult<bool> {
    for j in family.variables() {
        if field.true_order(&j)?.entries != j.elements() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn cmd_classify(c: &ClassifyCommand, store: &KernelStore, format: Format, out: &mut String) -> CliResult<()> {
    let (family, v_text, w_text, args, method) = match c {
        ClassifyCommand::Gr { k, n, v, w, field, method } => (Family::Grassmannian { k: *k, n: *n }, v, w, field, *method),
        ClassifyCommand::Flag { n, v, w, field, method } => (Family::Flag { n: *n }, v, w, field, *method),
    };
    family.validate()?;
    let (field, conv) = resolve_field(args, family)?;

    let (brute, theorem, v_str, w_str) = match family {
        Family::Grassmannian { k, n } => {
            let (v, w) = (Subset::parse(v_text, n)?, Subset::parse(w_text, n)?);
            if v.len() != k || w.len() != k {
                return invalid(format!("v and w must be {k}-subsets of [{n}]"));
            }
            if !bruhat_leq_subsets(&v, &w)? {
                return Err(Error::EmptyRichardson { v: v.to_string(), w: w.to_string() }.into());
            }
            let brute = if method == Method::Theorem {
                None
            } else {
                let kernel = store.get(&field, family)?;
                Some(kernel.classify(&gr_mask(&kernel, &v, &w)?))
            };
            let theorem = if method == Method::Bruteforce {
                None
            } else {
                let ell = match field.kind() {
                    FieldKind::BlockDiagonal { ell } => *ell,
                    _ => return invalid("the Grassmannian closed forms cover block-diagonal fields only"),
                };
                Some(grass_richardson_classify(&v, &w, ell)?)
            };
            (brute, theorem, v.to_string(), w.to_string())
        }
        Family::Flag { n } => {
            let (v, w) = (Permutation::parse(v_text)?, Permutation::parse(w_text)?);
            if v.n() != n || w.n() != n {
                return invalid(format!("v and w must be permutations of [{n}]"));
            }
            if !bruhat_leq_perms(&v, &w)? {
                return Err(Error::EmptyRichardson { v: v.to_string(), w: w.to_string() }.into());
            }
            let brute = if method == Method::Theorem {
                None
            } else {
                let kernel = store.get(&field, family)?;
                Some(kernel.classify(&flag_mask(&kernel, &v, &w)?))
            };
            let theorem = if method == Method::Bruteforce {
                None
            } else {
                if !is_diagonal(&field, family)? {
                    return invalid("the flag closed forms cover the diagonal field only (e.g. ell=0)");
                }
                Some(flag_richardson_classify(&v, &w)?)
            };
            (brute, theorem, v.to_string(), w.to_string())
        }
    };

    let classification = brute.clone().unwrap_or_else(|| Classification::bare(theorem.expect("one method ran")));
    let conv = conv.unwrap_or(Convention::BlockDiagonal { ell: args.ell });
    let mut record = ClassificationRecord::new(family, conv, v_str, w_str, &classification);
    if args.matrix.is_some() {
        record.ell = None;
    }
    emit_records(std::slice::from_ref(&record), format, out);
    if format == Format::Text {
        if let (Some(b), Some(t)) = (&brute, theorem) {
            out.push_str(&format!("bruteforce: {}, theorem: {t}\n", b.verdict));
        }
    }

    match (brute, theorem) {
        (Some(b), Some(t)) if b.verdict != t => Err(Failure::Mismatch(format!("brute force says {}, closed form says {t}", b.verdict))),
        _ => Ok(()),
    }
}

fn emit_records(records: &[ClassificationRecord], format: Format, out: &mut String) {
    match format {
        Format::Text => {
            for r in records {
                let mut line = format!("v={} w={} verdict {}", r.v, r.w, r.verdict);
                if let Some(w) = &r.witness {
                    line.push_str(&format!(" witness {w}"));
                }
                out.push_str(&line);
                out.push('\n');
            }
        }
        Format::Json => {
            let value = if records.len() == 1 {
                serde_json::to_value(&records[0])
            } else {
                serde_json::to_value(records)
            };
            json_line(out, &value.expect("records serialize"));
        }
        Format::Csv => {
            out.push_str(ClassificationRecord::CSV_HEADER);
            out.push('\n');
            for r in records {
                out.push_str(&r.to_csv());
                out.push('\n');
            }
        }
    }
}

fn parse_ells(sel: &EllSelection, n: usize) -> CliResult<Vec<usize>> {
    let ells = match (&sel.ell, &sel.ell_range) {
        (Some(ell), _) => vec![*ell],
        (None, Some(range)) => {
            let (a, b) = range.split_once(':').ok_or_else(|| Failure::Invalid(format!("--ell-range wants A:B, got {range:?}")))?;
            let parse = |s: &str| s.trim().parse::<usize>().map_err(|e| Failure::Invalid(format!("--ell-range {range:?}: {e}")));
            let (a, b) = (parse(a)?, parse(b)?);
            if a > b {
                return invalid(format!("--ell-range {range:?} is empty"));
            }
            (a..=b).collect()
        }
        (None, None) => (0..n).collect(),
    };
    if let Some(&bad) = ells.iter().find(|&&l| l > n) {
        return invalid(format!("ell = {bad} exceeds n = {n}"));
    }
    Ok(ells)
}

fn check_large(n: usize, large: bool) -> CliResult<()> {
    check_flag_size(n, MAX_FLAG_N)?;
    if n == MAX_FLAG_N && !large {
        return invalid(format!("n = {n} sweeps about 97k pairs per row; pass --large to run it"));
    }
    Ok(())
}

/// Reports `done/total` on stderr until `stop` is set.
fn progress_loop(label: &str, done: &AtomicUsize, total: usize, stop: &AtomicBool) {
    let tty = std::io::stderr().is_terminal();
    let mut last = usize::MAX;
    while !stop.load(Ordering::Relaxed) {
        let d = done.load(Ordering::Relaxed);
        if d != last {
            if tty {
                eprint!("\r{label}: {d}/{total} pairs");
            } else {
                eprintln!("{label}: {d}/{total} pairs");
            }
            last = d;
        }
        std::thread::sleep(Duration::from_millis(if tty { 200 } else { 2000 }));
    }
    if tty {
        eprintln!("\r{label}: {total}/{total} pairs");
    }
}

fn cmd_table(t: &TableCommand, store: &KernelStore, format: Format, out: &mut String) -> CliResult<()> {
    match t {
        TableCommand::Flag { n, ells, convention: conv, large } => {
            let n = *n;
            check_large(n, *large)?;
            let conventions: Vec<Convention> = match conv {
                ConventionArg::Antidiagonal => vec![Convention::Antidiagonal],
                ConventionArg::Blockdiag => parse_ells(ells, n)?.into_iter().map(|ell| Convention::BlockDiagonal { ell }).collect(),
            };
            let total = flag_pairs(n, false).len();
            let mut rows = Vec::new();
            for c in conventions {
                let done = AtomicUsize::new(0);
                let stop = AtomicBool::new(false);
                let label = match c.ell() {
                    Some(ell) => format!("n={n} ell={ell}"),
                    None => format!("n={n} antidiagonal"),
                };
                let counts = std::thread::scope(|s| {
                    if *large {
                        s.spawn(|| progress_loop(&label, &done, total, &stop));
                    }
                    let r = flag_table_row(store, n, c, Some(&done));
                    stop.store(true, Ordering::Relaxed);
                    r
                })?;
                rows.push((c, counts));
            }
            match format {
                Format::Text => {
                    out.push_str("n  ell  toric  zero  nontoric\n");
                    for (c, k) in &rows {
                        let ell = c.ell().map_or("anti".to_string(), |l| l.to_string());
                        out.push_str(&format!("{n}  {ell}  {}  {}  {}\n", k.toric, k.zero, k.nontoric));
                    }
                }
                Format::Json => json_line(
                    out,
                    &Value::Array(
                        rows.iter()
                            .map(|(c, k)| json!({"n": n, "ell": c.ell(), "convention": c.name(), "toric": k.toric, "zero": k.zero, "nontoric": k.nontoric}))
                            .collect(),
                    ),
                ),
                Format::Csv => {
                    out.push_str("n,ell,convention,toric,zero,nontoric\n");
                    for (c, k) in &rows {
                        out.push_str(&format!("{n},{},{},{},{},{}\n", c.ell().map_or(String::new(), |l| l.to_string()), c.name(), k.toric, k.zero, k.nontoric));
                    }
                }
            }
        }
        TableCommand::Gr { k, n, ells, include_equal_pairs } => {
            let family = Family::Grassmannian { k: *k, n: *n };
            family.validate()?;
            let sweep = GrSweep { ells: parse_ells(ells, *n)?, include_equal: *include_equal_pairs };
            let row = gr_table_row(store, *k, *n, &sweep)?;
            match format {
                Format::Text => {
                    out.push_str("k  n  richardson_toric  opposite_toric\n");
                    out.push_str(&format!("{}  {}  {}  {}\n", row.k, row.n, row.richardson_toric, row.opposite_toric));
                }
                Format::Json => json_line(
                    out,
                    &json!({"k": row.k, "n": row.n, "ells": sweep.ells, "include_equal_pairs": sweep.include_equal,
                            "richardson_toric": row.richardson_toric, "opposite_toric": row.opposite_toric}),
                ),
                Format::Csv => {
                    out.push_str("k,n,richardson_toric,opposite_toric\n");
                    out.push_str(&format!("{},{},{},{}\n", row.k, row.n, row.richardson_toric, row.opposite_toric));
                }
            }
        }
    }
    Ok(())
}

fn cmd_list(l: &ListCommand, store: &KernelStore, format: Format, out: &mut String) -> CliResult<()> {
    let records = match l {
        ListCommand::Flag { n, list, large } => {
            check_large(*n, *large)?;
            if list.field.matrix.is_some() {
                return invalid("list takes --convention/--ell, not --matrix");
            }
            flag_pair_list(store, *n, convention(list.field.convention, list.field.ell), list.verdict.map(Verdict::from))?
        }
        ListCommand::Gr { k, n, list } => {
            Family::Grassmannian { k: *k, n: *n }.validate()?;
            if list.field.matrix.is_some() {
                return invalid("list takes --convention/--ell, not --matrix");
            }
            gr_pair_list(store, *k, *n, convention(list.field.convention, list.field.ell), list.verdict.map(Verdict::from))?
        }
    };
    match format {
        // Always an array here, even for a single record.
        Format::Json => json_line(out, &serde_json::to_value(&records).expect("records serialize")),
        _ => emit_records(&records, format, out),
    }
    Ok(())
}

fn cmd_verify(a: &VerifyArgs, store: &KernelStore, format: Format, out: &mut String) -> CliResult<()> {
    let names: Vec<&str> = if a.suite.is_empty() { SUITES.to_vec() } else { a.suite.iter().map(String::as_str).collect() };
    let mut reports = Vec::new();
    for name in names {
        let max_n = a.max_n.unwrap_or_else(|| default_max_n(name));
        let report = run_suite(name, store, max_n)?;
        eprintln!("{report}");
        reports.push((max_n, report));
    }
    match format {
        Format::Text => {
            for (_, r) in &reports {
                out.push_str(&format!("{} {}: {} cases, {} failures\n", if r.passed() { "PASS" } else { "FAIL" }, r.name, r.checked, r.failures.len()));
                for f in r.failures.iter().take(5) {
                    out.push_str(&format!("  {f}\n"));
                }
                if r.failures.len() > 5 {
                    out.push_str(&format!("  ... and {} more\n", r.failures.len() - 5));
                }
            }
        }
        Format::Json => json_line(
            out,
            &Value::Array(
                reports
                    .iter()
                    .map(|(max_n, r)| json!({"suite": r.name, "max_n": max_n, "passed": r.passed(), "checked": r.checked, "failures": r.failures}))
                    .collect(),
            ),
        ),
        Format::Csv => {
            out.push_str("suite,max_n,passed,checked,failures\n");
            for (max_n, r) in &reports {
                out.push_str(&format!("{},{max_n},{},{},{}\n", r.name, r.passed(), r.checked, r.failures.len()));
            }
        }
    }
    let failed: Vec<&str> = reports.iter().filter(|(_, r)| !r.passed()).map(|(_, r)| r.name.as_str()).collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::Failed(format!("suites failed: {}", failed.join(", "))))
    }
}
