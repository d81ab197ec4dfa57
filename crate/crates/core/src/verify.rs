//! Exhaustive cross-checks between the closed forms, the brute-force
//! kernels and the tableau combinatorics. Each suite returns a report with
//! the number of cases checked and a description of every failure.

use std::collections::HashMap;
use std::fmt;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::cache::KernelStore;
use crate::classifiers::{
    grass_opposite_classify, grass_richardson_classify, grass_schubert_classify, flag_richardson_classify, FlagClassSets,
};
use crate::combinatorics::{BruhatInterval, Permutation, Subset};
use crate::error::Result;
use crate::ideal::{
    monomial_image, restrict_generators, Family, Kernel, PluckerMonomial, QuadraticBinomial, RestrictedGenerator, Verdict,
};
use crate::matching_field::{build_antidiagonal, build_block_diagonal, initial_column_bruteforce, initial_column_closed_form, MatchingField};
use crate::survey::{flag_mask, flag_pairs, gr_mask, gr_pairs, Convention};
use crate::tableaux::verify_gamma_bijection;

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub name: String,
    pub checked: usize,
    pub failures: Vec<String>,
    pub elapsed: Duration,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{status} {} ({} cases, {} failures, {:.2?})", self.name, self.checked, self.failures.len(), self.elapsed)
    }
}

/// Runs `body`, which reports `(checked, failures)`.
fn timed(name: &str, body: impl FnOnce() -> Result<(usize, Vec<String>)>) -> Result<SuiteReport> {
    let start = Instant::now();
    let (checked, failures) = body()?;
    Ok(SuiteReport { name: name.to_string(), checked, failures, elapsed: start.elapsed() })
}

pub const SUITES: &[&str] =
    &["initial-terms", "gr-theorems", "zero-ell-invariance", "flag-theorems", "gamma-bijection", "kernel-identity", "principality"];

/// Runs a suite by name with the given size bound.
pub fn run_suite(name: &str, store: &KernelStore, max_n: usize) -> Result<SuiteReport> {
    match name {
        "initial-terms" => initial_terms(max_n),
        "gr-theorems" => gr_theorems(store, max_n),
        "zero-ell-invariance" => zero_ell_invariance(store, max_n),
        "flag-theorems" => flag_theorems(store, max_n),
        "gamma-bijection" => gamma_bijection(store, max_n),
        "kernel-identity" => kernel_identity(store, max_n),
        "principality" => principality(store, max_n),
        _ => Err(crate::Error::Parse(format!("unknown suite {name:?}; known: {}", SUITES.join(", ")))),
    }
}

/// Default size bound per suite, matching the acceptance ranges.
pub fn default_max_n(name: &str) -> usize {
    match name {
        "initial-terms" => 8,
        "flag-theorems" => 5,
        _ => 6,
    }
}

/// Closed-form true orders against the `|J|!`-term minimization, for
/// `k <= 4`, `n <= max_n`, `0 <= ℓ <= n`; antidiagonal coherence likewise.
pub fn initial_terms(max_n: usize) -> Result<SuiteReport> {
    timed("initial-terms", || {
        let mut checked = 0;
        let mut failures = Vec::new();
        for n in 1..=max_n {
            for k in 1..=4.min(n) {
                for ell in 0..=n {
                    let m = build_block_diagonal(k, n, ell)?;
                    for j in Subset::all_of_size(k, n) {
                        checked += 1;
                        let oracle = initial_column_bruteforce(&m, &j)?;
                        let closed = initial_column_closed_form(ell, &j);
                        if oracle != [closed.clone()] {
                            failures.push(format!("k={k} n={n} ell={ell} J={j}: oracle {oracle:?}, closed form {closed}"));
                        }
                    }
                }
            }
            if n >= 2 {
                let anti = build_antidiagonal(n)?;
                let field = MatchingField::antidiagonal(n - 1, n)?;
                for j in Subset::all_proper(n) {
                    checked += 1;
                    let oracle = initial_column_bruteforce(&anti, &j)?;
                    if oracle != [field.true_order(&j)?] {
                        failures.push(format!("antidiagonal n={n} J={j}: oracle {oracle:?}"));
                    }
                }
            }
        }
        Ok((checked, failures))
    })
}

fn gr_kernel(store: &KernelStore, k: usize, n: usize, ell: usize) -> Result<std::sync::Arc<Kernel>> {
    let family = Family::Grassmannian { k, n };
    store.get(&Convention::BlockDiagonal { ell }.field(family)?, family)
}

/// Grassmannian sizes covered by the suites: `1 <= k <= 3`, `k < n <= max_n`.
fn gr_sizes(max_n: usize) -> Vec<(usize, usize)> {
    (2..=max_n).flat_map(|n| (1..=3.min(n - 1)).map(move |k| (k, n))).collect()
}

/// Closed-form Schubert, opposite Schubert and Richardson verdicts against
/// brute force for every `v <= w` and every `ℓ < n`; also, for nonzero
/// ideals, the splitting of monomial containment into the Schubert and
/// opposite parts.
pub fn gr_theorems(store: &KernelStore, max_n: usize) -> Result<SuiteReport> {
    timed("gr-theorems", || {
        let mut checked = 0;
        let mut failures = Vec::new();
        for (k, n) in gr_sizes(max_n) {
            let (bottom, top) = (Subset::initial(k, n), Subset::terminal(k, n));
            let pairs = gr_pairs(k, n, true);
            for ell in 0..n {
                let kernel = gr_kernel(store, k, n, ell)?;
                let brute = |v: &Subset, w: &Subset| -> Result<Verdict> { Ok(kernel.verdict(&gr_mask(&kernel, v, w)?)) };
                let results: Vec<Vec<String>> = pairs
                    .par_iter()
                    .map(|(v, w)| -> Result<Vec<String>> {
                        let mut bad = Vec::new();
                        let b = brute(v, w)?;
                        let c = grass_richardson_classify(v, w, ell)?;
                        if b != c {
                            bad.push(format!("Gr({k},{n}) ell={ell} v={v} w={w}: brute {b}, theorem {c}"));
                        }
                        let split = brute(v, &top)? == Verdict::NonToric || brute(&bottom, w)? == Verdict::NonToric;
                        // a zero ideal can sit inside a Schubert or opposite ideal with a monomial
                        if b != Verdict::Zero && (b == Verdict::NonToric) != split {
                            bad.push(format!("Gr({k},{n}) ell={ell} v={v} w={w}: monomial split fails"));
                        }
                        Ok(bad)
                    })
                    .collect::<Result<_>>()?;
                checked += pairs.len();
                failures.extend(results.into_iter().flatten());
                for u in Subset::all_of_size(k, n) {
                    checked += 2;
                    let (bs, cs) = (brute(&bottom, &u)?, grass_schubert_classify(&u, ell));
                    if bs != cs {
                        failures.push(format!("Gr({k},{n}) ell={ell} Schubert w={u}: brute {bs}, theorem {cs}"));
                    }
                    let (bo, co) = (brute(&u, &top)?, grass_opposite_classify(&u, ell));
                    if bo != co {
                        failures.push(format!("Gr({k},{n}) ell={ell} opposite v={u}: brute {bo}, theorem {co}"));
                    }
                }
            }
        }
        Ok((checked, failures))
    })
}

/// The zero verdict for Grassmannian Richardson ideals does not depend on `ℓ`.
pub fn zero_ell_invariance(store: &KernelStore, max_n: usize) -> Result<SuiteReport> {
    timed("zero-ell-invariance", || {
        let mut checked = 0;
        let mut failures = Vec::new();
        for (k, n) in gr_sizes(max_n) {
            let kernels: Vec<_> = (0..n).map(|ell| gr_kernel(store, k, n, ell)).collect::<Result<_>>()?;
            for (v, w) in gr_pairs(k, n, true) {
                let zeros: Vec<bool> =
                    kernels.iter().map(|kr| Ok(kr.verdict(&gr_mask(kr, &v, &w)?) == Verdict::Zero)).collect::<Result<_>>()?;
                checked += 1;
                if zeros.iter().any(|&z| z != zeros[0]) {
                    failures.push(format!("Gr({k},{n}) v={v} w={w}: zero at ell = {zeros:?}"));
                }
            }
        }
        Ok((checked, failures))
    })
}

/// Diagonal flag closed forms against brute force for every `v <= w`.
pub fn flag_theorems(store: &KernelStore, max_n: usize) -> Result<SuiteReport> {
    timed("flag-theorems", || {
        let mut checked = 0;
        let mut failures = Vec::new();
        let sets = FlagClassSets::new(max_n.max(2));
        for n in 2..=max_n {
            let family = Family::Flag { n };
            let kernel = store.get(&Convention::BlockDiagonal { ell: 0 }.field(family)?, family)?;
            let (id, w0) = (Permutation::identity(n), Permutation::longest(n));
            let pairs = flag_pairs(n, true);
            let results: Vec<Option<String>> = pairs
                .par_iter()
                .map(|(v, w)| -> Result<Option<String>> {
                    let b = kernel.verdict(&flag_mask(&kernel, v, w)?);
                    let c = match flag_richardson_classify(v, w) {
                        Ok(c) => c,
                        Err(e) => return Ok(Some(format!("Flag_{n} v={v} w={w}: {e}"))),
                    };
                    Ok((b != c).then(|| format!("Flag_{n} v={v} w={w}: brute {b}, theorem {c}")))
                })
                .collect::<Result<_>>()?;
            checked += pairs.len();
            failures.extend(results.into_iter().flatten());
            for u in Permutation::all(n) {
                checked += 2;
                let (bs, cs) = (kernel.verdict(&flag_mask(&kernel, &id, &u)?), sets.schubert(&u)?);
                if bs != cs {
                    failures.push(format!("Flag_{n} Schubert w={u}: brute {bs}, theorem {cs}"));
                }
                let (bo, co) = (kernel.verdict(&flag_mask(&kernel, &u, &w0)?), sets.opposite(&u)?);
                if bo != co {
                    failures.push(format!("Flag_{n} opposite v={u}: brute {bo}, theorem {co}"));
                }
            }
        }
        Ok((checked, failures))
    })
}

/// For monomial-free Grassmannian Richardson ideals: the degree-2
/// standard-monomial count at `ℓ` equals the count at `ℓ = 0`, which equals the
/// number of bounded semi-standard tableaux, and `Γ_ℓ` is a bijection onto
/// the image classes.
pub fn gamma_bijection(store: &KernelStore, max_n: usize) -> Result<SuiteReport> {
    timed("gamma-bijection", || {
        let mut checked = 0;
        let mut failures = Vec::new();
        for (k, n) in gr_sizes(max_n) {
            let kernels: Vec<_> = (0..n).map(|ell| gr_kernel(store, k, n, ell)).collect::<Result<_>>()?;
            let pairs = gr_pairs(k, n, true);
            let results: Vec<(usize, Vec<String>)> = pairs
                .par_iter()
                .map(|(v, w)| -> Result<(usize, Vec<String>)> {
                    let mut bad = Vec::new();
                    let mut count = 0;
                    let base_mask = gr_mask(&kernels[0], v, w)?;
                    let base = kernels[0].standard_monomial_count_deg2(&base_mask);
                    for (ell, kr) in kernels.iter().enumerate() {
                        let mask = gr_mask(kr, v, w)?;
                        if !kr.verdict(&mask).is_monomial_free() {
                            continue;
                        }
                        count += 1;
                        let here = kr.standard_monomial_count_deg2(&mask);
                        if here != base {
                            bad.push(format!("Gr({k},{n}) ell={ell} v={v} w={w}: {here} standard monomials, {base} at ell=0"));
                        }
                        if ell == 0 {
                            let ssyt = crate::tableaux::enumerate_two_column_ssyt(v, w)?.len();
                            if ssyt != base {
                                bad.push(format!("Gr({k},{n}) v={v} w={w}: {ssyt} tableaux, {base} standard monomials"));
                            }
                            continue;
                        }
                        let r = verify_gamma_bijection(v, w, ell)?;
                        if !(r.injective && r.surjective && r.ssyt_count == r.standard_count && r.standard_count == here) {
                            bad.push(format!("Gr({k},{n}) ell={ell} v={v} w={w}: {r:?}"));
                        }
                    }
                    Ok((count, bad))
                })
                .collect::<Result<_>>()?;
            for (c, bad) in results {
                checked += c;
                failures.extend(bad);
            }
        }
        Ok((checked, failures))
    })
}

/// The degree-2 kernel of the restricted monomial map, computed directly by
/// grouping the images of monomials in surviving variables.
pub fn restricted_collision_kernel(field: &MatchingField, surviving: &[Subset]) -> Result<Vec<QuadraticBinomial>> {
    type Image = Vec<(usize, usize)>;
    let mut groups: HashMap<Image, Vec<(PluckerMonomial, i8)>> = HashMap::new();
    for (a, x) in surviving.iter().enumerate() {
        for y in &surviving[a..] {
            let m = PluckerMonomial::new(vec![x.clone(), y.clone()]);
            let (image, sign) = monomial_image(field, &m)?;
            groups.entry(image).or_default().push((m, sign));
        }
    }
    let mut out = Vec::new();
    for members in groups.values() {
        for (i, (m, s)) in members.iter().enumerate() {
            for (m2, s2) in &members[i + 1..] {
                out.push(QuadraticBinomial::new(m.clone(), m2.clone(), s * s2));
            }
        }
    }
    out.sort();
    Ok(out)
}

/// For every toric verdict, the restricted generators are exactly the
/// binomials of the restricted map's kernel. Grassmannian under every `ℓ`, and
/// the diagonal flag variety.
pub fn kernel_identity(store: &KernelStore, max_n: usize) -> Result<SuiteReport> {
    timed("kernel-identity", || {
        let mut checked = 0;
        let mut failures = Vec::new();
        let mut cases: Vec<(Family, Convention)> = Vec::new();
        for (k, n) in gr_sizes(max_n) {
            cases.extend((0..n).map(|ell| (Family::Grassmannian { k, n }, Convention::BlockDiagonal { ell })));
        }
        for n in 2..=max_n.min(5) {
            cases.push((Family::Flag { n }, Convention::BlockDiagonal { ell: 0 }));
        }
        for (family, convention) in cases {
            let field = convention.field(family)?;
            let kernel = store.get(&field, family)?;
            let binomials = kernel.binomials();
            let intervals: Vec<BruhatInterval> = match family {
                Family::Grassmannian { k, n } => gr_pairs(k, n, true)
                    .iter()
                    .map(|(v, w)| BruhatInterval::grassmannian(v, w))
                    .collect::<Result<_>>()?,
                Family::Flag { n } => {
                    flag_pairs(n, true).iter().map(|(v, w)| BruhatInterval::flag(v, w)).collect::<Result<_>>()?
                }
            };
            let results: Vec<Option<String>> = intervals
                .par_iter()
                .map(|interval| -> Result<Option<String>> {
                    let sets = interval.split(kernel.variables());
                    let generators = restrict_generators(&binomials, &sets.vanishing);
                    if generators.is_empty() || generators.iter().any(|g| matches!(g, RestrictedGenerator::Monomial(_))) {
                        return Ok(None);
                    }
                    let mut restricted: Vec<QuadraticBinomial> = generators
                        .into_iter()
                        .map(|g| match g {
                            RestrictedGenerator::Binomial(b) => b,
                            RestrictedGenerator::Monomial(_) => unreachable!(),
                        })
                        .collect();
                    restricted.sort();
                    let direct = restricted_collision_kernel(&field, &sets.surviving)?;
                    Ok(Some(if restricted == direct {
                        String::new()
                    } else {
                        format!("{family} {} surviving {:?}: generators differ from the restricted kernel", convention.name(), sets.surviving)
                    }))
                })
                .collect::<Result<_>>()?;
            for r in results.into_iter().flatten() {
                checked += 1;
                if !r.is_empty() {
                    failures.push(r);
                }
            }
        }
        Ok((checked, failures))
    })
}

/// For `v ∈ A_{1B}^op`, the restricted opposite Schubert ideal is generated
/// by the single binomial `P_{n-1} P_{n-2,n} - P_{n-2} P_{n-1,n}`.
pub fn principality(store: &KernelStore, max_n: usize) -> Result<SuiteReport> {
    timed("principality", || {
        let mut checked = 0;
        let mut failures = Vec::new();
        let sets = FlagClassSets::new(max_n.max(2));
        for n in 3..=max_n {
            let family = Family::Flag { n };
            let kernel = store.get(&Convention::BlockDiagonal { ell: 0 }.field(family)?, family)?;
            let sub = |e: Vec<usize>| Subset::new(e, n);
            let expected = QuadraticBinomial::new(
                PluckerMonomial::new(vec![sub(vec![n - 1])?, sub(vec![n - 2, n])?]),
                PluckerMonomial::new(vec![sub(vec![n - 2])?, sub(vec![n - 1, n])?]),
                1,
            );
            let w0 = Permutation::longest(n);
            let before = checked;
            for v in Permutation::all(n) {
                if !sets.in_a1b_op(&v)? {
                    continue;
                }
                checked += 1;
                let mask = flag_mask(&kernel, &v, &w0)?;
                let generators = kernel.restrict(&mask);
                let binomials = kernel.surviving_binomials(&mask);
                let only_binomials = generators.iter().all(|g| matches!(g, RestrictedGenerator::Binomial(_)));
                if !(only_binomials && binomials == [expected.clone()]) {
                    let shown: Vec<String> = generators.iter().map(ToString::to_string).collect();
                    failures.push(format!("Flag_{n} v={v}: restricted generators {shown:?}"));
                }
            }
            if checked == before {
                failures.push(format!("Flag_{n}: A_1B^op is empty"));
            }
        }
        Ok((checked, failures))
    })
}
