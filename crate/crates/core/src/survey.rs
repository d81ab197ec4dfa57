//! Batch classification over all comparable pairs of a family, as used by
//! the tables and pair lists.

use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;
use serde::Serialize;

use crate::cache::KernelStore;
use crate::combinatorics::{bruhat_leq_perms, bruhat_leq_subsets, BruhatInterval, Permutation, Subset};
use crate::error::{Error, Result};
use crate::ideal::{Classification, Family, Kernel, Verdict, VarMask};
use crate::matching_field::MatchingField;

/// Which matching field a sweep uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Convention {
    BlockDiagonal { ell: usize },
    Antidiagonal,
}

impl Convention {
    pub fn field(&self, family: Family) -> Result<MatchingField> {
        let n = family.n();
        match *self {
            Convention::BlockDiagonal { ell } => MatchingField::block_diagonal(family.max_size(), n, ell),
            Convention::Antidiagonal => MatchingField::antidiagonal(family.max_size(), n),
        }
    }

    pub fn ell(&self) -> Option<usize> {
        match *self {
            Convention::BlockDiagonal { ell } => Some(ell),
            Convention::Antidiagonal => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Convention::BlockDiagonal { .. } => "blockdiag",
            Convention::Antidiagonal => "antidiagonal",
        }
    }
}

/// Pairs `v <= w` (or `v < w`) in `S_n`, lexicographic on `(v, w)`.
pub fn flag_pairs(n: usize, include_equal: bool) -> Vec<(Permutation, Permutation)> {
    let all = Permutation::all(n);
    let mut out = Vec::new();
    for v in &all {
        for w in &all {
            if (include_equal || v != w) && bruhat_leq_perms(v, w).unwrap_or(false) {
                out.push((v.clone(), w.clone()));
            }
        }
    }
    out
}

/// Pairs `v <= w` (or `v < w`) of `k`-subsets of `[n]`, lexicographic on `(v, w)`.
pub fn gr_pairs(k: usize, n: usize, include_equal: bool) -> Vec<(Subset, Subset)> {
    let all = Subset::all_of_size(k, n);
    let mut out = Vec::new();
    for v in &all {
        for w in &all {
            if (include_equal || v != w) && bruhat_leq_subsets(v, w).unwrap_or(false) {
                out.push((v.clone(), w.clone()));
            }
        }
    }
    out
}

pub fn mask_for(kernel: &Kernel, interval: &BruhatInterval) -> VarMask {
    let mut mask = VarMask::empty(kernel.variables().len());
    for (i, s) in kernel.variables().iter().enumerate() {
        if interval.contains(s) {
            mask.insert(i);
        }
    }
    mask
}

pub fn flag_mask(kernel: &Kernel, v: &Permutation, w: &Permutation) -> Result<VarMask> {
    Ok(mask_for(kernel, &BruhatInterval::flag(v, w)?))
}

pub fn gr_mask(kernel: &Kernel, v: &Subset, w: &Subset) -> Result<VarMask> {
    Ok(mask_for(kernel, &BruhatInterval::grassmannian(v, w)?))
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Counts {
    pub toric: usize,
    pub zero: usize,
    pub nontoric: usize,
}

impl Counts {
    pub fn add(&mut self, v: Verdict) {
        match v {
            Verdict::Toric => self.toric += 1,
            Verdict::Zero => self.zero += 1,
            Verdict::NonToric => self.nontoric += 1,
        }
    }

    pub fn total(&self) -> usize {
        self.toric + self.zero + self.nontoric
    }

    pub fn as_triple(&self) -> (usize, usize, usize) {
        (self.toric, self.zero, self.nontoric)
    }
}

/// Brute-force counts of `Flag_n` Richardson verdicts over all `v < w`.
pub fn flag_table_row(store: &KernelStore, n: usize, convention: Convention, progress: Option<&AtomicUsize>) -> Result<Counts> {
    let family = Family::Flag { n };
    let kernel = store.get(&convention.field(family)?, family)?;
    let pairs = flag_pairs(n, false);
    let verdicts: Vec<Verdict> = pairs
        .par_iter()
        .map(|(v, w)| {
            let verdict = kernel.verdict(&flag_mask(&kernel, v, w)?);
            if let Some(p) = progress {
                p.fetch_add(1, Ordering::Relaxed);
            }
            Ok(verdict)
        })
        .collect::<Result<_>>()?;
    let mut counts = Counts::default();
    verdicts.into_iter().for_each(|v| counts.add(v));
    Ok(counts)
}

/// Sweep bounds for the Grassmannian toric counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrSweep {
    pub ells: Vec<usize>,
    pub include_equal: bool,
}

impl GrSweep {
    /// `ℓ ∈ {0, ..., n-1}` and strict pairs `v < w`.
    pub fn standard(n: usize) -> Self {
        GrSweep { ells: (0..n).collect(), include_equal: false }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GrTableRow {
    pub k: usize,
    pub n: usize,
    /// Triples `(ℓ, v, w)` with a toric Richardson ideal.
    pub richardson_toric: usize,
    /// Pairs `(v, ℓ)` with a toric opposite Schubert ideal.
    pub opposite_toric: usize,
}

pub fn gr_table_row(store: &KernelStore, k: usize, n: usize, sweep: &GrSweep) -> Result<GrTableRow> {
    let family = Family::Grassmannian { k, n };
    let pairs = gr_pairs(k, n, sweep.include_equal);
    let top = Subset::terminal(k, n);
    let mut richardson_toric = 0;
    let mut opposite_toric = 0;
    for &ell in &sweep.ells {
        let kernel = store.get(&Convention::BlockDiagonal { ell }.field(family)?, family)?;
        let toric = |v: &Subset, w: &Subset| -> Result<bool> { Ok(kernel.verdict(&gr_mask(&kernel, v, w)?) == Verdict::Toric) };
        richardson_toric += pairs
            .par_iter()
            .map(|(v, w)| toric(v, w).map(usize::from))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .sum::<usize>();
        for v in Subset::all_of_size(k, n) {
            if (sweep.include_equal || v != top) && toric(&v, &top)? {
                opposite_toric += 1;
            }
        }
    }
    Ok(GrTableRow { k, n, richardson_toric, opposite_toric })
}

/// One classified pair, in the shared export schema.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationRecord {
    pub family: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ell: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub convention: Option<&'static str>,
    pub v: String,
    pub w: String,
    pub verdict: Verdict,
    pub witness: Option<String>,
}

impl ClassificationRecord {
    pub fn new(family: Family, convention: Convention, v: String, w: String, c: &Classification) -> Self {
        let k = match family {
            Family::Grassmannian { k, .. } => Some(k),
            Family::Flag { .. } => None,
        };
        ClassificationRecord {
            family: family.label(),
            k,
            n: family.n(),
            ell: convention.ell(),
            convention: matches!(convention, Convention::Antidiagonal).then_some("antidiagonal"),
            v,
            w,
            verdict: c.verdict,
            witness: c.witness.as_ref().map(ToString::to_string),
        }
    }

    pub const CSV_HEADER: &'static str = "family,k,n,ell,convention,v,w,verdict,witness";

    pub fn to_csv(&self) -> String {
        let quote = |s: &str| if s.contains(',') || s.contains('"') { format!("\"{}\"", s.replace('"', "\"\"")) } else { s.to_string() };
        [
            self.family.to_string(),
            self.k.map_or(String::new(), |k| k.to_string()),
            self.n.to_string(),
            self.ell.map_or(String::new(), |l| l.to_string()),
            self.convention.unwrap_or("").to_string(),
            quote(&self.v),
            quote(&self.w),
            self.verdict.to_string(),
            quote(self.witness.as_deref().unwrap_or("")),
        ]
        .join(",")
    }
}

/// Brute-force classification of every flag pair `v < w`, optionally
/// filtered by verdict, in pair order.
pub fn flag_pair_list(store: &KernelStore, n: usize, convention: Convention, filter: Option<Verdict>) -> Result<Vec<ClassificationRecord>> {
    let family = Family::Flag { n };
    let kernel = store.get(&convention.field(family)?, family)?;
    let records: Vec<Option<ClassificationRecord>> = flag_pairs(n, false)
        .par_iter()
        .map(|(v, w)| {
            let c = kernel.classify(&flag_mask(&kernel, v, w)?);
            Ok(filter.is_none_or(|f| f == c.verdict).then(|| ClassificationRecord::new(family, convention, v.to_string(), w.to_string(), &c)))
        })
        .collect::<Result<_>>()?;
    Ok(records.into_iter().flatten().collect())
}

/// Brute-force classification of every Grassmannian pair `v < w`.
pub fn gr_pair_list(store: &KernelStore, k: usize, n: usize, convention: Convention, filter: Option<Verdict>) -> Result<Vec<ClassificationRecord>> {
    let family = Family::Grassmannian { k, n };
    let kernel = store.get(&convention.field(family)?, family)?;
    let records: Vec<Option<ClassificationRecord>> = gr_pairs(k, n, false)
        .par_iter()
        .map(|(v, w)| {
            let c = kernel.classify(&gr_mask(&kernel, v, w)?);
            Ok(filter.is_none_or(|f| f == c.verdict).then(|| ClassificationRecord::new(family, convention, v.to_string(), w.to_string(), &c)))
        })
        .collect::<Result<_>>()?;
    Ok(records.into_iter().flatten().collect())
}

/// `n` for which `S_n` fits the lexicographic rank tables.
pub fn check_flag_size(n: usize, max: usize) -> Result<()> {
    if !(2..=max).contains(&n) {
        return Err(Error::OutOfRange(format!("flag sweeps support 2 <= n <= {max}, got {n}")));
    }
    Ok(())
}
