//! Weight matrices and the matching fields they induce.
//!
//! A weight matrix `M` assigns to each term `x_{1,j_σ(1)} ... x_{m,j_σ(m)}` of
//! the maximal minor on columns `J` the weight `Σ M(i, j_σ(i))`. The initial
//! term is the unique minimum-weight term; its column order is the *true
//! order* of `J`, and the parity of `σ` is the column's sign.

use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::combinatorics::Subset;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeightMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<i64>,
}

impl WeightMatrix {
    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.is_empty() || cols == 0 || rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Parse("weight matrix rows must be nonempty and of equal length".into()));
        }
        Ok(WeightMatrix { rows: rows.len(), cols, entries: rows.concat() })
    }

    /// Reads the text format: a header line `k n`, then `k` rows of `n` integers.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines.next().ok_or_else(|| Error::Parse("missing `k n` header".into()))?;
        let dims: Vec<usize> = header
            .split_whitespace()
            .map(|t| t.parse().map_err(|e| Error::Parse(format!("header {header:?}: {e}"))))
            .collect::<Result<_>>()?;
        let [k, n] = dims[..] else {
            return Err(Error::Parse(format!("header {header:?} must be `k n`")));
        };
        let rows: Vec<Vec<i64>> = lines
            .map(|l| {
                l.split_whitespace()
                    .map(|t| t.parse().map_err(|e| Error::Parse(format!("row {l:?}: {e}"))))
                    .collect::<Result<Vec<i64>>>()
            })
            .collect::<Result<_>>()?;
        if rows.len() != k || rows.iter().any(|r| r.len() != n) {
            return Err(Error::Parse(format!("expected {k} rows of {n} integers")));
        }
        Self::from_rows(rows)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// `M(i, j)`, 1-based.
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[(i - 1) * self.cols + (j - 1)]
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        self.entries.chunks(self.cols).map(<[i64]>::to_vec).collect()
    }

    /// Adds `c` to every entry of column `j`.
    pub fn shift_column(&self, j: usize, c: i64) -> WeightMatrix {
        let mut out = self.clone();
        for i in 0..self.rows {
            out.entries[i * self.cols + (j - 1)] += c;
        }
        out
    }

    /// Adds `c` to every entry of row `i`.
    pub fn shift_row(&self, i: usize, c: i64) -> WeightMatrix {
        let mut out = self.clone();
        for e in &mut out.entries[(i - 1) * self.cols..i * self.cols] {
            *e += c;
        }
        out
    }

    /// The first `k` rows.
    pub fn truncate_rows(&self, k: usize) -> WeightMatrix {
        WeightMatrix { rows: k, cols: self.cols, entries: self.entries[..k * self.cols].to_vec() }
    }
}

impl fmt::Display for WeightMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.rows, self.cols)?;
        for row in self.entries.chunks(self.cols) {
            writeln!(f, "{}", row.iter().join(" "))?;
        }
        Ok(())
    }
}

/// The `k × n` block diagonal weight matrix `M_ℓ`.
pub fn build_block_diagonal(k: usize, n: usize, ell: usize) -> Result<WeightMatrix> {
    if k == 0 || k > n {
        return Err(Error::OutOfRange(format!("k = {k} must lie in 1..={n}")));
    }
    if ell > n {
        return Err(Error::OutOfRange(format!("ell = {ell} must lie in 0..={n}")));
    }
    let (n64, l64) = (n as i64, ell as i64);
    let rows = (1..=k as i64)
        .map(|i| {
            (1..=n as i64)
                .map(|j| match i {
                    2 if j <= l64 => l64 - j + 1,
                    2 => n64 - j + l64 + 1,
                    _ => (i - 1) * (n64 - j + 1),
                })
                .collect()
        })
        .collect();
    WeightMatrix::from_rows(rows)
}

/// The `(n-1) × n` matrix with entries `C(n-i-j+2, 2)`, whose initial terms
/// are the antidiagonal terms of every minor.
pub fn build_antidiagonal(n: usize) -> Result<WeightMatrix> {
    if n < 2 {
        return Err(Error::OutOfRange(format!("antidiagonal matrix needs n >= 2, got {n}")));
    }
    let rows = (1..n as i64)
        .map(|i| {
            (1..=n as i64)
                .map(|j| {
                    let m = n as i64 - i - j + 2;
                    if m >= 2 {
                        m * (m - 1) / 2
                    } else {
                        0
                    }
                })
                .collect()
        })
        .collect();
    WeightMatrix::from_rows(rows)
}

/// A tableau column: the entries of a subset in the order chosen by the
/// matching field, with the sign of that ordering.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TrueOrderColumn {
    pub entries: Vec<usize>,
    pub sign: i8,
}

impl fmt::Display for TrueOrderColumn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.entries.iter().join(","))
    }
}

fn parity_sign(order: &[usize]) -> i8 {
    let inversions = order.iter().tuple_combinations().filter(|(a, b)| a > b).count();
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Every term of the minor on columns `J` (rows `1..|J|`) of minimal weight.
/// A single result certifies that `M` is coherent at `J`.
pub fn initial_column_bruteforce(m: &WeightMatrix, j: &Subset) -> Result<Vec<TrueOrderColumn>> {
    if j.len() > m.rows() || j.elements().last().is_some_and(|&x| x > m.cols()) {
        return Err(Error::OutOfRange(format!("subset {j} does not fit a {}×{} matrix", m.rows(), m.cols())));
    }
    let size = j.len();
    let mut best = i64::MAX;
    let mut argmin: Vec<Vec<usize>> = Vec::new();
    for sigma in (0..size).permutations(size) {
        let weight: i64 = sigma.iter().enumerate().map(|(row, &c)| m.get(row + 1, j.elements()[c])).sum();
        if weight < best {
            best = weight;
            argmin.clear();
        }
        if weight == best {
            argmin.push(sigma);
        }
    }
    Ok(argmin
        .into_iter()
        .map(|sigma| TrueOrderColumn {
            entries: sigma.iter().map(|&c| j.elements()[c]).collect(),
            sign: parity_sign(&sigma),
        })
        .collect())
}

/// True order under the block diagonal field `B_ℓ`: swap the first two
/// entries exactly when `J` has one element in `{1..ℓ}` and at least two elements.
pub fn initial_column_closed_form(ell: usize, j: &Subset) -> TrueOrderColumn {
    let mut entries = j.elements().to_vec();
    let low = entries.iter().filter(|&&x| x <= ell).count();
    if entries.len() >= 2 && low == 1 {
        entries.swap(0, 1);
        TrueOrderColumn { entries, sign: -1 }
    } else {
        TrueOrderColumn { entries, sign: 1 }
    }
}

/// Plücker weights `w_ℓ(P_J)` over all `k`-subsets in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PluckerWeightVector {
    pub entries: Vec<(Subset, i64)>,
}

impl PluckerWeightVector {
    pub fn weights(&self) -> Vec<i64> {
        self.entries.iter().map(|(_, w)| *w).collect()
    }
}

/// The induced weight of `P_J` under `M_ℓ`, by case on `|J ∩ {1..ℓ}|`.
pub fn block_diagonal_weight(n: usize, ell: usize, j: &Subset) -> i64 {
    let e = j.elements();
    let k = e.len();
    if k == 1 {
        return 0;
    }
    let (n, ell) = (n as i64, ell as i64);
    let tail: i64 = e.iter().enumerate().skip(2).map(|(i, &x)| i as i64 * (n + 1 - x as i64)).sum();
    let low = e.iter().filter(|&&x| x as i64 <= ell).count();
    let second_row = match low {
        0 => n + ell + 1 - e[1] as i64,
        1 => ell + 1 - e[0] as i64,
        _ => ell + 1 - e[1] as i64,
    };
    second_row + tail
}

pub fn plucker_weight_vector(k: usize, n: usize, ell: usize) -> Result<PluckerWeightVector> {
    if k == 0 || k > n || ell > n {
        return Err(Error::OutOfRange(format!("need 1 <= k <= n and ell <= n (k={k}, n={n}, ell={ell})")));
    }
    Ok(PluckerWeightVector {
        entries: Subset::all_of_size(k, n).into_iter().map(|j| {
            let w = block_diagonal_weight(n, ell, &j);
            (j, w)
        }).collect(),
    })
}

/// Which family of weight matrices a field came from.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldKind {
    BlockDiagonal { ell: usize },
    Antidiagonal,
    Custom,
}

/// A coherent matching field: a weight matrix together with its true orders.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MatchingField {
    kind: FieldKind,
    matrix: WeightMatrix,
}

impl MatchingField {
    /// `B_ℓ` on `rows × n` (use `rows = k` for `Gr(k,n)`, `rows = n-1` for `Flag_n`).
    pub fn block_diagonal(rows: usize, n: usize, ell: usize) -> Result<Self> {
        Ok(MatchingField { kind: FieldKind::BlockDiagonal { ell }, matrix: build_block_diagonal(rows, n, ell)? })
    }

    /// The antidiagonal field, truncated to `rows` rows.
    pub fn antidiagonal(rows: usize, n: usize) -> Result<Self> {
        let full = build_antidiagonal(n)?;
        if rows == 0 || rows > full.rows() {
            return Err(Error::OutOfRange(format!("antidiagonal field has at most {} rows", full.rows())));
        }
        Ok(MatchingField { kind: FieldKind::Antidiagonal, matrix: full.truncate_rows(rows) })
    }

    /// A field from an arbitrary matrix. Coherence is checked lazily, per subset.
    pub fn custom(matrix: WeightMatrix) -> Self {
        MatchingField { kind: FieldKind::Custom, matrix }
    }

    pub fn kind(&self) -> &FieldKind {
        &self.kind
    }

    pub fn matrix(&self) -> &WeightMatrix {
        &self.matrix
    }

    pub fn n(&self) -> usize {
        self.matrix.cols()
    }

    /// Short label, e.g. `ell=2` or `antidiagonal`.
    pub fn label(&self) -> String {
        match &self.kind {
            FieldKind::BlockDiagonal { ell } => format!("ell={ell}"),
            FieldKind::Antidiagonal => "antidiagonal".into(),
            FieldKind::Custom => "custom".into(),
        }
    }

    pub fn true_order(&self, j: &Subset) -> Result<TrueOrderColumn> {
        if j.len() > self.matrix.rows() || j.ambient() != self.n() {
            return Err(Error::OutOfRange(format!("subset {j} does not fit a {}×{} matrix", self.matrix.rows(), self.n())));
        }
        match self.kind {
            FieldKind::BlockDiagonal { ell } => Ok(initial_column_closed_form(ell, j)),
            FieldKind::Antidiagonal => {
                let entries: Vec<usize> = j.elements().iter().rev().copied().collect();
                let m = entries.len();
                let sign = if (m * m.saturating_sub(1) / 2).is_multiple_of(2) { 1 } else { -1 };
                Ok(TrueOrderColumn { entries, sign })
            }
            FieldKind::Custom => {
                let mut cols = initial_column_bruteforce(&self.matrix, j)?;
                if cols.len() != 1 {
                    return Err(Error::Incoherent(j.to_string()));
                }
                Ok(cols.pop().unwrap())
            }
        }
    }

    /// Weight of `P_J`: the matrix weight of its initial term.
    pub fn weight(&self, j: &Subset) -> Result<i64> {
        let col = self.true_order(j)?;
        Ok(col.entries.iter().enumerate().map(|(row, &c)| self.matrix.get(row + 1, c)).sum())
    }
}
