//! Subsets, permutations and the Bruhat-order combinatorics that decide
//! which Plücker variables vanish on a Schubert, opposite Schubert or
//! Richardson variety.
//!
//! All indices are 1-based. A [`Subset`] always carries its ambient `n`, and
//! comparing subsets of different ambient sizes is an error.

use std::cmp::Ordering;
use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A set of distinct integers in `[1..n]`, stored sorted.
///
/// Ordering is by size first, then lexicographic on the sorted elements. For
/// a fixed size this is the usual lexicographic order of `k`-subsets
/// (`123 < 124 < ... < 345`).
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Subset {
    elements: Vec<usize>,
    n: usize,
}

impl Subset {
    /// Builds a subset from elements in any order.
    pub fn new(mut elements: Vec<usize>, n: usize) -> Result<Self> {
        if elements.is_empty() {
            return Err(Error::InvalidSubset("empty subset".into()));
        }
        elements.sort_unstable();
        if elements.windows(2).any(|p| p[0] == p[1]) {
            return Err(Error::InvalidSubset(format!("repeated entry in {elements:?}")));
        }
        if elements[0] == 0 || *elements.last().unwrap() > n {
            return Err(Error::InvalidSubset(format!("{elements:?} is not inside [1..{n}]")));
        }
        Ok(Subset { elements, n })
    }

    /// The empty subset of `[n]`; only used as the result of removing the
    /// last element of a singleton.
    pub fn empty(n: usize) -> Self {
        Subset { elements: Vec::new(), n }
    }

    /// `{1, ..., k}` inside `[n]`.
    pub fn initial(k: usize, n: usize) -> Self {
        Subset { elements: (1..=k).collect(), n }
    }

    /// `{n-k+1, ..., n}`.
    pub fn terminal(k: usize, n: usize) -> Self {
        Subset { elements: (n + 1 - k..=n).collect(), n }
    }

    /// Parses either concatenated digits (`"134"`, only for `n <= 9`) or a
    /// comma-separated list (`"1,3,10"`).
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let text = text.trim();
        let elements = if text.contains(',') || n > 9 {
            text.split(',')
                .map(|t| t.trim().parse::<usize>().map_err(|e| Error::Parse(format!("{text:?}: {e}"))))
                .collect::<Result<Vec<_>>>()?
        } else {
            text.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(|| Error::Parse(format!("{text:?}: not a digit string"))))
                .collect::<Result<Vec<_>>>()?
        };
        Subset::new(elements, n)
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    /// The subset with `x` removed (possibly empty).
    pub fn without(&self, x: usize) -> Subset {
        Subset { elements: self.elements.iter().copied().filter(|&e| e != x).collect(), n: self.n }
    }

    /// The subset with the `i`-th smallest element (0-based position) removed.
    pub fn without_position(&self, i: usize) -> Subset {
        let mut elements = self.elements.clone();
        elements.remove(i);
        Subset { elements, n: self.n }
    }

    /// All `k`-subsets of `[n]` in lexicographic order.
    pub fn all_of_size(k: usize, n: usize) -> Vec<Subset> {
        (1..=n).combinations(k).map(|elements| Subset { elements, n }).collect()
    }

    /// All nonempty proper subsets of `[n]`, ordered by size then lexicographically.
    pub fn all_proper(n: usize) -> Vec<Subset> {
        (1..n).flat_map(|k| Subset::all_of_size(k, n)).collect()
    }
}

impl Ord for Subset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.elements
            .len()
            .cmp(&other.elements.len())
            .then_with(|| self.elements.cmp(&other.elements))
            .then_with(|| self.n.cmp(&other.n))
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n <= 9 {
            for e in &self.elements {
                write!(f, "{e}")?;
            }
            Ok(())
        } else {
            write!(f, "{}", self.elements.iter().join(","))
        }
    }
}

/// Componentwise comparison of two sorted lists of equal length.
fn sorted_leq(a: &[usize], b: &[usize]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// Bruhat (Gale) order on subsets of equal size: `I <= J` iff `i_m <= j_m`
/// for every `m` after sorting.
pub fn bruhat_leq_subsets(i: &Subset, j: &Subset) -> Result<bool> {
    if i.n != j.n {
        return Err(Error::AmbientMismatch(i.n, j.n));
    }
    if i.len() != j.len() {
        return Err(Error::IncomparableSizes(i.len(), j.len()));
    }
    Ok(sorted_leq(&i.elements, &j.elements))
}

/// `w_0 I = {n+1-i : i in I}`.
pub fn w0_complement(i: &Subset) -> Subset {
    let n = i.n;
    let mut elements: Vec<usize> = i.elements.iter().map(|&e| n + 1 - e).collect();
    elements.reverse();
    Subset { elements, n }
}

/// A permutation of `[1..n]` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &x in &images {
            if x == 0 || x > n || seen[x] {
                return Err(Error::InvalidPermutation(format!("{images:?} is not a permutation of 1..{n}")));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { images: (1..=n).collect() }
    }

    /// The longest element `w_0 = (n, n-1, ..., 1)`.
    pub fn longest(n: usize) -> Self {
        Permutation { images: (1..=n).rev().collect() }
    }

    /// Every permutation of `[n]`, in lexicographic order of one-line notation.
    pub fn all(n: usize) -> Vec<Permutation> {
        (1..=n).permutations(n).map(|images| Permutation { images }).collect()
    }

    /// Parses `"2,4,3,1"`; for `n <= 9` the digit string `"2431"` is accepted too.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        let images = if text.contains(',') {
            text.split(',')
                .map(|t| t.trim().parse::<usize>().map_err(|e| Error::Parse(format!("{text:?}: {e}"))))
                .collect::<Result<Vec<_>>>()?
        } else {
            text.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(|| Error::Parse(format!("{text:?}: not a permutation"))))
                .collect::<Result<Vec<_>>>()?
        };
        Permutation::new(images)
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `w_i`, 1-based.
    pub fn at(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    /// 1-based position of the value `x`.
    pub fn position_of(&self, x: usize) -> usize {
        self.images.iter().position(|&y| y == x).expect("value outside permutation") + 1
    }

    /// Right multiplication by the simple transposition `s_i`: swaps the
    /// entries in positions `i` and `i+1`.
    pub fn times_simple(&self, i: usize) -> Permutation {
        let mut images = self.images.clone();
        images.swap(i - 1, i);
        Permutation { images }
    }

    /// Left multiplication by `w_0`: every value `x` becomes `n+1-x`.
    pub fn w0_times(&self) -> Permutation {
        let n = self.n();
        Permutation { images: self.images.iter().map(|&x| n + 1 - x).collect() }
    }

    /// Deletes the entry equal to `n`, giving a permutation of `[n-1]`.
    pub fn remove_top(&self) -> Result<Permutation> {
        let n = self.n();
        if n < 2 {
            return Err(Error::OutOfRange("remove_top needs n >= 2".into()));
        }
        Ok(Permutation { images: self.images.iter().copied().filter(|&x| x != n).collect() })
    }

    /// Lexicographic rank among all permutations of `[n]`.
    pub fn rank(&self) -> usize {
        let n = self.n();
        let mut rank = 0;
        let mut factorial = (1..n).product::<usize>().max(1);
        let mut used = vec![false; n + 1];
        for (pos, &x) in self.images.iter().enumerate() {
            let smaller = (1..x).filter(|&y| !used[y]).count();
            rank += smaller * factorial;
            used[x] = true;
            if pos + 1 < n {
                factorial /= n - 1 - pos;
            }
        }
        rank
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.images.iter().join(","))
    }
}

fn check_m(w: &Permutation, m: usize) -> Result<()> {
    if m == 0 || m > w.n() {
        return Err(Error::OutOfRange(format!("prefix length {m} outside 1..{}", w.n())));
    }
    Ok(())
}

/// `{w_1, ..., w_m}` sorted increasingly.
pub fn prefix_sorted(w: &Permutation, m: usize) -> Result<Subset> {
    check_m(w, m)?;
    let mut elements = w.images[..m].to_vec();
    elements.sort_unstable();
    Ok(Subset { elements, n: w.n() })
}

/// Bruhat order on `S_n` via prefix comparison at every length.
pub fn bruhat_leq_perms(v: &Permutation, w: &Permutation) -> Result<bool> {
    if v.n() != w.n() {
        return Err(Error::IncomparableSizes(v.n(), w.n()));
    }
    let mut a: Vec<usize> = Vec::with_capacity(v.n());
    let mut b: Vec<usize> = Vec::with_capacity(w.n());
    for m in 0..v.n() {
        insert_sorted(&mut a, v.images[m]);
        insert_sorted(&mut b, w.images[m]);
        if !sorted_leq(&a, &b) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn insert_sorted(list: &mut Vec<usize>, x: usize) {
    let at = list.partition_point(|&y| y < x);
    list.insert(at, x);
}

/// The Bruhat interval `[v, w]` restricted to index sets: per size, a lower
/// and an upper bound in Gale order. Sizes without bounds are never admitted.
#[derive(Clone, Debug)]
pub struct BruhatInterval {
    n: usize,
    bounds: Vec<Option<(Vec<usize>, Vec<usize>)>>,
}

impl BruhatInterval {
    /// Flag interval: sizes `1..n-1`, bounds from prefixes of `v` and `w`.
    pub fn flag(v: &Permutation, w: &Permutation) -> Result<Self> {
        if !bruhat_leq_perms(v, w)? {
            return Err(Error::EmptyRichardson { v: v.to_string(), w: w.to_string() });
        }
        let n = v.n();
        let mut bounds = vec![None; n + 1];
        for (m, slot) in bounds.iter_mut().enumerate().take(n).skip(1) {
            *slot = Some((prefix_sorted(v, m)?.elements, prefix_sorted(w, m)?.elements));
        }
        Ok(BruhatInterval { n, bounds })
    }

    /// Grassmannian interval on `k`-subsets.
    pub fn grassmannian(v: &Subset, w: &Subset) -> Result<Self> {
        if !bruhat_leq_subsets(v, w)? {
            return Err(Error::EmptyRichardson { v: v.to_string(), w: w.to_string() });
        }
        let n = v.n;
        let mut bounds = vec![None; n + 1];
        bounds[v.len()] = Some((v.elements.clone(), w.elements.clone()));
        Ok(BruhatInterval { n, bounds })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn contains(&self, i: &Subset) -> bool {
        match self.bounds.get(i.len()) {
            Some(Some((lo, hi))) => i.n == self.n && sorted_leq(lo, &i.elements) && sorted_leq(&i.elements, hi),
            _ => false,
        }
    }

    /// Partitions the given admissible index sets into vanishing and surviving.
    pub fn split(&self, universe: &[Subset]) -> RestrictionSets {
        let (surviving, vanishing) = universe.iter().cloned().partition(|i| self.contains(i));
        RestrictionSets { vanishing, surviving }
    }
}

/// Index sets whose Plücker variables vanish (`S`) or survive (`T`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RestrictionSets {
    pub vanishing: Vec<Subset>,
    pub surviving: Vec<Subset>,
}

/// `S_w^v` and `T_w^v` inside the flag variety (all sizes `1..n-1`).
pub fn vanishing_sets_flag(v: &Permutation, w: &Permutation) -> Result<RestrictionSets> {
    let interval = BruhatInterval::flag(v, w)?;
    Ok(interval.split(&Subset::all_proper(v.n())))
}

/// `S_{w,k}^v` and `T_{w,k}^v` inside `Gr(k, n)`.
pub fn vanishing_sets_grassmannian(v: &Subset, w: &Subset) -> Result<RestrictionSets> {
    let interval = BruhatInterval::grassmannian(v, w)?;
    Ok(interval.split(&Subset::all_of_size(v.len(), v.n)))
}

/// `I_v = {i : v_{i+1} = v_i + 1}` and `W_v`, the permutations `v s_{i_1} ... s_{i_p}`
/// for pairwise non-adjacent `{i_1, ..., i_p} ⊆ I_v` (including `v` itself).
pub fn wv_set(v: &Permutation) -> (Vec<usize>, Vec<Permutation>) {
    let ascents: Vec<usize> = (1..v.n()).filter(|&i| v.at(i + 1) == v.at(i) + 1).collect();
    let mut out = Vec::new();
    extend_wv(v.clone(), &ascents, 0, &mut out);
    out.sort();
    (ascents, out)
}

fn extend_wv(current: Permutation, ascents: &[usize], from: usize, out: &mut Vec<Permutation>) {
    out.push(current.clone());
    for (idx, &i) in ascents.iter().enumerate().skip(from) {
        // the next chosen index must skip over i+1
        let next = ascents[idx + 1..].iter().position(|&j| j > i + 1).map_or(ascents.len(), |p| idx + 1 + p);
        extend_wv(current.times_simple(i), ascents, next, out);
    }
}

/// Ascending/descending property relative to the position `t` of `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MonotoneProfile {
    pub ascending: bool,
    pub descending: bool,
    pub top_position: usize,
}

pub fn monotone_profile(v: &Permutation) -> MonotoneProfile {
    let t = v.position_of(v.n());
    let im = v.images();
    MonotoneProfile {
        ascending: im[..t].windows(2).all(|p| p[0] < p[1]),
        descending: im[t - 1..].windows(2).all(|p| p[0] > p[1]),
        top_position: t,
    }
}

/// Compatibility of `v <= w` for the extension recursion: either `n` sits at
/// the same position, or the positions of `n` and `n-1` interleave and the
/// stretch between them is monotone in both permutations.
pub fn compatible(v: &Permutation, w: &Permutation) -> bool {
    if v.n() != w.n() || !bruhat_leq_perms(v, w).unwrap_or(false) {
        return false;
    }
    let n = v.n();
    let t = v.position_of(n);
    let t_w = w.position_of(n);
    if t == t_w {
        return true;
    }
    if n < 2 {
        return false;
    }
    let s = v.position_of(n - 1);
    let s_w = w.position_of(n - 1);
    if s_w > t || t_w > s || t_w > t {
        return false;
    }
    let w_desc = (t_w..t).all(|i| w.at(i) > w.at(i + 1));
    let v_desc = (t_w..t).all(|i| v.at(i + 1) > v.at(i));
    w_desc && v_desc
}
