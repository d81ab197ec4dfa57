//! Two-column tableaux, the rearrangement map `Γ_ℓ` from semi-standard
//! tableaux to matching-field tableaux, and standard-monomial counts.

use std::collections::HashSet;
use std::fmt;

use itertools::Itertools;

use crate::combinatorics::{bruhat_leq_perms, bruhat_leq_subsets, BruhatInterval, Permutation, Subset};
use crate::error::{Error, Result};
use crate::ideal::Family;
use crate::matching_field::initial_column_closed_form;
use crate::survey::{gr_mask, Convention};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TableauForm {
    SemiStandard,
    MatchingField { ell: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TwoColumnTableau {
    pub left: Subset,
    pub right: Subset,
    pub form: TableauForm,
}

impl TwoColumnTableau {
    /// The columns as displayed: sorted for semi-standard tableaux, in
    /// `B_ℓ` true order otherwise.
    pub fn rendered(&self) -> (Vec<usize>, Vec<usize>) {
        match self.form {
            TableauForm::SemiStandard => (self.left.elements().to_vec(), self.right.elements().to_vec()),
            TableauForm::MatchingField { ell } => (
                initial_column_closed_form(ell, &self.left).entries,
                initial_column_closed_form(ell, &self.right).entries,
            ),
        }
    }

    pub fn is_semistandard(&self) -> bool {
        self.left.len() == self.right.len() && self.left.elements().iter().zip(self.right.elements()).all(|(a, b)| a <= b)
    }
}

impl fmt::Display for TwoColumnTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (l, r) = self.rendered();
        for (a, b) in l.iter().zip(&r) {
            write!(f, "[{a} {b}]")?;
        }
        Ok(())
    }
}

/// Pairs of `k`-subsets `I, J` with `v <= I, J <= w` and `I <= J` row-wise.
pub fn enumerate_two_column_ssyt(v: &Subset, w: &Subset) -> Result<Vec<TwoColumnTableau>> {
    let interval = BruhatInterval::grassmannian(v, w)?;
    let columns: Vec<Subset> = Subset::all_of_size(v.len(), v.ambient()).into_iter().filter(|c| interval.contains(c)).collect();
    let mut out = Vec::new();
    for (a, left) in columns.iter().enumerate() {
        for right in &columns[a..] {
            let t = TwoColumnTableau { left: left.clone(), right: right.clone(), form: TableauForm::SemiStandard };
            if t.is_semistandard() {
                out.push(t);
            }
        }
    }
    Ok(out)
}

/// `Γ_ℓ`: exchanges `i_1` and `j_1` between the columns in the two
/// configurations where the diagonal reading and the `B_ℓ` reading differ.
pub fn gamma_ell(t: &TwoColumnTableau, ell: usize) -> Result<TwoColumnTableau> {
    if ell == 0 {
        return Err(Error::OutOfRange("Γ_ℓ needs ℓ >= 1".into()));
    }
    if t.form != TableauForm::SemiStandard || !t.is_semistandard() {
        return Err(Error::InvalidSubset(format!("{t} is not semi-standard")));
    }
    let (i, j) = (t.left.elements(), t.right.elements());
    let form = TableauForm::MatchingField { ell };
    if i.len() < 2 {
        return Ok(TwoColumnTableau { left: t.left.clone(), right: t.right.clone(), form });
    }
    let low = |x: usize| x <= ell;
    let case1 = low(i[0]) && low(i[1]) && low(j[0]) && !low(j[1]) && i[0] < j[0] && j[0] < i[1];
    let case2 = low(i[0]) && !low(i[1]) && !low(j[0]) && !low(j[1]) && j[0] < i[1] && i[1] < j[1];
    if !(case1 || case2) {
        return Ok(TwoColumnTableau { left: t.left.clone(), right: t.right.clone(), form });
    }
    let n = t.left.ambient();
    let mut new_left = i.to_vec();
    let mut new_right = j.to_vec();
    std::mem::swap(&mut new_left[0], &mut new_right[0]);
    Ok(TwoColumnTableau { left: Subset::new(new_left, n)?, right: Subset::new(new_right, n)?, form })
}

/// Per rendered row, the sorted pair of entries.
pub fn row_multisets(t: &TwoColumnTableau) -> Vec<[usize; 2]> {
    let (l, r) = t.rendered();
    l.into_iter()
        .zip(r)
        .map(|(a, b)| if a <= b { [a, b] } else { [b, a] })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GammaReport {
    pub injective: bool,
    pub surjective: bool,
    /// Bounded semi-standard tableaux.
    pub ssyt_count: usize,
    /// Distinct degree-2 images of surviving monomials under `B_ℓ`.
    pub standard_count: usize,
}

/// Compares `Γ_ℓ` of the bounded semi-standard tableaux with the degree-2
/// image classes of the restricted `B_ℓ` monomial map.
pub fn verify_gamma_bijection(v: &Subset, w: &Subset, ell: usize) -> Result<GammaReport> {
    let ssyt = enumerate_two_column_ssyt(v, w)?;
    let mut hit: HashSet<Vec<[usize; 2]>> = HashSet::new();
    let mut injective = true;
    for t in &ssyt {
        injective &= hit.insert(row_multisets(&gamma_ell(t, ell)?));
    }
    let (k, n) = (v.len(), v.ambient());
    let interval = BruhatInterval::grassmannian(v, w)?;
    let alive: Vec<Subset> = Subset::all_of_size(k, n).into_iter().filter(|c| interval.contains(c)).collect();
    let form = TableauForm::MatchingField { ell };
    let mut targets: HashSet<Vec<[usize; 2]>> = HashSet::new();
    for (a, left) in alive.iter().enumerate() {
        for right in &alive[a..] {
            targets.insert(row_multisets(&TwoColumnTableau { left: left.clone(), right: right.clone(), form }));
        }
    }
    let family = Family::Grassmannian { k, n };
    let kernel = crate::ideal::Kernel::build(&Convention::BlockDiagonal { ell }.field(family)?, family)?;
    let standard_count = kernel.standard_monomial_count_deg2(&gr_mask(&kernel, v, w)?);
    debug_assert_eq!(standard_count, targets.len());
    Ok(GammaReport { injective, surjective: targets.iter().all(|t| hit.contains(t)), ssyt_count: ssyt.len(), standard_count })
}

/// `SSYT_d(v, w)` in the flag variety: multisets of `d` columns in
/// `T_w^v` that stack, longest first, into a semi-standard tableau.
pub fn flag_ssyt_count(v: &Permutation, w: &Permutation, d: usize) -> Result<usize> {
    let columns = flag_columns(v, w)?;
    let stacks = |cols: &[&Subset]| {
        let mut sorted = cols.to_vec();
        sorted.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.elements().cmp(b.elements())));
        sorted.windows(2).all(|p| p[0].elements().iter().zip(p[1].elements()).all(|(x, y)| x <= y))
    };
    Ok(columns.iter().combinations_with_replacement(d).filter(|cols| stacks(cols)).count())
}

/// Distinct images of degree-`d` monomials in the variables of `T_w^v`
/// under the diagonal flag map.
pub fn flag_image_count(v: &Permutation, w: &Permutation, d: usize) -> Result<usize> {
    let columns = flag_columns(v, w)?;
    let mut images: HashSet<Vec<(usize, usize)>> = HashSet::new();
    for cols in columns.iter().combinations_with_replacement(d) {
        let mut image: Vec<(usize, usize)> =
            cols.iter().flat_map(|c| c.elements().iter().enumerate().map(|(r, &x)| (r, x))).collect();
        image.sort_unstable();
        images.insert(image);
    }
    Ok(images.len())
}

fn flag_columns(v: &Permutation, w: &Permutation) -> Result<Vec<Subset>> {
    if !bruhat_leq_perms(v, w)? {
        return Err(Error::EmptyRichardson { v: v.to_string(), w: w.to_string() });
    }
    let interval = BruhatInterval::flag(v, w)?;
    Ok(Subset::all_proper(v.n()).into_iter().filter(|c| interval.contains(c)).collect())
}

/// For each matching-field tableau on the given columns, some `Γ_ℓ(T')` is
/// row-wise equal to it. Returns the tableaux for which that fails.
pub fn unmatched_matching_field_tableaux(k: usize, n: usize, ell: usize) -> Result<Vec<TwoColumnTableau>> {
    let all = Subset::all_of_size(k, n);
    let full = enumerate_two_column_ssyt(&Subset::initial(k, n), &Subset::terminal(k, n))?;
    let mut image_rows: HashSet<Vec<[usize; 2]>> = HashSet::new();
    for t in &full {
        image_rows.insert(row_multisets(&gamma_ell(t, ell)?));
    }
    let form = TableauForm::MatchingField { ell };
    let mut missing = Vec::new();
    for (a, left) in all.iter().enumerate() {
        for right in &all[a..] {
            let t = TwoColumnTableau { left: left.clone(), right: right.clone(), form };
            if !image_rows.contains(&row_multisets(&t)) {
                missing.push(t);
            }
        }
    }
    Ok(missing)
}

/// Whether `Γ_ℓ(T)` has a column outside `[v, w]` exactly when `T` does.
pub fn gamma_respects_bounds(t: &TwoColumnTableau, v: &Subset, w: &Subset, ell: usize) -> Result<bool> {
    let inside = |c: &Subset| -> Result<bool> { Ok(bruhat_leq_subsets(v, c)? && bruhat_leq_subsets(c, w)?) };
    let g = gamma_ell(t, ell)?;
    let before = inside(&t.left)? && inside(&t.right)?;
    let after = inside(&g.left)? && inside(&g.right)?;
    Ok(before == after)
}
