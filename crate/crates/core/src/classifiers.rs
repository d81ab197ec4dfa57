//! Closed-form classification of restricted matching field ideals.
//!
//! Grassmannian results cover every block diagonal field `B_ℓ`; flag results
//! cover the diagonal field only. Each function here has a brute-force
//! counterpart in [`crate::ideal`], and the test suites compare the two.

use crate::combinatorics::{bruhat_leq_perms, bruhat_leq_subsets, compatible, monotone_profile, w0_complement, Permutation, Subset};
use crate::error::{Error, Result};
use crate::ideal::Verdict;

/// Membership in `Z_{k,n}`: `(1,...,k-1,i)` for `k <= i <= n`, or
/// `{1,...,k+1}` with one of `1..k-1` removed.
pub fn zkn_contains(w: &Subset) -> bool {
    let e = w.elements();
    let k = e.len();
    if k == 0 {
        return false;
    }
    if e[..k - 1].iter().enumerate().all(|(i, &x)| x == i + 1) {
        return true;
    }
    // {1..k+1} minus some i <= k-1: the last two entries are k, k+1
    k >= 2 && e[k - 1] == k + 1 && e[k - 2] == k && e.iter().all(|&x| x <= k + 1)
}

/// Schubert variety `X_w` in `Gr(k,n)` under `B_ℓ`.
pub fn grass_schubert_classify(w: &Subset, ell: usize) -> Verdict {
    if zkn_contains(w) {
        return Verdict::Zero;
    }
    let e = w.elements();
    let (k, n) = (e.len(), w.ambient());
    let w1 = e[0];
    let first_ok = ell != 0 && (2..=n.saturating_sub(k)).contains(&w1) && w1 != ell;
    let rest_ok = e[1..].iter().all(|&x| x > ell && x != w1 + 1);
    if first_ok && rest_ok {
        Verdict::NonToric
    } else {
        Verdict::Toric
    }
}

/// Opposite Schubert variety `X^v` in `Gr(k,n)` under `B_ℓ`.
pub fn grass_opposite_classify(v: &Subset, ell: usize) -> Verdict {
    if zkn_contains(&w0_complement(v)) {
        return Verdict::Zero;
    }
    let e = v.elements();
    let (k, n) = (e.len(), v.ambient());
    let nontoric = k >= 2 && (1..=n + 1 - k).contains(&ell) && e[0] <= ell && e[1] >= e[0] + 2 && e[1] != ell + 1;
    if nontoric {
        Verdict::NonToric
    } else {
        Verdict::Toric
    }
}

/// Zero test for the Richardson variety `X_w^v` in `Gr(k,n)`; independent of `ℓ`.
pub fn grass_richardson_is_zero(v: &Subset, w: &Subset) -> bool {
    let (a, b) = (v.elements(), w.elements());
    let k = a.len();
    if k <= 1 {
        return true;
    }
    let shifted = a.windows(2).all(|p| p[1] == p[0] + 1) && a.iter().zip(b).all(|(x, y)| *y == x + 1);
    shifted || (0..k).any(|i| a[i] == b[i] && grass_richardson_is_zero(&v.without_position(i), &w.without_position(i)))
}

/// Richardson variety `X_w^v` in `Gr(k,n)` under `B_ℓ`.
pub fn grass_richardson_classify(v: &Subset, w: &Subset, ell: usize) -> Result<Verdict> {
    if !bruhat_leq_subsets(v, w)? {
        return Err(Error::EmptyRichardson { v: v.to_string(), w: w.to_string() });
    }
    if grass_richardson_is_zero(v, w) {
        return Ok(Verdict::Zero);
    }
    let monomial = grass_schubert_classify(w, ell) == Verdict::NonToric || grass_opposite_classify(v, ell) == Verdict::NonToric;
    Ok(if monomial { Verdict::NonToric } else { Verdict::Toric })
}

/// `w ∈ W_v`: `w` is `v` with disjoint adjacent swaps at positions `i`
/// where `v_{i+1} = v_i + 1`.
pub fn in_wv(v: &Permutation, w: &Permutation) -> bool {
    if v.n() != w.n() {
        return false;
    }
    let (a, b) = (v.images(), w.images());
    let mut i = 0;
    while i < a.len() {
        if a[i] == b[i] {
            i += 1;
        } else if i + 1 < a.len() && a[i + 1] == a[i] + 1 && b[i] == a[i + 1] && b[i + 1] == a[i] {
            i += 2;
        } else {
            return false;
        }
    }
    true
}

/// Membership of `(v, w)` in the extension of a base set: the pair with `n`
/// removed lies in the base, and `v, w` are compatible.
pub fn in_extension(v: &Permutation, w: &Permutation, base: impl Fn(&Permutation, &Permutation) -> bool) -> Result<bool> {
    Ok(compatible(v, w) && base(&v.remove_top()?, &w.remove_top()?))
}

/// `(v, w) ∈ T^R_n ∪ Z^R_n`, by peeling off the top entry until `n = 2`.
pub fn flag_richardson_monomial_free(v: &Permutation, w: &Permutation) -> Result<bool> {
    if v.n() <= 2 {
        return bruhat_leq_perms(v, w);
    }
    in_extension(v, w, |a, b| flag_richardson_monomial_free(a, b).unwrap_or(false))
}

/// Memoized Schubert and opposite Schubert verdicts for `Flag_m`, `m <= n`,
/// under the diagonal field, indexed by lexicographic permutation rank.
#[derive(Clone, Debug)]
pub struct FlagClassSets {
    schubert: Vec<Vec<Verdict>>,
    opposite: Vec<Vec<Verdict>>,
}

impl FlagClassSets {
    pub fn new(n: usize) -> Self {
        let mut schubert: Vec<Vec<Verdict>> = Vec::with_capacity(n + 1);
        let mut opposite: Vec<Vec<Verdict>> = Vec::with_capacity(n + 1);
        for m in 0..=n {
            if m <= 2 {
                // Flag_1 and Flag_2 carry no relations
                let size = (1..=m).product::<usize>();
                schubert.push(vec![Verdict::Zero; size]);
                opposite.push(vec![Verdict::Zero; size]);
                continue;
            }
            let perms = Permutation::all(m);
            let s_row: Vec<Verdict> =
                perms.iter().map(|w| schubert_step(w, |u| schubert[m - 1][u.rank()])).collect();
            let o_row: Vec<Verdict> =
                perms.iter().map(|v| opposite_step(v, |u| opposite[m - 1][u.rank()])).collect();
            schubert.push(s_row);
            opposite.push(o_row);
        }
        FlagClassSets { schubert, opposite }
    }

    pub fn max_n(&self) -> usize {
        self.schubert.len() - 1
    }

    fn check(&self, p: &Permutation) -> Result<()> {
        if p.n() > self.max_n() {
            return Err(Error::OutOfRange(format!("tables cover n <= {}, got {}", self.max_n(), p.n())));
        }
        Ok(())
    }

    /// `F_n|_w` for the Schubert variety `X_w`.
    pub fn schubert(&self, w: &Permutation) -> Result<Verdict> {
        self.check(w)?;
        Ok(self.schubert[w.n()][w.rank()])
    }

    /// `F_n|^v` for the opposite Schubert variety `X^v`.
    pub fn opposite(&self, v: &Permutation) -> Result<Verdict> {
        self.check(v)?;
        Ok(self.opposite[v.n()][v.rank()])
    }

    /// `v ∈ A_1^op`: nonzero, ascending, and `ul(v)` zero.
    pub fn in_a1_op(&self, v: &Permutation) -> Result<bool> {
        self.check(v)?;
        let n = v.n();
        if n <= 2 || self.opposite(v)? == Verdict::Zero || !monotone_profile(v).ascending {
            return Ok(false);
        }
        Ok(self.opposite(&v.remove_top()?)? == Verdict::Zero)
    }

    /// `v ∈ A_{1B}^op`: in `A_1^op` with `n` in third position.
    pub fn in_a1b_op(&self, v: &Permutation) -> Result<bool> {
        Ok(v.n() >= 3 && v.at(3) == v.n() && self.in_a1_op(v)?)
    }

    /// `F_n|_w^v` for the Richardson variety `X_w^v`.
    pub fn richardson(&self, v: &Permutation, w: &Permutation) -> Result<Verdict> {
        flag_richardson_classify(v, w)
    }
}

/// Flag Schubert verdict from the verdict of `ul(w)`.
fn schubert_step(w: &Permutation, below: impl Fn(&Permutation) -> Verdict) -> Verdict {
    let n = w.n();
    if in_wv(&Permutation::identity(n), w) {
        return Verdict::Zero;
    }
    let ul = w.remove_top().expect("n >= 3");
    let ul_verdict = below(&ul);
    let top_pair = [w.at(n - 2), w.at(n - 1)];
    let a1 = ul_verdict == Verdict::Zero && w.at(n) == n - 2 && top_pair.contains(&(n - 1)) && top_pair.contains(&n);
    let (s, t) = (w.position_of(n - 1), w.position_of(n));
    let a2 = ul_verdict.is_monomial_free() && monotone_profile(&ul).descending && t + 1 >= s;
    if a1 || a2 {
        Verdict::Toric
    } else {
        Verdict::NonToric
    }
}

/// Flag opposite Schubert verdict from the verdict of `ul(v)`.
fn opposite_step(v: &Permutation, below: impl Fn(&Permutation) -> Verdict) -> Verdict {
    let n = v.n();
    if in_wv(&Permutation::identity(n), &v.w0_times()) {
        return Verdict::Zero;
    }
    let ul = v.remove_top().expect("n >= 3");
    if monotone_profile(v).ascending && below(&ul).is_monomial_free() {
        Verdict::Toric
    } else {
        Verdict::NonToric
    }
}

/// Flag Schubert variety `X_w` under the diagonal field.
pub fn flag_schubert_classify(w: &Permutation) -> Verdict {
    if w.n() <= 2 {
        return Verdict::Zero;
    }
    schubert_step(w, flag_schubert_classify)
}

/// Flag opposite Schubert variety `X^v` under the diagonal field.
pub fn flag_opposite_classify(v: &Permutation) -> Verdict {
    if v.n() <= 2 {
        return Verdict::Zero;
    }
    opposite_step(v, flag_opposite_classify)
}

/// Flag Richardson variety `X_w^v` under the diagonal field: zero iff
/// `w ∈ W_v`, toric iff monomial-free and not zero.
pub fn flag_richardson_classify(v: &Permutation, w: &Permutation) -> Result<Verdict> {
    if !bruhat_leq_perms(v, w)? {
        return Err(Error::EmptyRichardson { v: v.to_string(), w: w.to_string() });
    }
    let zero = in_wv(v, w);
    let free = flag_richardson_monomial_free(v, w)?;
    if zero && !free {
        return Err(Error::Inconsistent(format!("({v}) ≤ ({w}) is zero but outside the extension recursion")));
    }
    Ok(match (zero, free) {
        (true, _) => Verdict::Zero,
        (false, true) => Verdict::Toric,
        (false, false) => Verdict::NonToric,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::wv_set;

    fn s(text: &str, n: usize) -> Subset {
        Subset::parse(text, n).unwrap()
    }

    fn p(text: &str) -> Permutation {
        Permutation::parse(text).unwrap()
    }

    #[test]
    fn zkn_examples() {
        assert!(zkn_contains(&s("124", 5)));
        assert!(zkn_contains(&s("125", 5)));
        assert!(zkn_contains(&s("134", 5)));
        assert!(zkn_contains(&s("234", 5)));
        assert!(!zkn_contains(&s("135", 5)));
        assert!(!zkn_contains(&s("245", 5)));
        assert!(zkn_contains(&s("4", 5)));
        // explicit enumeration of the two families for k = 3, n = 6
        let mut expected: Vec<Subset> = (3..=6).map(|i| Subset::new(vec![1, 2, i], 6).unwrap()).collect();
        expected.extend([vec![2, 3, 4], vec![1, 3, 4]].map(|e| Subset::new(e, 6).unwrap()));
        expected.sort();
        expected.dedup();
        let found: Vec<Subset> = Subset::all_of_size(3, 6).into_iter().filter(zkn_contains).collect();
        assert_eq!(found, expected);
    }

    #[test]
    fn grass_examples() {
        for ell in 0..5 {
            assert_eq!(grass_schubert_classify(&s("124", 5), ell), Verdict::Zero);
        }
        assert_eq!(grass_schubert_classify(&s("24", 5), 1), Verdict::NonToric);
        for w in Subset::all_of_size(3, 6) {
            assert_ne!(grass_schubert_classify(&w, 0), Verdict::NonToric);
            assert_ne!(grass_opposite_classify(&w, 0), Verdict::NonToric);
        }
        assert_eq!(grass_opposite_classify(&s("245", 5), 2), Verdict::Zero);
        assert_eq!(grass_opposite_classify(&s("135", 5), 3), Verdict::NonToric);

        assert_eq!(grass_richardson_classify(&s("12", 4), &s("23", 4), 1).unwrap(), Verdict::Zero);
        assert_eq!(grass_richardson_classify(&s("135", 5), &s("245", 5), 3).unwrap(), Verdict::NonToric);
        assert_eq!(grass_richardson_classify(&s("135", 5), &s("245", 5), 0).unwrap(), Verdict::Toric);
        assert!(grass_richardson_classify(&s("245", 5), &s("135", 5), 0).is_err());
    }

    #[test]
    fn flag_schubert_examples() {
        assert_eq!(flag_schubert_classify(&p("2,1,3")), Verdict::Zero);
        assert_eq!(flag_schubert_classify(&p("2,3,1")), Verdict::Toric);
        assert_eq!(flag_schubert_classify(&p("3,1,2")), Verdict::NonToric);
    }

    #[test]
    fn flag_opposite_examples() {
        assert_eq!(flag_opposite_classify(&p("3,1,2")), Verdict::Zero);
        assert_eq!(flag_opposite_classify(&p("1,3,2")), Verdict::Toric);
        assert_eq!(flag_opposite_classify(&p("2,1,3")), Verdict::NonToric);
    }

    #[test]
    fn flag_richardson_examples() {
        assert_eq!(flag_richardson_classify(&p("1,3,2"), &p("2,3,1")).unwrap(), Verdict::Toric);
        assert_eq!(flag_richardson_classify(&p("2,3,1"), &p("3,2,1")).unwrap(), Verdict::Zero);
        assert_eq!(flag_richardson_classify(&p("1,3,4,2"), &p("2,4,3,1")).unwrap(), Verdict::Toric);
        assert!(flag_richardson_classify(&p("3,2,1"), &p("1,2,3")).is_err());
    }

    #[test]
    fn extension_examples() {
        let base = |a: &Permutation, b: &Permutation| flag_richardson_monomial_free(a, b).unwrap();
        assert!(in_extension(&p("1,3,2,4"), &p("2,3,1,4"), base).unwrap());
        assert!(in_extension(&p("4,1,3,2"), &p("4,2,3,1"), base).unwrap());
        assert!(!in_extension(&p("1,3,4,2"), &p("4,2,3,1"), base).unwrap());
    }

    #[test]
    fn wv_membership_matches_enumeration() {
        for n in 1..=6 {
            let all = Permutation::all(n);
            for v in &all {
                let (_, wv) = wv_set(v);
                for w in &all {
                    assert_eq!(in_wv(v, w), wv.contains(w), "v = {v}, w = {w}");
                }
            }
        }
    }

    #[test]
    fn memo_tables_match_recursion() {
        let sets = FlagClassSets::new(6);
        for n in 1..=6 {
            for w in Permutation::all(n) {
                assert_eq!(sets.schubert(&w).unwrap(), flag_schubert_classify(&w));
                assert_eq!(sets.opposite(&w).unwrap(), flag_opposite_classify(&w));
            }
        }
        assert!(sets.schubert(&Permutation::identity(7)).is_err());
    }

    #[test]
    fn duality_and_specialisation() {
        let sets = FlagClassSets::new(6);
        for n in 2..=6 {
            let id = Permutation::identity(n);
            let w0 = Permutation::longest(n);
            for v in Permutation::all(n) {
                let opp = sets.opposite(&v).unwrap();
                assert_eq!(opp == Verdict::Zero, sets.schubert(&v.w0_times()).unwrap() == Verdict::Zero);
                assert_eq!(flag_richardson_classify(&id, &v).unwrap(), sets.schubert(&v).unwrap(), "w = {v}");
                assert_eq!(flag_richardson_classify(&v, &w0).unwrap(), opp, "v = {v}");
            }
        }
        for n in 2..=6 {
            for k in 1..n {
                for v in Subset::all_of_size(k, n) {
                    assert_eq!(
                        grass_opposite_classify(&v, 0) == Verdict::Zero,
                        grass_schubert_classify(&w0_complement(&v), 0) == Verdict::Zero
                    );
                }
            }
        }
    }
}
