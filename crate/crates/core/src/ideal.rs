//! Degree-2 kernels of matching-field monomial maps, their restriction to a
//! Richardson variety, and the zero / toric / non-toric decision.
//!
//! The monomial map sends `P_I` to `sgn(I) · x_{1,c_1} ... x_{m,c_m}` where
//! `(c_1, ..., c_m)` is the true order of `I`. Two degree-2 monomials lie in a
//! common kernel binomial exactly when their images agree as multisets of
//! matrix positions, so the kernel in degree 2 is a union of *classes* of
//! monomials sharing an image, and every pair inside a class is a generator.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::combinatorics::Subset;
use crate::error::{Error, Result};
use crate::matching_field::{MatchingField, TrueOrderColumn};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    Grassmannian { k: usize, n: usize },
    Flag { n: usize },
}

impl Family {
    pub fn n(&self) -> usize {
        match *self {
            Family::Grassmannian { n, .. } | Family::Flag { n } => n,
        }
    }

    /// Largest subset size, i.e. the number of matrix rows the field needs.
    pub fn max_size(&self) -> usize {
        match *self {
            Family::Grassmannian { k, .. } => k,
            Family::Flag { n } => n - 1,
        }
    }

    /// Plücker variables in the canonical order (size, then lexicographic).
    pub fn variables(&self) -> Vec<Subset> {
        match *self {
            Family::Grassmannian { k, n } => Subset::all_of_size(k, n),
            Family::Flag { n } => Subset::all_proper(n),
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            Family::Grassmannian { .. } => "gr",
            Family::Flag { .. } => "flag",
        }
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            Family::Grassmannian { k, n } if k == 0 || k > n => {
                Err(Error::OutOfRange(format!("Gr({k},{n}) needs 1 <= k <= n")))
            }
            Family::Flag { n } if n < 2 => Err(Error::OutOfRange(format!("Flag_{n} needs n >= 2"))),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Grassmannian { k, n } => write!(f, "Gr({k},{n})"),
            Family::Flag { n } => write!(f, "Flag_{n}"),
        }
    }
}

/// A product of Plücker variables, factors kept in variable order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PluckerMonomial {
    factors: Vec<Subset>,
}

impl PluckerMonomial {
    pub fn new(mut factors: Vec<Subset>) -> Self {
        factors.sort();
        PluckerMonomial { factors }
    }

    pub fn factors(&self) -> &[Subset] {
        &self.factors
    }

    pub fn degree(&self) -> usize {
        self.factors.len()
    }
}

impl fmt::Display for PluckerMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            write!(f, "P[{s}]")?;
        }
        Ok(())
    }
}

/// `left - relative_sign * right`, with `left < right`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuadraticBinomial {
    pub left: PluckerMonomial,
    pub right: PluckerMonomial,
    pub relative_sign: i8,
}

impl QuadraticBinomial {
    /// Orients the pair so the smaller monomial is on the left.
    pub fn new(a: PluckerMonomial, b: PluckerMonomial, relative_sign: i8) -> Self {
        if a <= b {
            QuadraticBinomial { left: a, right: b, relative_sign }
        } else {
            QuadraticBinomial { left: b, right: a, relative_sign }
        }
    }
}

impl fmt::Display for QuadraticBinomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let op = if self.relative_sign > 0 { '-' } else { '+' };
        write!(f, "{} {op} {}", self.left, self.right)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Zero,
    Toric,
    NonToric,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Zero => "zero",
            Verdict::Toric => "toric",
            Verdict::NonToric => "nontoric",
        }
    }

    pub fn parse(text: &str) -> Result<Verdict> {
        match text.to_ascii_lowercase().as_str() {
            "zero" => Ok(Verdict::Zero),
            "toric" => Ok(Verdict::Toric),
            "nontoric" | "non-toric" => Ok(Verdict::NonToric),
            _ => Err(Error::Parse(format!("unknown verdict {text:?}"))),
        }
    }

    /// Zero or toric.
    pub fn is_monomial_free(&self) -> bool {
        !matches!(self, Verdict::NonToric)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A generator of the restricted ideal: a binomial whose two sides both
/// survive, or the surviving side of a binomial whose partner vanished.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RestrictedGenerator {
    Binomial(QuadraticBinomial),
    Monomial(PluckerMonomial),
}

impl fmt::Display for RestrictedGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RestrictedGenerator::Binomial(b) => b.fmt(f),
            RestrictedGenerator::Monomial(m) => m.fmt(f),
        }
    }
}

pub type Witness = RestrictedGenerator;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Classification {
    pub verdict: Verdict,
    pub witness: Option<Witness>,
}

impl Classification {
    pub fn zero() -> Self {
        Classification { verdict: Verdict::Zero, witness: None }
    }

    pub fn bare(verdict: Verdict) -> Self {
        Classification { verdict, witness: None }
    }
}

/// Image of a monomial under the monomial map: the sorted multiset of
/// positions `(row, col)` and the product of the factors' signs.
pub fn monomial_image(field: &MatchingField, m: &PluckerMonomial) -> Result<(Vec<(usize, usize)>, i8)> {
    let mut positions = Vec::new();
    let mut sign = 1;
    for factor in m.factors() {
        let col = field.true_order(factor)?;
        sign *= col.sign;
        positions.extend(col.entries.iter().enumerate().map(|(r, &c)| (r + 1, c)));
    }
    positions.sort_unstable();
    Ok((positions, sign))
}

/// A fixed-length bitset over variable indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VarMask {
    words: Vec<u64>,
    len: usize,
}

impl VarMask {
    pub fn empty(len: usize) -> Self {
        VarMask { words: vec![0; len.div_ceil(64)], len }
    }

    pub fn full(len: usize) -> Self {
        let mut m = VarMask::empty(len);
        (0..len).for_each(|i| m.insert(i));
        m
    }

    pub fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }
}

/// A degree-2 monomial as a pair of variable indices `a <= b`.
pub type MonomialIndex = (u32, u32);

/// The degree-2 kernel of the monomial map for one field and one family,
/// stored as image classes of size at least two.
#[derive(Clone, Debug)]
pub struct Kernel {
    family: Family,
    variables: Vec<Subset>,
    index: HashMap<Subset, usize>,
    columns: Vec<TrueOrderColumn>,
    classes: Vec<Vec<MonomialIndex>>,
}

impl Kernel {
    pub fn build(field: &MatchingField, family: Family) -> Result<Self> {
        let mut kernel = Kernel::skeleton(field, family)?;
        let cols = family.n() as u32 + 1;
        let mut by_image: HashMap<Vec<u32>, Vec<MonomialIndex>> = HashMap::new();
        let nv = kernel.variables.len();
        for a in 0..nv {
            for b in a..nv {
                let mut key: Vec<u32> = kernel.columns[a]
                    .entries
                    .iter()
                    .enumerate()
                    .chain(kernel.columns[b].entries.iter().enumerate())
                    .map(|(r, &c)| r as u32 * cols + c as u32)
                    .collect();
                key.sort_unstable();
                by_image.entry(key).or_default().push((a as u32, b as u32));
            }
        }
        let mut classes: Vec<Vec<MonomialIndex>> = by_image.into_values().filter(|c| c.len() > 1).collect();
        for class in &mut classes {
            class.sort_unstable();
        }
        classes.sort_unstable();
        kernel.classes = classes;
        kernel.assert_homogeneous();
        Ok(kernel)
    }

    /// Variables and columns only; classes are filled in by the caller.
    fn skeleton(field: &MatchingField, family: Family) -> Result<Self> {
        family.validate()?;
        if field.n() != family.n() || field.matrix().rows() < family.max_size() {
            return Err(Error::OutOfRange(format!(
                "a {}×{} field cannot serve {family}",
                field.matrix().rows(),
                field.n()
            )));
        }
        let variables = family.variables();
        let columns = variables.iter().map(|v| field.true_order(v)).collect::<Result<Vec<_>>>()?;
        let index = variables.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
        Ok(Kernel { family, variables, index, columns, classes: Vec::new() })
    }

    pub(crate) fn from_classes(field: &MatchingField, family: Family, classes: Vec<Vec<MonomialIndex>>) -> Result<Self> {
        let mut kernel = Kernel::skeleton(field, family)?;
        let nv = kernel.variables.len() as u32;
        if classes.iter().flatten().any(|&(a, b)| a > b || b >= nv) {
            return Err(Error::Cache("class member out of range".into()));
        }
        kernel.classes = classes;
        kernel.assert_homogeneous();
        Ok(kernel)
    }

    fn assert_homogeneous(&self) {
        for class in &self.classes {
            let profile = |&(a, b): &MonomialIndex| (self.variables[a as usize].len(), self.variables[b as usize].len());
            let first = profile(&class[0]);
            assert!(class.iter().all(|m| profile(m) == first), "kernel class mixes degree profiles");
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn variables(&self) -> &[Subset] {
        &self.variables
    }

    pub fn classes(&self) -> &[Vec<MonomialIndex>] {
        &self.classes
    }

    pub fn index_of(&self, s: &Subset) -> Option<usize> {
        self.index.get(s).copied()
    }

    pub fn sign(&self, var: usize) -> i8 {
        self.columns[var].sign
    }

    pub fn monomial(&self, (a, b): MonomialIndex) -> PluckerMonomial {
        PluckerMonomial { factors: vec![self.variables[a as usize].clone(), self.variables[b as usize].clone()] }
    }

    fn monomial_sign(&self, (a, b): MonomialIndex) -> i8 {
        self.sign(a as usize) * self.sign(b as usize)
    }

    fn binomial(&self, m: MonomialIndex, m2: MonomialIndex) -> QuadraticBinomial {
        QuadraticBinomial::new(self.monomial(m), self.monomial(m2), self.monomial_sign(m) * self.monomial_sign(m2))
    }

    /// Mask of the surviving variables.
    pub fn mask(&self, surviving: &[Subset]) -> VarMask {
        let mut mask = VarMask::empty(self.variables.len());
        for s in surviving {
            if let Some(i) = self.index_of(s) {
                mask.insert(i);
            }
        }
        mask
    }

    pub fn full_mask(&self) -> VarMask {
        VarMask::full(self.variables.len())
    }

    fn survives(mask: &VarMask, (a, b): MonomialIndex) -> bool {
        mask.contains(a as usize) && mask.contains(b as usize)
    }

    /// All kernel binomials, sorted.
    pub fn binomials(&self) -> Vec<QuadraticBinomial> {
        let mut out = Vec::new();
        for class in &self.classes {
            for (i, &m) in class.iter().enumerate() {
                for &m2 in &class[i + 1..] {
                    out.push(self.binomial(m, m2));
                }
            }
        }
        out.sort();
        out
    }

    /// The verdict with the same witness the generator-by-generator
    /// restriction of [`Kernel::binomials`] would produce, without building it.
    pub fn classify(&self, mask: &VarMask) -> Classification {
        let mut toric: Option<(MonomialIndex, MonomialIndex)> = None;
        for class in &self.classes {
            let first_alive = Kernel::survives(mask, class[0]);
            if let Some(&other) = class[1..].iter().find(|&&m| Kernel::survives(mask, m) != first_alive) {
                let alive = if first_alive { class[0] } else { other };
                return Classification {
                    verdict: Verdict::NonToric,
                    witness: Some(RestrictedGenerator::Monomial(self.monomial(alive))),
                };
            }
            if first_alive && toric.is_none() {
                toric = Some((class[0], class[1]));
            }
        }
        match toric {
            Some((m, m2)) => Classification {
                verdict: Verdict::Toric,
                witness: Some(RestrictedGenerator::Binomial(self.binomial(m, m2))),
            },
            None => Classification::zero(),
        }
    }

    /// Just the verdict; the inner loop of the batch sweeps.
    pub fn verdict(&self, mask: &VarMask) -> Verdict {
        let mut toric = false;
        for class in &self.classes {
            let alive = class.iter().filter(|&&m| Kernel::survives(mask, m)).count();
            if alive > 0 && alive < class.len() {
                return Verdict::NonToric;
            }
            toric |= alive > 0;
        }
        if toric {
            Verdict::Toric
        } else {
            Verdict::Zero
        }
    }

    /// [`restrict_generators`] applied to this kernel, using the classes.
    pub fn restrict(&self, mask: &VarMask) -> Vec<RestrictedGenerator> {
        let mut out = Vec::new();
        for class in &self.classes {
            for (i, &m) in class.iter().enumerate() {
                for &m2 in &class[i + 1..] {
                    match (Kernel::survives(mask, m), Kernel::survives(mask, m2)) {
                        (true, true) => out.push((m, m2, RestrictedGenerator::Binomial(self.binomial(m, m2)))),
                        (true, false) => out.push((m, m2, RestrictedGenerator::Monomial(self.monomial(m)))),
                        (false, true) => out.push((m, m2, RestrictedGenerator::Monomial(self.monomial(m2)))),
                        (false, false) => {}
                    }
                }
            }
        }
        out.sort_by_key(|&(m, m2, _)| (m, m2));
        out.into_iter().map(|(_, _, g)| g).collect()
    }

    /// Binomials among surviving variables, i.e. the degree-2 kernel of the
    /// restricted monomial map.
    pub fn surviving_binomials(&self, mask: &VarMask) -> Vec<QuadraticBinomial> {
        let mut out = Vec::new();
        for class in &self.classes {
            let alive: Vec<MonomialIndex> = class.iter().copied().filter(|&m| Kernel::survives(mask, m)).collect();
            for (i, &m) in alive.iter().enumerate() {
                for &m2 in &alive[i + 1..] {
                    out.push(self.binomial(m, m2));
                }
            }
        }
        out.sort();
        out
    }

    /// Distinct images of degree-2 monomials in surviving variables.
    pub fn standard_monomial_count_deg2(&self, mask: &VarMask) -> usize {
        let c = mask.count();
        let collapsed: usize = self
            .classes
            .iter()
            .map(|class| class.iter().filter(|&&m| Kernel::survives(mask, m)).count().saturating_sub(1))
            .sum();
        c * (c + 1) / 2 - collapsed
    }

    /// Value of a generator at the point `P_I = sgn(I)`.
    pub fn evaluate_at_sign_point(&self, g: &RestrictedGenerator) -> i64 {
        let sign_of = |m: &PluckerMonomial| -> i64 {
            m.factors().iter().map(|s| self.index_of(s).map_or(0, |i| self.sign(i) as i64)).product()
        };
        match g {
            RestrictedGenerator::Binomial(b) => sign_of(&b.left) - b.relative_sign as i64 * sign_of(&b.right),
            RestrictedGenerator::Monomial(m) => sign_of(m),
        }
    }
}

/// All degree-2 kernel binomials of the monomial map, sorted.
pub fn degree2_kernel(field: &MatchingField, family: Family) -> Result<Vec<QuadraticBinomial>> {
    Ok(Kernel::build(field, family)?.binomials())
}

/// Sets the vanishing variables to zero in each generator: binomials with one
/// vanishing side become the other side, binomials with both sides vanishing
/// disappear.
pub fn restrict_generators(binomials: &[QuadraticBinomial], vanishing: &[Subset]) -> Vec<RestrictedGenerator> {
    let dead: std::collections::HashSet<&Subset> = vanishing.iter().collect();
    let alive = |m: &PluckerMonomial| m.factors().iter().all(|f| !dead.contains(f));
    binomials
        .iter()
        .filter_map(|b| match (alive(&b.left), alive(&b.right)) {
            (true, true) => Some(RestrictedGenerator::Binomial(b.clone())),
            (true, false) => Some(RestrictedGenerator::Monomial(b.left.clone())),
            (false, true) => Some(RestrictedGenerator::Monomial(b.right.clone())),
            (false, false) => None,
        })
        .collect()
}

/// Verdict of a restricted generating set: the first monomial witnesses
/// non-toricity, otherwise the first binomial witnesses toricity.
pub fn classify_generators(generators: &[RestrictedGenerator]) -> Classification {
    if let Some(m) = generators.iter().find(|g| matches!(g, RestrictedGenerator::Monomial(_))) {
        return Classification { verdict: Verdict::NonToric, witness: Some(m.clone()) };
    }
    match generators.first() {
        Some(b) => Classification { verdict: Verdict::Toric, witness: Some(b.clone()) },
        None => Classification::zero(),
    }
}

/// Certifies that no monomial lies in the ideal generated by `generators`:
/// every generator vanishes at the point `P_I = sgn(I)`, which no monomial does.
pub fn certify_monomial_free(kernel: &Kernel, generators: &[RestrictedGenerator]) -> bool {
    generators.iter().all(|g| matches!(g, RestrictedGenerator::Binomial(_)) && kernel.evaluate_at_sign_point(g) == 0)
}

/// Reference classification: full kernel, explicit restriction, explicit
/// certificate. The batch code paths use [`Kernel::classify`] instead.
pub fn classify_ideal(field: &MatchingField, family: Family, vanishing: &[Subset]) -> Result<Classification> {
    let kernel = Kernel::build(field, family)?;
    let generators = restrict_generators(&kernel.binomials(), vanishing);
    let result = classify_generators(&generators);
    if result.verdict.is_monomial_free() {
        assert!(certify_monomial_free(&kernel, &generators), "sign-point certificate failed for a monomial-free verdict");
    }
    Ok(result)
}

/// Number of distinct images of degree-2 monomials in the surviving variables.
pub fn standard_monomial_count_deg2(field: &MatchingField, family: Family, vanishing: &[Subset]) -> Result<usize> {
    let kernel = Kernel::build(field, family)?;
    let surviving: Vec<Subset> = family.variables().into_iter().filter(|s| !vanishing.contains(s)).collect();
    Ok(kernel.standard_monomial_count_deg2(&kernel.mask(&surviving)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{vanishing_sets_flag, vanishing_sets_grassmannian, Permutation};

    fn s(text: &str, n: usize) -> Subset {
        Subset::parse(text, n).unwrap()
    }

    fn mono(parts: &[&str], n: usize) -> PluckerMonomial {
        PluckerMonomial::new(parts.iter().map(|p| s(p, n)).collect())
    }

    fn gr_field(k: usize, n: usize, ell: usize) -> MatchingField {
        MatchingField::block_diagonal(k, n, ell).unwrap()
    }

    #[test]
    fn image_examples() {
        let f0 = gr_field(3, 5, 0);
        assert_eq!(monomial_image(&f0, &mono(&["135"], 5)).unwrap(), (vec![(1, 1), (2, 3), (3, 5)], 1));
        let f3 = gr_field(3, 5, 3);
        assert_eq!(monomial_image(&f3, &mono(&["145"], 5)).unwrap(), (vec![(1, 4), (2, 1), (3, 5)], -1));
        let flag = MatchingField::block_diagonal(2, 3, 0).unwrap();
        assert_eq!(monomial_image(&flag, &mono(&["2", "13"], 3)).unwrap(), (vec![(1, 1), (1, 2), (2, 3)], 1));
    }

    #[test]
    fn small_kernels() {
        let flag = MatchingField::block_diagonal(2, 3, 0).unwrap();
        assert_eq!(
            degree2_kernel(&flag, Family::Flag { n: 3 }).unwrap(),
            vec![QuadraticBinomial::new(mono(&["2", "13"], 3), mono(&["1", "23"], 3), 1)]
        );
        let gr = Family::Grassmannian { k: 2, n: 4 };
        assert_eq!(
            degree2_kernel(&gr_field(2, 4, 0), gr).unwrap(),
            vec![QuadraticBinomial::new(mono(&["13", "24"], 4), mono(&["14", "23"], 4), 1)]
        );
        let k1 = degree2_kernel(&gr_field(2, 4, 1), gr).unwrap();
        assert_eq!(k1.len(), 1);
        assert_eq!((&k1[0].left, &k1[0].right), (&mono(&["12", "34"], 4), &mono(&["13", "24"], 4)));
    }

    #[test]
    fn restriction_examples() {
        let flag = MatchingField::block_diagonal(2, 3, 0).unwrap();
        let kernel = degree2_kernel(&flag, Family::Flag { n: 3 }).unwrap();
        let v = Permutation::identity(3);
        let w = Permutation::parse("1,3,2").unwrap();
        let sets = vanishing_sets_flag(&v, &w).unwrap();
        assert_eq!(sets.vanishing, vec![s("2", 3), s("3", 3), s("23", 3)]);
        assert!(restrict_generators(&kernel, &sets.vanishing).is_empty());
        assert_eq!(restrict_generators(&kernel, &[]), kernel.iter().cloned().map(RestrictedGenerator::Binomial).collect::<Vec<_>>());

        let gr = Family::Grassmannian { k: 3, n: 5 };
        let sets = vanishing_sets_grassmannian(&s("135", 5), &s("245", 5)).unwrap();
        let restricted = restrict_generators(&degree2_kernel(&gr_field(3, 5, 3), gr).unwrap(), &sets.vanishing);
        assert!(restricted.contains(&RestrictedGenerator::Monomial(mono(&["135", "245"], 5))));
    }

    #[test]
    fn classify_examples() {
        let sets = vanishing_sets_flag(&Permutation::identity(3), &Permutation::parse("1,3,2").unwrap()).unwrap();
        let flag = MatchingField::block_diagonal(2, 3, 0).unwrap();
        assert_eq!(classify_ideal(&flag, Family::Flag { n: 3 }, &sets.vanishing).unwrap(), Classification::zero());

        let gr = Family::Grassmannian { k: 3, n: 5 };
        let sets = vanishing_sets_grassmannian(&s("135", 5), &s("245", 5)).unwrap();
        let c3 = classify_ideal(&gr_field(3, 5, 3), gr, &sets.vanishing).unwrap();
        assert_eq!(c3.verdict, Verdict::NonToric);
        assert_eq!(c3.witness.unwrap().to_string(), "P[135]*P[245]");
        let c0 = classify_ideal(&gr_field(3, 5, 0), gr, &sets.vanishing).unwrap();
        assert_eq!(c0.verdict, Verdict::Toric);
        assert_eq!(c0.witness.unwrap().to_string(), "P[135]*P[245] - P[145]*P[235]");
    }

    // Worked by hand: under B_1 the Schubert restriction at w = 35 keeps the
    // monomial P14*P25 (from P12*P45 - P14*P25), but P14 vanishes once v = 23,
    // and P24*P35 - P25*P34 survives intact.
    #[test]
    fn richardson_monomial_can_disappear() {
        let gr = Family::Grassmannian { k: 2, n: 5 };
        let field = gr_field(2, 5, 1);
        let schubert = vanishing_sets_grassmannian(&s("12", 5), &s("35", 5)).unwrap();
        let gens = restrict_generators(&degree2_kernel(&field, gr).unwrap(), &schubert.vanishing);
        assert!(gens.contains(&RestrictedGenerator::Monomial(mono(&["14", "25"], 5))));
        assert_eq!(classify_ideal(&field, gr, &schubert.vanishing).unwrap().verdict, Verdict::NonToric);

        let rich = vanishing_sets_grassmannian(&s("23", 5), &s("35", 5)).unwrap();
        let c = classify_ideal(&field, gr, &rich.vanishing).unwrap();
        assert_eq!(c.verdict, Verdict::Toric);
        assert_eq!(c.witness.unwrap().to_string(), "P[24]*P[35] - P[25]*P[34]");
    }

    #[test]
    fn standard_monomial_examples() {
        let gr = Family::Grassmannian { k: 2, n: 4 };
        assert_eq!(standard_monomial_count_deg2(&gr_field(2, 4, 0), gr, &[]).unwrap(), 20);
        assert_eq!(standard_monomial_count_deg2(&gr_field(2, 4, 1), gr, &[]).unwrap(), 20);
        let all_but_one: Vec<Subset> = gr.variables().into_iter().skip(1).collect();
        assert_eq!(standard_monomial_count_deg2(&gr_field(2, 4, 1), gr, &all_but_one).unwrap(), 1);
    }

    #[test]
    fn fast_paths_match_reference() {
        let cases: Vec<(MatchingField, Family)> = vec![
            (gr_field(2, 5, 2), Family::Grassmannian { k: 2, n: 5 }),
            (gr_field(3, 6, 2), Family::Grassmannian { k: 3, n: 6 }),
            (MatchingField::block_diagonal(3, 4, 1).unwrap(), Family::Flag { n: 4 }),
            (MatchingField::antidiagonal(3, 4).unwrap(), Family::Flag { n: 4 }),
        ];
        for (field, family) in cases {
            let kernel = Kernel::build(&field, family).unwrap();
            let binomials = kernel.binomials();
            let n = family.n();
            let pairs: Vec<(Vec<Subset>, Vec<Subset>)> = match family {
                Family::Grassmannian { k, .. } => {
                    let all = Subset::all_of_size(k, n);
                    let mut out = Vec::new();
                    for v in &all {
                        for w in &all {
                            if let Ok(sets) = vanishing_sets_grassmannian(v, w) {
                                out.push((sets.vanishing, sets.surviving));
                            }
                        }
                    }
                    out
                }
                Family::Flag { .. } => {
                    let all = Permutation::all(n);
                    let mut out = Vec::new();
                    for v in &all {
                        for w in &all {
                            if let Ok(sets) = vanishing_sets_flag(v, w) {
                                out.push((sets.vanishing, sets.surviving));
                            }
                        }
                    }
                    out
                }
            };
            for (vanishing, surviving) in pairs {
                let mask = kernel.mask(&surviving);
                let slow = restrict_generators(&binomials, &vanishing);
                assert_eq!(kernel.restrict(&mask), slow);
                let reference = classify_generators(&slow);
                assert_eq!(kernel.classify(&mask), reference);
                assert_eq!(kernel.verdict(&mask), reference.verdict);
            }
        }
    }

    #[test]
    fn sign_point_certificate() {
        let field = gr_field(3, 6, 2);
        let kernel = Kernel::build(&field, Family::Grassmannian { k: 3, n: 6 }).unwrap();
        let all: Vec<RestrictedGenerator> = kernel.binomials().into_iter().map(RestrictedGenerator::Binomial).collect();
        assert!(certify_monomial_free(&kernel, &all));
        let m = RestrictedGenerator::Monomial(kernel.monomial((0, 1)));
        assert_eq!(kernel.evaluate_at_sign_point(&m).abs(), 1);
        assert!(!certify_monomial_free(&kernel, &[m]));
    }

    #[test]
    fn varmask_basics() {
        let mut m = VarMask::empty(130);
        m.insert(0);
        m.insert(64);
        m.insert(129);
        assert!(m.contains(64) && !m.contains(65));
        assert_eq!(m.count(), 3);
        assert_eq!(VarMask::full(130).count(), 130);
    }
}
