//! Canonical-form arithmetic for graded-commutative polynomial algebras over F2.
//!
//! Elements are sums of [`Monomial`]s with coefficients in F2 (presence means
//! coefficient one), each monomial a multiset of Dyer-Lashof words together
//! with an optional exponent on the degree-zero translation class. Addition is
//! symmetric difference of term sets, so `a + a = 0` holds by construction.

use std::collections::BTreeSet;
use std::fmt;

use crate::dyer_lashof::DLWord;
use crate::{Error, Result};

/// Where a generator comes from in the model being built.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Origin {
    BaseComplex,
    SuspensionImage,
    TranslationClass,
}

/// A named generator of the underlying graded vector space.
///
/// Names are unique within one space model; base-complex generators of a
/// path-connected model have degree at least one, the lone degree-zero
/// generator of the `Q_0(X_+)` variant being the exception.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GradedGenerator {
    pub name: String,
    pub degree: u32,
    pub origin: Origin,
}

impl GradedGenerator {
    pub fn new(name: impl Into<String>, degree: u32) -> Self {
        GradedGenerator { name: name.into(), degree, origin: Origin::BaseComplex }
    }
}

/// A commutative monomial: a multiset of Dyer-Lashof words plus an integer
/// exponent on the translation class `T` (zero outside the `Q_0` variant).
///
/// Factors are kept sorted; multiplicities are at least one.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    factors: Vec<(DLWord, u32)>,
    translation: i64,
}

impl Monomial {
    pub fn unit() -> Self {
        Monomial { factors: Vec::new(), translation: 0 }
    }

    pub fn from_word(word: DLWord) -> Self {
        Monomial { factors: vec![(word, 1)], translation: 0 }
    }

    pub fn from_word_power(word: DLWord, mult: u32) -> Self {
        assert!(mult > 0);
        Monomial { factors: vec![(word, mult)], translation: 0 }
    }

    pub fn from_factors(mut factors: Vec<(DLWord, u32)>, translation: i64) -> Self {
        factors.retain(|(_, m)| *m > 0);
        factors.sort_by(|a, b| a.0.cmp(&b.0));
        // merge equal words
        let mut merged: Vec<(DLWord, u32)> = Vec::with_capacity(factors.len());
        for (w, m) in factors {
            match merged.last_mut() {
                Some((lw, lm)) if *lw == w => *lm += m,
                _ => merged.push((w, m)),
            }
        }
        Monomial { factors: merged, translation }
    }

    pub fn factors(&self) -> &[(DLWord, u32)] {
        &self.factors
    }

    pub fn translation(&self) -> i64 {
        self.translation
    }

    pub fn with_translation(mut self, translation: i64) -> Self {
        self.translation = translation;
        self
    }

    pub fn is_unit(&self) -> bool {
        self.factors.is_empty() && self.translation == 0
    }

    pub fn degree(&self) -> u32 {
        self.factors.iter().map(|(w, m)| w.degree() * m).sum()
    }

    /// Total number of word factors counted with multiplicity. Translation
    /// classes do not count as factors.
    pub fn total_multiplicity(&self) -> u32 {
        self.factors.iter().map(|(_, m)| m).sum()
    }

    /// A monomial is decomposable iff it has at least two word factors
    /// counted with multiplicity.
    pub fn is_decomposable(&self) -> bool {
        self.total_multiplicity() >= 2
    }

    /// The word `w` and power `m` when this monomial is `w^m`, i.e. has a
    /// single distinct factor.
    pub fn word_power(&self) -> Option<(&DLWord, u32)> {
        match self.factors.as_slice() {
            [(w, m)] => Some((w, *m)),
            _ => None,
        }
    }

    /// The bare generator when the monomial is a single word with empty
    /// index sequence and multiplicity one.
    pub fn single_generator(&self) -> Option<&GradedGenerator> {
        match self.word_power() {
            Some((w, 1)) if w.indices().is_empty() => Some(w.generator()),
            _ => None,
        }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut factors = self.factors.clone();
        factors.extend(other.factors.iter().cloned());
        Monomial::from_factors(factors, self.translation + other.translation)
    }

    /// Square root, when every factor multiplicity (and the translation
    /// exponent) is even.
    pub fn square_root(&self) -> Option<Monomial> {
        if self.translation % 2 != 0 {
            return None;
        }
        let mut factors = Vec::with_capacity(self.factors.len());
        for (w, m) in &self.factors {
            if m % 2 != 0 {
                return None;
            }
            factors.push((w.clone(), m / 2));
        }
        Some(Monomial { factors, translation: self.translation / 2 })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

// Fixed total order: degree first, then the flattened factor sequence
// lexicographically, then the translation exponent. Canonical output and row
// reduction both depend on this order staying put.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| cmp_flattened(&self.factors, &other.factors))
            .then_with(|| self.translation.cmp(&other.translation))
    }
}

// Lexicographic comparison of the factor sequences with multiplicities
// expanded, without materialising them.
fn cmp_flattened(a: &[(DLWord, u32)], b: &[(DLWord, u32)]) -> std::cmp::Ordering {
    use std::cmp::Ordering;
    let (mut i, mut j) = (0usize, 0usize);
    let (mut used_a, mut used_b) = (0u32, 0u32);
    loop {
        match (i < a.len(), j < b.len()) {
            (false, false) => return Ordering::Equal,
            (false, true) => return Ordering::Less,
            (true, false) => return Ordering::Greater,
            (true, true) => {
                let ord = a[i].0.cmp(&b[j].0);
                if ord != Ordering::Equal {
                    return ord;
                }
                let step = (a[i].1 - used_a).min(b[j].1 - used_b);
                used_a += step;
                used_b += step;
                if used_a == a[i].1 {
                    i += 1;
                    used_a = 0;
                }
                if used_b == b[j].1 {
                    j += 1;
                    used_b = 0;
                }
            }
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        let mut first = true;
        for (w, m) in &self.factors {
            for _ in 0..*m {
                if !first {
                    write!(f, "*")?;
                }
                write!(f, "{w}")?;
                first = false;
            }
        }
        if self.translation != 0 {
            if !first {
                write!(f, "*")?;
            }
            write!(f, "T[{}]", self.translation)?;
        }
        Ok(())
    }
}

/// An F2 linear combination of monomials, kept in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ClassExpr {
    terms: BTreeSet<Monomial>,
}

impl ClassExpr {
    pub fn zero() -> Self {
        ClassExpr::default()
    }

    pub fn unit() -> Self {
        ClassExpr::from_monomial(Monomial::unit())
    }

    pub fn from_monomial(m: Monomial) -> Self {
        let mut terms = BTreeSet::new();
        terms.insert(m);
        ClassExpr { terms }
    }

    pub fn from_word(w: DLWord) -> Self {
        ClassExpr::from_monomial(Monomial::from_word(w))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.terms.contains(m)
    }

    /// F2 addition: toggles the monomial in the term set.
    pub fn toggle(&mut self, m: Monomial) {
        if !self.terms.remove(&m) {
            self.terms.insert(m);
        }
    }

    pub fn add(&self, other: &ClassExpr) -> ClassExpr {
        let mut out = self.clone();
        for t in &other.terms {
            out.toggle(t.clone());
        }
        out
    }

    pub fn mul(&self, other: &ClassExpr) -> ClassExpr {
        let mut out = ClassExpr::zero();
        for a in &self.terms {
            for b in &other.terms {
                out.toggle(a.mul(b));
            }
        }
        out
    }

    /// Splits the term set by the decomposability predicate; the two parts
    /// sum back to the input.
    pub fn split_decomposable(&self) -> (ClassExpr, ClassExpr) {
        let mut dec = ClassExpr::zero();
        let mut ind = ClassExpr::zero();
        for t in &self.terms {
            if t.is_decomposable() {
                dec.toggle(t.clone());
            } else {
                ind.toggle(t.clone());
            }
        }
        (dec, ind)
    }

    /// Square root over F2: defined iff every term is a perfect square.
    pub fn square_root(&self) -> Option<ClassExpr> {
        let mut out = ClassExpr::zero();
        for t in &self.terms {
            out.toggle(t.square_root()?);
        }
        Some(out)
    }

    /// Common degree of all terms; `None` for zero or inhomogeneous sums.
    pub fn degree(&self) -> Option<u32> {
        let mut it = self.terms.iter().map(|m| m.degree());
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }
}

impl std::ops::Add for &ClassExpr {
    type Output = ClassExpr;
    fn add(self, rhs: &ClassExpr) -> ClassExpr {
        self.add(rhs)
    }
}

impl std::ops::Mul for &ClassExpr {
    type Output = ClassExpr;
    fn mul(self, rhs: &ClassExpr) -> ClassExpr {
        ClassExpr::mul(self, rhs)
    }
}

impl fmt::Display for ClassExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for t in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "{t}")?;
            first = false;
        }
        Ok(())
    }
}

/// How a parsed term's translation exponent is treated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TranslationPolicy {
    /// Translation factors are rejected (free models).
    Forbid,
    /// Each term is placed in the zero component: a missing `T[..]` factor is
    /// filled in as `-sum 2^{l(I)}` over the word factors, an explicit one is
    /// checked against that value.
    ZeroComponent,
}

/// Parses the shared expression grammar against a generator table.
///
/// ```text
/// expr   := '0' | '1' | term ('+' term)*
/// term   := factor ('*' factor)*
/// factor := ('Q[' int ']')* gen | 'T[' int ']'
/// gen    := identifier
/// ```
///
/// Every parsed word is rewritten to canonical form (Adem relations plus
/// instability), so the result is a well-formed [`ClassExpr`] over the model.
pub fn parse_expr(
    input: &str,
    lookup: &dyn Fn(&str) -> Option<GradedGenerator>,
    policy: TranslationPolicy,
) -> Result<ClassExpr> {
    let mut out = ClassExpr::zero();
    let trimmed = input.trim();
    if trimmed.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    if trimmed == "0" {
        return Ok(out);
    }
    for term in trimmed.split('+') {
        let parsed = parse_term(term.trim(), lookup, policy)?;
        out = out.add(&parsed);
    }
    Ok(out)
}

fn parse_term(
    term: &str,
    lookup: &dyn Fn(&str) -> Option<GradedGenerator>,
    policy: TranslationPolicy,
) -> Result<ClassExpr> {
    if term.is_empty() {
        return Err(Error::Parse("empty term".into()));
    }
    if term == "1" {
        return match policy {
            TranslationPolicy::Forbid => Ok(ClassExpr::unit()),
            TranslationPolicy::ZeroComponent => Ok(ClassExpr::unit()),
        };
    }
    let mut product = ClassExpr::unit();
    let mut explicit_translation: Option<i64> = None;
    for factor in term.split('*') {
        let factor = factor.trim();
        if factor.is_empty() {
            return Err(Error::Parse(format!("empty factor in term `{term}`")));
        }
        if let Some(rest) = factor.strip_prefix("T[") {
            let inner = rest
                .strip_suffix(']')
                .ok_or_else(|| Error::Parse(format!("unterminated `T[` in `{factor}`")))?;
            let n: i64 = inner
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad translation exponent `{inner}`")))?;
            if policy == TranslationPolicy::Forbid {
                return Err(Error::Parse(format!(
                    "translation class `{factor}` is not valid in a free model"
                )));
            }
            *explicit_translation.get_or_insert(0) += n;
            continue;
        }
        let word = parse_word(factor, lookup)?;
        product = product.mul(&crate::dyer_lashof::admissibilize(&word));
    }
    match policy {
        TranslationPolicy::Forbid => Ok(product),
        TranslationPolicy::ZeroComponent => {
            let mut out = ClassExpr::zero();
            for m in product.terms() {
                let weight: i64 =
                    m.factors().iter().map(|(w, mult)| (1i64 << w.length()) * *mult as i64).sum();
                match explicit_translation {
                    None => out.toggle(m.clone().with_translation(-weight)),
                    Some(n) => {
                        if weight + n != 0 {
                            return Err(Error::Parse(format!(
                                "term `{term}` is not in the zero component: words have total \
                                 weight {weight} but translation is {n}"
                            )));
                        }
                        out.toggle(m.clone().with_translation(n));
                    }
                }
            }
            Ok(out)
        }
    }
}

fn parse_word(factor: &str, lookup: &dyn Fn(&str) -> Option<GradedGenerator>) -> Result<DLWord> {
    let mut rest = factor;
    let mut indices = Vec::new();
    while let Some(tail) = rest.strip_prefix("Q[") {
        let end = tail
            .find(']')
            .ok_or_else(|| Error::Parse(format!("unterminated `Q[` in `{factor}`")))?;
        let idx: i64 = tail[..end]
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad operation index `{}`", &tail[..end])))?;
        if idx < 0 {
            return Err(Error::Parse(format!("negative operation index `{idx}` in `{factor}`")));
        }
        indices.push(idx as u32);
        rest = tail[end + 1..].trim_start();
    }
    let name = rest.trim();
    if name.is_empty() {
        return Err(Error::Parse(format!("missing generator name in `{factor}`")));
    }
    if !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
        || !name.chars().next().unwrap().is_ascii_alphabetic()
    {
        return Err(Error::Parse(format!("`{name}` is not a valid generator name")));
    }
    let generator =
        lookup(name).ok_or_else(|| Error::Parse(format!("unknown generator `{name}`")))?;
    Ok(DLWord::new(generator, indices))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dyer_lashof::DLWord;

    fn gen(name: &str, degree: u32) -> GradedGenerator {
        GradedGenerator::new(name, degree)
    }

    fn lookup_g3(name: &str) -> Option<GradedGenerator> {
        (name == "g3").then(|| gen("g3", 3))
    }

    fn word(name: &str, degree: u32, idx: &[u32]) -> DLWord {
        DLWord::new(gen(name, degree), idx.to_vec())
    }

    #[test]
    fn square_of_generator() {
        let g = ClassExpr::from_word(word("g3", 3, &[]));
        let sq = g.mul(&g);
        assert_eq!(sq.to_string(), "g3*g3");
        assert_eq!(sq.square_root(), Some(g));
    }

    #[test]
    fn frobenius_on_sums() {
        let x = ClassExpr::from_word(word("x", 2, &[]));
        let y = ClassExpr::from_word(word("y", 2, &[]));
        let s = x.add(&y);
        let sq = s.mul(&s);
        assert_eq!(sq, x.mul(&x).add(&y.mul(&y)));
    }

    #[test]
    fn addition_is_involutive() {
        let x = ClassExpr::from_word(word("x", 2, &[5]));
        assert!(x.add(&x).is_zero());
    }

    #[test]
    fn decomposable_split() {
        let two = ClassExpr::from_word(word("g3", 3, &[]))
            .mul(&ClassExpr::from_word(word("g3", 3, &[8])));
        let (dec, ind) = two.split_decomposable();
        assert_eq!(dec, two);
        assert!(ind.is_zero());

        let single = ClassExpr::from_word(word("g3", 3, &[15]));
        let (dec, ind) = single.split_decomposable();
        assert!(dec.is_zero());
        assert_eq!(ind, single);
        assert_eq!(dec.add(&ind), single);
    }

    #[test]
    fn square_root_needs_every_term_square() {
        let a = Monomial::from_word_power(word("a1", 4, &[]), 2);
        let b = Monomial::from_word(word("a2", 5, &[]));
        let m = a.mul(&b); // a1^2 * a2
        assert_eq!(m.square_root(), None);

        let q4 = Monomial::from_word_power(word("g3", 3, &[4]), 2);
        assert_eq!(q4.square_root(), Some(Monomial::from_word(word("g3", 3, &[4]))));

        let g4 = Monomial::from_word_power(word("g3", 3, &[]), 4);
        assert_eq!(g4.square_root(), Some(Monomial::from_word_power(word("g3", 3, &[]), 2)));
    }

    #[test]
    fn parse_round_trip() {
        let e = parse_expr("Q[10]Q[5]g3 + Q[9]Q[5]g3", &lookup_g3, TranslationPolicy::Forbid)
            .unwrap();
        let printed = e.to_string();
        let back = parse_expr(&printed, &lookup_g3, TranslationPolicy::Forbid).unwrap();
        assert_eq!(e, back);
        assert_eq!(parse_expr("0", &lookup_g3, TranslationPolicy::Forbid).unwrap(),
                   ClassExpr::zero());
    }

    #[test]
    fn parse_rejects_unknown_generator() {
        let err = parse_expr("Q[4]h7", &lookup_g3, TranslationPolicy::Forbid).unwrap_err();
        assert!(err.to_string().contains("h7"));
    }

    #[test]
    fn canonical_order_is_stable() {
        let e = parse_expr("Q[9]Q[5]g3 + g3*Q[8]g3*g3", &lookup_g3, TranslationPolicy::Forbid)
            .unwrap();
        assert_eq!(e.to_string(), "g3*g3*Q[8]g3 + Q[9]Q[5]g3");
    }
}
