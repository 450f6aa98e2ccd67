//! Dyer-Lashof words: admissibility, excess, index conversion, loop-bound
//! legality, instability and Adem rewriting.
//!
//! Words are stored in upper (Kudo-Araki) form `Q^{i_1}..Q^{i_s} x` with
//! `indices[0]` outermost; lower indices are always derived, never stored.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::{Mutex, OnceLock};

use crate::f2poly::{ClassExpr, GradedGenerator, Monomial};

/// An iterated operation `Q^{i_1}..Q^{i_s}` applied to a named generator.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DLWord {
    generator: GradedGenerator,
    indices: Vec<u32>,
}

/// Excess of a word; the empty word has infinite excess.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Excess {
    Infinite,
    Finite(i64),
}

impl Excess {
    pub fn is_positive(self) -> bool {
        match self {
            Excess::Infinite => true,
            Excess::Finite(e) => e > 0,
        }
    }

    pub fn is_zero(self) -> bool {
        matches!(self, Excess::Finite(0))
    }
}

impl DLWord {
    pub fn new(generator: GradedGenerator, indices: Vec<u32>) -> Self {
        DLWord { generator, indices }
    }

    pub fn bare(generator: GradedGenerator) -> Self {
        DLWord { generator, indices: Vec::new() }
    }

    pub fn generator(&self) -> &GradedGenerator {
        &self.generator
    }

    pub fn indices(&self) -> &[u32] {
        &self.indices
    }

    pub fn length(&self) -> u32 {
        self.indices.len() as u32
    }

    /// `deg Q^I x = deg x + sum of upper indices`.
    pub fn degree(&self) -> u32 {
        self.generator.degree + self.indices.iter().sum::<u32>()
    }

    /// `I` is admissible iff `i_j <= 2 i_{j+1}` for all adjacent pairs.
    pub fn is_admissible(&self) -> bool {
        self.indices.windows(2).all(|w| w[0] <= 2 * w[1])
    }

    /// `ex(Q^I x) = i_1 - (i_2 + .. + i_s + deg x)`.
    pub fn excess(&self) -> Excess {
        match self.indices.split_first() {
            None => Excess::Infinite,
            Some((first, rest)) => Excess::Finite(
                *first as i64 - rest.iter().sum::<u32>() as i64 - self.generator.degree as i64,
            ),
        }
    }

    /// Lower indices `e_j = i_j - deg(Q^{i_{j+1}}..Q^{i_s} x)`, outermost
    /// first, computed right to left.
    pub fn lower_indices(&self) -> Vec<i64> {
        let mut out = vec![0i64; self.indices.len()];
        let mut suffix_degree = self.generator.degree as i64;
        for j in (0..self.indices.len()).rev() {
            out[j] = self.indices[j] as i64 - suffix_degree;
            suffix_degree += self.indices[j] as i64;
        }
        out
    }

    /// Least `L` such that the word is legal in an `Omega^L`-space: a lower
    /// operation `Q_e` needs `e < L`, so `min_loops = 1 + max(lower)` (and 1
    /// for the empty word).
    pub fn min_loops(&self) -> u32 {
        let max = self.lower_indices().into_iter().max().unwrap_or(0).max(0);
        1 + max as u32
    }

    pub fn prepend(&self, index: u32) -> DLWord {
        let mut indices = Vec::with_capacity(self.indices.len() + 1);
        indices.push(index);
        indices.extend_from_slice(&self.indices);
        DLWord { generator: self.generator.clone(), indices }
    }
}

impl fmt::Display for DLWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in &self.indices {
            write!(f, "Q[{i}]")?;
        }
        write!(f, "{}", self.generator.name)
    }
}

/// Parity of the binomial coefficient `C(n, k)` for `k >= 0`, allowing
/// negative `n` via the generating-function convention: `n` is read by its
/// two's-complement binary expansion, so `C(n, k)` is odd iff the bits of `k`
/// sit inside the bits of `n`.
pub fn odd_binomial(n: i64, k: i64) -> bool {
    k >= 0 && (n & k) == k
}

/// Adem expansion of an inadmissible adjacent pair `Q^r Q^s` with `r > 2s`:
/// `Q^r Q^s = sum_i C(i-s-1, 2i-r) Q^{r+s-i} Q^i`, returned as the F2 set of
/// surviving pairs. Memoised; the upper-form relation does not depend on the
/// degree below.
pub fn adem_pair(r: u32, s: u32) -> Vec<(u32, u32)> {
    assert!(r > 2 * s, "adem_pair needs an inadmissible pair");
    static CACHE: OnceLock<Mutex<HashMap<(u32, u32), Vec<(u32, u32)>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&(r, s)) {
        return hit.clone();
    }
    let mut out = Vec::new();
    for i in 0..=(r + s) {
        let n = i as i64 - s as i64 - 1;
        let k = 2 * i as i64 - r as i64;
        if odd_binomial(n, k) {
            out.push((r + s - i, i));
        }
    }
    cache.lock().unwrap().insert((r, s), out.clone());
    out
}

/// Rewrites an index sequence as an F2 set of admissible sequences, expanding
/// the leftmost inadmissible pair first.
pub fn admissibilize_indices(indices: &[u32]) -> BTreeSet<Vec<u32>> {
    let mut result = BTreeSet::new();
    let mut work = vec![indices.to_vec()];
    let mut guard = 0usize;
    while let Some(seq) = work.pop() {
        guard += 1;
        assert!(guard < 2_000_000, "Adem rewriting exceeded the iteration bound");
        match seq.windows(2).position(|w| w[0] > 2 * w[1]) {
            None => {
                if !result.remove(&seq) {
                    result.insert(seq);
                }
            }
            Some(j) => {
                for (a, b) in adem_pair(seq[j], seq[j + 1]) {
                    let mut next = seq.clone();
                    next[j] = a;
                    next[j + 1] = b;
                    work.push(next);
                }
            }
        }
    }
    result
}

/// Evaluates instability on an admissible word: with nondecreasing lower
/// indices, a negative lower index kills the word, each zero squares the part
/// to its right, and the positive tail is a polynomial generator.
pub fn normalize(word: &DLWord) -> ClassExpr {
    debug_assert!(word.is_admissible());
    let lower = word.lower_indices();
    if lower.iter().any(|e| *e < 0) {
        return ClassExpr::zero();
    }
    let zeros = lower.iter().filter(|e| **e == 0).count() as u32;
    let tail = DLWord::new(word.generator.clone(), word.indices[zeros as usize..].to_vec());
    ClassExpr::from_monomial(Monomial::from_word_power(tail, 1 << zeros))
}

/// Full canonicalisation of a word: Adem rewriting to admissible form, then
/// instability. Acts as the identity on admissible words of positive excess.
pub fn admissibilize(word: &DLWord) -> ClassExpr {
    if word.is_admissible() {
        return normalize(word);
    }
    let mut out = ClassExpr::zero();
    for seq in admissibilize_indices(&word.indices) {
        let w = DLWord::new(word.generator.clone(), seq);
        out = out.add(&normalize(&w));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::f2poly::GradedGenerator;

    fn g3() -> GradedGenerator {
        GradedGenerator::new("g3", 3)
    }

    fn w(indices: &[u32]) -> DLWord {
        DLWord::new(g3(), indices.to_vec())
    }

    #[test]
    fn lower_index_conversion() {
        assert_eq!(w(&[15]).lower_indices(), vec![12]);
        assert_eq!(w(&[8]).lower_indices(), vec![5]);
        assert_eq!(w(&[]).lower_indices(), Vec::<i64>::new());
        assert_eq!(w(&[10, 5]).lower_indices(), vec![2, 2]);
    }

    #[test]
    fn min_loops_matches_lower_indices() {
        assert_eq!(w(&[15]).min_loops(), 13);
        assert_eq!(w(&[10, 5]).min_loops(), 3);
        assert_eq!(w(&[]).min_loops(), 1);
    }

    #[test]
    fn excess_is_first_lower_index() {
        for idx in [vec![15], vec![10, 5], vec![9, 6], vec![9, 5]] {
            let word = w(&idx);
            assert!(word.is_admissible());
            assert_eq!(word.excess(), Excess::Finite(word.lower_indices()[0]));
        }
        assert_eq!(w(&[]).excess(), Excess::Infinite);
    }

    #[test]
    fn admissible_iff_lower_nondecreasing() {
        for idx in [vec![15], vec![10, 5], vec![9, 6], vec![20, 5], vec![8, 4, 2]] {
            let word = w(&idx);
            let lower = word.lower_indices();
            let nondecreasing = lower.windows(2).all(|p| p[0] <= p[1]);
            assert_eq!(word.is_admissible(), nondecreasing, "word {word}");
        }
    }

    #[test]
    fn normalize_excess_zero_gives_square() {
        // Q9 Q6 g3 has lower indices (0, 3): the square of Q6 g3.
        let e = normalize(&w(&[9, 6]));
        assert_eq!(e.to_string(), "Q[6]g3*Q[6]g3");
        // Q3 g3 = g3^2.
        assert_eq!(normalize(&w(&[3])).to_string(), "g3*g3");
        // Strictly unstable words vanish.
        assert!(normalize(&w(&[2])).is_zero());
        assert!(normalize(&w(&[6, 4])).is_zero()); // lower (-1, 1)
    }

    #[test]
    fn normalize_preserves_degree() {
        for idx in [vec![9, 6], vec![3], vec![10, 5], vec![7, 4]] {
            let word = w(&idx);
            let e = normalize(&word);
            if let Some(d) = e.degree() {
                assert_eq!(d, word.degree());
            }
        }
    }

    // Independent evaluation of the Adem sum for one pair, used as the oracle
    // for the rewriting path.
    fn adem_oracle(r: u32, s: u32) -> BTreeSet<Vec<u32>> {
        let mut out = BTreeSet::new();
        for i in 0..=(r + s) {
            if odd_binomial(i as i64 - s as i64 - 1, 2 * i as i64 - r as i64) {
                let seq = vec![r + s - i, i];
                if !out.remove(&seq) {
                    out.insert(seq);
                }
            }
        }
        out
    }

    #[test]
    fn adem_rewrite_matches_direct_evaluation() {
        for r in 0..=24u32 {
            for s in 0..=11u32 {
                if r > 2 * s {
                    let rewritten = admissibilize_indices(&[r, s]);
                    let direct = adem_oracle(r, s);
                    assert_eq!(rewritten, direct, "Q^{r} Q^{s}");
                    for seq in &rewritten {
                        assert!(seq.windows(2).all(|p| p[0] <= 2 * p[1]));
                    }
                }
            }
        }
    }

    #[test]
    fn adem_fixed_point_and_idempotence() {
        let adm = w(&[10, 5]);
        assert_eq!(admissibilize(&adm), ClassExpr::from_word(adm.clone()));
        // Rewriting an inadmissible word and re-canonicalising its output
        // words changes nothing.
        let bad = w(&[20, 5]);
        let once = admissibilize(&bad);
        let mut again = ClassExpr::zero();
        for m in once.terms() {
            let mut factor_expr = ClassExpr::unit();
            for (word, mult) in m.factors() {
                for _ in 0..*mult {
                    factor_expr = factor_expr.mul(&admissibilize(word));
                }
            }
            again = again.add(&factor_expr);
        }
        assert_eq!(once, again);
    }

    #[test]
    fn adem_all_even_binomials_vanish() {
        // Q^3 Q^1: every binomial in the expansion is even.
        assert!(admissibilize_indices(&[3, 1]).is_empty());
    }

    #[test]
    fn adem_preserves_degree() {
        for (r, s) in [(20u32, 5u32), (13, 4), (9, 2), (17, 8)] {
            for seq in admissibilize_indices(&[r, s]) {
                assert_eq!(seq.iter().sum::<u32>(), r + s);
            }
        }
    }

    #[test]
    fn negative_binomial_convention() {
        // C(-1, k) is odd for every k >= 0.
        for k in 0..10 {
            assert!(odd_binomial(-1, k));
        }
        // C(-2, k) is odd iff k is even.
        for k in 0..10i64 {
            assert_eq!(odd_binomial(-2, k), k % 2 == 0);
        }
        assert!(!odd_binomial(7, -1));
        assert!(odd_binomial(-4, 4)); // C(-4,4) = 35
    }
}
