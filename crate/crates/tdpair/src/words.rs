//! Alternating words in the idempotent generators and their combinatorics.
//!
//! A word is a product of generators `e_i` (nonstarred) and `e*_i` (starred)
//! whose letters alternate between the two kinds. The central notion is the
//! *zigzag* condition on the index sequence:
//!
//! - no interior index lies between its two neighbours, and
//! - no two consecutive interior indices both lie between their outer
//!   neighbours,
//!
//! where "r is between the ordered pair (i, j)" means `i >= r > j` or
//! `i <= r < j`. Zigzag words are equivalently characterized by sign
//! alternation of consecutive index differences together with a monotonicity
//! condition on their absolute values, and every nonconstant zigzag word has a
//! unique peak position where the difference profile turns from strictly
//! increasing to weakly decreasing.
//!
//! *Lifting* words (nontrivial zigzag words ending in an index-0 generator)
//! with no interior index 0 are counted by binomial coefficients; the counting
//! bijection onto subsets of {1..d} and its inverse live here too.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("generator index {index} exceeds diameter {d}")]
    IndexOutOfRange { index: usize, d: usize },
    #[error("the requested end generator has inconsistent starredness for this length")]
    ParityMismatch,
    #[error("word is constant; no peak index exists")]
    ConstantWord,
    #[error("word is not zigzag")]
    NotZigzag,
    #[error("word is not a nonredundant lifting word")]
    NotNonredundantLifting,
    #[error("subset element {0} is outside 1..=d")]
    BadSubset(usize),
}

/// One idempotent generator: starred or not, with an index in 0..=d.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Generator {
    pub starred: bool,
    pub index: usize,
}

impl Generator {
    pub fn plain(index: usize) -> Self {
        Generator {
            starred: false,
            index,
        }
    }

    pub fn starred(index: usize) -> Self {
        Generator {
            starred: true,
            index,
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.starred {
            write!(f, "e*_{}", self.index)
        } else {
            write!(f, "e_{}", self.index)
        }
    }
}

/// True iff `r` is between the ordered pair `(i, j)`.
pub fn is_between(i: i64, r: i64, j: i64) -> bool {
    (i >= r && r > j) || (i <= r && r < j)
}

/// An alternating word over diameter d, stored as the starredness of the
/// first letter plus the index sequence. The empty sequence is the trivial
/// word (the algebra identity); it carries no starredness of its own.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    d: usize,
    start_starred: bool,
    indices: Vec<usize>,
}

impl Word {
    pub fn new(d: usize, start_starred: bool, indices: Vec<usize>) -> Result<Self, WordError> {
        if let Some(&index) = indices.iter().find(|&&i| i > d) {
            return Err(WordError::IndexOutOfRange { index, d });
        }
        Ok(Word {
            d,
            start_starred: if indices.is_empty() {
                false
            } else {
                start_starred
            },
            indices,
        })
    }

    pub fn trivial(d: usize) -> Self {
        Word {
            d,
            start_starred: false,
            indices: Vec::new(),
        }
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn start_starred(&self) -> bool {
        self.start_starred
    }

    /// The k-th letter, 0-based.
    pub fn letter(&self, k: usize) -> Generator {
        Generator {
            starred: self.start_starred ^ (k % 2 == 1),
            index: self.indices[k],
        }
    }

    pub fn letters(&self) -> impl Iterator<Item = Generator> + '_ {
        (0..self.len()).map(|k| self.letter(k))
    }

    pub fn first(&self) -> Option<Generator> {
        (!self.is_empty()).then(|| self.letter(0))
    }

    pub fn last(&self) -> Option<Generator> {
        (!self.is_empty()).then(|| self.letter(self.len() - 1))
    }

    /// Map every index i to d - i, keeping starredness.
    pub fn reflected(&self) -> Self {
        Word {
            d: self.d,
            start_starred: self.start_starred,
            indices: self.indices.iter().map(|&i| self.d - i).collect(),
        }
    }

    fn diffs(&self) -> Vec<i64> {
        self.indices
            .windows(2)
            .map(|w| (w[0] as i64 - w[1] as i64).abs())
            .collect()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.letters().map(|g| g.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

// ---- Zigzag classification ----

/// The betweenness form of the zigzag condition. Words of length <= 2 are
/// zigzag vacuously, and constant words are always zigzag.
pub fn is_zigzag(w: &Word) -> bool {
    let x: Vec<i64> = w.indices.iter().map(|&i| i as i64).collect();
    let n = x.len();
    // (i): no interior index between its neighbours.
    for k in 1..n.saturating_sub(1) {
        if is_between(x[k - 1], x[k], x[k + 1]) {
            return false;
        }
    }
    // (ii): never two consecutive indices both between their outer neighbours.
    for k in 2..n.saturating_sub(1) {
        if is_between(x[k - 2], x[k - 1], x[k + 1]) && is_between(x[k - 2], x[k], x[k + 1]) {
            return false;
        }
    }
    true
}

/// The sign-and-monotonicity form of the zigzag condition: consecutive index
/// differences have opposite sign (product <= 0), and any strict growth of
/// the difference profile forces the whole prefix profile to be strictly
/// increasing and positive. Agrees with [`is_zigzag`] on every word.
pub fn is_zigzag_by_signs(w: &Word) -> bool {
    let x: Vec<i64> = w.indices.iter().map(|&i| i as i64).collect();
    let n = x.len();
    for k in 1..n.saturating_sub(1) {
        if (x[k - 1] - x[k]) * (x[k] - x[k + 1]) > 0 {
            return false;
        }
    }
    let diffs = w.diffs();
    for k in 1..n.saturating_sub(1) {
        if diffs[k - 1] < diffs[k] {
            // The whole profile up to this point must be strictly increasing
            // starting from a positive first difference.
            if diffs[0] == 0 {
                return false;
            }
            for j in 1..=k {
                if diffs[j - 1] >= diffs[j] {
                    return false;
                }
            }
        }
    }
    true
}

/// The unique position p (2 <= p <= n, 1-based) where the absolute-difference
/// profile of a nonconstant zigzag word turns from strictly increasing to
/// weakly decreasing.
pub fn peak_index(w: &Word) -> Result<usize, WordError> {
    if !is_zigzag(w) {
        return Err(WordError::NotZigzag);
    }
    if word_flags(w).constant {
        return Err(WordError::ConstantWord);
    }
    let diffs = w.diffs();
    debug_assert!(diffs[0] > 0, "nonconstant zigzag words start moving");
    let mut run = 1;
    while run < diffs.len() && diffs[run] > diffs[run - 1] {
        run += 1;
    }
    Ok(run + 1)
}

/// Flags from the standard word taxonomy. `redundant` is only defined for
/// lifting words and is `None` otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WordFlags {
    pub constant: bool,
    pub nonrepeating: bool,
    pub lifting: bool,
    pub redundant: Option<bool>,
}

pub fn word_flags(w: &Word) -> WordFlags {
    let idx = &w.indices;
    let constant = idx.windows(2).all(|p| p[0] == p[1]);
    let nonrepeating = idx.windows(2).all(|p| p[0] != p[1]);
    let lifting = !w.is_trivial() && idx.last() == Some(&0) && is_zigzag(w);
    let redundant = lifting.then(|| idx[..idx.len() - 1].contains(&0));
    WordFlags {
        constant,
        nonrepeating,
        lifting,
        redundant,
    }
}

/// Redundancy query; errors on words that are not lifting.
pub fn is_redundant(w: &Word) -> Result<bool, WordError> {
    word_flags(w)
        .redundant
        .ok_or(WordError::NotNonredundantLifting)
}

// ---- Enumeration ----

/// All words of length n over diameter d that begin with `begin` (and end
/// with `end` when given), in lexicographic order of index sequences.
pub fn enumerate_words(
    d: usize,
    n: usize,
    begin: Generator,
    end: Option<Generator>,
) -> Result<Vec<Word>, WordError> {
    if begin.index > d {
        return Err(WordError::IndexOutOfRange {
            index: begin.index,
            d,
        });
    }
    if let Some(e) = end {
        if e.index > d {
            return Err(WordError::IndexOutOfRange { index: e.index, d });
        }
        // The last letter's starredness is forced by alternation.
        if n == 0 || e.starred != (begin.starred ^ (n % 2 == 0)) {
            return Err(WordError::ParityMismatch);
        }
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let pinned_last = end.map(|e| e.index);
    if n == 1 {
        let fits = pinned_last.is_none_or(|last| last == begin.index);
        return Ok(if fits {
            vec![Word {
                d,
                start_starred: begin.starred,
                indices: vec![begin.index],
            }]
        } else {
            Vec::new()
        });
    }

    fn rec(
        d: usize,
        n: usize,
        indices: &mut Vec<usize>,
        pinned_last: Option<usize>,
        start_starred: bool,
        out: &mut Vec<Word>,
    ) {
        if indices.len() == n {
            out.push(Word {
                d,
                start_starred,
                indices: indices.clone(),
            });
            return;
        }
        if indices.len() == n - 1 {
            if let Some(last) = pinned_last {
                indices.push(last);
                rec(d, n, indices, pinned_last, start_starred, out);
                indices.pop();
                return;
            }
        }
        for c in 0..=d {
            indices.push(c);
            rec(d, n, indices, pinned_last, start_starred, out);
            indices.pop();
        }
    }
    let mut out = Vec::new();
    let mut indices = vec![begin.index];
    rec(d, n, &mut indices, pinned_last, begin.starred, &mut out);
    Ok(out)
}

/// All zigzag words of length n beginning with `begin` (ending with `end`
/// when given).
pub fn enumerate_zigzag_words(
    d: usize,
    n: usize,
    begin: Generator,
    end: Option<Generator>,
) -> Result<Vec<Word>, WordError> {
    Ok(enumerate_words(d, n, begin, end)?
        .into_iter()
        .filter(is_zigzag)
        .collect())
}

/// The nonredundant lifting words beginning with index s (starred or not),
/// in lexicographic order of index sequences. There are exactly C(d, s).
///
/// The search walks zigzag extensions only: index 0 closes a word, a repeated
/// index can never reach 0 afterwards (the zigzag condition freezes the tail
/// once an index repeats), and lengths beyond 2d + 2 are impossible because
/// the difference profile of such a word is strictly increasing.
pub fn enumerate_nonredundant_lifting(d: usize, s: usize, start_starred: bool) -> Vec<Word> {
    assert!(s <= d, "start index exceeds diameter");
    let mut out = Vec::new();
    if s == 0 {
        out.push(Word {
            d,
            start_starred,
            indices: vec![0],
        });
        return out;
    }
    let cap = 2 * d + 2;
    let mut indices = vec![s];

    fn extends_zigzag(indices: &[usize], c: usize) -> bool {
        let m = indices.len();
        let x = |k: usize| indices[k] as i64;
        let c = c as i64;
        if m >= 2 && is_between(x(m - 2), x(m - 1), c) {
            return false;
        }
        if m >= 3 && is_between(x(m - 3), x(m - 2), c) && is_between(x(m - 3), x(m - 1), c) {
            return false;
        }
        true
    }

    fn rec(
        d: usize,
        cap: usize,
        indices: &mut Vec<usize>,
        start_starred: bool,
        out: &mut Vec<Word>,
    ) {
        if indices.len() >= cap {
            return;
        }
        for c in 0..=d {
            if c == *indices.last().expect("nonempty") || !extends_zigzag(indices, c) {
                continue;
            }
            indices.push(c);
            if c == 0 {
                out.push(Word {
                    d,
                    start_starred,
                    indices: indices.clone(),
                });
            } else {
                rec(d, cap, indices, start_starred, out);
            }
            indices.pop();
        }
    }
    rec(d, cap, &mut indices, start_starred, &mut out);
    out
}

// ---- The subset bijection ----

/// The image of a nonredundant lifting word under the counting bijection:
/// with X+ the indices at positions i (2 <= i <= n-1) with n - i odd and
/// X- those at positions i (1 <= i <= n-2) with n - i even, the image is
/// `X+ union ({1..first} \ X-)`; its cardinality is the first index.
pub fn subset_bijection(w: &Word) -> Result<BTreeSet<usize>, WordError> {
    let flags = word_flags(w);
    if !flags.lifting || flags.redundant != Some(false) {
        return Err(WordError::NotNonredundantLifting);
    }
    let idx = &w.indices;
    let n = idx.len();
    let mut xplus = BTreeSet::new();
    let mut xminus = BTreeSet::new();
    for i in 2..n {
        // positions i with 2 <= i <= n-1 and n - i odd
        if (n - i) % 2 == 1 {
            xplus.insert(idx[i - 1]);
        }
    }
    for i in 1..=n.saturating_sub(2) {
        // positions i with 1 <= i <= n-2 and n - i even
        if (n - i) % 2 == 0 {
            xminus.insert(idx[i - 1]);
        }
    }
    let mut image: BTreeSet<usize> = xplus;
    for v in 1..=idx[0] {
        if !xminus.contains(&v) {
            image.insert(v);
        }
    }
    Ok(image)
}

/// Inverse of [`subset_bijection`]: rebuild the unique nonredundant lifting
/// word with image `set`. The first index is `|set|`; elements above it give
/// the ascending chain at the later odd-distance positions, and the missing
/// elements below it give the descending chain in between.
pub fn inverse_bijection(
    d: usize,
    set: &BTreeSet<usize>,
    start_starred: bool,
) -> Result<Word, WordError> {
    if let Some(&v) = set.iter().find(|&&v| v == 0 || v > d) {
        return Err(WordError::BadSubset(v));
    }
    let s = set.len();
    if s == 0 {
        return Ok(Word {
            d,
            start_starred,
            indices: vec![0],
        });
    }
    let xplus: Vec<usize> = set.iter().copied().filter(|&v| v > s).collect();
    let xminus: Vec<usize> = (1..=s).rev().filter(|v| !set.contains(v)).collect();
    let m = xplus.len();
    debug_assert_eq!(m, xminus.len());

    let indices = if set.contains(&s) {
        // Even length n = 2m + 2: s, then the descending and ascending chains
        // interleaved, then the closing 0.
        let mut idx = Vec::with_capacity(2 * m + 2);
        idx.push(s);
        for k in 0..m {
            idx.push(xminus[k]);
            idx.push(xplus[k]);
        }
        idx.push(0);
        idx
    } else {
        // Odd length n = 2m + 1: here s itself heads the descending chain.
        debug_assert_eq!(xminus.first(), Some(&s));
        let mut idx = Vec::with_capacity(2 * m + 1);
        idx.push(s);
        for k in 0..m {
            idx.push(xplus[k]);
            if k + 1 < m {
                idx.push(xminus[k + 1]);
            }
        }
        idx.push(0);
        idx
    };
    let w = Word {
        d,
        start_starred,
        indices,
    };
    debug_assert_eq!(word_flags(&w).redundant, Some(false));
    Ok(w)
}

// ---- JSON ----

/// Wire form: `{"d":3,"start_starred":false,"indices":[2,1,3,0]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct WordJson {
    pub d: usize,
    pub start_starred: bool,
    pub indices: Vec<usize>,
}

impl Word {
    pub fn to_json(&self) -> WordJson {
        WordJson {
            d: self.d,
            start_starred: self.start_starred,
            indices: self.indices.clone(),
        }
    }

    pub fn from_json(json: &WordJson) -> Result<Self, WordError> {
        Word::new(json.d, json.start_starred, json.indices.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(d: usize, indices: &[usize]) -> Word {
        Word::new(d, false, indices.to_vec()).unwrap()
    }

    pub(crate) fn for_all_index_tuples(d: usize, n: usize, mut f: impl FnMut(&[usize])) {
        let mut idx = vec![0usize; n];
        loop {
            f(&idx);
            let mut k = n;
            loop {
                if k == 0 {
                    return;
                }
                k -= 1;
                if idx[k] < d {
                    idx[k] += 1;
                    idx[k + 1..].fill(0);
                    break;
                }
            }
        }
    }

    #[test]
    fn betweenness_cases() {
        assert!(is_between(0, 1, 2));
        assert!(is_between(3, 3, 6)); // i <= r < j with i = r allowed
        assert!(!is_between(5, 5, 5)); // needs strictness on one side
        assert!(is_between(6, 3, 0));
        assert!(!is_between(2, 0, 6));
        assert!(!is_between(0, 6, 6));
    }

    #[test]
    fn zigzag_examples() {
        // listed zigzag words of length 7
        assert!(is_zigzag(&w(1, &[0, 1, 0, 0, 0, 0, 0])));
        assert!(is_zigzag(&w(9, &[4, 3, 5, 2, 7, 0, 8])));
        assert!(is_zigzag(&w(9, &[3, 4, 1, 5, 0, 6, 2])));
        // 0,1,2 walks monotonically: the middle index is between its neighbours
        assert!(!is_zigzag(&w(2, &[0, 1, 2])));
        // short and constant words are zigzag
        assert!(is_zigzag(&Word::trivial(4)));
        assert!(is_zigzag(&w(5, &[3])));
        assert!(is_zigzag(&w(5, &[3, 5])));
        assert!(is_zigzag(&w(5, &[2, 2, 2, 2])));
    }

    #[test]
    fn sign_characterization_examples() {
        assert!(is_zigzag_by_signs(&w(9, &[3, 4, 1, 5, 0, 6, 2])));
        assert!(!is_zigzag_by_signs(&w(2, &[0, 1, 2])));
        assert!(is_zigzag_by_signs(&w(4, &[2, 2, 2])));
    }

    #[test]
    fn sign_characterization_agrees_small() {
        for d in 0..=3usize {
            for n in 0..=5usize {
                for_all_index_tuples(d, n, |idx| {
                    let word = w(d, idx);
                    assert_eq!(
                        is_zigzag(&word),
                        is_zigzag_by_signs(&word),
                        "disagreement on {idx:?}"
                    );
                });
            }
        }
    }

    #[test]
    fn peak_examples_from_length_seven_table() {
        let table: &[(&[usize], usize)] = &[
            (&[0, 1, 1, 1, 1, 1, 1], 2),
            (&[0, 1, 0, 0, 0, 0, 0], 2),
            (&[3, 1, 3, 2, 2, 2, 2], 2),
            (&[0, 2, 1, 2, 1, 2, 1], 2),
            (&[2, 3, 1, 1, 1, 1, 1], 3),
            (&[4, 1, 5, 1, 2, 2, 2], 3),
            (&[3, 4, 1, 5, 0, 6, 2], 6),
            (&[3, 2, 4, 1, 5, 0, 0], 6),
            (&[4, 3, 5, 2, 7, 0, 8], 7),
        ];
        for &(idx, p) in table {
            let word = w(9, idx);
            assert!(is_zigzag(&word), "{idx:?} should be zigzag");
            assert_eq!(peak_index(&word).unwrap(), p, "peak of {idx:?}");
        }
    }

    #[test]
    fn peak_requires_nonconstant_zigzag() {
        assert_eq!(peak_index(&w(3, &[1, 1, 1])), Err(WordError::ConstantWord));
        assert_eq!(peak_index(&w(2, &[0, 1, 2])), Err(WordError::NotZigzag));
    }

    /// Check the two peak chains directly at a given position.
    fn is_peak_at(diffs: &[i64], p: usize) -> bool {
        if diffs.is_empty() || diffs[0] == 0 {
            return false;
        }
        let strict = (1..p - 1).all(|j| diffs[j - 1] < diffs[j]);
        let weak = (p - 1..diffs.len()).skip(1).all(|j| diffs[j - 1] >= diffs[j])
            && (p - 1 >= diffs.len() || p < 2 || diffs[p - 2] >= *diffs.get(p - 1).unwrap_or(&0));
        strict && weak
    }

    #[test]
    fn peak_monotonicity_chains_hold_exhaustively() {
        for d in 0..=3usize {
            for n in 2..=6usize {
                for_all_index_tuples(d, n, |idx| {
                    let word = w(d, idx);
                    if !is_zigzag(&word) || word_flags(&word).constant {
                        return;
                    }
                    let p = peak_index(&word).unwrap();
                    let diffs = word.diffs();
                    assert!((2..=n).contains(&p));
                    assert!(is_peak_at(&diffs, p), "chains fail at p={p} for {idx:?}");
                    // uniqueness among admissible positions
                    let peaks: Vec<usize> =
                        (2..=n).filter(|&q| is_peak_at(&diffs, q)).collect();
                    assert_eq!(peaks, vec![p], "peak not unique for {idx:?}");
                });
            }
        }
    }

    #[test]
    fn flags_taxonomy() {
        // nonredundant lifting word over d = 3
        let lift = w(3, &[2, 1, 3, 0]);
        let f = word_flags(&lift);
        assert!(f.lifting && !f.constant && f.nonrepeating);
        assert_eq!(f.redundant, Some(false));

        let single = w(3, &[0]);
        let f = word_flags(&single);
        assert!(f.lifting && f.constant);
        assert_eq!(f.redundant, Some(false));

        // interior zero makes a lifting word redundant
        let red = w(3, &[1, 0, 0]);
        assert!(is_zigzag(&red));
        assert_eq!(word_flags(&red).redundant, Some(true));

        // non-lifting words have no redundancy flag
        let plain = w(3, &[1, 2]);
        assert_eq!(word_flags(&plain).redundant, None);
        assert_eq!(is_redundant(&plain), Err(WordError::NotNonredundantLifting));

        let trivial = Word::trivial(3);
        let f = word_flags(&trivial);
        assert!(f.constant && !f.lifting);
    }

    #[test]
    fn enumeration_counts() {
        // 9 words of length 3 over d = 2 beginning with e_0
        let words = enumerate_words(2, 3, Generator::plain(0), None).unwrap();
        assert_eq!(words.len(), 9);
        assert!(words.iter().all(|x| x.indices()[0] == 0));
        // lexicographic order of index sequences
        let seqs: Vec<&[usize]> = words.iter().map(|x| x.indices()).collect();
        let mut sorted = seqs.clone();
        sorted.sort();
        assert_eq!(seqs, sorted);

        // d = 0 collapses to a single word
        assert_eq!(
            enumerate_words(0, 4, Generator::plain(0), None)
                .unwrap()
                .len(),
            1
        );

        let words = enumerate_words(2, 2, Generator::plain(1), None).unwrap();
        let rendered: Vec<String> = words.iter().map(ToString::to_string).collect();
        assert_eq!(rendered, vec!["e_1 e*_0", "e_1 e*_1", "e_1 e*_2"]);
    }

    #[test]
    fn enumeration_with_pinned_end() {
        let words =
            enumerate_words(2, 3, Generator::plain(0), Some(Generator::plain(2))).unwrap();
        assert_eq!(words.len(), 3);
        assert!(words.iter().all(|x| *x.indices().last().unwrap() == 2));
        // wrong parity: an odd-length word keeps its starting starredness
        assert_eq!(
            enumerate_words(2, 3, Generator::plain(0), Some(Generator::starred(2))),
            Err(WordError::ParityMismatch)
        );
        // length 1 with matching generator
        let words =
            enumerate_words(2, 1, Generator::plain(1), Some(Generator::plain(1))).unwrap();
        assert_eq!(words.len(), 1);
        let words =
            enumerate_words(2, 1, Generator::plain(1), Some(Generator::plain(2))).unwrap();
        assert!(words.is_empty());
    }

    #[test]
    fn lifting_grid_for_diameter_three() {
        let expected: [&[&[usize]]; 4] = [
            &[&[0]],
            &[&[1, 0], &[1, 2, 0], &[1, 3, 0]],
            &[&[2, 0], &[2, 1, 3, 0], &[2, 3, 0]],
            &[&[3, 0]],
        ];
        for s in 0..=3 {
            let words = enumerate_nonredundant_lifting(3, s, false);
            let got: Vec<&[usize]> = words.iter().map(|w| w.indices()).collect();
            assert_eq!(got, expected[s], "lifting words starting at {s}");
        }
    }

    #[test]
    fn lifting_counts_match_binomials() {
        for d in 0..=8usize {
            for s in 0..=d {
                for starred in [false, true] {
                    let words = enumerate_nonredundant_lifting(d, s, starred);
                    assert_eq!(
                        words.len() as u128,
                        crate::binomial(d, s),
                        "count at d={d}, s={s}"
                    );
                    for word in &words {
                        let f = word_flags(word);
                        assert!(f.lifting);
                        assert_eq!(f.redundant, Some(false));
                        assert_eq!(word.indices()[0], s);
                    }
                }
            }
        }
    }

    #[test]
    fn bijection_hand_examples() {
        let set = subset_bijection(&w(3, &[2, 1, 3, 0])).unwrap();
        assert_eq!(set, BTreeSet::from([2, 3]));
        assert_eq!(subset_bijection(&w(3, &[0])).unwrap(), BTreeSet::new());
        assert_eq!(
            subset_bijection(&w(3, &[1, 0])).unwrap(),
            BTreeSet::from([1])
        );
        assert_eq!(
            subset_bijection(&w(2, &[0, 1, 2])),
            Err(WordError::NotNonredundantLifting)
        );
    }

    #[test]
    fn bijection_round_trips() {
        use itertools::Itertools;
        for d in 0..=8usize {
            // word -> set -> word
            for s in 0..=d {
                for word in enumerate_nonredundant_lifting(d, s, false) {
                    let set = subset_bijection(&word).unwrap();
                    assert_eq!(set.len(), s);
                    let back = inverse_bijection(d, &set, false).unwrap();
                    assert_eq!(back, word, "round trip via {set:?}");
                }
            }
            // set -> word -> set
            for subset in (1..=d).powerset() {
                let set: BTreeSet<usize> = subset.into_iter().collect();
                let word = inverse_bijection(d, &set, true).unwrap();
                assert_eq!(subset_bijection(&word).unwrap(), set);
            }
        }
    }

    #[test]
    fn bijection_rejects_bad_subsets() {
        let set = BTreeSet::from([0]);
        assert_eq!(
            inverse_bijection(3, &set, false),
            Err(WordError::BadSubset(0))
        );
        let set = BTreeSet::from([4]);
        assert_eq!(
            inverse_bijection(3, &set, false),
            Err(WordError::BadSubset(4))
        );
    }

    #[test]
    fn zigzag_survives_index_reflection() {
        for d in 0..=3usize {
            for n in 0..=5usize {
                for_all_index_tuples(d, n, |idx| {
                    let word = w(d, idx);
                    assert_eq!(is_zigzag(&word), is_zigzag(&word.reflected()));
                });
            }
        }
    }

    #[test]
    fn rendering() {
        assert_eq!(w(3, &[2, 1, 3, 0]).to_string(), "e_2 e*_1 e_3 e*_0");
        assert_eq!(
            Word::new(3, true, vec![2, 1]).unwrap().to_string(),
            "e*_2 e_1"
        );
        assert_eq!(Word::trivial(3).to_string(), "1");
    }

    #[test]
    fn json_round_trip() {
        let word = Word::new(3, true, vec![2, 1, 3, 0]).unwrap();
        let json = word.to_json();
        assert_eq!(Word::from_json(&json).unwrap(), word);
        assert!(Word::new(3, false, vec![4]).is_err());
    }
}
