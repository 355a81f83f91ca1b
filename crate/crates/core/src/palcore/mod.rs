//! Minimum factorizations into palindromes or privileged words.

mod eertree;
mod manacher;
mod privileged;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use eertree::{for_each_palindromes_by_start, pal_length_series, PalTree};
pub use manacher::PalindromeIndex;
pub use privileged::{is_privileged, privileged_prefix_flags};

use crate::error::{Error, Result};
use crate::words::{is_palindrome, Symbol, Word, WordSource};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum UnitKind {
    Palindromic,
    Privileged,
}

impl UnitKind {
    pub fn accepts(self, u: &[Symbol]) -> bool {
        match self {
            UnitKind::Palindromic => is_palindrome(u),
            UnitKind::Privileged => is_privileged(u),
        }
    }
}

impl fmt::Display for UnitKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            UnitKind::Palindromic => "palindromic",
            UnitKind::Privileged => "privileged",
        })
    }
}

/// A factorization `w[i_0+1..i_1] w[i_1+1..i_2] ... w[i_{p-1}+1..i_p]` of a
/// factor of some word, stored by its boundary sequence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Factorization {
    pub kind: UnitKind,
    pub boundaries: Vec<usize>,
    #[serde(serialize_with = "serialize_parts")]
    pub parts: Vec<Word>,
}

fn serialize_parts<S: serde::Serializer>(parts: &[Word], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(parts.iter().map(|p| p.to_string()))
}

impl Factorization {
    /// Builds a factorization of the factor of `w` spanning
    /// `boundaries[0] + 1 ..= boundaries[last]` (1-based). A single boundary
    /// gives the factorization of the empty factor, with no parts.
    pub fn from_boundaries(w: &[Symbol], kind: UnitKind, boundaries: Vec<usize>) -> Result<Self> {
        if boundaries.is_empty() {
            return Err(Error::InvalidFactorization("no boundaries".into()));
        }
        if let Some(&b) = boundaries.iter().find(|&&b| b > w.len()) {
            return Err(Error::InvalidFactorization(format!(
                "boundary {b} exceeds word length {}",
                w.len()
            )));
        }
        let mut parts = Vec::with_capacity(boundaries.len() - 1);
        for pair in boundaries.windows(2) {
            if pair[1] <= pair[0] {
                return Err(Error::InvalidFactorization(format!(
                    "boundaries must increase strictly ({} then {})",
                    pair[0], pair[1]
                )));
            }
            let part = &w[pair[0]..pair[1]];
            if !kind.accepts(part) {
                return Err(Error::InvalidFactorization(format!(
                    "part w[{}..{}] is not {kind}",
                    pair[0] + 1,
                    pair[1]
                )));
            }
            parts.push(Word::from(part));
        }
        Ok(Factorization { kind, boundaries, parts })
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn concat(&self) -> Word {
        self.parts.iter().flat_map(|p| p.iter().copied()).collect()
    }
}

/// Least number of units of `kind` whose concatenation is `u`.
pub fn min_decomposition_length(u: &[Symbol], kind: UnitKind) -> usize {
    length_series(u, kind).last().map_or(0, |&l| l as usize)
}

/// An optimal factorization; ties go to the lexicographically smallest
/// boundary sequence.
pub fn min_decomposition(u: &[Symbol], kind: UnitKind) -> Result<Factorization> {
    if u.is_empty() {
        return Err(Error::EmptyWord);
    }
    let n = u.len();
    let mut boundaries = vec![0];
    match kind {
        UnitKind::Palindromic => {
            let rev: Vec<Symbol> = u.iter().rev().copied().collect();
            let rev_series = pal_length_series(&rev);
            // suffix[i] = |u[i..]|_pal, using mirror invariance
            let suffix = |i: usize| if i == n { 0 } else { rev_series[n - i - 1] };
            let pals = PalindromeIndex::new(u);
            let mut i = 0;
            while i < n {
                let target = suffix(i) - 1;
                let j = (i + 1..=n)
                    .find(|&j| pals.is_palindrome(i, j) && suffix(j) == target)
                    .expect("an optimal step always exists");
                boundaries.push(j);
                i = j;
            }
        }
        UnitKind::Privileged => {
            let mut suffix = vec![0u32; n + 1];
            let mut step = vec![0usize; n + 1];
            let mut flags = Vec::new();
            for i in (0..n).rev() {
                privileged_prefix_flags(&u[i..], &mut flags);
                let (mut best, mut best_len) = (u32::MAX, 0);
                for l in 1..=n - i {
                    if flags[l] && suffix[i + l] < best {
                        best = suffix[i + l];
                        best_len = l;
                    }
                }
                suffix[i] = best + 1;
                step[i] = best_len;
            }
            let mut i = 0;
            while i < n {
                i += step[i];
                boundaries.push(i);
            }
        }
    }
    Factorization::from_boundaries(u, kind, boundaries)
}

/// `series[j - 1]` is the minimum number of units of `kind` covering `u[..j]`.
pub fn length_series(u: &[Symbol], kind: UnitKind) -> Vec<u32> {
    match kind {
        UnitKind::Palindromic => pal_length_series(u),
        UnitKind::Privileged => priv_length_series(u),
    }
}

fn priv_length_series(u: &[Symbol]) -> Vec<u32> {
    let n = u.len();
    let mut ans = vec![u32::MAX; n + 1];
    ans[0] = 0;
    let mut flags = Vec::new();
    for i in 0..n {
        privileged_prefix_flags(&u[i..], &mut flags);
        let next = ans[i] + 1;
        for l in 1..=n - i {
            if flags[l] && next < ans[i + l] {
                ans[i + l] = next;
            }
        }
    }
    ans.remove(0);
    ans
}

/// Quadratic reference for the palindromic series: for each prefix end,
/// scan every start with a constant-time palindrome test.
#[allow(clippy::needless_range_loop)]
pub fn reference_pal_length_series(u: &[Symbol]) -> Vec<u32> {
    let n = u.len();
    let pals = PalindromeIndex::new(u);
    let mut ans = vec![u32::MAX; n + 1];
    ans[0] = 0;
    for j in 1..=n {
        let mut best = u32::MAX;
        for i in 0..j {
            if ans[i] < best && pals.is_palindrome(i, j) {
                best = ans[i];
            }
        }
        ans[j] = best + 1;
    }
    ans.remove(0);
    ans
}

/// Length series over the first `n` symbols of a source.
pub fn prefix_length_series(source: &WordSource, n: usize, kind: UnitKind) -> Result<Vec<u32>> {
    Ok(length_series(&source.prefix(n)?, kind))
}

/// Lengths `L <= max_len` such that the factor of length `L` starting at the
/// 1-based position `i` is a unit of `kind`, ascending.
pub fn units_starting_at(w: &[Symbol], i: usize, kind: UnitKind, max_len: usize) -> Result<Vec<usize>> {
    if i == 0 || i > w.len() {
        return Err(Error::PositionOutOfRange { pos: i, len: w.len() });
    }
    let window = &w[i - 1..(i - 1 + max_len).min(w.len())];
    Ok(match kind {
        UnitKind::Palindromic => {
            let pals = PalindromeIndex::new(window);
            (1..=window.len()).filter(|&l| pals.is_palindrome(0, l)).collect()
        }
        UnitKind::Privileged => {
            let mut flags = Vec::new();
            privileged_prefix_flags(window, &mut flags);
            (1..=window.len()).filter(|&l| flags[l]).collect()
        }
    })
}

/// Splits `u` into two palindromes (either may be empty), preferring the
/// shortest first part.
pub fn two_palindrome_split(u: &[Symbol]) -> Option<(Word, Word)> {
    let pals = PalindromeIndex::new(u);
    let n = u.len();
    (0..=n)
        .find(|&k| pals.is_palindrome(0, k) && pals.is_palindrome(k, n))
        .map(|k| (Word::from(&u[..k]), Word::from(&u[k..])))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    /// Every optimal boundary sequence, by exhaustive recursion.
    fn all_optimal(u: &[Symbol], kind: UnitKind) -> Vec<Vec<usize>> {
        fn go(u: &[Symbol], kind: UnitKind, at: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if at == u.len() {
                out.push(cur.clone());
                return;
            }
            for j in at + 1..=u.len() {
                if kind.accepts(&u[at..j]) {
                    cur.push(j);
                    go(u, kind, j, cur, out);
                    cur.pop();
                }
            }
        }
        let mut out = Vec::new();
        go(u, kind, 0, &mut vec![0], &mut out);
        let best = out.iter().map(Vec::len).min().unwrap();
        out.retain(|b| b.len() == best);
        out.sort();
        out
    }

    #[test]
    fn lengths() {
        assert_eq!(min_decomposition_length(&w("01001010010"), UnitKind::Palindromic), 1);
        assert_eq!(min_decomposition_length(&w("010011"), UnitKind::Palindromic), 3);
        assert_eq!(min_decomposition_length(&w("00101100"), UnitKind::Privileged), 1);
        assert_eq!(min_decomposition_length(&w("00101100110100"), UnitKind::Privileged), 3);
        assert_eq!(min_decomposition_length(&[], UnitKind::Palindromic), 0);
        assert_eq!(min_decomposition_length(&[], UnitKind::Privileged), 0);
    }

    #[test]
    fn tie_breaking() {
        let u = w("010011");
        let f = min_decomposition(&u, UnitKind::Palindromic).unwrap();
        assert_eq!(f.boundaries, vec![0, 1, 5, 6]);
        assert_eq!(f.parts, vec![w("0"), w("1001"), w("1")]);
        let optimal = all_optimal(&u, UnitKind::Palindromic);
        assert_eq!(optimal, vec![vec![0, 1, 5, 6], vec![0, 3, 4, 6]]);

        let u = w("00101100110100");
        let f = min_decomposition(&u, UnitKind::Privileged).unwrap();
        assert_eq!(f.boundaries, all_optimal(&u, UnitKind::Privileged)[0]);
        assert_eq!(f.parts, vec![w("0"), w("010110011010"), w("0")]);

        let f = min_decomposition(&w("0"), UnitKind::Palindromic).unwrap();
        assert_eq!(f.boundaries, vec![0, 1]);
        assert_eq!(min_decomposition(&[], UnitKind::Palindromic), Err(Error::EmptyWord));
    }

    #[test]
    fn factorization_json() {
        let f = min_decomposition(&w("010011"), UnitKind::Palindromic).unwrap();
        let json = serde_json::to_string(&f).unwrap();
        assert_eq!(json, r#"{"kind":"palindromic","boundaries":[0,1,5,6],"parts":["0","1001","1"]}"#);
    }

    #[test]
    fn factorization_validation() {
        let u = w("0101110101111111110101110");
        assert!(Factorization::from_boundaries(&u, UnitKind::Palindromic, vec![0, 3, 5, 22]).is_ok());
        assert!(Factorization::from_boundaries(&u, UnitKind::Palindromic, vec![0, 2]).is_err());
        assert!(Factorization::from_boundaries(&u, UnitKind::Palindromic, vec![0, 3, 3]).is_err());
        assert!(Factorization::from_boundaries(&u, UnitKind::Palindromic, vec![0, 30]).is_err());
        assert!(Factorization::from_boundaries(&u, UnitKind::Palindromic, vec![]).is_err());
        assert!(Factorization::from_boundaries(&u, UnitKind::Palindromic, vec![4]).unwrap().is_empty());
    }

    #[test]
    fn series_examples() {
        let tm = WordSource::thue_morse();
        // 0 | 01 | 011 | 0110
        assert_eq!(prefix_length_series(&tm, 4, UnitKind::Palindromic).unwrap(), vec![1, 2, 2, 1]);
        let per = WordSource::parse("periodic::110100").unwrap();
        assert_eq!(prefix_length_series(&per, 1, UnitKind::Palindromic).unwrap(), vec![1]);
        // 0 | 01 | 010 | 0101 | 01011 | 010111
        let s = WordSource::sierpinski();
        assert_eq!(
            prefix_length_series(&s, 6, UnitKind::Palindromic).unwrap(),
            reference_pal_length_series(&s.prefix(6).unwrap())
        );
        assert_eq!(prefix_length_series(&s, 6, UnitKind::Palindromic).unwrap(), vec![1, 2, 1, 2, 2, 2]);
    }

    #[test]
    fn units() {
        let tm = WordSource::thue_morse().prefix(16).unwrap();
        let expect: Vec<usize> = (1..=16).filter(|&l| is_palindrome(&tm[..l])).collect();
        assert_eq!(expect, vec![1, 4, 16]);
        assert_eq!(units_starting_at(&tm, 1, UnitKind::Palindromic, 16).unwrap(), expect);
        assert_eq!(units_starting_at(&tm, 5, UnitKind::Privileged, 1).unwrap(), vec![1]);
        let p = units_starting_at(&w("00101100"), 1, UnitKind::Privileged, 8).unwrap();
        assert_eq!(p, vec![1, 2, 8]);
        assert!(units_starting_at(&tm, 0, UnitKind::Palindromic, 3).is_err());
        assert!(units_starting_at(&tm, 17, UnitKind::Palindromic, 3).is_err());
    }

    #[test]
    fn splits() {
        assert_eq!(two_palindrome_split(&w("0110")), Some((Word::empty(), w("0110"))));
        assert_eq!(two_palindrome_split(&w("110100")), None);
        assert_eq!(two_palindrome_split(&w("0011")), Some((w("00"), w("11"))));
    }

    proptest! {
        #[test]
        fn decomposition_is_lexmin_optimal(v in prop::collection::vec(0u16..3, 1..11), priv_kind in any::<bool>()) {
            let u: Vec<Symbol> = v.into_iter().map(Symbol).collect();
            let kind = if priv_kind { UnitKind::Privileged } else { UnitKind::Palindromic };
            let f = min_decomposition(&u, kind).unwrap();
            prop_assert_eq!(&f.boundaries, &all_optimal(&u, kind)[0]);
            prop_assert_eq!(f.concat(), Word::from(&u[..]));
            prop_assert_eq!(f.len(), min_decomposition_length(&u, kind));
        }

        #[test]
        fn unit_iff_length_one(v in prop::collection::vec(0u16..2, 1..16)) {
            let u: Vec<Symbol> = v.into_iter().map(Symbol).collect();
            prop_assert_eq!(min_decomposition_length(&u, UnitKind::Palindromic) == 1, is_palindrome(&u));
            prop_assert_eq!(min_decomposition_length(&u, UnitKind::Privileged) == 1, is_privileged(&u));
        }

        #[test]
        fn subadditive_and_mirror(a in prop::collection::vec(0u16..3, 0..14), b in prop::collection::vec(0u16..3, 0..14)) {
            let a: Vec<Symbol> = a.into_iter().map(Symbol).collect();
            let b: Vec<Symbol> = b.into_iter().map(Symbol).collect();
            let ab: Vec<Symbol> = a.iter().chain(&b).copied().collect();
            for kind in [UnitKind::Palindromic, UnitKind::Privileged] {
                let (la, lb, lab) = (
                    min_decomposition_length(&a, kind),
                    min_decomposition_length(&b, kind),
                    min_decomposition_length(&ab, kind),
                );
                prop_assert!(lab <= la + lb);
                if let Some(&c) = b.first() {
                    let mut ac = a.clone();
                    ac.push(c);
                    prop_assert!(min_decomposition_length(&ac, kind) <= la + 1);
                }
            }
            let rev: Vec<Symbol> = ab.iter().rev().copied().collect();
            prop_assert_eq!(
                min_decomposition_length(&ab, UnitKind::Palindromic),
                min_decomposition_length(&rev, UnitKind::Palindromic)
            );
        }

        #[test]
        fn reference_matches_engine(v in prop::collection::vec(0u16..2, 0..200)) {
            let u: Vec<Symbol> = v.into_iter().map(Symbol).collect();
            prop_assert_eq!(reference_pal_length_series(&u), pal_length_series(&u));
        }
    }
}
