use std::collections::BTreeSet;
use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use super::Symbol;
use crate::error::{Error, Result};

/// A finite word. Indexing through [`Word::factor`] is 1-based inclusive;
/// slice access through `Deref` is the usual 0-based form.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Symbol>);

impl Word {
    pub fn new(symbols: Vec<Symbol>) -> Self {
        Word(symbols)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_ids<I: IntoIterator<Item = u16>>(ids: I) -> Self {
        Word(ids.into_iter().map(Symbol).collect())
    }

    /// Parses a single word: comma-separated decimal ids when the text
    /// contains a comma, one character per symbol otherwise.
    pub fn parse(s: &str) -> Result<Self> {
        super::text::parse_line(s, s.contains(','))
    }

    pub fn as_slice(&self) -> &[Symbol] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<Symbol> {
        self.0
    }

    pub fn push(&mut self, s: Symbol) {
        self.0.push(s);
    }

    /// `w[i..j]`, 1-based inclusive. `j = i - 1` yields the empty word.
    pub fn factor(&self, i: usize, j: usize) -> Result<&[Symbol]> {
        if i == 0 || j + 1 < i || j > self.len() {
            return Err(Error::IntervalOutOfRange { i, j, len: self.len() });
        }
        Ok(&self.0[i - 1..j])
    }

    pub fn alphabet(&self) -> BTreeSet<Symbol> {
        self.0.iter().copied().collect()
    }

    pub fn mirror(&self) -> Word {
        mirror(&self.0)
    }

    pub fn is_palindrome(&self) -> bool {
        is_palindrome(&self.0)
    }

    pub fn concat(&self, other: &[Symbol]) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(other);
        Word(v)
    }

    /// True when every symbol has a one-character display form.
    pub fn is_char_word(&self) -> bool {
        self.0.iter().all(|s| (s.0 as u32) < Symbol::CHAR_ALPHABET)
    }
}

impl Deref for Word {
    type Target = [Symbol];

    fn deref(&self) -> &[Symbol] {
        &self.0
    }
}

impl From<Vec<Symbol>> for Word {
    fn from(v: Vec<Symbol>) -> Self {
        Word(v)
    }
}

impl From<&[Symbol]> for Word {
    fn from(v: &[Symbol]) -> Self {
        Word(v.to_vec())
    }
}

impl FromIterator<Symbol> for Word {
    fn from_iter<T: IntoIterator<Item = Symbol>>(iter: T) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Word::parse(s)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::text::format_line(&self.0))
    }
}

pub fn mirror(u: &[Symbol]) -> Word {
    u.iter().rev().copied().collect()
}

/// The empty word counts as a palindrome.
pub fn is_palindrome(u: &[Symbol]) -> bool {
    let n = u.len();
    (0..n / 2).all(|i| u[i] == u[n - 1 - i])
}
