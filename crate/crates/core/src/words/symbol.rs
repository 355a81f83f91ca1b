use std::fmt;

use crate::error::{Error, Result};

const DIGITS: &[u8; 62] = b"0123456789abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ";

/// A letter of a finite alphabet, identified by a number below 65536.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Symbol(pub u16);

impl Symbol {
    /// Number of symbols that have a single-character display form.
    pub const CHAR_ALPHABET: u32 = 62;

    pub fn new(id: u64) -> Result<Self> {
        u16::try_from(id)
            .map(Symbol)
            .map_err(|_| Error::SymbolOutOfRange(id))
    }

    pub fn id(self) -> u16 {
        self.0
    }

    pub fn from_char(c: char) -> Option<Self> {
        let b = u8::try_from(c).ok()?;
        DIGITS.iter().position(|&d| d == b).map(|p| Symbol(p as u16))
    }

    pub fn to_char(self) -> Option<char> {
        DIGITS.get(self.0 as usize).map(|&b| b as char)
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_char() {
            Some(c) => write!(f, "{c}"),
            None => write!(f, "{}", self.0),
        }
    }
}

impl From<u16> for Symbol {
    fn from(id: u16) -> Self {
        Symbol(id)
    }
}
