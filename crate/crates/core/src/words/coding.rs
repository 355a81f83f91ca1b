use super::{Symbol, Word};
use crate::error::{Error, Result};

/// Letter-to-binary coding: `0` where the symbol is `distinguished`, `1`
/// elsewhere.
pub fn apply_coding(u: &[Symbol], distinguished: Symbol) -> Result<Word> {
    if !u.contains(&distinguished) {
        return Err(Error::SymbolAbsent(distinguished.to_string()));
    }
    Ok(u.iter()
        .map(|&s| if s == distinguished { Symbol(0) } else { Symbol(1) })
        .collect())
}

/// Concatenation of the blocks `1 0^i 1`, one per symbol id `i`.
pub fn hejda_encode(u: &[Symbol]) -> Word {
    let total: usize = u.iter().map(|s| s.0 as usize + 2).sum();
    let mut out = Vec::with_capacity(total);
    for s in u {
        out.push(Symbol(1));
        out.extend(std::iter::repeat_n(Symbol(0), s.0 as usize));
        out.push(Symbol(1));
    }
    Word::new(out)
}
