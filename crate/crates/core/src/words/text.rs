//! Line-oriented word text format.
//!
//! Words over symbols `< 62` are written one character per symbol from
//! `[0-9a-zA-Z]`. A file whose first line is `#alphabet=int` holds words as
//! comma-separated decimal ids instead. One word per line; an empty line is
//! the empty word.

use super::{Symbol, Word};
use crate::error::{Error, Result};

pub const INT_HEADER: &str = "#alphabet=int";

pub(crate) fn parse_line(line: &str, int_format: bool) -> Result<Word> {
    let line = line.trim();
    if line.is_empty() {
        return Ok(Word::empty());
    }
    if int_format {
        line.split(',')
            .map(|tok| {
                let tok = tok.trim();
                let id: u64 = tok
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad symbol id `{tok}`")))?;
                Symbol::new(id)
            })
            .collect()
    } else {
        line.chars()
            .map(|c| Symbol::from_char(c).ok_or_else(|| Error::Parse(format!("bad symbol `{c}`"))))
            .collect()
    }
}

pub(crate) fn format_line(w: &[Symbol]) -> String {
    if w.iter().all(|s| (s.0 as u32) < Symbol::CHAR_ALPHABET) {
        w.iter().map(|s| s.to_char().unwrap()).collect()
    } else {
        w.iter().map(|s| s.0.to_string()).collect::<Vec<_>>().join(",")
    }
}

/// Reads every word of a text file body.
pub fn read_words(text: &str) -> Result<Vec<Word>> {
    let mut lines = text.lines().peekable();
    let int_format = matches!(lines.peek(), Some(l) if l.trim() == INT_HEADER);
    if int_format {
        lines.next();
    }
    lines.map(|l| parse_line(l, int_format)).collect()
}

/// Serializes words so that [`read_words`] returns them unchanged.
pub fn write_words(words: &[Word]) -> String {
    let int_format = !words.iter().all(Word::is_char_word);
    let mut out = String::new();
    if int_format {
        out.push_str(INT_HEADER);
        out.push('\n');
    }
    for w in words {
        if int_format {
            let ids: Vec<String> = w.iter().map(|s| s.0.to_string()).collect();
            out.push_str(&ids.join(","));
        } else {
            out.push_str(&format_line(w));
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn header_switches_format() {
        let ws = read_words("#alphabet=int\n1,2,300\n\n7\n").unwrap();
        assert_eq!(ws, vec![Word::from_ids([1, 2, 300]), Word::empty(), Word::from_ids([7])]);
        let ws = read_words("0110\nzZ\n").unwrap();
        assert_eq!(ws[1], Word::from_ids([35, 61]));
    }

    #[test]
    fn rejects_garbage() {
        assert!(read_words("01#1\n").is_err());
        assert!(read_words("#alphabet=int\n1,x\n").is_err());
        assert!(read_words("#alphabet=int\n70000\n").is_err());
    }

    proptest! {
        #[test]
        fn round_trip(words in prop::collection::vec(prop::collection::vec(0u16..400, 0..20), 1..5)) {
            let words: Vec<Word> = words.into_iter().map(Word::from_ids).collect();
            prop_assert_eq!(read_words(&write_words(&words)).unwrap(), words);
        }
    }
}
