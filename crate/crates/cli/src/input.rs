use std::fs;

use palword_core::words::text::read_words;
use palword_core::{Error, Result, Word, WordSource};

use crate::Opts;

/// Where the word came from; sources mark it as a prefix of an infinite word.
pub struct Input {
    pub word: Word,
    pub source: Option<WordSource>,
}

pub fn source(opts: &Opts) -> Result<Option<WordSource>> {
    opts.source.as_deref().map(WordSource::parse).transpose()
}

pub fn word(opts: &Opts) -> Result<Input> {
    let given = [opts.word.is_some(), opts.word_file.is_some(), opts.source.is_some()];
    match given.iter().filter(|&&b| b).count() {
        0 => return Err(Error::MissingParameter("word, word-file or source")),
        1 => {}
        _ => return Err(Error::InvalidParameter("give only one of --word, --word-file, --source".into())),
    }
    if let Some(text) = &opts.word {
        return Ok(Input { word: Word::parse(text.trim())?, source: None });
    }
    if let Some(path) = &opts.word_file {
        let text = fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        let mut words = read_words(&text)?;
        if words.len() != 1 {
            return Err(Error::Parse(format!("{} holds {} words, expected one", path.display(), words.len())));
        }
        return Ok(Input { word: words.pop().unwrap(), source: None });
    }
    let src = source(opts)?.unwrap();
    let n = opts.n.ok_or(Error::MissingParameter("n"))?;
    Ok(Input { word: src.prefix(n)?, source: Some(src) })
}
