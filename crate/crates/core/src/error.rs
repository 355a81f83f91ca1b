use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("symbol id {0} exceeds the alphabet cap of 65536")]
    SymbolOutOfRange(u64),
    #[error("cannot parse word: {0}")]
    Parse(String),
    #[error("invalid morphism: {0}")]
    InvalidMorphism(String),
    #[error("morphism is not prolongable at seed {0}")]
    NotProlongable(String),
    #[error("ultimately periodic source needs a non-empty period")]
    EmptyPeriod,
    #[error("directive sequence entries must be positive")]
    InvalidDirective,
    #[error("symbol {0} does not occur in the word")]
    SymbolAbsent(String),
    #[error("empty word has no factorization")]
    EmptyWord,
    #[error("position {pos} is outside 1..={len}")]
    PositionOutOfRange { pos: usize, len: usize },
    #[error("interval [{i}..{j}] is invalid for a word of length {len}")]
    IntervalOutOfRange { i: usize, j: usize, len: usize },
    #[error("k must be at least 2, got {0}")]
    InvalidK(usize),
    #[error("invalid factorization: {0}")]
    InvalidFactorization(String),
    #[error("input of length {len} exceeds the guard of {max}")]
    TooLong { len: usize, max: usize },
    #[error("missing parameter `{0}` for this lemma")]
    MissingParameter(&'static str),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("search budget exceeded: {0}")]
    Budget(String),
}
