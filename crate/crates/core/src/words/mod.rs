//! Words, symbols, morphisms and the infinite-word sources used throughout
//! the crate, plus the letter codings used to reduce alphabets.

mod coding;
mod morphism;
mod source;
mod symbol;
pub mod text;
mod word;

pub use coding::{apply_coding, hejda_encode};
pub use morphism::Morphism;
pub use source::WordSource;
pub use symbol::Symbol;
pub use word::{is_palindrome, mirror, Word};
