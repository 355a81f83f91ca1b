//! Combinatorics on words: palindromic and privileged lengths, k-runs with
//! their coverage and measure structure, and finite-horizon checkers for the
//! lemmas that bound palindromic length on power-free and (k,l)-words.
//!
//! Positions in the public API are 1-based and inclusive (`w[i..j]` is the
//! factor from the i-th through the j-th symbol, empty when `j = i - 1`).

pub mod error;
pub mod lab;
pub mod palcore;
pub mod runs;
pub mod suffix;
pub mod words;

pub use error::{Error, Result};
pub use palcore::{Factorization, UnitKind};
pub use runs::{Code, CoverageProfile, CoverageSemantics, MeasureProfile, Run, StarCode};
pub use words::{Morphism, Symbol, Word, WordSource};
