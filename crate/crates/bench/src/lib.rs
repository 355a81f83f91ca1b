//! Shared inputs for the criterion benchmarks.

use palword_core::{Word, WordSource};

pub fn thue_morse(n: usize) -> Word {
    WordSource::thue_morse().prefix(n).expect("thue-morse is prolongable")
}

pub fn sierpinski(n: usize) -> Word {
    WordSource::sierpinski().prefix(n).expect("sierpinski is prolongable")
}

pub fn fibonacci(n: usize) -> Word {
    WordSource::fibonacci().prefix(n).expect("valid directive")
}
