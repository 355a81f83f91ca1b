use crate::words::Symbol;

/// Constant-time palindrome tests on factors of a fixed word.
#[derive(Clone, Debug)]
pub struct PalindromeIndex {
    /// `radius[c]` is the length of the longest palindrome centred at `c`,
    /// where centre `2i + 1` sits on symbol `i` and centre `2i` sits between
    /// symbols `i - 1` and `i`.
    radius: Vec<u32>,
}

impl PalindromeIndex {
    pub fn new(w: &[Symbol]) -> Self {
        let n = w.len();
        let mut odd = vec![0usize; n];
        let (mut l, mut r) = (0usize, 0usize); // current window [l, r)
        for i in 0..n {
            let mut k = if i < r { odd[l + r - 1 - i].min(r - i) } else { 1 };
            while i >= k && i + k < n && w[i - k] == w[i + k] {
                k += 1;
            }
            odd[i] = k;
            if i + k > r {
                l = i + 1 - k;
                r = i + k;
            }
        }
        let mut even = vec![0usize; n + 1];
        let (mut l, mut r) = (0usize, 0usize);
        for i in 1..n {
            // palindromes centred between i-1 and i
            let mut k = if i < r { even[l + r - i].min(r - i) } else { 0 };
            while i + k < n && i > k && w[i - k - 1] == w[i + k] {
                k += 1;
            }
            even[i] = k;
            if i + k > r {
                l = i - k;
                r = i + k;
            }
        }
        let mut radius = vec![0u32; 2 * n + 1];
        for i in 0..n {
            radius[2 * i + 1] = (2 * odd[i] - 1) as u32;
            radius[2 * i] = (2 * even[i]) as u32;
        }
        PalindromeIndex { radius }
    }

    /// Whether the 0-based half-open factor `w[i..j]` is a palindrome.
    pub fn is_palindrome(&self, i: usize, j: usize) -> bool {
        j <= i || self.radius[i + j] as usize >= j - i
    }
}
