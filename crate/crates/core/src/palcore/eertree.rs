//! Palindromic tree with series links, and the O(n log n) minimum
//! palindromic factorization of every prefix built on it.

use crate::words::Symbol;

const NONE: u32 = u32::MAX;
const IMAGINARY: u32 = 0;
const EMPTY: u32 = 1;

/// Online palindromic tree (eertree). Node 0 is the imaginary root of
/// length -1, node 1 the empty palindrome.
#[derive(Clone, Debug)]
pub struct PalTree {
    text: Vec<Symbol>,
    len: Vec<i32>,
    link: Vec<u32>,
    /// `len[v] - len[link[v]]`; zero on the roots.
    diff: Vec<u32>,
    /// Longest proper palindromic suffix whose difference differs from `diff[v]`.
    series_link: Vec<u32>,
    first_child: Vec<u32>,
    next_sibling: Vec<u32>,
    edge: Vec<Symbol>,
    last: u32,
}

impl Default for PalTree {
    fn default() -> Self {
        Self::new()
    }
}

impl PalTree {
    pub fn new() -> Self {
        Self::with_capacity(0)
    }

    pub fn with_capacity(n: usize) -> Self {
        let mut t = PalTree {
            text: Vec::with_capacity(n),
            len: Vec::with_capacity(n + 2),
            link: Vec::with_capacity(n + 2),
            diff: Vec::with_capacity(n + 2),
            series_link: Vec::with_capacity(n + 2),
            first_child: Vec::with_capacity(n + 2),
            next_sibling: Vec::with_capacity(n + 2),
            edge: Vec::with_capacity(n + 2),
            last: EMPTY,
        };
        for l in [-1, 0] {
            t.len.push(l);
            t.link.push(IMAGINARY);
            t.diff.push(0);
            t.series_link.push(IMAGINARY);
            t.first_child.push(NONE);
            t.next_sibling.push(NONE);
            t.edge.push(Symbol(0));
        }
        t
    }

    /// Number of distinct non-empty palindromes seen so far.
    pub fn distinct_palindromes(&self) -> usize {
        self.len.len() - 2
    }

    fn child(&self, v: u32, c: Symbol) -> Option<u32> {
        let mut x = self.first_child[v as usize];
        while x != NONE {
            if self.edge[x as usize] == c {
                return Some(x);
            }
            x = self.next_sibling[x as usize];
        }
        None
    }

    fn extendable(&self, v: u32, i: usize, c: Symbol) -> bool {
        let before = i as i64 - 1 - self.len[v as usize] as i64;
        before >= 0 && self.text[before as usize] == c
    }

    /// Appends a symbol and returns the node of the longest palindromic
    /// suffix of the text.
    pub fn push(&mut self, c: Symbol) -> u32 {
        let i = self.text.len();
        self.text.push(c);
        let mut cur = self.last;
        while !self.extendable(cur, i, c) {
            cur = self.link[cur as usize];
        }
        if let Some(v) = self.child(cur, c) {
            self.last = v;
            return v;
        }
        let len = self.len[cur as usize] + 2;
        let link = if len == 1 {
            EMPTY
        } else {
            let mut x = self.link[cur as usize];
            while !self.extendable(x, i, c) {
                x = self.link[x as usize];
            }
            self.child(x, c).expect("suffix palindrome already present")
        };
        let v = self.len.len() as u32;
        let diff = (len - self.len[link as usize]) as u32;
        let series_link = if diff == self.diff[link as usize] {
            self.series_link[link as usize]
        } else {
            link
        };
        self.len.push(len);
        self.link.push(link);
        self.diff.push(diff);
        self.series_link.push(series_link);
        self.first_child.push(NONE);
        self.next_sibling.push(self.first_child[cur as usize]);
        self.edge.push(c);
        self.first_child[cur as usize] = v;
        self.last = v;
        v
    }

    /// Lengths of all non-empty palindromic suffixes of the current text,
    /// longest first.
    pub fn suffix_palindrome_lengths(&self) -> impl Iterator<Item = usize> + '_ {
        let mut v = self.last;
        std::iter::from_fn(move || {
            let l = self.len[v as usize];
            if l <= 0 {
                return None;
            }
            v = self.link[v as usize];
            Some(l as usize)
        })
    }
}

/// `series[j - 1]` is the palindromic length of `w[..j]`.
///
/// Palindromic suffixes of a prefix fall into O(log n) arithmetic
/// progressions of lengths; each progression's best predecessor is carried
/// over from the occurrence of the same progression `diff` positions earlier.
pub fn pal_length_series(w: &[Symbol]) -> Vec<u32> {
    let n = w.len();
    let mut tree = PalTree::with_capacity(n);
    let mut ans = vec![0u32; n + 1];
    let mut series_ans: Vec<u32> = vec![0; 2];
    for i in 1..=n {
        tree.push(w[i - 1]);
        series_ans.resize(tree.len.len(), 0);
        let mut best = u32::MAX;
        let mut v = tree.last;
        while tree.len[v as usize] > 0 {
            let vi = v as usize;
            let sl = tree.series_link[vi] as usize;
            let start = i - (tree.len[sl].max(0) as usize + tree.diff[vi] as usize);
            let mut s = ans[start];
            let link = tree.link[vi] as usize;
            if tree.diff[vi] == tree.diff[link] {
                s = s.min(series_ans[link]);
            }
            series_ans[vi] = s;
            best = best.min(s + 1);
            v = tree.series_link[vi];
        }
        ans[i] = best;
    }
    ans.remove(0);
    ans
}

/// Calls `f(start, lengths)` for every 0-based start, with the lengths of all
/// non-empty palindromes `w[start..start + len]` in ascending order. Starts are
/// visited from the last position down to 0.
pub fn for_each_palindromes_by_start<F: FnMut(usize, &[usize])>(w: &[Symbol], mut f: F) {
    let n = w.len();
    let mut tree = PalTree::with_capacity(n);
    let mut buf = Vec::new();
    for t in 0..n {
        tree.push(w[n - 1 - t]);
        buf.clear();
        buf.extend(tree.suffix_palindrome_lengths());
        buf.reverse();
        f(n - 1 - t, &buf);
    }
}
