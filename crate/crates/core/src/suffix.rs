//! Suffix arrays with LCP-backed longest-common-extension queries, and the
//! Lyndon array derived from suffix ranks.

use std::cmp::Ordering;

use crate::words::Symbol;

/// Suffix array by prefix doubling with counting sorts, O(n log n).
/// A proper prefix sorts before any of its extensions.
pub fn suffix_array(text: &[u32]) -> Vec<u32> {
    let n = text.len();
    if n == 0 {
        return Vec::new();
    }
    let mut rank = compress(text);
    let mut classes = rank.iter().copied().max().unwrap() as usize + 1;
    let mut sa: Vec<u32> = (0..n as u32).collect();
    sa.sort_unstable_by_key(|&i| rank[i as usize]);
    let mut second = vec![0u32; n];
    let mut next_rank = vec![0u32; n];
    let mut counts = Vec::new();
    let mut k = 1usize;
    while classes < n {
        let mut p = 0;
        for i in n.saturating_sub(k)..n {
            second[p] = i as u32;
            p += 1;
        }
        for &j in &sa {
            if j as usize >= k {
                second[p] = j - k as u32;
                p += 1;
            }
        }
        counts.clear();
        counts.resize(classes + 1, 0usize);
        for &r in &rank {
            counts[r as usize + 1] += 1;
        }
        for c in 1..=classes {
            counts[c] += counts[c - 1];
        }
        for &i in &second {
            let r = rank[i as usize] as usize;
            sa[counts[r]] = i;
            counts[r] += 1;
        }
        let key = |i: usize| -> (u32, i64) {
            let hi = if i + k < n { rank[i + k] as i64 } else { -1 };
            (rank[i], hi)
        };
        next_rank[sa[0] as usize] = 0;
        classes = 1;
        for r in 1..n {
            if key(sa[r - 1] as usize) != key(sa[r] as usize) {
                classes += 1;
            }
            next_rank[sa[r] as usize] = (classes - 1) as u32;
        }
        std::mem::swap(&mut rank, &mut next_rank);
        k *= 2;
    }
    sa
}

fn compress(text: &[u32]) -> Vec<u32> {
    let mut vals: Vec<u32> = text.to_vec();
    vals.sort_unstable();
    vals.dedup();
    text.iter()
        .map(|v| vals.binary_search(v).unwrap() as u32)
        .collect()
}

/// Rank of each suffix in sorted order.
pub fn suffix_ranks(text: &[u32]) -> Vec<u32> {
    inverse(&suffix_array(text))
}

fn inverse(sa: &[u32]) -> Vec<u32> {
    let mut rank = vec![0u32; sa.len()];
    for (r, &i) in sa.iter().enumerate() {
        rank[i as usize] = r as u32;
    }
    rank
}

/// Kasai: `lcp[r]` is the LCP of the suffixes at ranks `r - 1` and `r`.
fn lcp_array(text: &[u32], sa: &[u32], rank: &[u32]) -> Vec<u32> {
    let n = text.len();
    let mut lcp = vec![0u32; n];
    let mut h = 0usize;
    for i in 0..n {
        let r = rank[i] as usize;
        if r == 0 {
            h = 0;
            continue;
        }
        let j = sa[r - 1] as usize;
        while i + h < n && j + h < n && text[i + h] == text[j + h] {
            h += 1;
        }
        lcp[r] = h as u32;
        h = h.saturating_sub(1);
    }
    lcp
}

const BLOCK: usize = 32;

/// Range-minimum over a fixed array: sparse table on block minima, direct
/// scans inside blocks.
#[derive(Clone, Debug)]
struct BlockRmq {
    values: Vec<u32>,
    table: Vec<Vec<u32>>,
}

impl BlockRmq {
    fn new(values: Vec<u32>) -> Self {
        let mins: Vec<u32> = values
            .chunks(BLOCK)
            .map(|c| c.iter().copied().min().unwrap())
            .collect();
        let mut table = vec![mins];
        let mut width = 1;
        while 2 * width <= table[0].len() {
            let prev = table.last().unwrap();
            let next: Vec<u32> = (0..prev.len() - width)
                .map(|i| prev[i].min(prev[i + width]))
                .collect();
            table.push(next);
            width *= 2;
        }
        BlockRmq { values, table }
    }

    /// Minimum over `values[lo..=hi]`.
    fn min(&self, lo: usize, hi: usize) -> u32 {
        let (bl, bh) = (lo / BLOCK, hi / BLOCK);
        if bh <= bl + 1 {
            return self.values[lo..=hi].iter().copied().min().unwrap();
        }
        let head = self.values[lo..(bl + 1) * BLOCK].iter().copied().min().unwrap();
        let tail = self.values[bh * BLOCK..=hi].iter().copied().min().unwrap();
        let (a, b) = (bl + 1, bh - 1);
        let level = (usize::BITS - 1 - (b - a + 1).leading_zeros()) as usize;
        let mid = self.table[level][a].min(self.table[level][b + 1 - (1 << level)]);
        head.min(tail).min(mid)
    }
}

/// A suffix array over one text with O(1)-ish LCE queries and pattern search.
#[derive(Clone, Debug)]
pub struct SuffixIndex {
    text: Vec<u32>,
    sa: Vec<u32>,
    rank: Vec<u32>,
    rmq: BlockRmq,
}

impl SuffixIndex {
    pub fn new(text: Vec<u32>) -> Self {
        let sa = suffix_array(&text);
        let rank = inverse(&sa);
        let lcp = lcp_array(&text, &sa, &rank);
        let rmq = BlockRmq::new(if lcp.is_empty() { vec![0] } else { lcp });
        SuffixIndex { text, sa, rank, rmq }
    }

    pub fn from_symbols(w: &[Symbol]) -> Self {
        Self::new(w.iter().map(|s| s.0 as u32).collect())
    }

    pub fn len(&self) -> usize {
        self.text.len()
    }

    pub fn is_empty(&self) -> bool {
        self.text.is_empty()
    }

    pub fn sa(&self) -> &[u32] {
        &self.sa
    }

    pub fn rank(&self) -> &[u32] {
        &self.rank
    }

    /// Length of the longest common prefix of the suffixes at `i` and `j`
    /// (0-based; `n` denotes the empty suffix).
    pub fn lce(&self, i: usize, j: usize) -> usize {
        let n = self.text.len();
        if i >= n || j >= n {
            return 0;
        }
        if i == j {
            return n - i;
        }
        let (a, b) = (self.rank[i] as usize, self.rank[j] as usize);
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        self.rmq.min(lo + 1, hi) as usize
    }

    /// Sorted 0-based starting positions of `pattern`.
    pub fn occurrences(&self, pattern: &[u32]) -> Vec<usize> {
        if pattern.is_empty() {
            return (0..=self.text.len()).collect();
        }
        let cmp = |&s: &u32| -> Ordering {
            let suf = &self.text[s as usize..];
            let m = suf.len().min(pattern.len());
            match suf[..m].cmp(&pattern[..m]) {
                Ordering::Equal if suf.len() < pattern.len() => Ordering::Less,
                Ordering::Equal => Ordering::Equal,
                o => o,
            }
        };
        let lo = self.sa.partition_point(|s| cmp(s) == Ordering::Less);
        let hi = self.sa.partition_point(|s| cmp(s) != Ordering::Greater);
        let mut out: Vec<usize> = self.sa[lo..hi].iter().map(|&s| s as usize).collect();
        out.sort_unstable();
        out
    }
}

/// Forward and backward common extensions on one word.
#[derive(Clone, Debug)]
pub struct Extensions {
    forward: SuffixIndex,
    backward: SuffixIndex,
}

impl Extensions {
    pub fn new(w: &[Symbol]) -> Self {
        let forward = SuffixIndex::from_symbols(w);
        let backward = SuffixIndex::new(w.iter().rev().map(|s| s.0 as u32).collect());
        Extensions { forward, backward }
    }

    pub fn len(&self) -> usize {
        self.forward.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forward.is_empty()
    }

    pub fn forward(&self) -> &SuffixIndex {
        &self.forward
    }

    /// Longest common prefix of `w[i..]` and `w[j..]` (0-based).
    pub fn lce(&self, i: usize, j: usize) -> usize {
        self.forward.lce(i, j)
    }

    /// Longest common suffix of `w[..i]` and `w[..j]` (0-based exclusive ends).
    pub fn lcs(&self, i: usize, j: usize) -> usize {
        let n = self.len();
        if i == 0 || j == 0 {
            return 0;
        }
        self.backward.lce(n - i, n - j)
    }

    /// Whether the 0-based half-open factor `w[start..end]` has period `p`.
    pub fn has_period(&self, start: usize, end: usize, p: usize) -> bool {
        p == 0 || start + p >= end || self.lce(start, start + p) >= end - start - p
    }
}

/// `lyndon[i]` is the length of the longest Lyndon word starting at `i`,
/// read off the suffix ranks as the distance to the next smaller rank.
pub fn lyndon_array(rank: &[u32]) -> Vec<u32> {
    let n = rank.len();
    let mut out = vec![0u32; n];
    let mut stack: Vec<usize> = Vec::new();
    for i in (0..n).rev() {
        while let Some(&top) = stack.last() {
            if rank[top] > rank[i] {
                stack.pop();
            } else {
                break;
            }
        }
        let next = stack.last().copied().unwrap_or(n);
        out[i] = (next - i) as u32;
        stack.push(i);
    }
    out
}
