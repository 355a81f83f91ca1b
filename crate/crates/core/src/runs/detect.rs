use super::Run;
use crate::error::{Error, Result};
use crate::suffix::{lyndon_array, suffix_ranks, Extensions};
use crate::words::Symbol;

/// All maximal repetitions `(start, end_exclusive, period)` (0-based) with
/// exponent at least 2, sorted.
///
/// Every run has a Lyndon root that is the longest Lyndon word starting at
/// its position, for one of the two orders on the alphabet. Each position
/// therefore yields one candidate period per order, extended both ways with
/// LCE queries.
pub fn maximal_repetitions(w: &[Symbol]) -> Vec<(usize, usize, usize)> {
    let n = w.len();
    if n < 2 {
        return Vec::new();
    }
    let ext = Extensions::new(w);
    let top = w.iter().map(|s| s.0 as u32).max().unwrap();
    let inverted: Vec<u32> = w.iter().map(|s| top - s.0 as u32).collect();
    let orders = [ext.forward().rank().to_vec(), suffix_ranks(&inverted)];
    let mut found = Vec::new();
    for rank in &orders {
        for (i, &p) in lyndon_array(rank).iter().enumerate() {
            let p = p as usize;
            let j = i + p;
            if j >= n {
                continue;
            }
            let right = ext.lce(i, j);
            if right == 0 {
                continue;
            }
            let left = ext.lcs(i, j);
            if p + right + left >= 2 * p {
                found.push((i - left, j + right, p));
            }
        }
    }
    found.sort_unstable();
    found.dedup();
    found
}

/// All k-runs of `w`: occurrences whose exponent (length over minimal period)
/// is at least `k` and that cannot be extended by one symbol on either side
/// without the exponent dropping below `k`. Sorted by `(start, end)`.
pub fn find_runs(w: &[Symbol], k: usize) -> Result<Vec<Run>> {
    if k < 2 {
        return Err(Error::InvalidK(k));
    }
    let n = w.len();
    let mut runs: Vec<Run> = maximal_repetitions(w)
        .into_iter()
        .filter(|&(s, e, p)| e - s >= k * p)
        .map(|(s, e, p)| Run {
            start: s + 1,
            end: e,
            period: p,
            left_truncated: s == 0,
            right_truncated: e == n,
        })
        .collect();
    runs.sort_unstable_by_key(|r| (r.start, r.end));
    Ok(runs)
}
