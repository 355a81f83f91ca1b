use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::palcore::UnitKind;
use crate::runs::maximal_repetitions;
use crate::words::Symbol;

/// Longest input accepted by [`oracle_min_decomposition`].
pub const ORACLE_MAX_LEN: usize = 24;

/// Privileged by the recursive definition: a single letter, or a complete
/// first return to a shorter non-empty privileged word.
pub fn oracle_is_privileged(u: &[Symbol]) -> bool {
    if u.len() <= 1 {
        return true;
    }
    (1..u.len()).any(|b| {
        let v = &u[..b];
        v == &u[u.len() - b..] && occurrences(u, v) == 2 && oracle_is_privileged(v)
    })
}

fn occurrences(u: &[Symbol], v: &[Symbol]) -> usize {
    u.windows(v.len()).filter(|x| *x == v).count()
}

fn oracle_accepts(u: &[Symbol], kind: UnitKind) -> bool {
    match kind {
        UnitKind::Palindromic => u.iter().eq(u.iter().rev()),
        UnitKind::Privileged => oracle_is_privileged(u),
    }
}

/// Minimum factorization length by a quadratic DP whose unit test checks the
/// definitions literally.
pub fn oracle_min_decomposition(u: &[Symbol], kind: UnitKind) -> Result<usize> {
    if u.len() > ORACLE_MAX_LEN {
        return Err(Error::TooLong { len: u.len(), max: ORACLE_MAX_LEN });
    }
    let n = u.len();
    let mut best = vec![usize::MAX; n + 1];
    best[0] = 0;
    for j in 1..=n {
        for i in 0..j {
            if best[i] != usize::MAX && best[i] + 1 < best[j] && oracle_accepts(&u[i..j], kind) {
                best[j] = best[i] + 1;
            }
        }
    }
    Ok(best[n])
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KPowerReport {
    pub k: usize,
    pub free: bool,
    /// First occurrence `(i, j, period)` of a factor `u^k`, 1-based.
    pub witness: Option<(usize, usize, usize)>,
}

/// Whether `w` has no factor of the form `u^k` (integer powers only).
pub fn kpower_free_check(w: &[Symbol], k: usize) -> Result<KPowerReport> {
    if k < 2 {
        return Err(Error::InvalidK(k));
    }
    let witness = maximal_repetitions(w)
        .into_iter()
        .filter(|&(s, e, p)| e - s >= k * p)
        .map(|(s, _, p)| (s, p))
        .min()
        .map(|(s, p)| (s + 1, s + k * p, p));
    Ok(KPowerReport { k, free: witness.is_none(), witness })
}

/// For every 0-based start `x`, the largest `e` such that `w[x..e]` contains no
/// `k`-th power.
pub(crate) fn kpower_free_extent(w: &[Symbol], k: usize) -> Vec<usize> {
    let n = w.len();
    let powers: Vec<(usize, usize, usize)> = maximal_repetitions(w)
        .into_iter()
        .filter(|&(s, e, p)| e - s >= k * p)
        .map(|(s, e, p)| (s, e, k * p))
        .collect();
    // Earliest end of a power starting at or after x: either at a run start
    // s >= x, or at x itself inside a run that started earlier.
    let mut at_start = vec![usize::MAX; n + 1];
    let mut opens: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    let mut closes: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    for &(s, e, span) in &powers {
        at_start[s] = at_start[s].min(s + span);
        if s < e - span {
            opens[s + 1].push(span);
            closes[e - span + 1].push(span);
        }
    }
    for x in (0..n).rev() {
        at_start[x] = at_start[x].min(at_start[x + 1]);
    }
    let mut active: BTreeMap<usize, usize> = BTreeMap::new();
    let mut extent = Vec::with_capacity(n);
    for x in 0..n {
        for &span in &opens[x] {
            *active.entry(span).or_default() += 1;
        }
        for &span in &closes[x] {
            let c = active.get_mut(&span).unwrap();
            *c -= 1;
            if *c == 0 {
                active.remove(&span);
            }
        }
        let inside = active.keys().next().map_or(usize::MAX, |&span| x + span);
        let end = at_start[x].min(inside);
        extent.push(if end == usize::MAX { n } else { end - 1 });
    }
    extent
}
