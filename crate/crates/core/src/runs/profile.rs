use serde::Serialize;

use super::{find_runs, CoverageSemantics, Run};
use crate::error::{Error, Result};
use crate::words::Symbol;

/// `r(n)` for every position: how many k-runs cover it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverageProfile {
    pub k: usize,
    pub semantics: CoverageSemantics,
    /// `r[n - 1]` is the coverage of position `n`.
    pub r: Vec<u32>,
}

impl CoverageProfile {
    pub fn from_runs(n: usize, k: usize, runs: &[Run], semantics: CoverageSemantics) -> Self {
        let mut delta = vec![0i64; n + 2];
        for run in runs {
            let (lo, hi) = match semantics {
                CoverageSemantics::Inclusive => (run.start, run.end),
                CoverageSemantics::Interior => (run.start + 1, run.end - 1),
            };
            if lo <= hi {
                delta[lo] += 1;
                delta[hi + 1] -= 1;
            }
        }
        let mut r = Vec::with_capacity(n);
        let mut acc = 0i64;
        for d in &delta[1..=n] {
            acc += d;
            r.push(acc as u32);
        }
        CoverageProfile { k, semantics, r }
    }

    /// Coverage of the 1-based position `x`.
    pub fn at(&self, x: usize) -> u32 {
        self.r[x - 1]
    }

    pub fn max(&self) -> u32 {
        self.r.iter().copied().max().unwrap_or(0)
    }
}

pub fn coverage_profile(w: &[Symbol], k: usize, semantics: CoverageSemantics) -> Result<CoverageProfile> {
    let runs = find_runs(w, k)?;
    Ok(CoverageProfile::from_runs(w.len(), k, &runs, semantics))
}

/// Runs not covered by another run, in the sense that no other run
/// `[i'..j']` satisfies `i' <= i < j <= j'`.
pub fn upper_runs(runs: &[Run]) -> Vec<Run> {
    let mut sorted: Vec<Run> = runs.to_vec();
    sorted.sort_unstable_by(|a, b| a.start.cmp(&b.start).then(b.end.cmp(&a.end)));
    let mut reach = 0usize;
    let mut upper = Vec::new();
    for run in sorted {
        if reach < run.end {
            upper.push(run);
        }
        reach = reach.max(run.end);
    }
    upper.sort_unstable_by_key(|r| (r.start, r.end));
    upper
}

/// Upper runs and `m(n)`, the number of upper runs starting or ending at `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MeasureProfile {
    pub upper: Vec<Run>,
    /// `m[n - 1]` is `m(n)`.
    pub m: Vec<u8>,
    prefix: Vec<u64>,
}

impl MeasureProfile {
    pub fn from_runs(n: usize, runs: &[Run]) -> Self {
        let upper = upper_runs(runs);
        let mut m = vec![0u8; n];
        for run in &upper {
            m[run.start - 1] += 1;
            m[run.end - 1] += 1;
        }
        let mut prefix = Vec::with_capacity(n + 1);
        prefix.push(0u64);
        for &x in &m {
            prefix.push(prefix.last().unwrap() + x as u64);
        }
        MeasureProfile { upper, m, prefix }
    }

    pub fn len(&self) -> usize {
        self.m.len()
    }

    pub fn is_empty(&self) -> bool {
        self.m.is_empty()
    }

    /// `m(x)` at the 1-based position `x`.
    pub fn at(&self, x: usize) -> u8 {
        self.m[x - 1]
    }

    pub(crate) fn check(&self, i: usize, j: usize) -> Result<()> {
        if i == 0 || j + 1 < i || j > self.m.len() {
            return Err(Error::IntervalOutOfRange { i, j, len: self.m.len() });
        }
        Ok(())
    }
}

pub fn measure_profile(w: &[Symbol], k: usize) -> Result<MeasureProfile> {
    let runs = find_runs(w, k)?;
    Ok(MeasureProfile::from_runs(w.len(), &runs))
}

/// `m[i..j]`, zero on the empty interval `j = i - 1`.
pub fn measure(profile: &MeasureProfile, i: usize, j: usize) -> Result<u64> {
    profile.check(i, j)?;
    Ok(profile.prefix[j] - profile.prefix[i - 1])
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KlReport {
    pub holds: bool,
    pub max_coverage: u32,
    /// First position covered by more than `l` runs.
    pub witness: Option<usize>,
}

/// Whether every position is covered by at most `l` k-runs.
pub fn check_kl(w: &[Symbol], k: usize, l: usize, semantics: CoverageSemantics) -> Result<KlReport> {
    let profile = coverage_profile(w, k, semantics)?;
    let witness = profile.r.iter().position(|&r| r as usize > l).map(|p| p + 1);
    Ok(KlReport { holds: witness.is_none(), max_coverage: profile.max(), witness })
}

/// Range maximum over a coverage sequence (sparse table), giving
/// `r_k[i..j]` in constant time.
#[derive(Clone, Debug)]
pub struct RangeMax {
    table: Vec<Vec<u32>>,
}

impl RangeMax {
    pub fn new(values: &[u32]) -> Self {
        let mut table = vec![values.to_vec()];
        let mut width = 1;
        while 2 * width <= values.len() {
            let prev = table.last().unwrap();
            let next = (0..prev.len() - width).map(|i| prev[i].max(prev[i + width])).collect();
            table.push(next);
            width *= 2;
        }
        RangeMax { table }
    }

    /// Maximum over the 1-based inclusive range `i..=j`; 0 when empty.
    pub fn max(&self, i: usize, j: usize) -> u32 {
        if j < i {
            return 0;
        }
        let (a, b) = (i - 1, j - 1);
        let level = (usize::BITS - 1 - (b - a + 1).leading_zeros()) as usize;
        self.table[level][a].max(self.table[level][b + 1 - (1 << level)])
    }
}
