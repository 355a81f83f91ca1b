use serde::Serialize;

use super::{find_runs, CoverageProfile, CoverageSemantics, MeasureProfile};
use crate::error::Result;
use crate::words::Symbol;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LPrimeRow {
    pub level: usize,
    /// Largest `m[i..j]` over intervals with `r_k[i..j] <= level`.
    pub max_measure: u64,
    /// Smallest `M` such that every interval of measure at least `M`
    /// contains a position covered by `level` or more runs.
    pub min_m: u64,
}

/// Finite-horizon diagnostic: nothing here is conclusive about the
/// infinite word the input is a prefix of.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LPrimeReport {
    pub k: usize,
    pub horizon: usize,
    pub runs: usize,
    pub candidate_lprime: Option<usize>,
    pub rows: Vec<LPrimeRow>,
    pub conclusive: bool,
}

/// Largest measure of an interval on which every coverage value is at most `x`.
fn max_measure_below(cover: &CoverageProfile, m: &MeasureProfile, x: u32) -> u64 {
    let mut best = 0;
    let mut acc = 0;
    for (n, &r) in cover.r.iter().enumerate() {
        if r <= x {
            acc += m.m[n] as u64;
            best = best.max(acc);
        } else {
            acc = 0;
        }
    }
    best
}

pub fn lprime_probe(w: &[Symbol], k: usize, l: usize) -> Result<LPrimeReport> {
    let runs = find_runs(w, k)?;
    let cover = CoverageProfile::from_runs(w.len(), k, &runs, CoverageSemantics::Inclusive);
    let measure = MeasureProfile::from_runs(w.len(), &runs);
    let rows: Vec<LPrimeRow> = (1..=l)
        .map(|level| LPrimeRow {
            level,
            max_measure: max_measure_below(&cover, &measure, level as u32),
            min_m: max_measure_below(&cover, &measure, level as u32 - 1) + 1,
        })
        .collect();
    let candidate_lprime = if runs.is_empty() {
        None
    } else {
        let top = rows.iter().map(|r| r.max_measure).max();
        rows.iter().find(|r| Some(r.max_measure) == top).map(|r| r.level)
    };
    Ok(LPrimeReport {
        k,
        horizon: w.len(),
        runs: runs.len(),
        candidate_lprime,
        rows,
        conclusive: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::{Word, WordSource};

    #[test]
    fn sierpinski_candidate() {
        let s = WordSource::sierpinski().prefix(2187).unwrap();
        let rep = lprime_probe(&s, 3, 1).unwrap();
        assert_eq!(rep.candidate_lprime, Some(1));
        assert!(!rep.conclusive);
        let total: u64 = measure_total(&s);
        assert_eq!(rep.rows[0].max_measure, total);
        assert_eq!(rep.rows[0].min_m, 1);
    }

    fn measure_total(w: &[Symbol]) -> u64 {
        let p = crate::runs::measure_profile(w, 3).unwrap();
        p.m.iter().map(|&x| x as u64).sum()
    }

    #[test]
    fn square_free_is_degenerate() {
        let v: Word = "0102012021012".parse().unwrap();
        let rep = lprime_probe(&v, 3, 2).unwrap();
        assert_eq!(rep.runs, 0);
        assert_eq!(rep.candidate_lprime, None);
    }

    #[test]
    fn unary_word() {
        let v = Word::from_ids(std::iter::repeat_n(0, 50));
        let rep = lprime_probe(&v, 3, 3).unwrap();
        assert_eq!(rep.runs, 1);
        assert_eq!(rep.candidate_lprime, Some(1));
        assert_eq!(rep.rows[0].max_measure, 2);
    }
}
