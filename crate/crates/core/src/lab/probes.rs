use serde::Serialize;

use crate::error::{Error, Result};
use crate::palcore::{pal_length_series, two_palindrome_split};
use crate::words::{apply_coding, hejda_encode, Symbol, Word, WordSource};

/// Largest word count [`ravsky_table`] will enumerate.
const RAVSKY_BUDGET: u64 = 1 << 24;

/// `table[n - 1]` is the largest palindromic length of a word of length `n`
/// over `alphabet` letters, for `n` in `1..=max_n`.
pub fn ravsky_table(max_n: usize, alphabet: u16) -> Result<Vec<u32>> {
    if alphabet == 0 {
        return Err(Error::InvalidParameter("alphabet must be non-empty".into()));
    }
    let count = (alphabet as u64).checked_pow(max_n as u32).filter(|&c| c <= RAVSKY_BUDGET);
    let count = count.ok_or_else(|| Error::Budget(format!("{alphabet}^{max_n} words")))?;
    let mut best = vec![0u32; max_n];
    let mut u = vec![Symbol(0); max_n];
    for mut code in 0..count {
        for s in u.iter_mut().rev() {
            *s = Symbol((code % alphabet as u64) as u16);
            code /= alphabet as u64;
        }
        for (b, v) in best.iter_mut().zip(pal_length_series(&u)) {
            *b = (*b).max(v);
        }
    }
    Ok(best)
}

/// Largest palindromic length of a word of length `n` over `alphabet` letters.
pub fn ravsky_max(n: usize, alphabet: u16) -> Result<u32> {
    Ok(ravsky_table(n, alphabet)?.last().copied().unwrap_or(0))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FactorWitness {
    /// 1-based start of the factor in the source word.
    pub start: usize,
    pub len: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProbeRow {
    pub p: u32,
    /// Least prefix length with palindromic length above `p`.
    pub prefix_len: Option<usize>,
    /// Shortest factor (then leftmost) with palindromic length above `p`;
    /// only scanned for ultimately periodic sources.
    pub factor: Option<FactorWitness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UnboundednessReport {
    pub source: String,
    pub horizon: usize,
    pub rows: Vec<ProbeRow>,
}

fn first_above(series: &[u32], p: u32) -> Option<usize> {
    series.iter().position(|&v| v > p).map(|i| i + 1)
}

pub fn unboundedness_probe(source: &WordSource, p_max: u32, horizon: usize) -> Result<UnboundednessReport> {
    if horizon == 0 {
        return Err(Error::InvalidParameter("horizon must be at least 1".into()));
    }
    let prefix = source.prefix(horizon)?;
    let series = pal_length_series(&prefix);
    // Every factor of an ultimately periodic word occurs starting before the
    // end of the first period.
    let factor_series: Vec<Vec<u32>> = match source {
        WordSource::UltimatelyPeriodic { preperiod, period } => {
            let starts = preperiod.len() + period.len();
            let long = source.prefix(starts + horizon)?;
            (0..starts).map(|s| pal_length_series(&long[s..s + horizon])).collect()
        }
        _ => Vec::new(),
    };
    let rows = (1..=p_max)
        .map(|p| {
            let factor = factor_series
                .iter()
                .enumerate()
                .filter_map(|(s, ser)| first_above(ser, p).map(|len| FactorWitness { start: s + 1, len }))
                .min_by_key(|f| (f.len, f.start));
            ProbeRow { p, prefix_len: first_above(&series, p), factor }
        })
        .collect();
    Ok(UnboundednessReport { source: source.to_string(), horizon, rows })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TailReport {
    pub split_found: bool,
    pub rotation_index: Option<usize>,
    #[serde(serialize_with = "opt_word")]
    pub p1: Option<Word>,
    #[serde(serialize_with = "opt_word")]
    pub p2: Option<Word>,
}

fn opt_word<S: serde::Serializer>(w: &Option<Word>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match w {
        Some(w) => s.serialize_some(&w.to_string()),
        None => s.serialize_none(),
    }
}

/// Looks for a rotation of `period` that splits into two palindromes. When
/// none exists, `preperiod period^ω` has factors of unbounded palindromic
/// length.
pub fn periodic_tail_check(preperiod: &[Symbol], period: &[Symbol]) -> Result<TailReport> {
    let _ = preperiod;
    if period.is_empty() {
        return Err(Error::EmptyPeriod);
    }
    for r in 0..period.len() {
        let rotation: Vec<Symbol> = period[r..].iter().chain(&period[..r]).copied().collect();
        if let Some((p1, p2)) = two_palindrome_split(&rotation) {
            return Ok(TailReport { split_found: true, rotation_index: Some(r), p1: Some(p1), p2: Some(p2) });
        }
    }
    Ok(TailReport { split_found: false, rotation_index: None, p1: None, p2: None })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CodingRow {
    pub symbol: String,
    pub factors_checked: u64,
    /// `(start, len, |u|_pal, |c(u)|_pal)` for every violating factor.
    pub violations: Vec<(usize, usize, u32, u32)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HejdaRow {
    pub encoded_len: usize,
    pub max_factor_pal_length: u32,
    pub max_encoded_factor_pal_length: u32,
    pub factors_checked: u64,
    /// `(start, len, |v|_pal)` for encoded factors above the bound.
    pub violations: Vec<(usize, usize, u32)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CodingReport {
    pub len: usize,
    pub factor_cap: usize,
    pub codings: Vec<CodingRow>,
    pub hejda: HejdaRow,
}

impl CodingReport {
    pub fn holds(&self) -> bool {
        self.codings.iter().all(|c| c.violations.is_empty()) && self.hejda.violations.is_empty()
    }
}

/// Per-start series over factors of length at most `cap`.
fn factor_series(w: &[Symbol], cap: usize) -> impl Iterator<Item = (usize, Vec<u32>)> + '_ {
    (0..w.len()).map(move |s| (s, pal_length_series(&w[s..(s + cap).min(w.len())])))
}

/// Checks `|c(u)|_pal <= |u|_pal` for every letter coding `c` and every
/// factor `u` of length at most `factor_cap`, and that factors of the Hejda
/// encoding stay within 4 of the largest factor palindromic length of `w`.
pub fn coding_reduction_check(w: &[Symbol], factor_cap: Option<usize>) -> Result<CodingReport> {
    let cap = factor_cap.unwrap_or(w.len()).max(1);
    let base: Vec<Vec<u32>> = factor_series(w, cap).map(|(_, s)| s).collect();
    let mut codings = Vec::new();
    for a in Word::from(w).alphabet() {
        let coded = apply_coding(w, a)?;
        let mut row = CodingRow { symbol: a.to_string(), factors_checked: 0, violations: Vec::new() };
        for (s, series) in factor_series(&coded, cap) {
            for (len, (&cu, &u)) in series.iter().zip(&base[s]).enumerate() {
                row.factors_checked += 1;
                if cu > u {
                    row.violations.push((s + 1, len + 1, u, cu));
                }
            }
        }
        codings.push(row);
    }
    let max_w = base.iter().flatten().copied().max().unwrap_or(0);
    let encoded = hejda_encode(w);
    let mut hejda = HejdaRow {
        encoded_len: encoded.len(),
        max_factor_pal_length: max_w,
        max_encoded_factor_pal_length: 0,
        factors_checked: 0,
        violations: Vec::new(),
    };
    for (s, series) in factor_series(&encoded, cap) {
        for (len, &v) in series.iter().enumerate() {
            hejda.factors_checked += 1;
            hejda.max_encoded_factor_pal_length = hejda.max_encoded_factor_pal_length.max(v);
            if v > max_w + 4 {
                hejda.violations.push((s + 1, len + 1, v));
            }
        }
    }
    Ok(CodingReport { len: w.len(), factor_cap: cap, codings, hejda })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::palcore::reference_pal_length_series;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn ravsky_small() {
        assert_eq!(ravsky_max(1, 2).unwrap(), 1);
        assert_eq!(ravsky_max(2, 2).unwrap(), 2);
        assert!(ravsky_max(30, 2).is_err());
        // Recount with the quadratic reference DP.
        let table = ravsky_table(10, 2).unwrap();
        for (n, &v) in table.iter().enumerate() {
            let n = n + 1;
            let recount = (0u32..1 << n)
                .map(|bits| {
                    let u = Word::from_ids((0..n).map(|b| ((bits >> b) & 1) as u16));
                    *reference_pal_length_series(&u).last().unwrap()
                })
                .max()
                .unwrap();
            assert_eq!(v, recount, "n = {n}");
        }
    }

    #[test]
    fn thue_morse_probe() {
        let rep = unboundedness_probe(&WordSource::thue_morse(), 3, 1000).unwrap();
        assert_eq!(rep.rows[0].prefix_len, Some(2));
        assert!(rep.rows.iter().all(|r| r.factor.is_none()));
        let lens: Vec<usize> = rep.rows.iter().filter_map(|r| r.prefix_len).collect();
        assert!(lens.windows(2).all(|p| p[0] <= p[1]));
    }

    #[test]
    fn periodic_probe() {
        let src = WordSource::periodic(Word::empty(), w("110100")).unwrap();
        let rep = unboundedness_probe(&src, 4, 400).unwrap();
        assert!(rep.rows.iter().all(|r| r.factor.is_some()), "{rep:?}");
        let unary = WordSource::periodic(Word::empty(), w("0")).unwrap();
        let rep = unboundedness_probe(&unary, 3, 200).unwrap();
        assert!(rep.rows.iter().all(|r| r.factor.is_none() && r.prefix_len.is_none()));
    }

    #[test]
    fn tails() {
        let r = periodic_tail_check(&[], &w("110100")).unwrap();
        assert!(!r.split_found);
        let r = periodic_tail_check(&[], &w("0110")).unwrap();
        assert_eq!((r.rotation_index, r.p1, r.p2), (Some(0), Some(Word::empty()), Some(w("0110"))));
        let r = periodic_tail_check(&[], &w("0011")).unwrap();
        assert_eq!((r.p1, r.p2), (Some(w("00")), Some(w("11"))));
        assert_eq!(periodic_tail_check(&[], &[]), Err(Error::EmptyPeriod));
    }

    #[test]
    fn codings() {
        let rep = coding_reduction_check(&w("012021"), None).unwrap();
        assert_eq!(rep.codings.len(), 3);
        assert!(rep.holds());
        let tm = WordSource::thue_morse().prefix(200).unwrap();
        let rep = coding_reduction_check(&tm, None).unwrap();
        assert!(rep.holds());
        assert_eq!(rep.hejda.encoded_len, 200 + 100 + 200);
    }

    #[test]
    fn binary_codings_are_relabelings() {
        let u = w("0010110111");
        let rep = coding_reduction_check(&u, None).unwrap();
        let base = pal_length_series(&u);
        for row in &rep.codings {
            assert!(row.violations.is_empty());
        }
        let flipped = apply_coding(&u, Symbol(0)).unwrap();
        assert_eq!(pal_length_series(&flipped), base);
    }
}
