use num_rational::Ratio;
use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundConstants {
    pub k: u64,
    pub l_prime: u64,
    pub m: u64,
    pub p: u32,
    pub d1: u64,
    #[serde(serialize_with = "ratio_string")]
    pub d2: Ratio<u64>,
    pub d3: u64,
    /// Least `N` with `[(M+4l') log_{D2}(2N/D1) + D3]^P < N`.
    pub n: u128,
    /// `D1 + 1 + log_{D2}(2N/D1)` at that `N`.
    pub h: f64,
}

fn ratio_string<S: serde::Serializer>(r: &Ratio<u64>, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format!("{}/{}", r.numer(), r.denom()))
}

/// Least integer `n >= lo` with `holds(n)`, for a predicate that is false at
/// `lo` and monotone from there on. Candidates are checked in `f64`.
fn least_satisfying(lo: u128, holds: impl Fn(f64) -> bool) -> Result<u128> {
    let mut bad = lo;
    let mut step: u128 = 1;
    let good = loop {
        let probe = bad.checked_add(step).ok_or_else(|| Error::Budget("N exceeds u128".into()))?;
        if holds(probe as f64) {
            break probe;
        }
        bad = probe;
        step = step.checked_mul(2).ok_or_else(|| Error::Budget("N exceeds u128".into()))?;
    };
    let (mut bad, mut good) = (bad, good);
    while good - bad > 1 {
        let mid = bad + (good - bad) / 2;
        if holds(mid as f64) {
            good = mid;
        } else {
            bad = mid;
        }
    }
    Ok(good)
}

pub fn bound_constants(k: u64, l_prime: u64, m: u64, p: u32) -> Result<BoundConstants> {
    if k < 2 || l_prime < 1 || m < 1 || p < 1 {
        return Err(Error::InvalidParameter(format!(
            "need k >= 2, l' >= 1, M >= 1, P >= 1 (got k={k}, l'={l_prime}, M={m}, P={p})"
        )));
    }
    let a = m + 4 * l_prime;
    let d1 = (k - 1) * (4 * l_prime + 2 * m + 3);
    let d2 = Ratio::new(d1 + 1, d1);
    let d3 = a * a + a + d1 + 1;
    let ln_d2 = ((d1 + 1) as f64 / d1 as f64).ln();
    let log_d2 = move |x: f64| x.ln() / ln_d2;
    let (af, d1f, d3f) = (a as f64, d1 as f64, d3 as f64);
    // Below D1/2 the logarithm is negative; from there on the left side is
    // concave in ln N and starts above N, so the inequality is monotone.
    let lo = d1.div_ceil(2) as u128;
    let n = least_satisfying(lo, |n| p as f64 * (af * log_d2(2.0 * n / d1f) + d3f).ln() < n.ln())?;
    let h = d1f + 1.0 + log_d2(2.0 * n as f64 / d1f);
    Ok(BoundConstants { k, l_prime, m, p, d1, d2, d3, n, h })
}

/// Least `N` with `(2 + log_{k/(k-1)} N)^P < N`, the k-power-free analogue.
pub fn kpower_free_bound(k: u64, p: u32) -> Result<u128> {
    if k < 2 || p < 1 {
        return Err(Error::InvalidParameter(format!("need k >= 2, P >= 1 (got k={k}, P={p})")));
    }
    let ln_r = (k as f64 / (k - 1) as f64).ln();
    least_satisfying(1, |n| p as f64 * (2.0 + n.ln() / ln_r).ln() < n.ln())
}
