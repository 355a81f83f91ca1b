use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::oracle::kpower_free_extent;
use crate::error::{Error, Result};
use crate::palcore::{for_each_palindromes_by_start, min_decomposition, privileged_prefix_flags, Factorization, UnitKind};
use crate::runs::{code, find_runs, measure, star_code, CoverageProfile, CoverageSemantics, MeasureProfile, RangeMax, Run, RunRelation};
use crate::suffix::{Extensions, SuffixIndex};
use crate::words::{Symbol, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum LemmaId {
    PalPeriod,
    PalRatio,
    PalCount,
    PrivPrefixSuffix,
    PrivRatio,
    MRange,
    MeasureAdd,
    RunPartition,
    SideCount,
    InternalInvariance,
    MirrorInternal,
    CoveringBound,
    Ivp1,
    Ivp2,
    MeasureRatio,
    StarCount,
    CodeLength,
}

impl LemmaId {
    pub const ALL: [LemmaId; 17] = [
        LemmaId::PalPeriod,
        LemmaId::PalRatio,
        LemmaId::PalCount,
        LemmaId::PrivPrefixSuffix,
        LemmaId::PrivRatio,
        LemmaId::MRange,
        LemmaId::MeasureAdd,
        LemmaId::RunPartition,
        LemmaId::SideCount,
        LemmaId::InternalInvariance,
        LemmaId::MirrorInternal,
        LemmaId::CoveringBound,
        LemmaId::Ivp1,
        LemmaId::Ivp2,
        LemmaId::MeasureRatio,
        LemmaId::StarCount,
        LemmaId::CodeLength,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LemmaId::PalPeriod => "PAL_PERIOD",
            LemmaId::PalRatio => "PAL_RATIO",
            LemmaId::PalCount => "PAL_COUNT",
            LemmaId::PrivPrefixSuffix => "PRIV_PREFIX_SUFFIX",
            LemmaId::PrivRatio => "PRIV_RATIO",
            LemmaId::MRange => "M_RANGE",
            LemmaId::MeasureAdd => "MEASURE_ADD",
            LemmaId::RunPartition => "RUN_PARTITION",
            LemmaId::SideCount => "SIDE_COUNT",
            LemmaId::InternalInvariance => "INTERNAL_INVARIANCE",
            LemmaId::MirrorInternal => "MIRROR_INTERNAL",
            LemmaId::CoveringBound => "COVERING_BOUND",
            LemmaId::Ivp1 => "IVP1",
            LemmaId::Ivp2 => "IVP2",
            LemmaId::MeasureRatio => "MEASURE_RATIO",
            LemmaId::StarCount => "STAR_COUNT",
            LemmaId::CodeLength => "CODE_LENGTH",
        }
    }

    fn needs_runs(self) -> bool {
        !matches!(
            self,
            LemmaId::PalPeriod | LemmaId::PalRatio | LemmaId::PalCount | LemmaId::PrivPrefixSuffix | LemmaId::PrivRatio
        )
    }
}

impl fmt::Display for LemmaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LemmaId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_uppercase().replace('-', "_");
        LemmaId::ALL
            .into_iter()
            .find(|id| id.name() == key)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown lemma id `{s}`")))
    }
}

/// Everything a checker may need. Unused fields are ignored.
#[derive(Clone, Debug)]
pub struct LemmaInputs {
    pub word: Word,
    /// The word is a prefix of an infinite word, so runs touching its right
    /// end are not known to be maximal and are left out.
    pub prefix_of_infinite: bool,
    pub k: Option<usize>,
    pub l_prime: Option<usize>,
    pub m: Option<u64>,
    pub c: Option<u64>,
    pub boundaries: Option<Vec<usize>>,
    /// Longest factor examined per start or per sample.
    pub max_len: Option<usize>,
    /// Also check every binary word up to this length (privileged lemmas).
    pub exhaustive: Option<usize>,
    pub samples: usize,
    pub seed: u64,
    pub semantics: CoverageSemantics,
}

impl Default for LemmaInputs {
    fn default() -> Self {
        LemmaInputs {
            word: Word::empty(),
            prefix_of_infinite: false,
            k: None,
            l_prime: None,
            m: None,
            c: None,
            boundaries: None,
            max_len: None,
            exhaustive: None,
            samples: 2000,
            seed: 0,
            semantics: CoverageSemantics::Inclusive,
        }
    }
}

impl LemmaInputs {
    pub fn new(word: Word) -> Self {
        LemmaInputs { word, ..Default::default() }
    }

    fn k(&self) -> Result<usize> {
        match self.k {
            Some(k) if k < 2 => Err(Error::InvalidK(k)),
            Some(k) => Ok(k),
            None => Err(Error::MissingParameter("k")),
        }
    }

    fn l_prime(&self) -> Result<usize> {
        self.l_prime.ok_or(Error::MissingParameter("l_prime"))
    }

    fn big_m(&self) -> Result<u64> {
        self.m.ok_or(Error::MissingParameter("m"))
    }
}

/// One failed instance, with the positions needed to replay it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub positions: Vec<usize>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaReport {
    pub lemma_id: LemmaId,
    pub horizon: usize,
    pub instances_checked: u64,
    /// Instances whose hypothesis failed and were not checked.
    pub skipped: u64,
    pub violations: Vec<Violation>,
    pub verdict: String,
}

impl LemmaReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

const MAX_RECORDED: usize = 1000;
const DEFAULT_SPAN: usize = 64;
const MAX_OCCURRENCES: usize = 32;

#[derive(Default)]
struct Tally {
    checked: u64,
    skipped: u64,
    violations: Vec<Violation>,
    hypothesis_note: Option<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, positions: impl FnOnce() -> Vec<usize>, detail: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.violations.len() < MAX_RECORDED {
            self.violations.push(Violation { positions: positions(), detail: detail() });
        }
    }
}

/// Runs and the profiles derived from them.
struct RunContext {
    runs: Vec<Run>,
    cover: CoverageProfile,
    rmax: RangeMax,
    measure: MeasureProfile,
}

impl RunContext {
    fn new(w: &[Symbol], k: usize, inputs: &LemmaInputs) -> Result<Self> {
        let mut runs = find_runs(w, k)?;
        if inputs.prefix_of_infinite {
            runs.retain(|r| !r.right_truncated);
        }
        let cover = CoverageProfile::from_runs(w.len(), k, &runs, inputs.semantics);
        let rmax = RangeMax::new(&cover.r);
        let measure = MeasureProfile::from_runs(w.len(), &runs);
        Ok(RunContext { runs, cover, rmax, measure })
    }

    fn m(&self, i: usize, j: usize) -> u64 {
        measure(&self.measure, i, j).expect("interval checked by caller")
    }

    fn r(&self, i: usize, j: usize) -> usize {
        self.rmax.max(i, j) as usize
    }

    /// Internal runs of `w[p1..p2]` as offsets from `p1`.
    fn internal(&self, p1: usize, p2: usize) -> BTreeSet<(usize, usize)> {
        let lo = self.runs.partition_point(|r| r.start <= p1);
        self.runs[lo..]
            .iter()
            .take_while(|r| r.start < p2)
            .filter(|r| r.end < p2)
            .map(|r| (r.start - p1, r.end - p1))
            .collect()
    }

    fn intersecting(&self, p1: usize, p2: usize) -> impl Iterator<Item = &Run> {
        let hi = self.runs.partition_point(|r| r.start <= p2);
        self.runs[..hi].iter().filter(move |r| r.end >= p1)
    }

    /// Largest measure of an interval all of whose coverage values are at
    /// most `x`.
    fn max_measure_below(&self, x: usize) -> u64 {
        let (mut best, mut acc) = (0, 0);
        for (n, &r) in self.cover.r.iter().enumerate() {
            if r as usize <= x {
                acc += self.measure.m[n] as u64;
                best = best.max(acc);
            } else {
                acc = 0;
            }
        }
        best
    }

    /// Least `j >= i - 1` with `m[i..j] >= target`.
    fn reach(&self, i: usize, target: u64) -> Option<usize> {
        let n = self.measure.len();
        let mut acc = 0;
        if target == 0 {
            return Some(i - 1);
        }
        for j in i..=n {
            acc += self.measure.at(j) as u64;
            if acc >= target {
                return Some(j);
            }
        }
        None
    }
}

fn sample_interval(rng: &mut ChaCha8Rng, n: usize, span: usize) -> (usize, usize) {
    let len = rng.gen_range(1..=span.min(n));
    let i = rng.gen_range(1..=n - len + 1);
    (i, i + len - 1)
}

/// Strict bound for nested palindromes: `b / a > k / (k - 1)`.
pub fn pal_ratio_ok(a: usize, b: usize, k: usize) -> bool {
    b * (k - 1) > a * k
}

/// Non-strict bound for nested privileged words: `b / a >= k / (k - 1)`.
pub fn priv_ratio_ok(a: usize, b: usize, k: usize) -> bool {
    b * (k - 1) >= a * k
}

pub fn lemma_check(id: LemmaId, inputs: &LemmaInputs) -> Result<LemmaReport> {
    let w = inputs.word.as_slice();
    let n = w.len();
    let mut rng = ChaCha8Rng::seed_from_u64(inputs.seed);
    let span = inputs.max_len.unwrap_or(DEFAULT_SPAN).max(1);
    let mut t = Tally::default();
    let ctx = if id.needs_runs() { Some(RunContext::new(w, inputs.k()?, inputs)?) } else { None };
    let samples = if n == 0 { 0 } else { inputs.samples };
    match id {
        LemmaId::PalPeriod => pal_period(w, &mut t),
        LemmaId::PalRatio => pal_ratio(w, inputs.k()?, &mut t),
        LemmaId::PalCount => pal_count(w, inputs.k()?, &mut t),
        LemmaId::PrivPrefixSuffix => priv_prefix_suffix(w, inputs, &mut t),
        LemmaId::PrivRatio => priv_ratio(w, inputs.k()?, inputs.max_len.unwrap_or(256), &mut t),
        LemmaId::MRange => {
            let ctx = ctx.as_ref().unwrap();
            for (x, &m) in ctx.measure.m.iter().enumerate() {
                t.check(m <= 2, || vec![x + 1], || format!("m = {m}"));
            }
        }
        LemmaId::MeasureAdd => {
            let ctx = ctx.as_ref().unwrap();
            let direct = |i: usize, j: usize| (i..=j).map(|x| ctx.measure.at(x) as u64).sum::<u64>();
            for _ in 0..samples {
                if n < 2 {
                    break;
                }
                let (i1, i3) = sample_interval(&mut rng, n, span.max(2));
                if i1 == i3 {
                    t.skipped += 1;
                    continue;
                }
                let i2 = rng.gen_range(i1..i3);
                let (whole, a, b) = (ctx.m(i1, i3), direct(i1, i2), direct(i2 + 1, i3));
                t.check(whole == a + b, || vec![i1, i2, i3], || format!("{whole} != {a} + {b}"));
            }
        }
        LemmaId::RunPartition | LemmaId::SideCount => {
            let ctx = ctx.as_ref().unwrap();
            for _ in 0..samples {
                let (p1, p2) = sample_interval(&mut rng, n, span);
                if p1 == p2 {
                    t.skipped += 1;
                    continue;
                }
                if id == LemmaId::RunPartition {
                    run_partition(ctx, p1, p2, &mut t);
                } else {
                    let rel: Vec<RunRelation> = ctx.intersecting(p1, p2).filter_map(|r| r.relation_to(p1, p2)).collect();
                    let left = rel.iter().filter(|&&r| r == RunRelation::Left).count();
                    let right = rel.iter().filter(|&&r| r == RunRelation::Right).count();
                    let (r1, r2) = (ctx.cover.at(p1) as usize, ctx.cover.at(p2) as usize);
                    t.check(
                        left <= r1 && right <= r2,
                        || vec![p1, p2],
                        || format!("{left} left runs vs r(p1) = {r1}, {right} right runs vs r(p2) = {r2}"),
                    );
                }
            }
        }
        LemmaId::InternalInvariance | LemmaId::MirrorInternal => {
            let ctx = ctx.as_ref().unwrap();
            let index = SuffixIndex::from_symbols(w);
            let mirror = id == LemmaId::MirrorInternal;
            for _ in 0..samples {
                let (p1, p2) = sample_interval(&mut rng, n, span);
                let len = p2 - p1 + 1;
                let mut pattern: Vec<u32> = w[p1 - 1..p2].iter().map(|s| s.0 as u32).collect();
                if mirror {
                    pattern.reverse();
                }
                let here = ctx.internal(p1, p2);
                let expect: BTreeSet<(usize, usize)> = if mirror {
                    here.iter().map(|&(a, b)| (len - 1 - b, len - 1 - a)).collect()
                } else {
                    here
                };
                let occ = index.occurrences(&pattern);
                let others: Vec<usize> = occ.into_iter().map(|q| q + 1).filter(|&q| mirror || q != p1).take(MAX_OCCURRENCES).collect();
                if others.is_empty() {
                    t.skipped += 1;
                }
                for q1 in others {
                    let there = ctx.internal(q1, q1 + len - 1);
                    t.check(there == expect, || vec![p1, p2, q1, q1 + len - 1], || format!("internal runs {expect:?} vs {there:?}"));
                }
            }
        }
        LemmaId::CoveringBound => {
            let ctx = ctx.as_ref().unwrap();
            for s in 0..samples {
                let (p1, p2) = if s % 2 == 1 && !ctx.runs.is_empty() {
                    let run = ctx.runs[rng.gen_range(0..ctx.runs.len())];
                    let a = rng.gen_range(run.start..=run.end);
                    let b = rng.gen_range(run.start..=run.end);
                    (a.min(b), a.max(b))
                } else {
                    sample_interval(&mut rng, n, span)
                };
                if !ctx.intersecting(p1, p2).any(|r| r.start <= p1 && p2 <= r.end) {
                    t.skipped += 1;
                    continue;
                }
                let (m, r) = (ctx.m(p1, p2), ctx.r(p1, p2));
                t.check(m <= 2 * r as u64, || vec![p1, p2], || format!("m = {m} > 2 r = {}", 2 * r));
            }
        }
        LemmaId::Ivp1 | LemmaId::Ivp2 => {
            let ctx = ctx.as_ref().unwrap();
            let (l, big_m) = (inputs.l_prime()?, inputs.big_m()?);
            if let Some(note) = constants_hypothesis(ctx, l, big_m) {
                t.hypothesis_note = Some(note);
            } else {
                ivp(ctx, w, id, l, big_m, inputs.c.unwrap_or(1), samples, span, &mut rng, &mut t);
            }
        }
        LemmaId::MeasureRatio => {
            let ctx = ctx.as_ref().unwrap();
            let (k, l, big_m) = (inputs.k()?, inputs.l_prime()?, inputs.big_m()?);
            if let Some(note) = constants_hypothesis(ctx, l, big_m) {
                t.hypothesis_note = Some(note);
            } else {
                measure_ratio(ctx, w, k as u64, l, big_m, &mut t);
            }
        }
        LemmaId::StarCount => {
            let ctx = ctx.as_ref().unwrap();
            if let Some(b) = &inputs.boundaries {
                let f = Factorization::from_boundaries(w, UnitKind::Palindromic, b.clone())?;
                star_count(ctx, &f, b[0] + 1, n, &mut t)?;
            } else {
                for _ in 0..samples {
                    let (i, j) = sample_interval(&mut rng, n, span);
                    let end = rng.gen_range(i..=j);
                    let local = min_decomposition(&w[i - 1..end], UnitKind::Palindromic)?;
                    let shifted = local.boundaries.iter().map(|b| b + i - 1).collect();
                    let f = Factorization::from_boundaries(w, UnitKind::Palindromic, shifted)?;
                    star_count(ctx, &f, i, j, &mut t)?;
                }
            }
        }
        LemmaId::CodeLength => {
            let ctx = ctx.as_ref().unwrap();
            for _ in 0..samples {
                let (i, j) = sample_interval(&mut rng, n, span);
                let c = code(&ctx.measure, i, j)?.len() as u64;
                let m = ctx.m(i, j);
                t.check(c <= m && m <= 2 * c, || vec![i, j], || format!("c = {c}, m = {m}"));
            }
        }
    }
    let verdict = match (&t.hypothesis_note, t.violations.is_empty()) {
        (Some(note), _) => format!("hypothesis not met at horizon: {note}"),
        (None, true) => "no counterexample found at horizon".to_string(),
        (None, false) => "violations found".to_string(),
    };
    Ok(LemmaReport {
        lemma_id: id,
        horizon: n,
        instances_checked: t.checked,
        skipped: t.skipped,
        violations: t.violations,
        verdict,
    })
}

fn pal_period(w: &[Symbol], t: &mut Tally) {
    let ext = Extensions::new(w);
    for_each_palindromes_by_start(w, |i, lens| {
        let pairs: Vec<(usize, usize)> = if lens.len() <= 48 {
            (0..lens.len()).flat_map(|a| (a + 1..lens.len()).map(move |b| (a, b))).collect()
        } else {
            (0..lens.len() - 1).flat_map(|a| [(a, a + 1), (a, lens.len() - 1)]).collect()
        };
        for (a, b) in pairs {
            let (v, u) = (lens[a], lens[b]);
            t.check(ext.has_period(i, i + u, u - v), || vec![i + 1, i + v, i + u], || format!("not {}-periodic", u - v));
        }
    });
}

fn pal_ratio(w: &[Symbol], k: usize, t: &mut Tally) {
    let extent = kpower_free_extent(w, k);
    for_each_palindromes_by_start(w, |i, lens| {
        for pair in lens.windows(2) {
            if i + pair[1] > extent[i] {
                t.skipped += 1;
                continue;
            }
            t.check(
                pal_ratio_ok(pair[0], pair[1], k),
                || vec![i + 1, i + pair[0], i + pair[1]],
                || format!("ratio {}/{} not above {k}/{}", pair[1], pair[0], k - 1),
            );
        }
    });
}

fn pal_count(w: &[Symbol], k: usize, t: &mut Tally) {
    let extent = kpower_free_extent(w, k);
    let ln_r = (k as f64 / (k - 1) as f64).ln();
    for_each_palindromes_by_start(w, |i, lens| {
        for (idx, &len) in lens.iter().enumerate() {
            if i + len > extent[i] {
                t.skipped += 1;
                continue;
            }
            // idx + 1 non-empty palindromes of length <= len, plus the empty one.
            let count = idx as f64 + 2.0;
            let bound = 2.0 + (len as f64).ln() / ln_r;
            t.check(count <= bound + 1e-9, || vec![i + 1, i + len], || format!("{count} palindromes of length <= {len}, bound {bound:.3}"));
        }
    });
}

fn check_privileged_prefixes(u: &[Symbol], flags: &[bool], offset: usize, t: &mut Tally) {
    let n = u.len();
    if !flags[n] || n < 2 {
        return;
    }
    for l in 1..n {
        if flags[l] {
            t.check(u[..l] == u[n - l..], || vec![offset + 1, offset + l, offset + n], || format!("privileged prefix of length {l} is not a suffix"));
        }
    }
}

fn priv_prefix_suffix(w: &[Symbol], inputs: &LemmaInputs, t: &mut Tally) {
    let mut flags = Vec::new();
    if let Some(e) = inputs.exhaustive {
        for len in 1..=e {
            for bits in 0u64..1 << len {
                let u: Vec<Symbol> = (0..len).map(|b| Symbol(((bits >> (len - 1 - b)) & 1) as u16)).collect();
                privileged_prefix_flags(&u, &mut flags);
                check_privileged_prefixes(&u, &flags, 0, t);
            }
        }
    }
    let span = inputs.max_len.unwrap_or(DEFAULT_SPAN);
    for i in 0..w.len() {
        let window = &w[i..(i + span).min(w.len())];
        privileged_prefix_flags(window, &mut flags);
        for len in 2..=window.len() {
            if flags[len] {
                let sub = &flags[..=len];
                check_privileged_prefixes(&window[..len], sub, i, t);
            }
        }
    }
}

fn priv_ratio(w: &[Symbol], k: usize, span: usize, t: &mut Tally) {
    let extent = kpower_free_extent(w, k);
    let mut flags = Vec::new();
    for i in 0..w.len() {
        let window = &w[i..(i + span).min(extent[i])];
        privileged_prefix_flags(window, &mut flags);
        let lens: Vec<usize> = (1..=window.len()).filter(|&l| flags[l]).collect();
        for pair in lens.windows(2) {
            t.check(
                priv_ratio_ok(pair[0], pair[1], k),
                || vec![i + 1, i + pair[0], i + pair[1]],
                || format!("ratio {}/{} below {k}/{}", pair[1], pair[0], k - 1),
            );
        }
    }
}

fn run_partition(ctx: &RunContext, p1: usize, p2: usize, t: &mut Tally) {
    for r in ctx.intersecting(p1, p2) {
        let (j1, j2) = (r.start, r.end);
        let internal = p1 < j1 && j1 < j2 && j2 < p2;
        let left = j1 <= p1 && p1 <= j2 && j2 < p2;
        let right = p1 < j1 && j1 <= p2 && p2 <= j2;
        let covering = j1 <= p1 && p1 < p2 && p2 <= j2;
        let hits = [internal, left, right, covering].iter().filter(|&&b| b).count();
        let expect = [RunRelation::Internal, RunRelation::Left, RunRelation::Right, RunRelation::Covering]
            .into_iter()
            .zip([internal, left, right, covering])
            .find(|&(_, b)| b)
            .map(|(rel, _)| rel);
        t.check(hits == 1 && r.relation_to(p1, p2) == expect, || vec![p1, p2, j1, j2], || format!("run {r} falls in {hits} classes"));
    }
}

/// `None` when every interval of measure at least `M` reaches coverage `l'`
/// and the coverage never exceeds `l'` on the intervals the checkers use.
fn constants_hypothesis(ctx: &RunContext, l: usize, big_m: u64) -> Option<String> {
    if l == 0 {
        return Some("l' must be at least 1".into());
    }
    let below = ctx.max_measure_below(l - 1);
    if below >= big_m {
        return Some(format!("an interval of measure {below} >= M has coverage below {l}"));
    }
    None
}

#[allow(clippy::too_many_arguments)]
fn ivp(
    ctx: &RunContext,
    w: &[Symbol],
    id: LemmaId,
    l: usize,
    big_m: u64,
    c: u64,
    samples: usize,
    span: usize,
    rng: &mut ChaCha8Rng,
    t: &mut Tally,
) {
    let n = w.len();
    let index = SuffixIndex::from_symbols(w);
    let lw = l as u64;
    for _ in 0..samples {
        let i1 = rng.gen_range(1..=n);
        let (i2, need) = match id {
            LemmaId::Ivp1 => {
                let Some(min_end) = ctx.reach(i1, big_m + 4 * lw) else {
                    t.skipped += 1;
                    continue;
                };
                (min_end + rng.gen_range(0..=span).min(n - min_end), 2)
            }
            _ => {
                let target = 2 * big_m + 4 * lw + 2 + c;
                match ctx.reach(i1, target) {
                    Some(end) if ctx.m(i1, end) == target => (end, c),
                    _ => {
                        t.skipped += 1;
                        continue;
                    }
                }
            }
        };
        if ctx.r(i1, i2) != l {
            t.skipped += 1;
            continue;
        }
        let len = i2 - i1 + 1;
        let mut pattern: Vec<u32> = w[i1 - 1..i2].iter().map(|s| s.0 as u32).collect();
        if id == LemmaId::Ivp1 {
            pattern.reverse();
        }
        for j1 in index.occurrences(&pattern).into_iter().map(|q| q + 1).take(MAX_OCCURRENCES) {
            let j2 = j1 + len - 1;
            if id == LemmaId::Ivp2 && j1 == i1 {
                continue;
            }
            if ctx.r(j1, j2) > l {
                t.skipped += 1;
                continue;
            }
            let m = ctx.m(j1, j2);
            t.check(m >= need, || vec![i1, i2, j1, j2], || format!("m[j1..j2] = {m} < {need}"));
        }
    }
}

fn measure_ratio(ctx: &RunContext, w: &[Symbol], k: u64, l: usize, big_m: u64, t: &mut Tally) {
    let d1 = (k - 1) * (4 * l as u64 + 2 * big_m + 3);
    for_each_palindromes_by_start(w, |i, lens| {
        let i1 = i + 1;
        for pair in lens.windows(2) {
            let (i2, i3) = (i + pair[0], i + pair[1]);
            let small = ctx.m(i1, i2);
            if ctx.r(i1, i3) > l || small < d1 {
                t.skipped += 1;
                continue;
            }
            let big = ctx.m(i1, i3);
            t.check(big * d1 >= small * (d1 + 1), || vec![i1, i2, i3], || format!("measure ratio {big}/{small} below 1 + 1/{d1}"));
        }
    });
}

fn star_count(ctx: &RunContext, f: &Factorization, i: usize, j: usize, t: &mut Tally) -> Result<()> {
    let c = code(&ctx.measure, i, j)?;
    let s = star_code(&c, f)?;
    let stars = s.letters.chars().filter(|&ch| ch == '*').count();
    t.check(
        stars == f.len() + 1 && s.unstarred() == c.to_string(),
        || f.boundaries.clone(),
        || format!("{} has {stars} stars for {} parts", s.letters, f.len()),
    );
    Ok(())
}
