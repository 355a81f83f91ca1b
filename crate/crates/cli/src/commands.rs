use std::fs;

use serde::{Deserialize, Serialize};

use palword_core::lab::{
    bound_constants, coding_reduction_check, kpower_free_bound, kpower_free_check, lemma_check, periodic_tail_check,
    ravsky_table, unboundedness_probe, LemmaId, LemmaInputs, LemmaReport,
};
use palword_core::palcore::{is_privileged, length_series, min_decomposition, min_decomposition_length};
use palword_core::runs::{
    check_kl, code, coverage_profile, find_runs, lprime_probe, measure, measure_profile, star_code,
};
use palword_core::words::text::write_words;
use palword_core::{Error, Factorization, Result, UnitKind, Word, WordSource};

use crate::input::{self, Input};
use crate::output::{json, opt, Table};
use crate::{Cli, Command, Format, Opts, Outcome};

fn need<T: Copy>(v: Option<T>, name: &'static str) -> Result<T> {
    v.ok_or(Error::MissingParameter(name))
}

fn interval(opts: &Opts, n: usize) -> (usize, usize) {
    (opts.i.unwrap_or(1), opts.j.unwrap_or(n))
}

pub fn run(cli: &Cli) -> Result<(String, Outcome)> {
    let o = &cli.opts;
    let csv = o.format == Format::Csv;
    let ok = |s: String| Ok((s, Outcome::Ok));
    match &cli.command {
        Command::Generate => {
            let w = input::word(o)?.word;
            if csv {
                ok(write_words(&[w]))
            } else {
                ok(json(&serde_json::json!({ "len": w.len(), "word": w.to_string() })))
            }
        }
        Command::PalLength | Command::PrivLength => {
            let kind = if matches!(cli.command, Command::PalLength) { UnitKind::Palindromic } else { UnitKind::Privileged };
            let w = input::word(o)?.word;
            if w.is_empty() {
                return Err(Error::EmptyWord);
            }
            let len = min_decomposition_length(&w, kind);
            if csv {
                ok(format!("{len}\n"))
            } else {
                let mut v = serde_json::json!({ "kind": kind, "length": len });
                if kind == UnitKind::Privileged {
                    v["privileged"] = is_privileged(&w).into();
                }
                ok(json(&v))
            }
        }
        Command::Series => {
            let kind = UnitKind::from(o.kind);
            let series = length_series(&input::word(o)?.word, kind);
            if csv {
                let mut t = Table::new(&["n", "length"]);
                for (n, v) in series.iter().enumerate() {
                    t.row(&[&(n + 1), v]);
                }
                ok(t.finish())
            } else {
                ok(json(&serde_json::json!({ "kind": kind, "series": series })))
            }
        }
        Command::Decompose => {
            let f = min_decomposition(&input::word(o)?.word, o.kind.into())?;
            if csv {
                let mut t = Table::new(&["part", "start", "end", "word"]);
                for (d, (pair, part)) in f.boundaries.windows(2).zip(&f.parts).enumerate() {
                    t.row(&[&(d + 1), &(pair[0] + 1), &pair[1], part]);
                }
                ok(t.finish())
            } else {
                ok(json(&f))
            }
        }
        Command::Runs => {
            let runs = find_runs(&input::word(o)?.word, need(o.k, "k")?)?;
            if csv {
                let mut t = Table::new(&["start", "end", "period", "exponent_num", "exponent_den", "ltrunc", "rtrunc"]);
                for r in &runs {
                    let e = r.exponent();
                    t.row(&[&r.start, &r.end, &r.period, e.numer(), e.denom(), &r.left_truncated, &r.right_truncated]);
                }
                ok(t.finish())
            } else {
                ok(json(&runs))
            }
        }
        Command::Coverage => {
            let k = need(o.k, "k")?;
            let prof = coverage_profile(&input::word(o)?.word, k, o.semantics.into())?;
            if csv {
                let mut t = Table::new(&["n", "r"]);
                for (n, r) in prof.r.iter().enumerate() {
                    t.row(&[&(n + 1), r]);
                }
                ok(t.finish())
            } else {
                ok(json(&serde_json::json!({ "k": k, "semantics": prof.semantics, "r": prof.r })))
            }
        }
        Command::Measure => {
            let w = input::word(o)?.word;
            let prof = measure_profile(&w, need(o.k, "k")?)?;
            if o.i.is_some() || o.j.is_some() {
                let (i, j) = interval(o, w.len());
                let m = measure(&prof, i, j)?;
                return if csv { ok(format!("{m}\n")) } else { ok(json(&serde_json::json!({ "interval": [i, j], "measure": m }))) };
            }
            if csv {
                let mut t = Table::new(&["n", "m"]);
                for (n, m) in prof.m.iter().enumerate() {
                    t.row(&[&(n + 1), m]);
                }
                ok(t.finish())
            } else {
                ok(json(&serde_json::json!({ "upper": prof.upper, "m": prof.m })))
            }
        }
        Command::Code => {
            let w = input::word(o)?.word;
            let prof = measure_profile(&w, need(o.k, "k")?)?;
            let (i, j) = interval(o, w.len());
            ok(json(&code(&prof, i, j)?))
        }
        Command::StarCode => {
            let w = input::word(o)?.word;
            let prof = measure_profile(&w, need(o.k, "k")?)?;
            let (i, j) = interval(o, w.len());
            let c = code(&prof, i, j)?;
            let b = o.boundaries.clone().ok_or(Error::MissingParameter("boundaries"))?;
            let f = Factorization::from_boundaries(&w, UnitKind::Palindromic, b)?;
            let s = star_code(&c, &f)?;
            if csv {
                ok(format!("{}\n", s.letters))
            } else {
                ok(json(&s))
            }
        }
        Command::CheckKl => {
            let rep = check_kl(&input::word(o)?.word, need(o.k, "k")?, need(o.l, "l")?, o.semantics.into())?;
            if csv {
                let mut t = Table::new(&["holds", "max_coverage", "witness"]);
                t.row(&[&rep.holds, &rep.max_coverage, &opt(rep.witness)]);
                ok(t.finish())
            } else {
                ok(json(&rep))
            }
        }
        Command::Verify { lemma, manifest, exhaustive } => verify(o, lemma, manifest.as_deref(), *exhaustive),
        Command::RavskyMax { alphabet } => {
            let table = ravsky_table(need(o.n, "n")?, *alphabet)?;
            if csv {
                let mut t = Table::new(&["n", "max_pal_length"]);
                for (n, v) in table.iter().enumerate() {
                    t.row(&[&(n + 1), v]);
                }
                ok(t.finish())
            } else {
                ok(json(&serde_json::json!({ "alphabet": alphabet, "max_pal_length": table })))
            }
        }
        Command::ProbeUnbounded => {
            let src = input::source(o)?.ok_or(Error::MissingParameter("source"))?;
            let horizon = need(o.horizon, "horizon")?;
            let rep = unboundedness_probe(&src, o.p_max.unwrap_or(4), horizon)?;
            if csv {
                let mut t = Table::new(&["p", "prefix_len", "factor_start", "factor_len"]);
                for r in &rep.rows {
                    t.row(&[&r.p, &opt(r.prefix_len), &opt(r.factor.map(|f| f.start)), &opt(r.factor.map(|f| f.len))]);
                }
                ok(t.finish())
            } else {
                ok(json(&rep))
            }
        }
        Command::PeriodicTail => {
            let (pre, per) = match (input::source(o)?, &o.word) {
                (Some(WordSource::UltimatelyPeriodic { preperiod, period }), None) => (preperiod, period),
                (None, Some(text)) => (Word::empty(), Word::parse(text.trim())?),
                _ => {
                    return Err(Error::InvalidParameter(
                        "periodic-tail takes --source periodic:<pre>:<per> or --word <period>".into(),
                    ))
                }
            };
            let rep = periodic_tail_check(&pre, &per)?;
            if csv {
                let mut t = Table::new(&["split_found", "rotation_index", "p1", "p2"]);
                t.row(&[&rep.split_found, &opt(rep.rotation_index), &opt(rep.p1.as_ref()), &opt(rep.p2.as_ref())]);
                ok(t.finish())
            } else {
                ok(json(&rep))
            }
        }
        Command::CodingCheck => {
            let rep = coding_reduction_check(&input::word(o)?.word, o.max_len)?;
            let outcome = if rep.holds() { Outcome::Ok } else { Outcome::Violations };
            let text = if csv {
                let mut t = Table::new(&["coding", "factors_checked", "violations"]);
                for c in &rep.codings {
                    t.row(&[&format!("c_{}", c.symbol), &c.factors_checked, &c.violations.len()]);
                }
                t.row(&[&"hejda", &rep.hejda.factors_checked, &rep.hejda.violations.len()]);
                t.finish()
            } else {
                json(&rep)
            };
            Ok((text, outcome))
        }
        Command::Bounds => {
            let k = need(o.k, "k")? as u64;
            let p = o.p.unwrap_or(1);
            let b = bound_constants(k, need(o.l, "l")? as u64, need(o.m, "m")?, p)?;
            let kpf = kpower_free_bound(k, p)?;
            if csv {
                let mut t = Table::new(&["k", "l_prime", "m", "p", "d1", "d2", "d3", "n", "h", "n_kpower_free"]);
                let d2 = format!("{}/{}", b.d2.numer(), b.d2.denom());
                t.row(&[&b.k, &b.l_prime, &b.m, &b.p, &b.d1, &d2, &b.d3, &b.n, &format!("{:.6}", b.h), &kpf]);
                ok(t.finish())
            } else {
                let mut v = serde_json::to_value(&b).unwrap();
                v["n_kpower_free"] = serde_json::json!(kpf.to_string());
                v["n"] = serde_json::json!(b.n.to_string());
                ok(json(&v))
            }
        }
        Command::LprimeProbe => {
            let rep = lprime_probe(&input::word(o)?.word, need(o.k, "k")?, need(o.l, "l")?)?;
            if csv {
                let mut t = Table::new(&["level", "max_measure", "min_m"]);
                for r in &rep.rows {
                    t.row(&[&r.level, &r.max_measure, &r.min_m]);
                }
                ok(t.finish())
            } else {
                ok(json(&rep))
            }
        }
        Command::KpowerFree => {
            let rep = kpower_free_check(&input::word(o)?.word, need(o.k, "k")?)?;
            if csv {
                let mut t = Table::new(&["free", "i", "j", "period"]);
                let w = rep.witness;
                t.row(&[&rep.free, &opt(w.map(|x| x.0)), &opt(w.map(|x| x.1)), &opt(w.map(|x| x.2))]);
                ok(t.finish())
            } else {
                ok(json(&rep))
            }
        }
    }
}

/// One batch of a verify manifest.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ManifestEntry {
    #[serde(default)]
    source: Option<String>,
    #[serde(default)]
    word: Option<String>,
    #[serde(default)]
    n: Option<usize>,
    #[serde(default)]
    k: Option<usize>,
    #[serde(default)]
    l: Option<usize>,
    #[serde(default)]
    m: Option<u64>,
    #[serde(default)]
    c: Option<u64>,
    #[serde(default)]
    boundaries: Option<Vec<usize>>,
    #[serde(default)]
    max_len: Option<usize>,
    #[serde(default)]
    exhaustive: Option<usize>,
    #[serde(default)]
    samples: Option<usize>,
    #[serde(default)]
    seed: Option<u64>,
    lemmas: Vec<String>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Manifest {
    List(Vec<ManifestEntry>),
    Wrapped { checks: Vec<ManifestEntry> },
}

fn lemma_ids(names: &[String]) -> Result<Vec<LemmaId>> {
    if names.is_empty() {
        return Err(Error::MissingParameter("lemma"));
    }
    if names.len() == 1 && names[0].eq_ignore_ascii_case("all") {
        return Ok(LemmaId::ALL.to_vec());
    }
    names.iter().map(|s| s.parse()).collect()
}

#[derive(Serialize)]
struct Labeled<'a> {
    input: String,
    #[serde(flatten)]
    report: &'a LemmaReport,
}

fn verify(o: &Opts, lemma: &[String], manifest: Option<&std::path::Path>, exhaustive: Option<usize>) -> Result<(String, Outcome)> {
    let mut jobs: Vec<(String, Input, LemmaInputs, Vec<LemmaId>)> = Vec::new();
    let base = |word: Word, infinite: bool| LemmaInputs {
        prefix_of_infinite: infinite,
        semantics: o.semantics.into(),
        seed: o.seed,
        ..LemmaInputs::new(word)
    };
    if let Some(path) = manifest {
        if !lemma.is_empty() {
            return Err(Error::InvalidParameter("--manifest and --lemma are exclusive".into()));
        }
        let text = fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        let entries = match serde_json::from_str::<Manifest>(&text).map_err(|e| Error::Parse(format!("manifest: {e}")))? {
            Manifest::List(v) | Manifest::Wrapped { checks: v } => v,
        };
        for e in entries {
            let sub = Opts { source: e.source.clone(), word: e.word.clone(), word_file: None, n: e.n, ..o.clone() };
            let inp = input::word(&sub)?;
            let label = e.source.clone().map_or_else(|| inp.word.to_string(), |s| format!("{s}[1..{}]", inp.word.len()));
            let li = LemmaInputs {
                k: e.k,
                l_prime: e.l,
                m: e.m,
                c: e.c,
                boundaries: e.boundaries,
                max_len: e.max_len,
                exhaustive: e.exhaustive,
                samples: e.samples.unwrap_or(2000),
                seed: e.seed.unwrap_or(o.seed),
                ..base(inp.word.clone(), inp.source.is_some())
            };
            jobs.push((label, inp, li, lemma_ids(&e.lemmas)?));
        }
    } else {
        let inp = input::word(o)?;
        let label = o.source.clone().map_or_else(|| inp.word.to_string(), |s| format!("{s}[1..{}]", inp.word.len()));
        let li = LemmaInputs {
            k: o.k,
            l_prime: o.l,
            m: o.m,
            c: o.c,
            boundaries: o.boundaries.clone(),
            max_len: o.max_len,
            exhaustive,
            samples: o.samples.unwrap_or(2000),
            ..base(inp.word.clone(), inp.source.is_some())
        };
        jobs.push((label, inp, li, lemma_ids(lemma)?));
    }
    let mut reports = Vec::new();
    for (label, _, li, ids) in &jobs {
        for &id in ids {
            reports.push((label.clone(), lemma_check(id, li)?));
        }
    }
    let failed = reports.iter().any(|(_, r)| !r.holds());
    let text = if o.format == Format::Csv {
        let mut t = Table::new(&["input", "lemma_id", "horizon", "instances_checked", "skipped", "violations", "verdict"]);
        for (label, r) in &reports {
            t.row(&[label, &r.lemma_id, &r.horizon, &r.instances_checked, &r.skipped, &r.violations.len(), &r.verdict]);
        }
        t.finish()
    } else {
        let labeled: Vec<Labeled> = reports.iter().map(|(input, report)| Labeled { input: input.clone(), report }).collect();
        json(&labeled)
    };
    Ok((text, if failed { Outcome::Violations } else { Outcome::Ok }))
}
