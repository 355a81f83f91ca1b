//! `palword`: palindromic lengths, k-runs and lemma checks from the shell.
//!
//! Exit status is 0 on success, 2 on invalid input and 1 when a checking
//! command finds violations.

mod commands;
mod input;
mod output;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use palword_core::runs::CoverageSemantics;
use palword_core::UnitKind;

#[derive(Parser, Debug)]
#[command(name = "palword", version, about = "Palindromic length and k-run experiments on words")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub opts: Opts,
}

#[derive(Args, Debug, Clone)]
pub struct Opts {
    /// Word given inline, in the text format.
    #[arg(long, global = true)]
    pub word: Option<String>,
    /// File holding one word in the text format.
    #[arg(long, global = true)]
    pub word_file: Option<std::path::PathBuf>,
    /// Built-in or parametrised source (thue-morse, sierpinski,
    /// fibonacci-sturmian, sturmian:<d1,d2,..>, periodic:<pre>:<per>,
    /// morphic:<rules>).
    #[arg(long, global = true)]
    pub source: Option<String>,
    /// Prefix length taken from --source.
    #[arg(long, global = true)]
    pub n: Option<usize>,
    #[arg(long, global = true)]
    pub k: Option<usize>,
    #[arg(long, global = true)]
    pub l: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = KindArg::Pal)]
    pub kind: KindArg,
    #[arg(long, global = true, value_enum, default_value_t = SemanticsArg::Inclusive)]
    pub semantics: SemanticsArg,
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true)]
    pub horizon: Option<usize>,
    #[arg(long, global = true)]
    pub i: Option<usize>,
    #[arg(long, global = true)]
    pub j: Option<usize>,
    /// Comma-separated factorization boundaries `i_0,i_1,...,i_p`.
    #[arg(long, global = true, value_delimiter = ',')]
    pub boundaries: Option<Vec<usize>>,
    #[arg(long, global = true)]
    pub m: Option<u64>,
    #[arg(long, global = true)]
    pub c: Option<u64>,
    #[arg(long, global = true)]
    pub p: Option<u32>,
    #[arg(long, global = true)]
    pub p_max: Option<u32>,
    /// Longest factor examined per start or per sample.
    #[arg(long, global = true)]
    pub max_len: Option<usize>,
    #[arg(long, global = true)]
    pub samples: Option<usize>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Pal,
    Priv,
}

impl From<KindArg> for UnitKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Pal => UnitKind::Palindromic,
            KindArg::Priv => UnitKind::Privileged,
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum SemanticsArg {
    Inclusive,
    Interior,
}

impl From<SemanticsArg> for CoverageSemantics {
    fn from(s: SemanticsArg) -> Self {
        match s {
            SemanticsArg::Inclusive => CoverageSemantics::Inclusive,
            SemanticsArg::Interior => CoverageSemantics::Interior,
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print a word (a source prefix, or the given word) in the text format.
    Generate,
    /// Palindromic length of the word.
    PalLength,
    /// Privileged length of the word.
    PrivLength,
    /// Length of every prefix (--kind pal|priv).
    Series,
    /// An optimal factorization, lexicographically smallest boundaries.
    Decompose,
    /// All k-runs.
    Runs,
    /// Number of k-runs covering each position.
    Coverage,
    /// Upper runs and m(n); with --i/--j, the measure m[i..j].
    Measure,
    /// Code C[i..j] (defaults to the whole word).
    Code,
    /// Star code of a palindromic factorization (--boundaries).
    StarCode,
    /// Whether every position is covered by at most l k-runs.
    CheckKl,
    /// Lemma checks; --lemma takes ids separated by commas, or ALL.
    Verify {
        #[arg(long, value_delimiter = ',')]
        lemma: Vec<String>,
        /// JSON manifest listing batches of checks.
        #[arg(long)]
        manifest: Option<std::path::PathBuf>,
        /// Also check every binary word up to this length.
        #[arg(long)]
        exhaustive: Option<usize>,
    },
    /// Largest palindromic length over all words of each length up to --n.
    RavskyMax {
        #[arg(long, default_value_t = 2)]
        alphabet: u16,
    },
    /// Least prefix (and factor, for periodic sources) with palindromic length above P.
    ProbeUnbounded,
    /// Two-palindrome split of some rotation of the period.
    PeriodicTail,
    /// Letter codings and the Hejda encoding against palindromic length.
    CodingCheck,
    /// Constants D1, D2, D3, H and the least N for (k, l', M, P).
    Bounds,
    /// Finite-horizon candidates for l' and M.
    LprimeProbe,
    /// Whether the word has no factor u^k.
    KpowerFree,
}

/// Outcome of a command that ran to completion.
pub enum Outcome {
    Ok,
    Violations,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok((text, outcome)) => {
            print!("{text}");
            match outcome {
                Outcome::Ok => ExitCode::SUCCESS,
                Outcome::Violations => ExitCode::from(1),
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
