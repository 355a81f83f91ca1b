//! k-runs, their coverage of positions, upper runs and the measure and codes
//! derived from them.

mod code;
mod detect;
mod probe;
mod profile;

use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

pub use code::{code, star_code, Code, StarCode};
pub use detect::{find_runs, maximal_repetitions};
pub use probe::{lprime_probe, LPrimeReport, LPrimeRow};
pub use profile::{
    check_kl, coverage_profile, measure, measure_profile, upper_runs, CoverageProfile, KlReport,
    MeasureProfile, RangeMax,
};

/// One occurrence `w[start..end]` (1-based inclusive) of a k-run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Run {
    pub start: usize,
    pub end: usize,
    /// Minimal period of the factor.
    pub period: usize,
    /// The run touches position 1, so left maximality was not testable.
    pub left_truncated: bool,
    /// The run touches the last position, so right maximality was not testable.
    pub right_truncated: bool,
}

impl Run {
    pub fn len(&self) -> usize {
        self.end + 1 - self.start
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn exponent(&self) -> Ratio<usize> {
        Ratio::new(self.len(), self.period)
    }

    pub fn covers(&self, x: usize, semantics: CoverageSemantics) -> bool {
        match semantics {
            CoverageSemantics::Inclusive => self.start <= x && x <= self.end,
            CoverageSemantics::Interior => self.start < x && x < self.end,
        }
    }

    /// Where this run sits relative to the occurrence `w[p1..p2]`, if it
    /// intersects it.
    pub fn relation_to(&self, p1: usize, p2: usize) -> Option<RunRelation> {
        if self.end < p1 || self.start > p2 {
            return None;
        }
        let has_p1 = self.start <= p1;
        let has_p2 = self.end >= p2;
        Some(match (has_p1, has_p2) {
            (false, false) => RunRelation::Internal,
            (true, false) => RunRelation::Left,
            (false, true) => RunRelation::Right,
            (true, true) => RunRelation::Covering,
        })
    }
}

impl fmt::Display for Run {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e = self.exponent();
        write!(f, "[{}..{}] p={} e={}/{}", self.start, self.end, self.period, e.numer(), e.denom())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RunRelation {
    Internal,
    Left,
    Right,
    Covering,
}

/// Which positions a run `w[i..j]` counts as covering: `i..=j`, or the strict
/// interior `i+1..=j-1`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CoverageSemantics {
    #[default]
    Inclusive,
    Interior,
}

impl fmt::Display for CoverageSemantics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CoverageSemantics::Inclusive => "inclusive",
            CoverageSemantics::Interior => "interior",
        })
    }
}
