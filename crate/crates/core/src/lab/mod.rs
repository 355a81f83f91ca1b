//! Reference oracles, finite-horizon lemma checkers, bound constants and the
//! experiment probes.

mod bounds;
mod lemmas;
mod oracle;
mod probes;

pub use bounds::{bound_constants, kpower_free_bound, BoundConstants};
pub use lemmas::{lemma_check, pal_ratio_ok, priv_ratio_ok, LemmaId, LemmaInputs, LemmaReport, Violation};
pub use oracle::{kpower_free_check, oracle_is_privileged, oracle_min_decomposition, KPowerReport, ORACLE_MAX_LEN};
pub use probes::{
    coding_reduction_check, periodic_tail_check, ravsky_max, ravsky_table, unboundedness_probe, CodingReport,
    CodingRow, FactorWitness, HejdaRow, ProbeRow, TailReport, UnboundednessReport,
};
