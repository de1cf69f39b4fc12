//! Corpus generation and theorem replay.
//!
//! [`build_corpus`] collects the constructible groups up to an order bound.
//! Each suite returns a [`VerificationReport`] of per-instance records sorted
//! by check name and parameters, so reports are byte-identical across runs.
//!
//! | suite | checks |
//! |---|---|
//! | [`verify_decomposition_theorem`] | `decomposition.{enhanced,power,cyclic,nilpotence-transfer}` |
//! | [`verify_equivalences`] | `equivalence.{power-enhanced,cyclic-order,cyclic-core,spectrum}` |
//! | [`verify_uniqueness`] | `uniqueness.{enhanced,power,cyclic,coverage}` |
//! | [`verify_figures`] | `figure.*` block shapes |

mod corpus;
mod figures;
mod pairs;
mod report;
mod uniqueness;

pub use corpus::{
    abelian_invariants, build_corpus, build_corpus_with, Corpus, CorpusSummary, DEFAULT_MAX_ORDER,
    MAX_CORPUS_ORDER,
};
pub use figures::{verify_figures, FigureParams};
pub use pairs::{verify_decomposition_theorem, verify_equivalences};
pub use report::{CheckRecord, Tally, Verdict, VerificationReport};
pub use uniqueness::{verify_uniqueness, Family, FamilyParams};

use crate::error::Result;
use crate::outcome::DEFAULT_NODE_BUDGET;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyConfig {
    pub max_order: usize,
    pub iso_budget: u64,
    /// When set, only the uniqueness suite runs, for these families.
    pub families: Option<Vec<Family>>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            max_order: DEFAULT_MAX_ORDER,
            iso_budget: DEFAULT_NODE_BUDGET,
            families: None,
        }
    }
}

/// Builds the corpus and runs the selected suites. Uniqueness runs every
/// family instance whose target fits under `max_order`.
pub fn run_verification(config: &VerifyConfig) -> Result<VerificationReport> {
    let corpus = build_corpus_with(config.max_order, config.iso_budget)?;
    let budget = config.iso_budget;
    let families = config
        .families
        .clone()
        .unwrap_or_else(|| Family::ALL.to_vec());
    let mut report = VerificationReport::default();
    if config.families.is_none() {
        report = report
            .merge(verify_decomposition_theorem(&corpus, budget))
            .merge(verify_equivalences(&corpus, budget))
            .merge(verify_figures(&FigureParams::default(), budget)?);
    }
    for family in families {
        for params in family.default_params(config.max_order) {
            report = report.merge(verify_uniqueness(&params, &corpus, budget)?);
        }
    }
    Ok(report.with_corpus(corpus.summary()))
}
