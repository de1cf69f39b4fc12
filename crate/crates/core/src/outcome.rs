use serde::{Deserialize, Serialize};

/// Default number of backtracking nodes a single isomorphism search may visit.
pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;

/// Result of a bounded search for an isomorphism.
///
/// Budget exhaustion is kept apart from `Absent`: a search that ran out of
/// nodes says nothing about whether an isomorphism exists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum SearchOutcome<T> {
    Found(T),
    Absent,
    BudgetExhausted,
}

impl<T> SearchOutcome<T> {
    pub fn is_found(&self) -> bool {
        matches!(self, SearchOutcome::Found(_))
    }

    pub fn is_exhausted(&self) -> bool {
        matches!(self, SearchOutcome::BudgetExhausted)
    }

    pub fn found(self) -> Option<T> {
        match self {
            SearchOutcome::Found(t) => Some(t),
            _ => None,
        }
    }

    /// `Some(true)` if found, `Some(false)` if absent, `None` if the budget ran out.
    pub fn verdict(&self) -> Option<bool> {
        match self {
            SearchOutcome::Found(_) => Some(true),
            SearchOutcome::Absent => Some(false),
            SearchOutcome::BudgetExhausted => None,
        }
    }
}

/// Marker error for an exhausted node budget.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("search node budget exhausted")]
pub struct BudgetExhausted;

/// Shared node counter for backtracking searches.
#[derive(Debug, Clone)]
pub(crate) struct NodeCounter {
    used: u64,
    budget: u64,
}

impl NodeCounter {
    pub(crate) fn new(budget: u64) -> Self {
        Self { used: 0, budget }
    }

    pub(crate) fn tick(&mut self) -> Result<(), BudgetExhausted> {
        self.used += 1;
        if self.used > self.budget {
            Err(BudgetExhausted)
        } else {
            Ok(())
        }
    }
}
