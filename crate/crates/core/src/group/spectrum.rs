use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Multiset of element orders: order `d` ↦ number of elements of order `d`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct OrderSpectrum(BTreeMap<usize, usize>);

impl OrderSpectrum {
    pub fn from_orders(orders: &[usize]) -> Self {
        let mut counts = BTreeMap::new();
        for &o in orders {
            *counts.entry(o).or_insert(0) += 1;
        }
        Self(counts)
    }

    /// Number of elements of order `d`.
    pub fn count(&self, d: usize) -> usize {
        self.0.get(&d).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.0.values().sum()
    }

    /// `(order, count)` pairs in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().map(|(&d, &c)| (d, c))
    }

    pub fn as_map(&self) -> &BTreeMap<usize, usize> {
        &self.0
    }
}

impl FromIterator<(usize, usize)> for OrderSpectrum {
    fn from_iter<I: IntoIterator<Item = (usize, usize)>>(iter: I) -> Self {
        Self(iter.into_iter().filter(|&(_, c)| c > 0).collect())
    }
}

impl fmt::Display for OrderSpectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (d, c)) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{d}:{c}")?;
        }
        write!(f, "}}")
    }
}
