//! The four graphs attached to a finite group.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{DiGraph, Graph};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GraphKind {
    Enhanced,
    Power,
    #[serde(rename = "dpower")]
    DirectedPower,
    Cyclic,
}

impl GraphKind {
    pub const ALL: [GraphKind; 4] = [
        GraphKind::Enhanced,
        GraphKind::Power,
        GraphKind::DirectedPower,
        GraphKind::Cyclic,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            GraphKind::Enhanced => "enhanced",
            GraphKind::Power => "power",
            GraphKind::DirectedPower => "dpower",
            GraphKind::Cyclic => "cyclic",
        }
    }

    /// Builds the undirected graph of this kind; the directed power graph is
    /// returned as its underlying undirected graph.
    pub fn build(self, g: &FiniteGroup) -> Graph {
        match self {
            GraphKind::Enhanced => enhanced_power_graph(g),
            GraphKind::Power => power_graph(g),
            GraphKind::DirectedPower => directed_power_graph(g).underlying(),
            GraphKind::Cyclic => cyclic_graph(g),
        }
    }
}

impl fmt::Display for GraphKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for GraphKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GraphKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| {
                Error::InvalidParameter(format!(
                    "unknown graph kind {s:?} (expected enhanced, power, dpower or cyclic)"
                ))
            })
    }
}

/// `x ~ y` iff `⟨x, y⟩` is cyclic. Vertex `i` is element `i`.
pub fn enhanced_power_graph(g: &FiniteGroup) -> Graph {
    Graph::from_rows(g.cyclic_neighborhoods().to_vec())
}

/// `x ~ y` iff `y ∈ ⟨x⟩` or `x ∈ ⟨y⟩`.
pub fn power_graph(g: &FiniteGroup) -> Graph {
    let mut rows = g.cyclic_subgroups().to_vec();
    for (y, sub) in g.cyclic_subgroups().iter().enumerate() {
        for x in sub.ones() {
            rows[x].insert(y);
        }
    }
    Graph::from_rows(rows)
}

/// Arc `y → x` iff `x ∈ ⟨y⟩` and `x ≠ y`.
pub fn directed_power_graph(g: &FiniteGroup) -> DiGraph {
    let mut d = DiGraph::empty(g.order());
    for (y, sub) in g.cyclic_subgroups().iter().enumerate() {
        for x in sub.ones() {
            d.add_arc(y, x);
        }
    }
    d
}

/// Induced subgraph of the enhanced power graph on `G ∖ Cyc(G)`.
///
/// Labels keep the original element indices. A cyclic group yields the graph
/// with no vertices.
pub fn cyclic_graph(g: &FiniteGroup) -> Graph {
    let rows = g.cyclic_neighborhoods();
    let n = g.order();
    let rest: Vec<usize> = (0..n).filter(|&x| rows[x].count_ones(..) != n).collect();
    enhanced_power_graph(g).induced_subgraph(&rest)
}
