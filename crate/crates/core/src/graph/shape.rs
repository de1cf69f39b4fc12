//! Structural probes: dominating vertices, shape classification, block signatures.

use serde::{Deserialize, Serialize};

use super::Graph;

/// `a ∨ b`: disjoint union plus every edge between the two sides.
/// Vertices of `b` are shifted by `a.vertex_count()`; labels are kept.
pub fn join(a: &Graph, b: &Graph) -> Graph {
    let (na, nb) = (a.vertex_count(), b.vertex_count());
    let mut g = Graph::empty(na + nb);
    for (u, v) in a.edges() {
        g.add_edge(u, v);
    }
    for (u, v) in b.edges() {
        g.add_edge(na + u, na + v);
    }
    for u in 0..na {
        for v in 0..nb {
            g.add_edge(u, na + v);
        }
    }
    g.with_labels(a.labels().iter().chain(b.labels()).copied().collect())
}

/// Vertices adjacent to every other vertex, ascending.
pub fn dominating_vertices(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    (0..n).filter(|&v| g.degree(v) + 1 == n).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Shape {
    Complete,
    Star,
    Other,
}

/// `Complete` takes precedence, so `K₁` and `K₂` are complete rather than stars.
pub fn classify_shape(g: &Graph) -> Shape {
    if g.is_complete() {
        return Shape::Complete;
    }
    let dom = dominating_vertices(g);
    if dom.len() == 1 && g.edge_count() + 1 == g.vertex_count() {
        Shape::Star
    } else {
        Shape::Other
    }
}

/// Size of the dominating core plus the sizes of the complete components left
/// once the core is removed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BlockSignature {
    pub dom_count: usize,
    /// Ascending.
    pub block_sizes: Vec<usize>,
}

impl BlockSignature {
    pub fn new(dom_count: usize, mut block_sizes: Vec<usize>) -> Self {
        block_sizes.sort_unstable();
        Self {
            dom_count,
            block_sizes,
        }
    }

    /// `dom_count` dominating vertices and `count` blocks of `size`.
    pub fn uniform(dom_count: usize, count: usize, size: usize) -> Self {
        Self::new(dom_count, vec![size; count])
    }

    pub fn vertex_count(&self) -> usize {
        self.dom_count + self.block_sizes.iter().sum::<usize>()
    }
}

impl std::fmt::Display for BlockSignature {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {{", self.dom_count)?;
        let mut runs: Vec<(usize, usize)> = Vec::new();
        for &s in &self.block_sizes {
            match runs.last_mut() {
                Some((size, count)) if *size == s => *count += 1,
                _ => runs.push((s, 1)),
            }
        }
        for (i, (size, count)) in runs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{count}×{size}")?;
        }
        write!(f, "}})")
    }
}

/// Present iff every component of `g` minus all its dominating vertices is complete.
pub fn block_signature(g: &Graph) -> Option<BlockSignature> {
    block_decomposition(g).map(|(core, blocks)| {
        BlockSignature::new(core.len(), blocks.iter().map(Vec::len).collect())
    })
}

/// Core vertices and the vertex sets of the complete blocks around it.
pub(crate) fn block_decomposition(g: &Graph) -> Option<(Vec<usize>, Vec<Vec<usize>>)> {
    let core = dominating_vertices(g);
    let mut is_core = vec![false; g.vertex_count()];
    for &v in &core {
        is_core[v] = true;
    }
    let rest: Vec<usize> = (0..g.vertex_count()).filter(|&v| !is_core[v]).collect();
    let sub = g.induced_subgraph(&rest);
    let mut blocks = Vec::new();
    for comp in sub.components() {
        let complete = comp.iter().all(|&v| sub.degree(v) + 1 == comp.len());
        if !complete {
            return None;
        }
        blocks.push(comp.into_iter().map(|v| rest[v]).collect());
    }
    Some((core, blocks))
}
