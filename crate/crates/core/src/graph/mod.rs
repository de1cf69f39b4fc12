//! Simple graphs over vertex indices, stored as one adjacency bitset per vertex.

mod build;
mod io;
pub(crate) mod shape;

use fixedbitset::FixedBitSet;

pub use build::{cyclic_graph, directed_power_graph, enhanced_power_graph, power_graph, GraphKind};
pub use io::{digraph_to_dot, graph_from_json, graph_to_dot, graph_to_json, GraphJson};
pub use shape::{
    block_signature, classify_shape, dominating_vertices, join, BlockSignature, Shape,
};

/// Simple undirected graph. Each vertex carries a label, by default its own
/// index; graphs built from groups label vertices with element indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<FixedBitSet>,
    labels: Vec<usize>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Self {
            adj: vec![FixedBitSet::with_capacity(n); n],
            labels: (0..n).collect(),
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for v in 0..n {
            g.adj[v].insert_range(..);
            g.adj[v].set(v, false);
        }
        g
    }

    /// Star with one centre (vertex 0) and `n - 1` leaves.
    pub fn star(n: usize) -> Self {
        let mut g = Self::empty(n);
        for v in 1..n {
            g.add_edge(0, v);
        }
        g
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// Builds a graph from closed or open neighbourhood rows; the diagonal is ignored.
    pub(crate) fn from_rows(mut rows: Vec<FixedBitSet>) -> Self {
        for (v, row) in rows.iter_mut().enumerate() {
            row.set(v, false);
        }
        let n = rows.len();
        Self {
            adj: rows,
            labels: (0..n).collect(),
        }
    }

    pub fn with_labels(mut self, labels: Vec<usize>) -> Self {
        assert_eq!(labels.len(), self.vertex_count(), "one label per vertex");
        self.labels = labels;
        self
    }

    /// Adds `{u, v}`. Loops are ignored.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        if u != v {
            self.adj[u].insert(v);
            self.adj[v].insert(u);
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones(..)).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones(..)
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.vertex_count()).map(|v| self.degree(v)).collect()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].ones()
    }

    pub fn neighborhood(&self, v: usize) -> &FixedBitSet {
        &self.adj[v]
    }

    pub fn label(&self, v: usize) -> usize {
        self.labels[v]
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    /// Edges `(u, v)` with `u < v`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.vertex_count()).flat_map(move |u| {
            self.adj[u]
                .ones()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// Induced subgraph on `vertices` (in the given order); labels are carried over.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut g = Graph::empty(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g.labels = vertices.iter().map(|&v| self.labels[v]).collect();
        g
    }

    /// The graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let n = self.vertex_count();
        assert_eq!(perm.len(), n);
        let mut g = Graph::empty(n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        for v in 0..n {
            g.labels[perm[v]] = self.labels[v];
        }
        g
    }

    pub fn is_complete(&self) -> bool {
        let n = self.vertex_count();
        (0..n).all(|v| self.degree(v) + 1 == n)
    }

    /// Connected components, each ascending, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                for v in self.adj[u].ones() {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                    }
                }
                i += 1;
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Number of triangles through each vertex.
    pub fn triangle_counts(&self) -> Vec<usize> {
        (0..self.vertex_count())
            .map(|v| {
                let row = &self.adj[v];
                row.ones()
                    .map(|u| row.intersection(&self.adj[u]).count())
                    .sum::<usize>()
                    / 2
            })
            .collect()
    }

    /// Whether every edge of `self` is an edge of `other` (same vertex count required).
    pub fn is_edge_subgraph_of(&self, other: &Graph) -> bool {
        self.vertex_count() == other.vertex_count()
            && self.adj.iter().zip(&other.adj).all(|(a, b)| a.is_subset(b))
    }
}

/// Loop-free directed graph; `has_arc(u, v)` is the arc `u → v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiGraph {
    out: Vec<FixedBitSet>,
}

impl DiGraph {
    pub fn empty(n: usize) -> Self {
        Self {
            out: vec![FixedBitSet::with_capacity(n); n],
        }
    }

    pub fn add_arc(&mut self, u: usize, v: usize) {
        if u != v {
            self.out[u].insert(v);
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.out.len()
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(|r| r.count_ones(..)).sum()
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out[u].contains(v)
    }

    pub fn out_neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.out[v].ones()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.out.iter().filter(|r| r.contains(v)).count()
    }

    /// Forget arc directions.
    pub fn underlying(&self) -> Graph {
        let mut g = Graph::empty(self.vertex_count());
        for (u, row) in self.out.iter().enumerate() {
            for v in row.ones() {
                g.add_edge(u, v);
            }
        }
        g
    }
}
