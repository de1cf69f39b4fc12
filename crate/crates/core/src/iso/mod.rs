//! Graph isomorphism with certificates.
//!
//! [`graphs_isomorphic`] screens cheap invariants, then either matches block
//! structures directly (when both graphs are a dominating core joined to a
//! disjoint union of cliques) or runs a joint refinement-and-backtracking
//! search. [`canonical_certificate`] is an independent route through
//! canonical labelling.

mod canon;
mod partition;

use serde::{Deserialize, Serialize};

use crate::graph::shape::block_decomposition;
use crate::graph::Graph;
use crate::outcome::{BudgetExhausted, NodeCounter, SearchOutcome, DEFAULT_NODE_BUDGET};

pub use canon::{
    automorphism_generators, canonical_certificate, canonical_certificate_with, CanonicalForm,
};
pub use partition::{refine, RefinementPartition};

/// Vertex bijection from a source graph to a target graph; `mapping[v]` is the image of `v`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IsoCertificate {
    pub mapping: Vec<usize>,
}

impl IsoCertificate {
    /// Whether the mapping is a bijection carrying edges to edges and non-edges to non-edges.
    pub fn verify(&self, a: &Graph, b: &Graph) -> bool {
        let n = a.vertex_count();
        if b.vertex_count() != n || self.mapping.len() != n {
            return false;
        }
        let mut hit = vec![false; n];
        for &v in &self.mapping {
            if v >= n || std::mem::replace(&mut hit[v], true) {
                return false;
            }
        }
        (0..n).all(|u| {
            a.degree(u) == b.degree(self.mapping[u])
                && a.neighbors(u)
                    .all(|v| b.has_edge(self.mapping[u], self.mapping[v]))
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IsoOptions {
    /// Maximum number of search nodes.
    pub budget: u64,
    /// Match block structures directly when both graphs have a block signature.
    pub block_fast_path: bool,
}

impl Default for IsoOptions {
    fn default() -> Self {
        Self {
            budget: DEFAULT_NODE_BUDGET,
            block_fast_path: true,
        }
    }
}

impl IsoOptions {
    pub fn with_budget(budget: u64) -> Self {
        Self {
            budget,
            ..Self::default()
        }
    }
}

/// `false` only when the graphs certainly differ: vertex count, edge count,
/// degree sequence or triangle-count multiset disagree.
pub fn invariant_screen(a: &Graph, b: &Graph) -> bool {
    if a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() {
        return false;
    }
    let sorted = |mut v: Vec<usize>| {
        v.sort_unstable();
        v
    };
    sorted(a.degrees()) == sorted(b.degrees())
        && sorted(a.triangle_counts()) == sorted(b.triangle_counts())
}

pub fn graphs_isomorphic(a: &Graph, b: &Graph) -> SearchOutcome<IsoCertificate> {
    graphs_isomorphic_with(a, b, IsoOptions::default())
}

/// Decides whether `a ≅ b`. Every returned certificate has been checked edge by edge.
pub fn graphs_isomorphic_with(
    a: &Graph,
    b: &Graph,
    options: IsoOptions,
) -> SearchOutcome<IsoCertificate> {
    if !invariant_screen(a, b) {
        return SearchOutcome::Absent;
    }
    let outcome = if options.block_fast_path {
        match (block_decomposition(a), block_decomposition(b)) {
            (Some(da), Some(db)) => match_blocks(a.vertex_count(), da, db),
            _ => pair_search(a, b, options.budget),
        }
    } else {
        pair_search(a, b, options.budget)
    };
    if let SearchOutcome::Found(cert) = &outcome {
        assert!(
            cert.verify(a, b),
            "emitted isomorphism certificate failed verification"
        );
    }
    outcome
}

type Blocks = (Vec<usize>, Vec<Vec<usize>>);

/// A dominating core joined to a disjoint union of cliques is determined up to
/// isomorphism by the core size and the multiset of clique sizes.
fn match_blocks(
    n: usize,
    (core_a, mut blocks_a): Blocks,
    (core_b, mut blocks_b): Blocks,
) -> SearchOutcome<IsoCertificate> {
    blocks_a.sort_by_key(|blk| (blk.len(), blk[0]));
    blocks_b.sort_by_key(|blk| (blk.len(), blk[0]));
    let sizes = |bs: &[Vec<usize>]| bs.iter().map(Vec::len).collect::<Vec<_>>();
    if core_a.len() != core_b.len() || sizes(&blocks_a) != sizes(&blocks_b) {
        return SearchOutcome::Absent;
    }
    let mut mapping = vec![0; n];
    for (&u, &v) in core_a.iter().zip(&core_b) {
        mapping[u] = v;
    }
    for (ba, bb) in blocks_a.iter().zip(&blocks_b) {
        for (&u, &v) in ba.iter().zip(bb) {
            mapping[u] = v;
        }
    }
    SearchOutcome::Found(IsoCertificate { mapping })
}

fn pair_search(a: &Graph, b: &Graph, budget: u64) -> SearchOutcome<IsoCertificate> {
    let n = a.vertex_count();
    if n == 0 {
        return SearchOutcome::Found(IsoCertificate { mapping: vec![] });
    }
    let mut pa = RefinementPartition::by_degree(a);
    let mut pb = RefinementPartition::by_degree(b);
    if pa.cell_sizes() != pb.cell_sizes() || refine(a, &mut pa) != refine(b, &mut pb) {
        return SearchOutcome::Absent;
    }
    let mut search = PairSearch {
        a,
        b,
        counter: NodeCounter::new(budget),
    };
    match search.visit(&pa, &pb) {
        Ok(Some(mapping)) => SearchOutcome::Found(IsoCertificate { mapping }),
        Ok(None) => SearchOutcome::Absent,
        Err(BudgetExhausted) => SearchOutcome::BudgetExhausted,
    }
}

struct PairSearch<'a> {
    a: &'a Graph,
    b: &'a Graph,
    counter: NodeCounter,
}

impl PairSearch<'_> {
    /// `pa` and `pb` are equitable with matching traces and cell sizes.
    fn visit(
        &mut self,
        pa: &RefinementPartition,
        pb: &RefinementPartition,
    ) -> Result<Option<Vec<usize>>, BudgetExhausted> {
        self.counter.tick()?;
        let Some(target) = pa.target_cell() else {
            let mut mapping = vec![0; self.a.vertex_count()];
            for (ca, cb) in pa.cells().iter().zip(pb.cells()) {
                mapping[ca[0]] = cb[0];
            }
            let cert = IsoCertificate { mapping };
            return Ok(cert.verify(self.a, self.b).then_some(cert.mapping));
        };
        let va = *pa.cells()[target].iter().min().expect("non-empty cell");
        let mut child_a = pa.individualize(va);
        let trace_a = refine(self.a, &mut child_a);
        let mut candidates = pb.cells()[target].clone();
        candidates.sort_unstable();
        for vb in candidates {
            let mut child_b = pb.individualize(vb);
            if refine(self.b, &mut child_b) != trace_a
                || child_a.cell_sizes() != child_b.cell_sizes()
            {
                self.counter.tick()?;
                continue;
            }
            if let Some(mapping) = self.visit(&child_a, &child_b)? {
                return Ok(Some(mapping));
            }
        }
        Ok(None)
    }
}
