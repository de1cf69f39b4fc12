//! Canonical labelling by individualization-refinement.
//!
//! The search tree is explored depth first. Leaves are discrete partitions;
//! each yields a relabelled adjacency matrix and the least one is the
//! canonical form. Two leaves with the same matrix differ by an automorphism.
//! Automorphisms are used twice: children in the same orbit of the
//! automorphisms fixing the current path are skipped, and a leaf equivalent to
//! the first leaf lets the search return to the point where the two paths split.

use super::partition::{refine, RefinementPartition};
use crate::graph::Graph;
use crate::outcome::{BudgetExhausted, NodeCounter};

/// Canonical form of a graph: equal bytes iff the graphs are isomorphic.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    bytes: Vec<u8>,
    /// `labeling[v]` is the canonical position of vertex `v`.
    labeling: Vec<usize>,
}

impl CanonicalForm {
    /// Vertex count (4 bytes, big endian) followed by the upper triangle of the
    /// relabelled adjacency matrix, row major, packed MSB first.
    pub fn as_bytes(&self) -> &[u8] {
        &self.bytes
    }

    pub fn to_hex(&self) -> String {
        self.bytes.iter().map(|b| format!("{b:02x}")).collect()
    }

    pub fn labeling(&self) -> &[usize] {
        &self.labeling
    }
}

/// Canonical form with the default node budget.
pub fn canonical_certificate(g: &Graph) -> Result<CanonicalForm, BudgetExhausted> {
    canonical_certificate_with(g, crate::outcome::DEFAULT_NODE_BUDGET)
}

pub fn canonical_certificate_with(
    g: &Graph,
    budget: u64,
) -> Result<CanonicalForm, BudgetExhausted> {
    let mut search = CanonSearch {
        g,
        counter: NodeCounter::new(budget),
        first: None,
        best: None,
        generators: Vec::new(),
    };
    let mut root = RefinementPartition::by_degree(g);
    refine(g, &mut root);
    search.visit(root, &mut Vec::new(), &mut Vec::new())?;
    let best = search.best.expect("search reaches at least one leaf");
    Ok(CanonicalForm {
        bytes: best.bytes,
        labeling: best.positions,
    })
}

/// Automorphism generators found while canonizing `g` (each as `v ↦ γ(v)`).
pub fn automorphism_generators(g: &Graph, budget: u64) -> Result<Vec<Vec<usize>>, BudgetExhausted> {
    let mut search = CanonSearch {
        g,
        counter: NodeCounter::new(budget),
        first: None,
        best: None,
        generators: Vec::new(),
    };
    let mut root = RefinementPartition::by_degree(g);
    refine(g, &mut root);
    search.visit(root, &mut Vec::new(), &mut Vec::new())?;
    Ok(search.generators)
}

#[derive(Clone)]
struct Leaf {
    bytes: Vec<u8>,
    positions: Vec<usize>,
    path: Vec<usize>,
    shape: Vec<usize>,
}

enum Flow {
    Continue,
    /// Unwind to the node whose path has this length.
    Backjump(usize),
}

struct CanonSearch<'a> {
    g: &'a Graph,
    counter: NodeCounter,
    first: Option<Leaf>,
    best: Option<Leaf>,
    generators: Vec<Vec<usize>>,
}

impl CanonSearch<'_> {
    fn visit(
        &mut self,
        p: RefinementPartition,
        path: &mut Vec<usize>,
        shape: &mut Vec<usize>,
    ) -> Result<Flow, BudgetExhausted> {
        self.counter.tick()?;
        let Some(target) = p.target_cell() else {
            return Ok(self.leaf(&p, path, shape));
        };
        let depth = path.len();
        let mut candidates = p.cells()[target].clone();
        candidates.sort_unstable();
        let start = p.cell_start(target);
        let mut tried: Vec<usize> = Vec::new();
        for v in candidates {
            if !tried.is_empty() && self.same_orbit_as_tried(v, &tried, path) {
                continue;
            }
            tried.push(v);
            let mut child = p.individualize(v);
            refine(self.g, &mut child);
            path.push(v);
            shape.push(start);
            let flow = self.visit(child, path, shape)?;
            path.pop();
            shape.pop();
            if let Flow::Backjump(level) = flow {
                if level < depth {
                    return Ok(flow);
                }
            }
        }
        Ok(Flow::Continue)
    }

    fn leaf(&mut self, p: &RefinementPartition, path: &[usize], shape: &[usize]) -> Flow {
        let positions = p.positions();
        let bytes = leaf_bytes(self.g, &positions);
        let leaf = Leaf {
            bytes,
            positions,
            path: path.to_vec(),
            shape: shape.to_vec(),
        };
        let Some(first) = &self.first else {
            self.best = Some(leaf.clone());
            self.first = Some(leaf);
            return Flow::Continue;
        };
        if leaf.bytes == first.bytes {
            self.generators
                .push(automorphism(&first.positions, &leaf.positions));
            if leaf.shape == first.shape {
                return Flow::Backjump(common_prefix(&leaf.path, &first.path));
            }
            return Flow::Continue;
        }
        let best = self.best.as_ref().expect("best set with first");
        match leaf.bytes.cmp(&best.bytes) {
            std::cmp::Ordering::Less => self.best = Some(leaf),
            std::cmp::Ordering::Equal => {
                self.generators
                    .push(automorphism(&best.positions, &leaf.positions));
                if leaf.shape == best.shape {
                    return Flow::Backjump(common_prefix(&leaf.path, &best.path));
                }
            }
            std::cmp::Ordering::Greater => {}
        }
        Flow::Continue
    }

    /// Whether `v` shares an orbit with an already explored sibling under the
    /// group generated by the known automorphisms that fix `path` pointwise.
    fn same_orbit_as_tried(&self, v: usize, tried: &[usize], path: &[usize]) -> bool {
        let n = self.g.vertex_count();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut any = false;
        for gamma in &self.generators {
            if path.iter().any(|&u| gamma[u] != u) {
                continue;
            }
            any = true;
            for x in 0..n {
                let (a, b) = (find(&mut parent, x), find(&mut parent, gamma[x]));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        if !any {
            return false;
        }
        let root = find(&mut parent, v);
        tried.iter().any(|&t| find(&mut parent, t) == root)
    }
}

fn common_prefix(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

/// The automorphism sending the vertex at each position of leaf `a` to the
/// vertex at the same position of leaf `b`.
fn automorphism(a_positions: &[usize], b_positions: &[usize]) -> Vec<usize> {
    let n = a_positions.len();
    let mut at_b = vec![0; n];
    for (v, &pos) in b_positions.iter().enumerate() {
        at_b[pos] = v;
    }
    (0..n).map(|v| at_b[a_positions[v]]).collect()
}

pub(crate) fn leaf_bytes(g: &Graph, positions: &[usize]) -> Vec<u8> {
    let n = g.vertex_count();
    let mut at = vec![0; n];
    for (v, &pos) in positions.iter().enumerate() {
        at[pos] = v;
    }
    let mut bytes = (n as u32).to_be_bytes().to_vec();
    let mut byte = 0u8;
    let mut bit = 0;
    for i in 0..n {
        for j in i + 1..n {
            byte <<= 1;
            if g.has_edge(at[i], at[j]) {
                byte |= 1;
            }
            bit += 1;
            if bit == 8 {
                bytes.push(byte);
                byte = 0;
                bit = 0;
            }
        }
    }
    if bit > 0 {
        bytes.push(byte << (8 - bit));
    }
    bytes
}
