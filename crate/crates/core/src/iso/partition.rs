//! Ordered partitions and equitable refinement.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use crate::graph::Graph;

/// Ordered sequence of vertex cells.
///
/// After [`refine`] the partition is equitable: all vertices of a cell have the
/// same number of neighbours in every cell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RefinementPartition {
    cells: Vec<Vec<usize>>,
}

impl RefinementPartition {
    pub fn unit(n: usize) -> Self {
        Self {
            cells: if n == 0 {
                vec![]
            } else {
                vec![(0..n).collect()]
            },
        }
    }

    /// Cells grouped by degree, ascending.
    pub fn by_degree(g: &Graph) -> Self {
        let mut by: Vec<(usize, usize)> = (0..g.vertex_count()).map(|v| (g.degree(v), v)).collect();
        by.sort_unstable();
        let mut cells: Vec<Vec<usize>> = Vec::new();
        let mut last = None;
        for (d, v) in by {
            if last != Some(d) {
                cells.push(Vec::new());
                last = Some(d);
            }
            cells.last_mut().unwrap().push(v);
        }
        Self { cells }
    }

    pub fn cells(&self) -> &[Vec<usize>] {
        &self.cells
    }

    pub fn is_discrete(&self) -> bool {
        self.cells.iter().all(|c| c.len() == 1)
    }

    pub fn cell_sizes(&self) -> Vec<usize> {
        self.cells.iter().map(Vec::len).collect()
    }

    /// First smallest cell with more than one vertex.
    pub fn target_cell(&self) -> Option<usize> {
        self.cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|(i, c)| (c.len(), *i))
            .map(|(i, _)| i)
    }

    /// Position of the first vertex of cell `idx` in the flattened order.
    pub fn cell_start(&self, idx: usize) -> usize {
        self.cells[..idx].iter().map(Vec::len).sum()
    }

    /// Splits `v` out of its cell, placing `{v}` first.
    pub fn individualize(&self, v: usize) -> Self {
        let mut cells = Vec::with_capacity(self.cells.len() + 1);
        for c in &self.cells {
            if c.contains(&v) && c.len() > 1 {
                cells.push(vec![v]);
                cells.push(c.iter().copied().filter(|&u| u != v).collect());
            } else {
                cells.push(c.clone());
            }
        }
        Self { cells }
    }

    /// For a discrete partition: `position[v]` is the index of `v`'s cell.
    pub fn positions(&self) -> Vec<usize> {
        let n = self.cells.iter().map(Vec::len).sum();
        let mut pos = vec![0; n];
        for (i, c) in self.cells.iter().enumerate() {
            for &v in c {
                pos[v] = i;
            }
        }
        pos
    }

    /// Neighbour counts of each cell's first vertex into every cell. Equal for
    /// all members of a cell once the partition is equitable.
    pub fn quotient_matrix(&self, g: &Graph) -> Vec<Vec<usize>> {
        let cell_of = self.cell_of(g.vertex_count());
        self.cells
            .iter()
            .map(|c| {
                let mut row = vec![0; self.cells.len()];
                for u in g.neighbors(c[0]) {
                    row[cell_of[u]] += 1;
                }
                row
            })
            .collect()
    }

    pub fn is_equitable(&self, g: &Graph) -> bool {
        let cell_of = self.cell_of(g.vertex_count());
        self.cells.iter().all(|c| {
            let counts = |v: usize| {
                let mut row = vec![0; self.cells.len()];
                for u in g.neighbors(v) {
                    row[cell_of[u]] += 1;
                }
                row
            };
            let first = counts(c[0]);
            c.iter().all(|&v| counts(v) == first)
        })
    }

    fn cell_of(&self, n: usize) -> Vec<usize> {
        let mut cell_of = vec![0; n];
        for (i, c) in self.cells.iter().enumerate() {
            for &v in c {
                cell_of[v] = i;
            }
        }
        cell_of
    }
}

/// Refines `p` to the coarsest equitable partition finer than it.
///
/// Every round splits each cell by the vector of neighbour counts into the
/// current cells; fragments replace the cell in ascending order of that
/// vector. The procedure depends only on the graph structure, so relabelling
/// the input relabels the output. Returns a trace of hashes describing each
/// split, equal for isomorphic (graph, partition) pairs.
pub fn refine(g: &Graph, p: &mut RefinementPartition) -> Vec<u64> {
    let n = g.vertex_count();
    let mut trace = Vec::new();
    let mut cell_of = p.cell_of(n);
    let mut scratch = vec![0u32; n.max(1)];
    loop {
        let mut next: Vec<Vec<usize>> = Vec::with_capacity(p.cells.len());
        let mut changed = false;
        for (ci, cell) in p.cells.iter().enumerate() {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<(usize, u32)>, usize)> = cell
                .iter()
                .map(|&v| (count_key(g, v, &cell_of, &mut scratch), v))
                .collect();
            keyed.sort_unstable();
            let mut h = DefaultHasher::new();
            ci.hash(&mut h);
            let before = next.len();
            for (i, (key, v)) in keyed.iter().enumerate() {
                if i == 0 || keyed[i - 1].0 != *key {
                    next.push(Vec::new());
                    key.hash(&mut h);
                }
                next.last_mut().unwrap().push(*v);
            }
            let pieces = next.len() - before;
            pieces.hash(&mut h);
            if pieces > 1 {
                changed = true;
                for piece in &next[before..] {
                    piece.len().hash(&mut h);
                }
            }
            trace.push(h.finish());
        }
        p.cells = next;
        if !changed {
            return trace;
        }
        cell_of = p.cell_of(n);
    }
}

/// Sorted `(cell, count)` pairs of `v`'s neighbours.
fn count_key(g: &Graph, v: usize, cell_of: &[usize], scratch: &mut [u32]) -> Vec<(usize, u32)> {
    let mut touched = Vec::new();
    for u in g.neighbors(v) {
        let c = cell_of[u];
        if scratch[c] == 0 {
            touched.push(c);
        }
        scratch[c] += 1;
    }
    touched.sort_unstable();
    touched
        .into_iter()
        .map(|c| (c, std::mem::take(&mut scratch[c])))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_refines_by_distance_from_ends() {
        let p5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]);
        let mut p = RefinementPartition::by_degree(&p5);
        refine(&p5, &mut p);
        assert!(p.is_equitable(&p5));
        assert_eq!(p.cells(), &[vec![0, 4], vec![1, 3], vec![2]]);
    }

    #[test]
    fn individualize_then_refine_is_discrete_on_a_path() {
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]);
        let mut p = RefinementPartition::by_degree(&p4).individualize(0);
        refine(&p4, &mut p);
        assert!(p.is_discrete());
    }

    #[test]
    fn regular_graph_stays_unit() {
        let c6 = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]);
        let mut p = RefinementPartition::unit(6);
        refine(&c6, &mut p);
        assert_eq!(p.cells().len(), 1);
        assert_eq!(p.target_cell(), Some(0));
    }

    #[test]
    fn traces_agree_under_relabelling() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5)]);
        let perm = [3, 5, 0, 1, 4, 2];
        let h = g.relabel(&perm);
        let (mut pg, mut ph) = (
            RefinementPartition::by_degree(&g),
            RefinementPartition::by_degree(&h),
        );
        assert_eq!(refine(&g, &mut pg), refine(&h, &mut ph));
        assert_eq!(pg.cell_sizes(), ph.cell_sizes());
        for (cg, ch) in pg.cells().iter().zip(ph.cells()) {
            let mut mapped: Vec<_> = cg.iter().map(|&v| perm[v]).collect();
            mapped.sort_unstable();
            let mut ch = ch.clone();
            ch.sort_unstable();
            assert_eq!(mapped, ch);
        }
    }
}
