//! Group isomorphism by backtracking over images of a generating set.

use serde::{Deserialize, Serialize};

use super::{Element, FiniteGroup};
use crate::outcome::{BudgetExhausted, NodeCounter, SearchOutcome, DEFAULT_NODE_BUDGET};

/// A bijection `φ: G → H` with `φ(ab) = φ(a)φ(b)`; `mapping[a] = φ(a)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GroupIsomorphism {
    pub mapping: Vec<Element>,
}

impl GroupIsomorphism {
    /// Checks the mapping carries the table of `g` exactly onto the table of `h`.
    pub fn verify(&self, g: &FiniteGroup, h: &FiniteGroup) -> bool {
        let n = g.order();
        if h.order() != n || self.mapping.len() != n {
            return false;
        }
        let mut hit = vec![false; n];
        for &y in &self.mapping {
            if y >= n || std::mem::replace(&mut hit[y], true) {
                return false;
            }
        }
        (0..n).all(|a| {
            (0..n).all(|b| self.mapping[g.mul(a, b)] == h.mul(self.mapping[a], self.mapping[b]))
        })
    }
}

pub fn groups_isomorphic(g: &FiniteGroup, h: &FiniteGroup) -> SearchOutcome<GroupIsomorphism> {
    groups_isomorphic_with(g, h, DEFAULT_NODE_BUDGET)
}

/// Searches for an isomorphism `g → h`, visiting at most `budget` search nodes.
///
/// Groups with different orders or order spectra are rejected without search.
pub fn groups_isomorphic_with(
    g: &FiniteGroup,
    h: &FiniteGroup,
    budget: u64,
) -> SearchOutcome<GroupIsomorphism> {
    if g.order() != h.order() || g.order_spectrum() != h.order_spectrum() {
        return SearchOutcome::Absent;
    }
    let gens = g.generating_set();
    let mut search = Search {
        g,
        h,
        gens: &gens,
        images: Vec::with_capacity(gens.len()),
        phi: vec![usize::MAX; g.order()],
        used: vec![false; h.order()],
        counter: NodeCounter::new(budget),
    };
    search.phi[0] = 0;
    search.used[0] = true;
    match search.extend(0) {
        Ok(true) => {
            let iso = GroupIsomorphism {
                mapping: search.phi,
            };
            assert!(iso.verify(g, h), "group isomorphism failed verification");
            SearchOutcome::Found(iso)
        }
        Ok(false) => SearchOutcome::Absent,
        Err(BudgetExhausted) => SearchOutcome::BudgetExhausted,
    }
}

struct Search<'a> {
    g: &'a FiniteGroup,
    h: &'a FiniteGroup,
    gens: &'a [Element],
    images: Vec<Element>,
    phi: Vec<Element>,
    used: Vec<bool>,
    counter: NodeCounter,
}

impl Search<'_> {
    fn extend(&mut self, depth: usize) -> Result<bool, BudgetExhausted> {
        if depth == self.gens.len() {
            return Ok(true);
        }
        let gen = self.gens[depth];
        let want = self.g.element_orders()[gen];
        for cand in 0..self.h.order() {
            if self.used[cand] || self.h.element_orders()[cand] != want {
                continue;
            }
            self.counter.tick()?;
            self.images.push(cand);
            if let Some(added) = self.close(depth) {
                if self.extend(depth + 1)? {
                    return Ok(true);
                }
                self.undo(&added);
            }
            self.images.pop();
        }
        Ok(false)
    }

    /// Extends φ from `⟨g_0..g_{depth-1}⟩` to `⟨g_0..g_depth⟩` by walking
    /// `x ↦ x·g_i`. Returns the newly mapped elements, or `None` (with
    /// everything rolled back) if the images are inconsistent.
    fn close(&mut self, depth: usize) -> Option<Vec<Element>> {
        let mut added = Vec::new();
        let mut frontier: Vec<Element> = (0..self.g.order())
            .filter(|&x| self.phi[x] != usize::MAX)
            .collect();
        let mut consistent = true;
        'walk: while let Some(x) = frontier.pop() {
            for i in 0..=depth {
                let y = self.g.mul(x, self.gens[i]);
                let image = self.h.mul(self.phi[x], self.images[i]);
                if self.phi[y] == usize::MAX {
                    if self.used[image] {
                        consistent = false;
                        break 'walk;
                    }
                    self.phi[y] = image;
                    self.used[image] = true;
                    added.push(y);
                    frontier.push(y);
                } else if self.phi[y] != image {
                    consistent = false;
                    break 'walk;
                }
            }
        }
        if consistent {
            Some(added)
        } else {
            self.undo(&added);
            None
        }
    }

    fn undo(&mut self, added: &[Element]) {
        for &y in added {
            self.used[self.phi[y]] = false;
            self.phi[y] = usize::MAX;
        }
    }
}
