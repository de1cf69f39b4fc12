//! A deduplicated corpus of small groups built from the constructible families.
//!
//! Candidates are direct products of non-abelian atoms (dihedral, generalized
//! quaternion, symmetric, Heisenberg) with an abelian group in invariant-factor
//! form. They are sorted so that the simplest description of each
//! isomorphism class comes first, then screened by order spectrum, canonical
//! form of the enhanced power graph and finally a group isomorphism search.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::arith;
use crate::error::{Error, Result};
use crate::expr::{Atom, AtomKind, GroupExpr};
use crate::graph::enhanced_power_graph;
use crate::group::{groups_isomorphic_with, FiniteGroup};
use crate::iso::{canonical_certificate_with, CanonicalForm};
use crate::outcome::{SearchOutcome, DEFAULT_NODE_BUDGET};

/// Largest order accepted by [`build_corpus`].
pub const MAX_CORPUS_ORDER: usize = 512;
pub const DEFAULT_MAX_ORDER: usize = 72;

#[derive(Debug, Clone)]
pub struct Corpus {
    max_order: usize,
    groups: Vec<FiniteGroup>,
    index: BTreeMap<usize, Vec<usize>>,
    notes: Vec<String>,
}

/// Counts per order, stated in report headers so coverage gaps are visible.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorpusSummary {
    pub max_order: usize,
    pub groups: usize,
    pub counts_per_order: BTreeMap<usize, usize>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl Corpus {
    pub fn max_order(&self) -> usize {
        self.max_order
    }

    /// Members ordered by group order, then by the simplicity of their description.
    pub fn groups(&self) -> &[FiniteGroup] {
        &self.groups
    }

    pub fn len(&self) -> usize {
        self.groups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.groups.is_empty()
    }

    pub fn orders(&self) -> impl Iterator<Item = usize> + '_ {
        self.index.keys().copied()
    }

    /// Indices into [`Corpus::groups`] of the members of order `n`.
    pub fn indices_of_order(&self, n: usize) -> &[usize] {
        self.index.get(&n).map_or(&[], Vec::as_slice)
    }

    pub fn of_order(&self, n: usize) -> impl Iterator<Item = &FiniteGroup> + '_ {
        self.indices_of_order(n).iter().map(|&i| &self.groups[i])
    }

    /// Member whose provenance expression is `expr` (after normalization).
    pub fn find(&self, expr: &str) -> Option<&FiniteGroup> {
        let normalized = expr.parse::<GroupExpr>().ok()?.to_string();
        self.groups
            .iter()
            .find(|g| g.provenance() == Some(normalized.as_str()))
    }

    /// Messages about candidates whose status could not be settled within budget.
    pub fn notes(&self) -> &[String] {
        &self.notes
    }

    /// The members of order at most `max_order`.
    pub fn restricted(&self, max_order: usize) -> Corpus {
        let groups: Vec<FiniteGroup> = self
            .groups
            .iter()
            .filter(|g| g.order() <= max_order)
            .cloned()
            .collect();
        Corpus {
            max_order: max_order.min(self.max_order),
            index: index_by_order(&groups),
            groups,
            notes: self.notes.clone(),
        }
    }

    pub fn summary(&self) -> CorpusSummary {
        CorpusSummary {
            max_order: self.max_order,
            groups: self.groups.len(),
            counts_per_order: self.index.iter().map(|(&n, v)| (n, v.len())).collect(),
            notes: self.notes.clone(),
        }
    }
}

fn index_by_order(groups: &[FiniteGroup]) -> BTreeMap<usize, Vec<usize>> {
    let mut index: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (i, g) in groups.iter().enumerate() {
        index.entry(g.order()).or_default().push(i);
    }
    index
}

pub fn build_corpus(max_order: usize) -> Result<Corpus> {
    build_corpus_with(max_order, DEFAULT_NODE_BUDGET)
}

/// Builds the corpus up to `max_order`, using `budget` for every canonical
/// labelling and group isomorphism search made during deduplication.
pub fn build_corpus_with(max_order: usize, budget: u64) -> Result<Corpus> {
    if max_order == 0 || max_order > MAX_CORPUS_ORDER {
        return Err(Error::InvalidParameter(format!(
            "corpus order bound must be between 1 and {MAX_CORPUS_ORDER}, got {max_order}"
        )));
    }
    let mut by_order: BTreeMap<usize, Vec<Candidate>> = BTreeMap::new();
    for c in candidates(max_order) {
        by_order.entry(c.order).or_default().push(c);
    }
    let per_order: Vec<(Vec<FiniteGroup>, Vec<String>)> = by_order
        .into_par_iter()
        .map(|(_, mut cands)| {
            cands.sort_by(|a, b| a.key.cmp(&b.key));
            dedup(cands, budget)
        })
        .collect::<Result<_>>()?;
    let mut groups = Vec::new();
    let mut notes = Vec::new();
    for (g, n) in per_order {
        groups.extend(g);
        notes.extend(n);
    }
    Ok(Corpus {
        max_order,
        index: index_by_order(&groups),
        groups,
        notes,
    })
}

struct Candidate {
    order: usize,
    expr: GroupExpr,
    key: (usize, Vec<(u8, usize)>, String),
}

impl Candidate {
    fn new(atoms: &[Atom], abelian: &[usize]) -> Self {
        let mut factors: Vec<GroupExpr> = atoms.iter().map(|&a| GroupExpr::Atom(a)).collect();
        factors.extend(
            abelian
                .iter()
                .map(|&d| GroupExpr::atom(AtomKind::Cyclic, d)),
        );
        let expr = GroupExpr::product_of(factors).expect("at least one factor");
        let rank = |k: AtomKind| match k {
            AtomKind::Cyclic => 0,
            AtomKind::Dihedral => 1,
            AtomKind::Quaternion => 2,
            AtomKind::Symmetric => 3,
            AtomKind::Heisenberg => 4,
        };
        let shape = expr
            .atoms()
            .iter()
            .map(|a| (rank(a.kind), a.param))
            .collect();
        Candidate {
            order: expr.order(),
            key: (expr.atoms().len(), shape, expr.to_string()),
            expr,
        }
    }
}

/// Non-abelian atoms of order at most `max`, in a fixed order.
fn atoms(max: usize) -> Vec<Atom> {
    let mut out = Vec::new();
    out.extend(
        (6..=max)
            .step_by(2)
            .map(|n| Atom::new(AtomKind::Dihedral, n)),
    );
    out.extend(
        (8..=max)
            .step_by(4)
            .map(|n| Atom::new(AtomKind::Quaternion, n)),
    );
    out.extend(
        (3..=7)
            .filter(|&k| arith::factorial(k) <= max)
            .map(|k| Atom::new(AtomKind::Symmetric, k)),
    );
    out.extend(
        (3..=13)
            .filter(|&p| arith::is_prime(p) && p * p * p <= max)
            .map(|p| Atom::new(AtomKind::Heisenberg, p)),
    );
    out
}

fn candidates(max: usize) -> Vec<Candidate> {
    let atoms = atoms(max);
    let mut multisets: Vec<(Vec<Atom>, usize)> = Vec::new();
    fn extend(
        atoms: &[Atom],
        from: usize,
        cur: &mut Vec<Atom>,
        order: usize,
        max: usize,
        out: &mut Vec<(Vec<Atom>, usize)>,
    ) {
        out.push((cur.clone(), order));
        for (i, a) in atoms.iter().enumerate().skip(from) {
            if order * a.order() <= max {
                cur.push(*a);
                extend(atoms, i, cur, order * a.order(), max, out);
                cur.pop();
            }
        }
    }
    extend(&atoms, 0, &mut Vec::new(), 1, max, &mut multisets);
    let mut out = Vec::new();
    for (atoms, order) in multisets {
        for n in 1..=max / order {
            for inv in abelian_invariants(n) {
                if atoms.is_empty() || n > 1 {
                    out.push(Candidate::new(&atoms, &inv));
                } else {
                    out.push(Candidate::new(&atoms, &[]));
                }
            }
        }
    }
    out
}

/// Invariant factors `d1 ≥ d2 ≥ … > 1` with `d_{i+1} | d_i` of every abelian
/// group of order `n`; `[1]` for the trivial group.
pub fn abelian_invariants(n: usize) -> Vec<Vec<usize>> {
    if n == 1 {
        return vec![vec![1]];
    }
    let mut result = vec![Vec::<usize>::new()];
    for (p, e) in arith::factorize(n) {
        let mut next = Vec::new();
        for lambda in partitions(e as usize) {
            for base in &result {
                let len = base.len().max(lambda.len());
                let inv = (0..len)
                    .map(|i| {
                        base.get(i).copied().unwrap_or(1)
                            * p.pow(lambda.get(i).copied().unwrap_or(0) as u32)
                    })
                    .collect();
                next.push(inv);
            }
        }
        result = next;
    }
    result
}

/// Partitions of `n` as non-increasing part lists.
fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for k in (1..=n.min(max)).rev() {
            cur.push(k);
            go(n - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

struct Retained {
    group: FiniteGroup,
    form: Option<Option<CanonicalForm>>,
}

impl Retained {
    fn form(&mut self, budget: u64) -> Option<&CanonicalForm> {
        let g = &self.group;
        self.form
            .get_or_insert_with(|| {
                canonical_certificate_with(&enhanced_power_graph(g), budget).ok()
            })
            .as_ref()
    }
}

fn dedup(cands: Vec<Candidate>, budget: u64) -> Result<(Vec<FiniteGroup>, Vec<String>)> {
    let mut kept: Vec<Retained> = Vec::new();
    let mut notes = Vec::new();
    for cand in cands {
        let g = cand.expr.build()?;
        let mut me = Retained {
            group: g,
            form: None,
        };
        let spectrum = me.group.order_spectrum();
        let mut duplicate = false;
        for other in kept.iter_mut() {
            if other.group.order_spectrum() != spectrum {
                continue;
            }
            let (a, b) = (me.form(budget).cloned(), other.form(budget).cloned());
            if let (Some(a), Some(b)) = (&a, &b) {
                if a.as_bytes() != b.as_bytes() {
                    continue;
                }
            }
            match groups_isomorphic_with(&me.group, &other.group, budget) {
                SearchOutcome::Found(_) => {
                    duplicate = true;
                    break;
                }
                SearchOutcome::Absent => {}
                SearchOutcome::BudgetExhausted => notes.push(format!(
                    "kept {} without settling isomorphism to {} (budget exhausted)",
                    me.group.name(),
                    other.group.name()
                )),
            }
        }
        if !duplicate {
            kept.push(me);
        }
    }
    Ok((kept.into_iter().map(|r| r.group).collect(), notes))
}
