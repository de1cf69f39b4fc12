//! Finite groups stored as multiplication tables.
//!
//! Elements are indices `0..n` and index `0` is always the identity. Each
//! constructor in [`families`] documents how it enumerates elements so that
//! serialized tables are reproducible.

mod families;
mod iso;
mod spectrum;

use std::collections::BTreeSet;
use std::fmt;
use std::sync::OnceLock;

use fixedbitset::FixedBitSet;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::arith;
use crate::error::{invalid, Error, Result};

pub use families::{
    abelian, cyclic, dihedral, direct_product, elementary_abelian, generalized_quaternion,
    heisenberg, symmetric, MAX_GROUP_ORDER,
};
pub use iso::{groups_isomorphic, groups_isomorphic_with, GroupIsomorphism};
pub use spectrum::OrderSpectrum;

/// Index of a group element.
pub type Element = usize;

/// How thoroughly [`FiniteGroup::from_table`] checks associativity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Validation {
    /// Orders up to this bound get the full `n³` associativity check.
    pub full_associativity_limit: usize,
    /// Above the limit, this many random triples per element are checked.
    pub samples_per_element: usize,
}

impl Default for Validation {
    fn default() -> Self {
        Self {
            full_associativity_limit: 512,
            samples_per_element: 10,
        }
    }
}

/// A finite group given by its Cayley table.
///
/// Immutable after construction. Element orders are computed eagerly; the
/// cyclic-subgroup bitsets used by the graph builders are computed on first
/// use behind a `OnceLock`.
#[derive(Clone)]
pub struct FiniteGroup {
    name: String,
    provenance: Option<String>,
    order: usize,
    table: Vec<u32>,
    inverses: Vec<u32>,
    orders: Vec<usize>,
    cyclic_subgroups: OnceLock<Vec<FixedBitSet>>,
    cyclic_neighborhoods: OnceLock<Vec<FixedBitSet>>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("name", &self.name)
            .field("order", &self.order)
            .finish_non_exhaustive()
    }
}

impl PartialEq for FiniteGroup {
    /// Tables are compared exactly; names are ignored.
    fn eq(&self, other: &Self) -> bool {
        self.table == other.table
    }
}

impl Eq for FiniteGroup {}

impl FiniteGroup {
    /// Builds a group from a row-major table, checking every group axiom.
    pub fn from_table(name: impl Into<String>, order: usize, table: Vec<u32>) -> Result<Self> {
        Self::from_table_with(name, order, table, Validation::default())
    }

    pub fn from_table_with(
        name: impl Into<String>,
        order: usize,
        table: Vec<u32>,
        validation: Validation,
    ) -> Result<Self> {
        let name = name.into();
        if order == 0 {
            return invalid("a group has at least one element");
        }
        if order > MAX_GROUP_ORDER {
            return invalid(format!(
                "order {order} exceeds the table guard {MAX_GROUP_ORDER}"
            ));
        }
        if table.len() != order * order {
            return Err(Error::InvalidTable(format!(
                "expected {} entries, found {}",
                order * order,
                table.len()
            )));
        }
        check_latin_square(order, &table)?;
        for x in 0..order {
            if table[x] as usize != x || table[x * order] as usize != x {
                return Err(Error::InvalidTable(format!(
                    "index 0 is not a two-sided identity (fails at {x})"
                )));
            }
        }
        check_associativity(order, &table, validation)?;
        Ok(Self::assemble(name, order, table))
    }

    /// Skips validation. Only for constructors whose tables are correct by construction;
    /// tests re-run the checks on every constructor.
    pub(crate) fn from_trusted_table(name: String, order: usize, table: Vec<u32>) -> Self {
        debug_assert_eq!(table.len(), order * order);
        Self::assemble(name, order, table)
    }

    fn assemble(name: String, order: usize, table: Vec<u32>) -> Self {
        let mut inverses = vec![0u32; order];
        for a in 0..order {
            let row = &table[a * order..(a + 1) * order];
            inverses[a] = row.iter().position(|&c| c == 0).expect("latin row") as u32;
        }
        let mut orders = vec![0usize; order];
        for (x, slot) in orders.iter_mut().enumerate() {
            let mut k = 1;
            let mut cur = x;
            while cur != 0 {
                cur = table[cur * order + x] as usize;
                k += 1;
            }
            *slot = if x == 0 { 1 } else { k };
        }
        Self {
            name,
            provenance: None,
            order,
            table,
            inverses,
            orders,
            cyclic_subgroups: OnceLock::new(),
            cyclic_neighborhoods: OnceLock::new(),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// The expression this group was built from, if any.
    pub fn provenance(&self) -> Option<&str> {
        self.provenance.as_deref()
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn with_provenance(mut self, provenance: impl Into<String>) -> Self {
        self.provenance = Some(provenance.into());
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> Element {
        0
    }

    /// Row-major table, `table()[a * n + b] = a·b`.
    pub fn table(&self) -> &[u32] {
        &self.table
    }

    #[inline]
    pub fn mul(&self, a: Element, b: Element) -> Element {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inverse(&self, a: Element) -> Element {
        self.inverses[a] as usize
    }

    pub fn pow(&self, a: Element, k: usize) -> Element {
        (0..k % self.orders[a]).fold(0, |acc, _| self.mul(acc, a))
    }

    fn check_index(&self, x: Element) -> Result<()> {
        if x < self.order {
            Ok(())
        } else {
            invalid(format!(
                "element index {x} out of range for order {}",
                self.order
            ))
        }
    }

    /// Smallest `k ≥ 1` with `x^k = e`.
    pub fn element_order(&self, x: Element) -> Result<usize> {
        self.check_index(x)?;
        Ok(self.orders[x])
    }

    /// Orders of all elements, indexed by element.
    pub fn element_orders(&self) -> &[usize] {
        &self.orders
    }

    pub fn order_spectrum(&self) -> OrderSpectrum {
        OrderSpectrum::from_orders(&self.orders)
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_cyclic(&self) -> bool {
        self.orders.contains(&self.order)
    }

    /// Smallest subset containing `seed` and closed under multiplication, ascending.
    pub fn subgroup_closure(&self, seed: &[Element]) -> Result<Vec<Element>> {
        if seed.is_empty() {
            return invalid("subgroup closure needs a non-empty seed");
        }
        for &x in seed {
            self.check_index(x)?;
        }
        let mut member = FixedBitSet::with_capacity(self.order);
        let mut members: Vec<Element> = Vec::new();
        let mut queue: Vec<Element> = Vec::new();
        for &x in std::iter::once(&0).chain(seed) {
            if !member.put(x) {
                members.push(x);
                queue.push(x);
            }
        }
        while let Some(a) = queue.pop() {
            let mut i = 0;
            while i < members.len() {
                let b = members[i];
                for c in [self.mul(a, b), self.mul(b, a)] {
                    if !member.put(c) {
                        members.push(c);
                        queue.push(c);
                    }
                }
                i += 1;
            }
        }
        members.sort_unstable();
        Ok(members)
    }

    /// Membership bitsets of `⟨z⟩` for every `z`.
    pub fn cyclic_subgroups(&self) -> &[FixedBitSet] {
        self.cyclic_subgroups.get_or_init(|| {
            (0..self.order)
                .map(|z| {
                    let mut set = FixedBitSet::with_capacity(self.order);
                    let mut cur = 0;
                    loop {
                        set.insert(cur);
                        cur = self.mul(cur, z);
                        if cur == 0 {
                            break;
                        }
                    }
                    set
                })
                .collect()
        })
    }

    /// For every `x`, the set of `y` such that some `⟨z⟩` contains both.
    ///
    /// Row `x` is the union of all cyclic subgroups containing `x`, which is
    /// exactly the closed neighbourhood of `x` in the enhanced power graph.
    pub fn cyclic_neighborhoods(&self) -> &[FixedBitSet] {
        self.cyclic_neighborhoods.get_or_init(|| {
            let subs = self.cyclic_subgroups();
            // Only distinct subgroups matter; ⟨z⟩ is shared by φ(|z|) generators.
            let mut seen = BTreeSet::new();
            let distinct: Vec<&FixedBitSet> = (0..self.order)
                .filter(|&z| seen.insert(subs[z].ones().collect::<Vec<_>>()))
                .map(|z| &subs[z])
                .collect();
            let mut rows = vec![FixedBitSet::with_capacity(self.order); self.order];
            for sub in distinct {
                for x in sub.ones() {
                    rows[x].union_with(sub);
                }
            }
            rows
        })
    }

    /// Whether `⟨x, y⟩` is cyclic.
    pub fn is_cyclic_pair(&self, x: Element, y: Element) -> Result<bool> {
        self.check_index(x)?;
        self.check_index(y)?;
        Ok(self.cyclic_neighborhoods()[x].contains(y))
    }

    /// `Cyc(G)`: elements that generate a cyclic subgroup together with every element.
    pub fn cyc_set(&self) -> Vec<Element> {
        self.cyclic_neighborhoods()
            .iter()
            .enumerate()
            .filter(|(_, row)| row.count_ones(..) == self.order)
            .map(|(x, _)| x)
            .collect()
    }

    /// Elements whose order is a power of `p` (the identity included).
    pub fn p_elements(&self, p: usize) -> Result<Vec<Element>> {
        if !arith::is_prime(p) {
            return invalid(format!("{p} is not prime"));
        }
        Ok((0..self.order)
            .filter(|&x| arith::is_power_of(self.orders[x], p))
            .collect())
    }

    /// Nilpotent iff for every prime `p | n` the `p`-elements number exactly the `p`-part of `n`.
    pub fn is_nilpotent(&self) -> bool {
        arith::factorize(self.order).into_iter().all(|(p, _)| {
            let count = self
                .orders
                .iter()
                .filter(|&&o| arith::is_power_of(o, p))
                .count();
            count == arith::p_part(self.order, p)
        })
    }

    /// Splits a nilpotent group into its Sylow subgroups.
    pub fn sylow_decomposition(&self) -> Result<SylowDecomposition> {
        if !self.is_nilpotent() {
            return Err(Error::NotNilpotent(self.name.clone()));
        }
        let mut factors = Vec::new();
        for (p, e) in arith::factorize(self.order) {
            let elements = self.p_elements(p)?;
            debug_assert_eq!(elements.len(), p.pow(e));
            let group = self
                .subgroup(&elements)?
                .with_name(format!("Sylow {p}-subgroup of {}", self.name));
            factors.push(SylowFactor {
                prime: p,
                elements,
                group,
            });
        }
        Ok(SylowDecomposition { factors })
    }

    /// Extracts the subgroup on `elements` (ascending, so the identity stays at 0).
    pub fn subgroup(&self, elements: &[Element]) -> Result<FiniteGroup> {
        let mut sorted = elements.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.first() != Some(&0) {
            return invalid("a subgroup must contain the identity");
        }
        for &x in &sorted {
            self.check_index(x)?;
        }
        let mut local = vec![usize::MAX; self.order];
        for (i, &x) in sorted.iter().enumerate() {
            local[x] = i;
        }
        let m = sorted.len();
        let mut table = Vec::with_capacity(m * m);
        for &a in &sorted {
            for &b in &sorted {
                let c = local[self.mul(a, b)];
                if c == usize::MAX {
                    return invalid(format!("set is not closed: {a}·{b} leaves it"));
                }
                table.push(c as u32);
            }
        }
        Ok(FiniteGroup::from_trusted_table(
            format!("subgroup of {}", self.name),
            m,
            table,
        ))
    }

    /// Greedy generating set: repeatedly take the element of largest order outside
    /// the current closure, lowest index first among ties.
    pub fn generating_set(&self) -> Vec<Element> {
        let mut gens = Vec::new();
        let mut inside = FixedBitSet::with_capacity(self.order);
        inside.insert(0);
        let mut closure = vec![0];
        while closure.len() < self.order {
            let next = (0..self.order)
                .filter(|&x| !inside.contains(x))
                .max_by(|&a, &b| self.orders[a].cmp(&self.orders[b]).then(b.cmp(&a)))
                .expect("closure is proper");
            gens.push(next);
            closure = self.subgroup_closure(&gens).expect("valid generators");
            inside.clear();
            for &x in &closure {
                inside.insert(x);
            }
        }
        gens
    }

    /// Re-checks every group axiom with full associativity regardless of order.
    pub fn validate_fully(&self) -> Result<()> {
        check_latin_square(self.order, &self.table)?;
        check_associativity(
            self.order,
            &self.table,
            Validation {
                full_associativity_limit: usize::MAX,
                samples_per_element: 0,
            },
        )
    }

    pub fn to_json(&self) -> GroupJson {
        GroupJson {
            name: self.name.clone(),
            order: self.order,
            provenance: self.provenance.clone(),
            table: (0..self.order)
                .map(|a| self.table[a * self.order..(a + 1) * self.order].to_vec())
                .collect(),
        }
    }

    pub fn from_json(json: &GroupJson) -> Result<Self> {
        if json.table.len() != json.order || json.table.iter().any(|r| r.len() != json.order) {
            return Err(Error::Format(format!("table is not {0}x{0}", json.order)));
        }
        let table = json.table.iter().flatten().copied().collect();
        let g = FiniteGroup::from_table(json.name.clone(), json.order, table)?;
        Ok(match &json.provenance {
            Some(p) => g.with_provenance(p.clone()),
            None => g,
        })
    }
}

/// Serialized group: `{"name", "order", "provenance"?, "table"}` with keys in sorted order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupJson {
    pub name: String,
    pub order: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<String>,
    pub table: Vec<Vec<u32>>,
}

/// One Sylow subgroup of a nilpotent group.
#[derive(Debug, Clone)]
pub struct SylowFactor {
    pub prime: usize,
    /// Element indices in the parent group, ascending.
    pub elements: Vec<Element>,
    /// The subgroup relabelled to `0..|S_p|`, identity first.
    pub group: FiniteGroup,
}

#[derive(Debug, Clone)]
pub struct SylowDecomposition {
    pub factors: Vec<SylowFactor>,
}

impl SylowDecomposition {
    pub fn factor(&self, p: usize) -> Option<&SylowFactor> {
        self.factors.iter().find(|f| f.prime == p)
    }

    pub fn primes(&self) -> Vec<usize> {
        self.factors.iter().map(|f| f.prime).collect()
    }
}

fn check_latin_square(order: usize, table: &[u32]) -> Result<()> {
    let mut seen = FixedBitSet::with_capacity(order);
    for a in 0..order {
        seen.clear();
        for b in 0..order {
            let c = table[a * order + b] as usize;
            if c >= order || seen.put(c) {
                return Err(Error::InvalidTable(format!("row {a} is not a permutation")));
            }
        }
    }
    for b in 0..order {
        seen.clear();
        for a in 0..order {
            if seen.put(table[a * order + b] as usize) {
                return Err(Error::InvalidTable(format!(
                    "column {b} is not a permutation"
                )));
            }
        }
    }
    Ok(())
}

fn check_associativity(order: usize, table: &[u32], validation: Validation) -> Result<()> {
    let m = |a: usize, b: usize| table[a * order + b] as usize;
    let fail = |a, b, c| {
        Err(Error::InvalidTable(format!(
            "associativity fails for ({a}, {b}, {c})"
        )))
    };
    if order <= validation.full_associativity_limit {
        for a in 0..order {
            for b in 0..order {
                let ab = m(a, b);
                for c in 0..order {
                    if m(ab, c) != m(a, m(b, c)) {
                        return fail(a, b, c);
                    }
                }
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(order as u64);
        for _ in 0..validation.samples_per_element * order {
            let (a, b, c) = (
                rng.gen_range(0..order),
                rng.gen_range(0..order),
                rng.gen_range(0..order),
            );
            if m(m(a, b), c) != m(a, m(b, c)) {
                return fail(a, b, c);
            }
        }
    }
    Ok(())
}
