//! Independent reference implementations used as test oracles.
#![allow(dead_code)]

use std::sync::OnceLock;

use pegraph::verify::{build_corpus, Corpus};
use pegraph::{FiniteGroup, Graph};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// The default corpus (order ≤ 72), built once per test binary.
pub fn corpus() -> &'static Corpus {
    static CORPUS: OnceLock<Corpus> = OnceLock::new();
    CORPUS.get_or_init(|| build_corpus(72).expect("default corpus builds"))
}

/// Equal-order pairs `(i, j)`, `i <= j`, among members of order at most `max`.
pub fn equal_order_pairs(corpus: &Corpus, max: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for n in corpus.orders().filter(|&n| n <= max) {
        let idx = corpus.indices_of_order(n);
        for (a, &i) in idx.iter().enumerate() {
            for &j in &idx[a..] {
                out.push((i, j));
            }
        }
    }
    out
}

/// `⟨x, y⟩` is cyclic iff the closure contains an element whose order is the closure's size.
pub fn cyclic_pair_by_closure(g: &FiniteGroup, x: usize, y: usize) -> bool {
    let h = g.subgroup_closure(&[x, y]).unwrap();
    h.iter().any(|&z| g.element_order(z).unwrap() == h.len())
}

/// Elements whose order is a power of `p`, computed by repeated multiplication.
fn p_elements_naive(g: &FiniteGroup, p: usize) -> Vec<usize> {
    (0..g.order())
        .filter(|&x| {
            let mut k = 1;
            let mut y = x;
            while y != 0 {
                y = g.mul(y, x);
                k += 1;
            }
            while k % p == 0 {
                k /= p;
            }
            k == 1
        })
        .collect()
}

fn is_p_group_size(mut n: usize, p: usize) -> bool {
    while n % p == 0 {
        n /= p;
    }
    n == 1
}

/// Nilpotent iff every Sylow subgroup is unique. For each `p`, grow a maximal
/// `p`-subgroup through every `p`-element by adding the remaining `p`-elements
/// in random order while the closure stays a `p`-group; the Sylow subgroup is
/// unique iff all of these coincide.
pub fn nilpotent_by_sylow_growth(g: &FiniteGroup, seed: u64) -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = g.order();
    let mut primes = Vec::new();
    let mut m = n;
    let mut d = 2;
    while m > 1 {
        if m % d == 0 {
            primes.push(d);
            while m % d == 0 {
                m /= d;
            }
        }
        d += 1;
    }
    for p in primes {
        let pel = p_elements_naive(g, p);
        let mut found: Option<Vec<usize>> = None;
        for &start in &pel {
            let mut current = g.subgroup_closure(&[start]).unwrap();
            let mut rest = pel.clone();
            rest.shuffle(&mut rng);
            for x in rest {
                if current.binary_search(&x).is_ok() {
                    continue;
                }
                let mut seed = current.clone();
                seed.push(x);
                let grown = g.subgroup_closure(&seed).unwrap();
                if is_p_group_size(grown.len(), p) {
                    current = grown;
                }
            }
            match &found {
                None => found = Some(current),
                Some(f) if *f != current => return false,
                Some(_) => {}
            }
        }
    }
    true
}

/// Backtracking isomorphism test restricted by degree classes. Swapping two
/// unused twins of `b` (same open or closed neighbourhood) is an automorphism
/// fixing every image chosen so far, so only one candidate per twin class is tried.
pub fn brute_force_isomorphic(a: &Graph, b: &Graph) -> bool {
    let n = a.vertex_count();
    if n != b.vertex_count() || a.edge_count() != b.edge_count() {
        return false;
    }
    let mut da = a.degrees();
    let mut db = b.degrees();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return false;
    }
    let order = bfs_order(a);
    let twin_b = twin_classes(b);
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn go(
        k: usize,
        order: &[usize],
        a: &Graph,
        b: &Graph,
        twin_b: &[usize],
        map: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if k == order.len() {
            return true;
        }
        let v = order[k];
        let mut tried_classes: Vec<usize> = Vec::new();
        for u in 0..b.vertex_count() {
            if used[u] || b.degree(u) != a.degree(v) {
                continue;
            }
            if tried_classes.contains(&twin_b[u]) {
                continue;
            }
            if !order[..k]
                .iter()
                .all(|&w| a.has_edge(v, w) == b.has_edge(u, map[w]))
            {
                continue;
            }
            tried_classes.push(twin_b[u]);
            map[v] = u;
            used[u] = true;
            if go(k + 1, order, a, b, twin_b, map, used) {
                return true;
            }
            used[u] = false;
            map[v] = usize::MAX;
        }
        false
    }
    go(0, &order, a, b, &twin_b, &mut map, &mut used)
}

fn bfs_order(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut starts: Vec<usize> = (0..n).collect();
    starts.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    for s in starts {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut i = order.len();
        order.push(s);
        while i < order.len() {
            let u = order[i];
            for w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    order.push(w);
                }
            }
            i += 1;
        }
    }
    order
}

/// Class id per vertex; vertices share a class iff they are open or closed twins.
/// Each twin relation is an equivalence, and a vertex with an open twin has no
/// closed twin, so the classes are well defined.
fn twin_classes(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut class: Vec<usize> = (0..n).collect();
    for u in 0..n {
        for v in u + 1..n {
            if class[v] != v {
                continue;
            }
            let mut nu = g.neighborhood(u).clone();
            let mut nv = g.neighborhood(v).clone();
            let open = nu == nv;
            nu.insert(u);
            nv.insert(v);
            let closed = nu == nv;
            if (open || closed) && class[u] == u {
                class[v] = u;
            }
        }
    }
    class
}
