//! Constructors for the standard families and direct products.

use super::FiniteGroup;
use crate::arith;
use crate::error::{invalid, Result};

/// Largest order any constructor will tabulate (`n²` table entries).
pub const MAX_GROUP_ORDER: usize = 5040;

fn tabulate(name: String, n: usize, mul: impl Fn(usize, usize) -> usize) -> FiniteGroup {
    let mut table = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            table.push(mul(a, b) as u32);
        }
    }
    FiniteGroup::from_trusted_table(name, n, table)
}

/// `Z_n` with `a·b = (a + b) mod n`.
pub fn cyclic(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return invalid("Z_n needs n >= 1");
    }
    if n > MAX_GROUP_ORDER {
        return invalid(format!("Z{n} exceeds the table guard {MAX_GROUP_ORDER}"));
    }
    Ok(tabulate(format!("Z{n}"), n, |a, b| (a + b) % n))
}

/// Dihedral group of the given order `2n` (`n ≥ 3`).
///
/// `a^i` has index `i` and `a^i b` has index `n + i`, from `a^n = b^2 = e`
/// and `b a b^{-1} = a^{-1}`.
pub fn dihedral(order: usize) -> Result<FiniteGroup> {
    if order % 2 != 0 || order < 6 {
        return invalid(format!(
            "dihedral order must be even and at least 6, got {order}"
        ));
    }
    if order > MAX_GROUP_ORDER {
        return invalid(format!(
            "D{order} exceeds the table guard {MAX_GROUP_ORDER}"
        ));
    }
    let n = order / 2;
    Ok(tabulate(format!("D{order}"), order, |x, y| {
        let (i, s) = (x % n, x / n);
        let (j, t) = (y % n, y / n);
        // a^i b^s · a^j b^t = a^(i ± j) b^(s+t)
        let k = if s == 0 { (i + j) % n } else { (i + n - j) % n };
        k + n * ((s + t) % 2)
    }))
}

/// Generalized quaternion group of the given order `4n` (`n ≥ 2`).
///
/// `x^i` has index `i` for `0 ≤ i < 2n` and `x^i y` has index `2n + i`, from
/// `x^n = y^2`, `x^{2n} = e`, `y^{-1} x y = x^{-1}`.
pub fn generalized_quaternion(order: usize) -> Result<FiniteGroup> {
    if order % 4 != 0 || order < 8 {
        return invalid(format!(
            "generalized quaternion order must be a multiple of 4 and at least 8, got {order}"
        ));
    }
    if order > MAX_GROUP_ORDER {
        return invalid(format!(
            "Q{order} exceeds the table guard {MAX_GROUP_ORDER}"
        ));
    }
    let m = order / 2; // order of x
    let n = order / 4;
    Ok(tabulate(format!("Q{order}"), order, |a, b| {
        let (i, s) = (a % m, a / m);
        let (j, t) = (b % m, b / m);
        match (s, t) {
            (0, 0) => (i + j) % m,
            (0, 1) => m + (i + j) % m,
            (1, 0) => m + (i + m - j) % m,
            // x^i y x^j y = x^(i-j) y^2 = x^(i-j+n)
            _ => (i + m - j + n) % m,
        }
    }))
}

/// Symmetric group `S_n`, `1 ≤ n ≤ 7`.
///
/// Permutations are listed in lexicographic order of their one-line notation,
/// so the identity comes first. The product is composition `(στ)(i) = σ(τ(i))`.
pub fn symmetric(n: usize) -> Result<FiniteGroup> {
    if !(1..=7).contains(&n) {
        return invalid(format!("S_n needs 1 <= n <= 7, got {n}"));
    }
    let perms = lexicographic_permutations(n);
    let index = |p: &[u8]| -> usize {
        // Lehmer code gives the lexicographic rank.
        let mut rank = 0;
        for i in 0..n {
            let smaller = p[i + 1..].iter().filter(|&&x| x < p[i]).count();
            rank = rank * (n - i) + smaller;
        }
        rank
    };
    let mut composed = vec![0u8; n];
    let size = perms.len();
    let mut table = Vec::with_capacity(size * size);
    for s in &perms {
        for t in &perms {
            for i in 0..n {
                composed[i] = s[t[i] as usize];
            }
            table.push(index(&composed) as u32);
        }
    }
    Ok(FiniteGroup::from_trusted_table(
        format!("S{n}"),
        size,
        table,
    ))
}

fn lexicographic_permutations(n: usize) -> Vec<Vec<u8>> {
    let mut cur: Vec<u8> = (0..n as u8).collect();
    let mut out = vec![cur.clone()];
    loop {
        let Some(i) = (0..n.saturating_sub(1))
            .rev()
            .find(|&i| cur[i] < cur[i + 1])
        else {
            return out;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
        out.push(cur.clone());
    }
}

/// The non-abelian group of order `p³` and exponent `p`, as upper unitriangular
/// 3×3 matrices over `Z_p`.
///
/// The matrix with entries `(a, b, c)` above the diagonal (`a` at (1,2), `b` at
/// (2,3), `c` at (1,3)) has index `a·p² + b·p + c`; the product is
/// `(a, b, c)(a', b', c') = (a + a', b + b', c + c' + a·b')`.
pub fn heisenberg(p: usize) -> Result<FiniteGroup> {
    if p == 2 || !arith::is_prime(p) {
        return invalid(format!("Heisenberg group needs an odd prime, got {p}"));
    }
    if p > 13 {
        return invalid(format!("Heisenberg group needs p <= 13, got {p}"));
    }
    let decode = |x: usize| (x / (p * p), (x / p) % p, x % p);
    Ok(tabulate(format!("Heis{p}"), p * p * p, |x, y| {
        let (a, b, c) = decode(x);
        let (a2, b2, c2) = decode(y);
        ((a + a2) % p) * p * p + ((b + b2) % p) * p + (c + c2 + a * b2) % p
    }))
}

/// `G × H` with `(a, b)` stored at index `a·|H| + b`.
pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> Result<FiniteGroup> {
    let (n, m) = (g.order(), h.order());
    if n * m > MAX_GROUP_ORDER {
        return invalid(format!(
            "{} x {} has order {} beyond the table guard {MAX_GROUP_ORDER}",
            g.name(),
            h.name(),
            n * m
        ));
    }
    Ok(tabulate(
        format!("{} x {}", g.name(), h.name()),
        n * m,
        |x, y| g.mul(x / m, y / m) * m + h.mul(x % m, y % m),
    ))
}

/// `Z_{d1} × Z_{d2} × …`; an empty list gives the trivial group.
pub fn abelian(factors: &[usize]) -> Result<FiniteGroup> {
    let Some((&first, rest)) = factors.split_first() else {
        return cyclic(1);
    };
    let mut g = cyclic(first)?;
    for &d in rest {
        g = direct_product(&g, &cyclic(d)?)?;
    }
    Ok(g)
}

/// `(Z_p)^k`.
pub fn elementary_abelian(p: usize, k: usize) -> Result<FiniteGroup> {
    if !arith::is_prime(p) {
        return invalid(format!("{p} is not prime"));
    }
    abelian(&vec![p; k])
}
