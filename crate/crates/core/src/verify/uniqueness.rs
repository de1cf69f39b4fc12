//! Groups determined up to isomorphism by their enhanced power graph.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde_json::json;

use super::corpus::Corpus;
use super::pairs::{and, biconditional, iso, kind_symbol, Prepared, KINDS};
use super::report::{CheckRecord, Verdict, VerificationReport};
use crate::arith;
use crate::error::{Error, Result};
use crate::expr::GroupExpr;
use crate::group::{groups_isomorphic_with, FiniteGroup};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// `Q8 × Zn`, `n` odd.
    Q8xZn,
    /// `(Z2)^m × Zn`, `n` odd.
    E2mxZn,
    /// `Zp × Zp × Zn`, `gcd(n, p) = 1`.
    ZpZpxZn,
    /// `Zp × Zp × Zp × Zn`, `p` odd, `gcd(n, p) = 1`; shares its graph with `Heis(p) × Zn`.
    Zp3xZn,
    /// Symmetric group `S_n`.
    Sn,
    /// Dihedral group of order `2n`.
    D2n,
    /// Generalized quaternion group of order `4n`.
    Q4n,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::Q8xZn,
        Family::E2mxZn,
        Family::ZpZpxZn,
        Family::Zp3xZn,
        Family::Sn,
        Family::D2n,
        Family::Q4n,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Family::Q8xZn => "Q8xZn",
            Family::E2mxZn => "E2mxZn",
            Family::ZpZpxZn => "ZpZpxZn",
            Family::Zp3xZn => "Zp3xZn",
            Family::Sn => "Sn",
            Family::D2n => "D2n",
            Family::Q4n => "Q4n",
        }
    }

    /// Every valid parameter choice whose target has order at most `max_order`.
    pub fn default_params(self, max_order: usize) -> Vec<FamilyParams> {
        let odd = |bound: usize| (1..=bound).step_by(2);
        let primes = |bound: usize| (2..=bound).filter(|&p| arith::is_prime(p));
        let mut out = Vec::new();
        match self {
            Family::Q8xZn => out.extend(odd(max_order / 8).map(|n| FamilyParams::Q8xZn { n })),
            Family::E2mxZn => {
                for m in (2..).take_while(|&m| 1usize << m <= max_order) {
                    out.extend(odd(max_order >> m).map(|n| FamilyParams::E2mxZn { m, n }));
                }
            }
            Family::ZpZpxZn => {
                for p in primes(max_order).filter(|p| p * p <= max_order) {
                    out.extend(
                        (1..=max_order / (p * p))
                            .filter(|&n| arith::gcd(n, p) == 1)
                            .map(|n| FamilyParams::ZpZpxZn { p, n }),
                    );
                }
            }
            Family::Zp3xZn => {
                for p in primes(max_order).filter(|&p| p > 2 && p.pow(3) <= max_order) {
                    out.extend(
                        (1..=max_order / p.pow(3))
                            .filter(|&n| arith::gcd(n, p) == 1)
                            .map(|n| FamilyParams::Zp3xZn { p, n }),
                    );
                }
            }
            Family::Sn => out.extend(
                (3..=7)
                    .filter(|&n| arith::factorial(n) <= max_order)
                    .map(|n| FamilyParams::Sn { n }),
            ),
            Family::D2n => out.extend(
                (6..=max_order)
                    .step_by(2)
                    .map(|order| FamilyParams::D2n { order }),
            ),
            Family::Q4n => out.extend(
                (8..=max_order)
                    .step_by(4)
                    .map(|order| FamilyParams::Q4n { order }),
            ),
        }
        out
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.as_str().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| {
                let names: Vec<_> = Family::ALL.iter().map(|f| f.as_str()).collect();
                Error::InvalidParameter(format!(
                    "unknown family {s:?}; expected one of {}",
                    names.join(", ")
                ))
            })
    }
}

/// A member of one of the uniqueness families. `D2n` and `Q4n` are given by group order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyParams {
    Q8xZn { n: usize },
    E2mxZn { m: usize, n: usize },
    ZpZpxZn { p: usize, n: usize },
    Zp3xZn { p: usize, n: usize },
    Sn { n: usize },
    D2n { order: usize },
    Q4n { order: usize },
}

impl FamilyParams {
    pub fn family(&self) -> Family {
        match self {
            FamilyParams::Q8xZn { .. } => Family::Q8xZn,
            FamilyParams::E2mxZn { .. } => Family::E2mxZn,
            FamilyParams::ZpZpxZn { .. } => Family::ZpZpxZn,
            FamilyParams::Zp3xZn { .. } => Family::Zp3xZn,
            FamilyParams::Sn { .. } => Family::Sn,
            FamilyParams::D2n { .. } => Family::D2n,
            FamilyParams::Q4n { .. } => Family::Q4n,
        }
    }

    /// Checks the side conditions under which the family is determined by its graph.
    pub fn validate(&self) -> Result<()> {
        let bad = |why: &str| {
            Err(Error::InvalidParameter(format!(
                "{} ({self}): {why}",
                self.family()
            )))
        };
        match *self {
            FamilyParams::Q8xZn { n } if n % 2 == 0 => bad("n must be odd"),
            FamilyParams::E2mxZn { m: 0, .. } => bad("m must be at least 1"),
            FamilyParams::E2mxZn { n, .. } if n % 2 == 0 => bad("n must be odd"),
            FamilyParams::ZpZpxZn { p, .. } if !arith::is_prime(p) => bad("p must be prime"),
            FamilyParams::ZpZpxZn { p, n } if n == 0 || arith::gcd(n, p) != 1 => {
                bad("n must be positive and coprime to p")
            }
            FamilyParams::Zp3xZn { p, .. } if p == 2 || !arith::is_prime(p) => {
                bad("p must be an odd prime")
            }
            FamilyParams::Zp3xZn { p, n } if n == 0 || arith::gcd(n, p) != 1 => {
                bad("n must be positive and coprime to p")
            }
            FamilyParams::Sn { n } if !(1..=7).contains(&n) => bad("n must be between 1 and 7"),
            FamilyParams::D2n { order } if order % 2 != 0 || order < 6 => {
                bad("order must be even and at least 6")
            }
            FamilyParams::Q4n { order } if order % 4 != 0 || order < 8 => {
                bad("order must be a multiple of 4, at least 8")
            }
            _ => Ok(()),
        }
    }

    /// Expression of the target group.
    pub fn target(&self) -> GroupExpr {
        self.accepted().swap_remove(0)
    }

    /// Expressions of the groups whose graph equals the target's.
    pub fn accepted(&self) -> Vec<GroupExpr> {
        let with_n = |base: String, n: usize| {
            if n == 1 {
                base
            } else {
                format!("{base} x Z{n}")
            }
        };
        let texts = match *self {
            FamilyParams::Q8xZn { n } => vec![with_n("Q8".into(), n)],
            FamilyParams::E2mxZn { m, n } => vec![with_n(vec!["Z2"; m].join(" x "), n)],
            FamilyParams::ZpZpxZn { p, n } => vec![with_n(format!("Z{p} x Z{p}"), n)],
            FamilyParams::Zp3xZn { p, n } => vec![
                with_n(format!("Z{p} x Z{p} x Z{p}"), n),
                with_n(format!("Heis{p}"), n),
            ],
            FamilyParams::Sn { n } => vec![format!("S{n}")],
            FamilyParams::D2n { order } => vec![format!("D{order}")],
            FamilyParams::Q4n { order } => vec![format!("Q{order}")],
        };
        texts
            .iter()
            .map(|t| t.parse().expect("family expressions are well formed"))
            .collect()
    }
}

impl fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyParams::Q8xZn { n } | FamilyParams::Sn { n } => write!(f, "n={n}"),
            FamilyParams::E2mxZn { m, n } => write!(f, "m={m}, n={n}"),
            FamilyParams::ZpZpxZn { p, n } | FamilyParams::Zp3xZn { p, n } => {
                write!(f, "p={p}, n={n}")
            }
            FamilyParams::D2n { order } | FamilyParams::Q4n { order } => write!(f, "order={order}"),
        }
    }
}

/// For every corpus group `H` of the target's order: the graph of `H` is
/// isomorphic to the target's iff `H` is isomorphic to an accepted group.
/// Checked for the enhanced power graph, the power graph and the cyclic graph
/// (with orders equal by construction). Each accepted group must also occur
/// in the corpus.
pub fn verify_uniqueness(
    params: &FamilyParams,
    corpus: &Corpus,
    budget: u64,
) -> Result<VerificationReport> {
    params.validate()?;
    let target_expr = params.target();
    if target_expr.order() > corpus.max_order() {
        return Err(Error::InvalidParameter(format!(
            "target {target_expr} has order {} beyond the corpus bound {}",
            target_expr.order(),
            corpus.max_order()
        )));
    }
    let accepted: Vec<FiniteGroup> = params
        .accepted()
        .iter()
        .map(GroupExpr::build)
        .collect::<Result<_>>()?;
    let target = Prepared::new(&accepted[0]);
    let members: Vec<&FiniteGroup> = corpus.of_order(target.order).collect();
    let prefix = format!("family={}, {params}", params.family());

    let mut records: Vec<CheckRecord> = members
        .par_iter()
        .flat_map_iter(|h| {
            let matches: Vec<Option<bool>> = accepted
                .iter()
                .map(|a| groups_isomorphic_with(h, a, budget).verdict())
                .collect();
            let is_accepted = matches.iter().fold(Some(false), |acc, &m| match (acc, m) {
                (Some(true), _) | (_, Some(true)) => Some(true),
                (Some(false), Some(false)) => Some(false),
                _ => None,
            });
            let hp = Prepared::new(h);
            let params = format!("{prefix}, H={}", h.name());
            KINDS
                .into_iter()
                .map(|kind| {
                    let out = iso(hp.graph(kind), target.graph(kind), budget);
                    let mut lhs = out.verdict();
                    if kind == crate::graph::GraphKind::Cyclic {
                        lhs = and(lhs, Some(hp.order == target.order));
                    }
                    let k = kind_symbol(kind);
                    biconditional(
                        &format!("uniqueness.{}", kind.as_str()),
                        &format!("{k}(H) ≅ {k}(T) iff H is isomorphic to an accepted group"),
                        params.clone(),
                        lhs,
                        is_accepted,
                        || {
                            json!({
                                "target": target.name,
                                "certificate": out.found().map(|c| c.mapping),
                            })
                        },
                    )
                })
                .collect::<Vec<_>>()
        })
        .collect();

    for a in &accepted {
        let mut exhausted = false;
        let present =
            members
                .iter()
                .any(|h| match groups_isomorphic_with(h, a, budget).verdict() {
                    Some(v) => v,
                    None => {
                        exhausted = true;
                        false
                    }
                });
        let verdict = match (present, exhausted) {
            (true, _) => Verdict::Pass,
            (false, true) => Verdict::SkippedBudget,
            (false, false) => Verdict::Fail,
        };
        let mut rec = CheckRecord::new(
            "uniqueness.coverage",
            "every accepted group occurs in the corpus",
            format!("{prefix}, A={a}", a = a.name()),
            verdict,
        );
        if verdict == Verdict::Fail {
            rec = rec.with_witness(json!({ "missing": a.name() }));
        }
        records.push(rec);
    }
    Ok(VerificationReport::from_records(records))
}
