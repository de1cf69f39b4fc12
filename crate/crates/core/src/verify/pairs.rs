//! Checks over pairs of equal-order corpus groups.

use rayon::prelude::*;
use serde_json::{json, Value};

use super::corpus::Corpus;
use super::report::{CheckRecord, Verdict, VerificationReport};
use crate::graph::{cyclic_graph, enhanced_power_graph, power_graph, Graph, GraphKind};
use crate::group::{FiniteGroup, OrderSpectrum};
use crate::iso::{graphs_isomorphic_with, IsoCertificate, IsoOptions};
use crate::outcome::SearchOutcome;

/// Graph kinds the pair checks run over; the directed power graph is not compared.
pub(crate) const KINDS: [GraphKind; 3] = [GraphKind::Enhanced, GraphKind::Power, GraphKind::Cyclic];

/// The graphs of a group and, when it is nilpotent, of its Sylow subgroups.
pub(crate) struct Prepared {
    pub name: String,
    pub order: usize,
    pub enhanced: Graph,
    pub power: Graph,
    pub cyclic: Graph,
    pub cyc_size: usize,
    pub spectrum: OrderSpectrum,
    pub nilpotent: bool,
    pub sylow: Vec<SylowGraphs>,
}

pub(crate) struct SylowGraphs {
    pub prime: usize,
    pub enhanced: Graph,
    pub power: Graph,
    pub cyclic: Graph,
}

impl Prepared {
    pub fn new(g: &FiniteGroup) -> Self {
        let nilpotent = g.is_nilpotent();
        let sylow = if nilpotent {
            g.sylow_decomposition()
                .expect("nilpotent group decomposes")
                .factors
                .into_iter()
                .map(|f| SylowGraphs {
                    prime: f.prime,
                    enhanced: enhanced_power_graph(&f.group),
                    power: power_graph(&f.group),
                    cyclic: cyclic_graph(&f.group),
                })
                .collect()
        } else {
            Vec::new()
        };
        Self {
            name: g.name().to_string(),
            order: g.order(),
            enhanced: enhanced_power_graph(g),
            power: power_graph(g),
            cyclic: cyclic_graph(g),
            cyc_size: g.cyc_set().len(),
            spectrum: g.order_spectrum(),
            nilpotent,
            sylow,
        }
    }

    pub fn graph(&self, kind: GraphKind) -> &Graph {
        match kind {
            GraphKind::Enhanced => &self.enhanced,
            GraphKind::Power | GraphKind::DirectedPower => &self.power,
            GraphKind::Cyclic => &self.cyclic,
        }
    }
}

impl SylowGraphs {
    fn graph(&self, kind: GraphKind) -> &Graph {
        match kind {
            GraphKind::Enhanced => &self.enhanced,
            GraphKind::Power | GraphKind::DirectedPower => &self.power,
            GraphKind::Cyclic => &self.cyclic,
        }
    }
}

pub(crate) fn prepare_all(corpus: &Corpus) -> Vec<Prepared> {
    corpus.groups().par_iter().map(Prepared::new).collect()
}

pub(crate) fn iso(a: &Graph, b: &Graph, budget: u64) -> SearchOutcome<IsoCertificate> {
    graphs_isomorphic_with(a, b, IsoOptions::with_budget(budget))
}

/// Three-valued conjunction; `None` means undecided.
pub(crate) fn and(a: Option<bool>, b: Option<bool>) -> Option<bool> {
    match (a, b) {
        (Some(false), _) | (_, Some(false)) => Some(false),
        (Some(true), Some(true)) => Some(true),
        _ => None,
    }
}

/// Record for `lhs ⇔ rhs`.
pub(crate) fn biconditional(
    check: &str,
    claim: &str,
    params: String,
    lhs: Option<bool>,
    rhs: Option<bool>,
    witness: impl FnOnce() -> Value,
) -> CheckRecord {
    match (lhs, rhs) {
        (Some(l), Some(r)) if l == r => CheckRecord::new(check, claim, params, Verdict::Pass),
        (Some(l), Some(r)) => {
            CheckRecord::new(check, claim, params, Verdict::Fail).with_witness(json!({
                "lhs": l,
                "rhs": r,
                "detail": witness(),
            }))
        }
        _ => CheckRecord::new(check, claim, params, Verdict::SkippedBudget)
            .with_witness(json!({ "lhs": lhs, "rhs": rhs })),
    }
}

fn cert_value(out: &SearchOutcome<IsoCertificate>) -> Value {
    match out {
        SearchOutcome::Found(c) => json!(c.mapping),
        _ => Value::Null,
    }
}

/// Equal-order index pairs `(i, j)` with `i <= j`.
fn equal_order_pairs(corpus: &Corpus) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    for n in corpus.orders() {
        let idx = corpus.indices_of_order(n);
        for (a, &i) in idx.iter().enumerate() {
            for &j in &idx[a..] {
                pairs.push((i, j));
            }
        }
    }
    pairs
}

fn pair_params(g: &Prepared, h: &Prepared) -> String {
    format!("G={}, H={}", g.name, h.name)
}

/// For each equal-order pair with a nilpotent member `G`: the graph of `H` is
/// isomorphic to that of `G` iff `H` is nilpotent and the graphs of matching
/// Sylow subgroups are isomorphic. Checked for the enhanced power graph, the
/// power graph and the cyclic graph; the nilpotence of `H` is also checked on
/// its own.
pub fn verify_decomposition_theorem(corpus: &Corpus, budget: u64) -> VerificationReport {
    let prepared = prepare_all(corpus);
    let pairs: Vec<(usize, usize)> = equal_order_pairs(corpus)
        .into_iter()
        .filter_map(
            |(i, j)| match (prepared[i].nilpotent, prepared[j].nilpotent) {
                (true, _) => Some((i, j)),
                (false, true) => Some((j, i)),
                (false, false) => None,
            },
        )
        .collect();
    let records = pairs
        .par_iter()
        .flat_map_iter(|&(i, j)| decomposition_pair(&prepared[i], &prepared[j], i == j, budget))
        .collect();
    VerificationReport::from_records(records)
}

fn decomposition_pair(g: &Prepared, h: &Prepared, same: bool, budget: u64) -> Vec<CheckRecord> {
    let params = pair_params(g, h);
    let mut out = Vec::new();
    let mut enhanced_lhs = None;
    for kind in KINDS {
        let whole = iso(g.graph(kind), h.graph(kind), budget);
        let lhs = whole.verdict();
        if kind == GraphKind::Enhanced {
            enhanced_lhs = lhs;
        }
        let mut sylow = Vec::new();
        let mut rhs = Some(h.nilpotent);
        if h.nilpotent {
            for (gp, hp) in g.sylow.iter().zip(&h.sylow) {
                debug_assert_eq!(gp.prime, hp.prime);
                let v = iso(gp.graph(kind), hp.graph(kind), budget).verdict();
                sylow.push(json!({ "prime": gp.prime, "isomorphic": v }));
                rhs = and(rhs, v);
                if rhs == Some(false) {
                    break;
                }
            }
        }
        let claim = format!(
            "for nilpotent G: {k}(G) ≅ {k}(H) iff H is nilpotent and {k} of matching Sylow subgroups are isomorphic",
            k = kind_symbol(kind)
        );
        let mut rec = biconditional(
            &format!("decomposition.{}", kind.as_str()),
            &claim,
            params.clone(),
            lhs,
            rhs,
            || json!({ "h_nilpotent": h.nilpotent, "certificate": cert_value(&whole), "sylow": sylow }),
        );
        if rec.verdict == Verdict::Pass && lhs == Some(true) && !same {
            rec = rec.with_witness(json!({ "certificate": cert_value(&whole) }));
        }
        out.push(rec);
    }
    let claim = "for nilpotent G: Pe(G) ≅ Pe(H) implies H is nilpotent";
    let verdict = match (enhanced_lhs, h.nilpotent) {
        (_, true) | (Some(false), _) => Verdict::Pass,
        (Some(true), false) => Verdict::Fail,
        (None, false) => Verdict::SkippedBudget,
    };
    let mut rec = CheckRecord::new("decomposition.nilpotence-transfer", claim, params, verdict);
    if verdict == Verdict::Fail {
        rec = rec.with_witness(json!({ "pe_isomorphic": true, "h_nilpotent": false }));
    }
    out.push(rec);
    out
}

pub(crate) fn kind_symbol(kind: GraphKind) -> &'static str {
    match kind {
        GraphKind::Enhanced => "Pe",
        GraphKind::Power => "Pow",
        GraphKind::DirectedPower => "dPow",
        GraphKind::Cyclic => "C",
    }
}

/// For each equal-order pair: power graphs are isomorphic iff enhanced power
/// graphs are; enhanced power graphs are isomorphic iff the cyclic graphs are
/// and the orders agree, iff the cyclic graphs are and the dominating cores
/// have equal size; isomorphic enhanced power graphs force equal order spectra.
pub fn verify_equivalences(corpus: &Corpus, budget: u64) -> VerificationReport {
    let prepared = prepare_all(corpus);
    let records = equal_order_pairs(corpus)
        .par_iter()
        .flat_map_iter(|&(i, j)| equivalence_pair(&prepared[i], &prepared[j], budget))
        .collect();
    VerificationReport::from_records(records)
}

fn equivalence_pair(g: &Prepared, h: &Prepared, budget: u64) -> Vec<CheckRecord> {
    let params = pair_params(g, h);
    let pe = iso(&g.enhanced, &h.enhanced, budget);
    let pow = iso(&g.power, &h.power, budget);
    let c = iso(&g.cyclic, &h.cyclic, budget);
    let (pe_v, pow_v, c_v) = (pe.verdict(), pow.verdict(), c.verdict());
    let detail = || {
        json!({
            "pe_certificate": cert_value(&pe),
            "pow_certificate": cert_value(&pow),
            "c_certificate": cert_value(&c),
            "cyc_sizes": [g.cyc_size, h.cyc_size],
        })
    };
    let mut out = vec![
        biconditional(
            "equivalence.power-enhanced",
            "Pow(G) ≅ Pow(H) iff Pe(G) ≅ Pe(H)",
            params.clone(),
            pow_v,
            pe_v,
            detail,
        ),
        biconditional(
            "equivalence.cyclic-order",
            "Pe(G) ≅ Pe(H) iff C(G) ≅ C(H) and |G| = |H|",
            params.clone(),
            pe_v,
            and(c_v, Some(g.order == h.order)),
            detail,
        ),
        biconditional(
            "equivalence.cyclic-core",
            "Pe(G) ≅ Pe(H) iff C(G) ≅ C(H) and |Cyc(G)| = |Cyc(H)|",
            params.clone(),
            pe_v,
            and(c_v, Some(g.cyc_size == h.cyc_size)),
            detail,
        ),
    ];
    let claim = "Pe(G) ≅ Pe(H) implies equal order spectra";
    let rec = match pe_v {
        None => CheckRecord::new(
            "equivalence.spectrum",
            claim,
            params,
            Verdict::SkippedBudget,
        ),
        Some(true) if g.spectrum != h.spectrum => {
            CheckRecord::new("equivalence.spectrum", claim, params, Verdict::Fail).with_witness(
                json!({
                    "g_spectrum": g.spectrum.to_string(),
                    "h_spectrum": h.spectrum.to_string(),
                    "certificate": cert_value(&pe),
                }),
            )
        }
        Some(_) => CheckRecord::new("equivalence.spectrum", claim, params, Verdict::Pass),
    };
    out.push(rec);
    out
}
