//! Block shapes of the enhanced power graphs of a few product families.

use serde_json::json;

use super::pairs::iso;
use super::report::{CheckRecord, Verdict, VerificationReport};
use crate::arith;
use crate::error::{Error, Result};
use crate::expr::GroupExpr;
use crate::graph::{block_signature, enhanced_power_graph, BlockSignature};
use crate::group::{groups_isomorphic_with, FiniteGroup};
use crate::outcome::SearchOutcome;

use super::corpus::MAX_CORPUS_ORDER;

/// Instances for the shape checks. `Z3 × Z3 × Z3` against `Heis3` is always included.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FigureParams {
    /// `n` for `Q8 × Zn` (odd).
    pub quaternion: Vec<usize>,
    /// `(m, n)` for `(Z2)^m × Zn` (`n` odd).
    pub elementary: Vec<(usize, usize)>,
    /// `(p, n)` for `Zp × Zp × Zn` (`p` prime, coprime to `n`).
    pub zp_zp: Vec<(usize, usize)>,
}

impl Default for FigureParams {
    fn default() -> Self {
        Self {
            quaternion: vec![1, 3, 5],
            elementary: vec![(2, 1), (2, 3), (3, 3)],
            zp_zp: vec![(3, 1), (3, 2), (5, 1), (5, 2)],
        }
    }
}

impl FigureParams {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidParameter(msg));
        for &n in &self.quaternion {
            if n % 2 == 0 || 8 * n > MAX_CORPUS_ORDER {
                return bad(format!(
                    "Q8 x Z{n}: n must be odd with 8n <= {MAX_CORPUS_ORDER}"
                ));
            }
        }
        for &(m, n) in &self.elementary {
            if m == 0 || m > 9 || n % 2 == 0 || (n << m) > MAX_CORPUS_ORDER {
                return bad(format!(
                    "(Z2)^{m} x Z{n}: need m >= 1, n odd and 2^m n <= {MAX_CORPUS_ORDER}"
                ));
            }
        }
        for &(p, n) in &self.zp_zp {
            if !arith::is_prime(p)
                || n == 0
                || arith::gcd(p, n) != 1
                || p * p * n > MAX_CORPUS_ORDER
            {
                return bad(format!(
                    "Z{p} x Z{p} x Z{n}: need p prime, gcd(p, n) = 1 and p^2 n <= {MAX_CORPUS_ORDER}"
                ));
            }
        }
        Ok(())
    }
}

fn build(text: &str) -> Result<FiniteGroup> {
    text.parse::<GroupExpr>()?.build()
}

fn with_n(base: &str, n: usize) -> String {
    if n == 1 {
        base.to_string()
    } else {
        format!("{base} x Z{n}")
    }
}

fn shape_record(
    check: &str,
    claim: &str,
    params: String,
    g: &FiniteGroup,
    expected: &BlockSignature,
) -> CheckRecord {
    let actual = block_signature(&enhanced_power_graph(g));
    let actual_text = actual
        .as_ref()
        .map_or_else(|| "no block structure".to_string(), |s| s.to_string());
    let verdict = if actual.as_ref() == Some(expected) {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    CheckRecord::new(check, claim, params, verdict).with_witness(json!({
        "expected": expected.to_string(),
        "actual": actual_text,
    }))
}

pub fn verify_figures(params: &FigureParams, budget: u64) -> Result<VerificationReport> {
    params.validate()?;
    let mut records = Vec::new();

    let z3 = build("Z3 x Z3 x Z3")?;
    let heis = build("Heis3")?;
    let thirteen = BlockSignature::uniform(1, 13, 2);
    for g in [&z3, &heis] {
        records.push(shape_record(
            "figure.order-27-shape",
            "Pe is one dominating vertex joined to 13 disjoint K2",
            format!("G={}", g.name()),
            g,
            &thirteen,
        ));
    }
    let graphs = iso(
        &enhanced_power_graph(&z3),
        &enhanced_power_graph(&heis),
        budget,
    );
    let groups = groups_isomorphic_with(&z3, &heis, budget);
    let verdict = match (graphs.verdict(), groups.verdict()) {
        (Some(true), Some(false)) => Verdict::Pass,
        (None, _) | (_, None) => Verdict::SkippedBudget,
        _ => Verdict::Fail,
    };
    let certificate = match &graphs {
        SearchOutcome::Found(c) => json!(c.mapping),
        _ => serde_json::Value::Null,
    };
    records.push(
        CheckRecord::new(
            "figure.order-27-counterexample",
            "Pe(G) ≅ Pe(H) while G and H are not isomorphic",
            format!("G={}, H={}", z3.name(), heis.name()),
            verdict,
        )
        .with_witness(json!({
            "graphs_isomorphic": graphs.verdict(),
            "groups_isomorphic": groups.verdict(),
            "certificate": certificate,
        })),
    );

    for &n in &params.quaternion {
        let g = build(&with_n("Q8", n))?;
        records.push(shape_record(
            "figure.q8-zn",
            "Pe(Q8 x Zn) is 2n dominating vertices joined to 3 disjoint K_2n",
            format!("n={n}"),
            &g,
            &BlockSignature::uniform(2 * n, 3, 2 * n),
        ));
    }

    for &(m, n) in &params.elementary {
        let g = build(&with_n(&vec!["Z2"; m].join(" x "), n))?;
        records.push(shape_record(
            "figure.e2m-zn",
            "Pe((Z2)^m x Zn) is n dominating vertices joined to 2^m - 1 disjoint K_n",
            format!("m={m}, n={n}"),
            &g,
            &BlockSignature::uniform(n, (1 << m) - 1, n),
        ));
    }

    for &(p, n) in &params.zp_zp {
        let g = build(&with_n(&format!("Z{p} x Z{p}"), n))?;
        let mut rec = shape_record(
            "figure.zp-zp-zn",
            "Pe(Zp x Zp x Zn) is n dominating vertices joined to p + 1 disjoint K_(p-1)n",
            format!("p={p}, n={n}"),
            &g,
            &BlockSignature::uniform(n, p + 1, (p - 1) * n),
        );
        if p != 3 {
            rec = rec.flag(format!(
                "block size (p-1)n = {} differs from 2n = {}; the two agree only at p = 3",
                (p - 1) * n,
                2 * n
            ));
        }
        records.push(rec);
    }

    Ok(VerificationReport::from_records(records))
}
