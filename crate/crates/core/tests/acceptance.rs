//! Acceptance criteria, one PASS/FAIL line each. Runs without the libtest
//! harness so the lines always print; exits non-zero if any criterion fails.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{cyclic_pair_by_closure, equal_order_pairs};
use pegraph::graph::join;
use pegraph::group::{groups_isomorphic, groups_isomorphic_with};
use pegraph::verify::{
    build_corpus, verify_decomposition_theorem, verify_equivalences, verify_figures,
    verify_uniqueness, Corpus, FamilyParams, FigureParams, VerificationReport,
};
use pegraph::{
    block_signature, canonical_certificate, cyclic_graph, dominating_vertices,
    enhanced_power_graph, graphs_isomorphic, parse_group_expr, power_graph, BlockSignature,
    FiniteGroup, Graph, GraphKind, SearchOutcome, DEFAULT_NODE_BUDGET,
};

struct Outcome {
    ok: bool,
    detail: String,
}

fn pass(detail: impl Into<String>) -> Outcome {
    Outcome {
        ok: true,
        detail: detail.into(),
    }
}

fn fail(detail: impl Into<String>) -> Outcome {
    Outcome {
        ok: false,
        detail: detail.into(),
    }
}

fn build(expr: &str) -> FiniteGroup {
    parse_group_expr(expr).unwrap().build().unwrap()
}

fn within(elapsed: Duration, limit: Duration) -> (bool, String) {
    (
        elapsed < limit,
        format!("{:.3}s < {}s", elapsed.as_secs_f64(), limit.as_secs_f64()),
    )
}

fn signature_of(expr: &str) -> Option<BlockSignature> {
    block_signature(&enhanced_power_graph(&build(expr)))
}

fn with_n(base: &str, n: usize) -> String {
    if n == 1 {
        base.to_string()
    } else {
        format!("{base} x Z{n}")
    }
}

/// Checks each instance against its expected signature, each under `limit`.
fn shape_instances(instances: Vec<(String, BlockSignature)>, limit: Duration) -> Outcome {
    let mut notes = Vec::new();
    let mut ok = true;
    for (expr, expected) in instances {
        let start = Instant::now();
        let actual = signature_of(&expr);
        let (fast, timing) = within(start.elapsed(), limit);
        let right = actual.as_ref() == Some(&expected);
        ok &= fast && right;
        let shown = actual.map_or("none".to_string(), |s| s.to_string());
        notes.push(format!("{expr}: {shown} ({timing})"));
        if !right {
            notes.push(format!("expected {expected}"));
        }
    }
    Outcome {
        ok,
        detail: notes.join("; "),
    }
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let z3 = build("Z3 x Z3 x Z3");
    let heis = build("Heis3");
    let (a, b) = (enhanced_power_graph(&z3), enhanced_power_graph(&heis));
    let expected = Some(BlockSignature::uniform(1, 13, 2));
    let shapes = block_signature(&a) == expected && block_signature(&b) == expected;
    let graphs = graphs_isomorphic(&a, &b)
        .found()
        .is_some_and(|c| c.verify(&a, &b));
    let groups = groups_isomorphic(&z3, &heis) == SearchOutcome::Absent;
    let (fast, timing) = within(start.elapsed(), Duration::from_secs(1));
    let detail = format!(
        "signature (1, 13x2) both: {shapes}; Pe iso: {graphs}; groups absent: {groups}; {timing}"
    );
    if shapes && graphs && groups && fast {
        pass(detail)
    } else {
        fail(detail)
    }
}

fn criterion_2() -> Outcome {
    let instances = [1, 3, 5]
        .into_iter()
        .map(|n| (with_n("Q8", n), BlockSignature::uniform(2 * n, 3, 2 * n)))
        .collect();
    shape_instances(instances, Duration::from_secs(1))
}

fn criterion_3() -> Outcome {
    let instances = [(2, 1), (2, 3), (3, 3)]
        .into_iter()
        .map(|(m, n): (usize, usize)| {
            let base = vec!["Z2"; m].join(" x ");
            (
                with_n(&base, n),
                BlockSignature::uniform(n, (1 << m) - 1, n),
            )
        })
        .collect();
    shape_instances(instances, Duration::from_secs(1))
}

fn criterion_4() -> Outcome {
    let params = [(3, 1), (3, 2), (5, 1), (5, 2)];
    let instances = params
        .into_iter()
        .map(|(p, n): (usize, usize)| {
            (
                with_n(&format!("Z{p} x Z{p}"), n),
                BlockSignature::uniform(n, p + 1, (p - 1) * n),
            )
        })
        .collect();
    let shapes = shape_instances(instances, Duration::from_secs(2));
    let report = verify_figures(
        &FigureParams {
            quaternion: vec![],
            elementary: vec![],
            zp_zp: params.to_vec(),
        },
        DEFAULT_NODE_BUDGET,
    )
    .unwrap();
    let flagged: Vec<&str> = report
        .flagged()
        .filter(|r| r.check == "figure.zp-zp-zn")
        .map(|r| r.params.as_str())
        .collect();
    let flags_right = flagged == ["p=5, n=1", "p=5, n=2"] && report.is_clean();
    let detail = format!("{}; caption flag raised for {flagged:?}", shapes.detail);
    Outcome {
        ok: shapes.ok && flags_right,
        detail,
    }
}

fn clean_summary(report: &VerificationReport, elapsed: Duration, limit: Duration) -> Outcome {
    let t = report.tally();
    let (fast, timing) = within(elapsed, limit);
    let mut detail = format!(
        "{} records, {} fail, {} skipped-budget; {timing}",
        report.records.len(),
        t.fail,
        t.skipped_budget
    );
    for r in report.failures().take(3) {
        detail.push_str(&format!("; FAIL {} [{}]", r.check, r.params));
    }
    if t.fail == 0 && t.skipped_budget == 0 && fast && !report.records.is_empty() {
        pass(detail)
    } else {
        fail(detail)
    }
}

fn criterion_5(corpus: &Corpus, corpus_time: Duration) -> Outcome {
    let start = Instant::now();
    let report = verify_decomposition_theorem(corpus, DEFAULT_NODE_BUDGET);
    clean_summary(
        &report,
        corpus_time + start.elapsed(),
        Duration::from_secs(300),
    )
}

fn criterion_6(corpus: &Corpus) -> Outcome {
    let start = Instant::now();
    let corpus = corpus.restricted(64);
    let report = verify_equivalences(&corpus, DEFAULT_NODE_BUDGET);
    clean_summary(&report, start.elapsed(), Duration::from_secs(300))
}

/// Corpus members of the target's order whose Pe is isomorphic to the target's,
/// compared against the members isomorphic (as groups) to an accepted group.
fn uniqueness_instance(params: &FamilyParams, corpus: &Corpus) -> Result<String, String> {
    let report =
        verify_uniqueness(params, corpus, DEFAULT_NODE_BUDGET).map_err(|e| e.to_string())?;
    if !report.is_clean() {
        return Err(format!("{params}: report not clean"));
    }
    let accepted: Vec<FiniteGroup> = params
        .accepted()
        .iter()
        .map(|e| e.build().unwrap())
        .collect();
    let target = enhanced_power_graph(&accepted[0]);
    let mut by_graph = Vec::new();
    let mut by_group = Vec::new();
    for h in corpus.of_order(accepted[0].order()) {
        match graphs_isomorphic(&enhanced_power_graph(h), &target) {
            SearchOutcome::Found(_) => by_graph.push(h.name().to_string()),
            SearchOutcome::Absent => {}
            SearchOutcome::BudgetExhausted => {
                return Err(format!("{params}: budget exhausted on {}", h.name()))
            }
        }
        if accepted
            .iter()
            .any(|a| groups_isomorphic_with(h, a, DEFAULT_NODE_BUDGET).is_found())
        {
            by_group.push(h.name().to_string());
        }
    }
    if by_graph == by_group && by_graph.len() == accepted.len() {
        Ok(format!(
            "{} {params}: {{{}}}",
            params.family(),
            by_graph.join(", ")
        ))
    } else {
        Err(format!(
            "{} {params}: Pe matches {by_graph:?}, accepted {by_group:?}",
            params.family()
        ))
    }
}

fn criterion_7(corpus: &Corpus) -> Outcome {
    let mut instances = vec![
        FamilyParams::Q8xZn { n: 1 },
        FamilyParams::Q8xZn { n: 3 },
        FamilyParams::E2mxZn { m: 2, n: 3 },
        FamilyParams::E2mxZn { m: 3, n: 1 },
        FamilyParams::ZpZpxZn { p: 3, n: 2 },
        FamilyParams::ZpZpxZn { p: 5, n: 2 },
        FamilyParams::Zp3xZn { p: 3, n: 1 },
        FamilyParams::Sn { n: 3 },
        FamilyParams::Sn { n: 4 },
    ];
    instances.extend((6..=16).step_by(2).map(|order| FamilyParams::D2n { order }));
    instances.extend((8..=16).step_by(4).map(|order| FamilyParams::Q4n { order }));
    let mut ok = true;
    let mut notes = Vec::new();
    for params in &instances {
        match uniqueness_instance(params, corpus) {
            Ok(note) => notes.push(note),
            Err(note) => {
                ok = false;
                notes.push(format!("MISMATCH {note}"));
            }
        }
    }
    let zp3 = notes
        .iter()
        .find(|n| n.starts_with("Zp3xZn"))
        .cloned()
        .unwrap_or_default();
    let detail = if ok {
        format!("{} instances exact; {zp3}", instances.len())
    } else {
        notes
            .into_iter()
            .filter(|n| n.starts_with("MISMATCH"))
            .collect::<Vec<_>>()
            .join("; ")
    };
    Outcome { ok, detail }
}

fn criterion_8(corpus: &Corpus) -> Outcome {
    let small: Vec<&FiniteGroup> = corpus.groups().iter().filter(|g| g.order() <= 48).collect();
    let mut violations = Vec::new();
    let mut pairs_checked = 0usize;
    for g in &small {
        let n = g.order();
        for x in 0..n {
            for y in x..n {
                pairs_checked += 1;
                if g.is_cyclic_pair(x, y).unwrap() != cyclic_pair_by_closure(g, x, y) {
                    violations.push(format!("cyclic pair {} ({x},{y})", g.name()));
                }
            }
        }
    }
    for g in corpus.groups() {
        let pe = enhanced_power_graph(g);
        if !power_graph(g).is_edge_subgraph_of(&pe) {
            violations.push(format!("Pow not in Pe: {}", g.name()));
        }
        let dom: Vec<usize> = dominating_vertices(&pe)
            .iter()
            .map(|&v| pe.label(v))
            .collect();
        if dom != g.cyc_set() {
            violations.push(format!("Cyc != dominating: {}", g.name()));
        }
        let rebuilt = join(&cyclic_graph(g), &Graph::complete(g.cyc_set().len()));
        if !graphs_isomorphic(&rebuilt, &pe)
            .found()
            .is_some_and(|c| c.verify(&rebuilt, &pe))
        {
            violations.push(format!("join reconstruction: {}", g.name()));
        }
    }
    let mut certificates = 0usize;
    for (i, j) in equal_order_pairs(corpus, corpus.max_order()) {
        let (g, h) = (&corpus.groups()[i], &corpus.groups()[j]);
        let (a, b) = (enhanced_power_graph(g), enhanced_power_graph(h));
        if let SearchOutcome::Found(cert) = graphs_isomorphic(&a, &b) {
            certificates += 1;
            if !cert.verify(&a, &b) || g.order_spectrum() != h.order_spectrum() {
                violations.push(format!(
                    "spectrum under certificate: {} / {}",
                    g.name(),
                    h.name()
                ));
            }
        }
    }
    let mut canon_pairs = 0usize;
    for (i, j) in equal_order_pairs(corpus, 48) {
        let (g, h) = (&corpus.groups()[i], &corpus.groups()[j]);
        for kind in [GraphKind::Enhanced, GraphKind::Power, GraphKind::Cyclic] {
            let (a, b) = (kind.build(g), kind.build(h));
            canon_pairs += 1;
            let same = canonical_certificate(&a).unwrap().as_bytes()
                == canonical_certificate(&b).unwrap().as_bytes();
            if same != graphs_isomorphic(&a, &b).is_found() {
                violations.push(format!(
                    "canonical form {kind}: {} / {}",
                    g.name(),
                    h.name()
                ));
            }
        }
    }
    let detail = format!(
        "{pairs_checked} element pairs, {} groups, {certificates} certificates, {canon_pairs} canonical pairs; {} violations",
        corpus.len(),
        violations.len()
    );
    if violations.is_empty() {
        pass(detail)
    } else {
        fail(format!(
            "{detail}: {}",
            violations[..violations.len().min(3)].join("; ")
        ))
    }
}

fn criterion_9() -> Outcome {
    let start = Instant::now();
    let g = build("Q8 x Z125");
    let pe = enhanced_power_graph(&g);
    let (fast, timing) = within(start.elapsed(), Duration::from_secs(5));
    let shape = block_signature(&pe) == Some(BlockSignature::uniform(250, 3, 250));
    let detail = format!(
        "|G| = {}, {} edges, {timing}",
        pe.vertex_count(),
        pe.edge_count()
    );
    if fast && shape && pe.vertex_count() == 1000 {
        pass(detail)
    } else {
        fail(detail)
    }
}

fn main() -> ExitCode {
    let start = Instant::now();
    let corpus = build_corpus(72).expect("default corpus");
    let corpus_time = start.elapsed();
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome + '_>)> = vec![
        ("order-27 counterexample", Box::new(criterion_1)),
        ("Q8 x Zn block shape", Box::new(criterion_2)),
        ("(Z2)^m x Zn block shape", Box::new(criterion_3)),
        ("Zp x Zp x Zn block shape", Box::new(criterion_4)),
        (
            "decomposition theorem (max order 72)",
            Box::new(|| criterion_5(&corpus, corpus_time)),
        ),
        (
            "equivalence suite (max order 64)",
            Box::new(|| criterion_6(&corpus)),
        ),
        ("uniqueness families", Box::new(|| criterion_7(&corpus))),
        (
            "property suites",
            Box::new(|| criterion_8(&corpus.restricted(48))),
        ),
        ("Pe of an order-1000 group", Box::new(criterion_9)),
    ];
    println!(
        "corpus: {} groups of order <= 72 ({:.3}s)",
        corpus.len(),
        corpus_time.as_secs_f64()
    );
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let outcome = run();
        let status = if outcome.ok { "PASS" } else { "FAIL" };
        if !outcome.ok {
            failed += 1;
        }
        println!("{status} {} {name}: {}", i + 1, outcome.detail);
    }
    println!(
        "acceptance: {} of {} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
