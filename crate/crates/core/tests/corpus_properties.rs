mod common;

use common::{
    brute_force_isomorphic, corpus, cyclic_pair_by_closure, equal_order_pairs,
    nilpotent_by_sylow_growth,
};
use pegraph::graph::join;
use pegraph::group::groups_isomorphic;
use pegraph::{
    canonical_certificate, cyclic_graph, directed_power_graph, dominating_vertices,
    enhanced_power_graph, graphs_isomorphic, power_graph, Graph, GraphKind, SearchOutcome,
};

#[test]
fn lagrange_on_the_corpus() {
    for g in corpus().groups() {
        for x in 0..g.order() {
            assert_eq!(g.order() % g.element_order(x).unwrap(), 0, "{}", g.name());
        }
    }
}

#[test]
fn cyclic_pairs_agree_with_closures() {
    for g in corpus().groups() {
        for x in 0..g.order() {
            for y in x..g.order() {
                assert_eq!(
                    g.is_cyclic_pair(x, y).unwrap(),
                    cyclic_pair_by_closure(g, x, y),
                    "{} ({x}, {y})",
                    g.name()
                );
            }
        }
    }
}

#[test]
fn nilpotence_agrees_with_sylow_uniqueness() {
    for (i, g) in corpus().groups().iter().enumerate() {
        assert_eq!(
            g.is_nilpotent(),
            nilpotent_by_sylow_growth(g, i as u64),
            "{}",
            g.name()
        );
    }
}

#[test]
fn closure_is_monotone_and_idempotent() {
    for g in corpus().groups().iter().filter(|g| g.order() <= 48) {
        let n = g.order();
        for x in 0..n {
            let seed = [x, (x * 7 + 3) % n];
            let c = g.subgroup_closure(&seed).unwrap();
            assert!(seed.iter().all(|s| c.binary_search(s).is_ok()));
            assert_eq!(g.subgroup_closure(&c).unwrap(), c);
            assert_eq!(n % c.len(), 0);
        }
    }
}

#[test]
fn sylow_factors_have_prime_power_parts() {
    for g in corpus().groups().iter().filter(|g| g.is_nilpotent()) {
        let d = g.sylow_decomposition().unwrap();
        let product: usize = d.factors.iter().map(|f| f.group.order()).product();
        assert_eq!(product, g.order(), "{}", g.name());
        for f in &d.factors {
            assert_eq!(f.group.order(), pegraph::arith::p_part(g.order(), f.prime));
            assert_eq!(f.elements, g.p_elements(f.prime).unwrap());
        }
    }
    for g in corpus().groups().iter().filter(|g| !g.is_nilpotent()) {
        assert!(g.sylow_decomposition().is_err());
    }
}

#[test]
fn graph_structure_on_the_corpus() {
    for g in corpus().groups() {
        let pe = enhanced_power_graph(g);
        let pow = power_graph(g);
        assert!(pow.is_edge_subgraph_of(&pe), "{}", g.name());
        assert_eq!(pe.is_complete(), g.is_cyclic(), "{}", g.name());
        assert_eq!(
            pe.is_complete(),
            (0..g.order()).any(|x| g.element_order(x).unwrap() == g.order())
        );
        let dominating: Vec<usize> = dominating_vertices(&pe)
            .iter()
            .map(|&v| pe.label(v))
            .collect();
        assert_eq!(dominating, g.cyc_set(), "{}", g.name());
        let d = directed_power_graph(g).underlying();
        assert!(d.edges().eq(pow.edges()), "{}", g.name());
        for (x, y) in pe.edges() {
            assert!(g.is_cyclic_pair(x, y).unwrap());
        }
    }
}

#[test]
fn join_reconstructs_the_enhanced_power_graph() {
    for g in corpus().groups() {
        let rebuilt = join(&cyclic_graph(g), &Graph::complete(g.cyc_set().len()));
        let pe = enhanced_power_graph(g);
        let cert = graphs_isomorphic(&rebuilt, &pe).found();
        assert!(
            cert.is_some_and(|c| c.verify(&rebuilt, &pe)),
            "{}",
            g.name()
        );
    }
}

#[test]
fn corpus_members_are_valid_and_pairwise_distinct() {
    let c = corpus();
    for g in c.groups() {
        g.validate_fully().unwrap();
        assert!(g.order() <= c.max_order());
    }
    for (i, j) in equal_order_pairs(c, 72) {
        if i == j {
            continue;
        }
        let (g, h) = (&c.groups()[i], &c.groups()[j]);
        assert_eq!(
            groups_isomorphic(g, h),
            SearchOutcome::Absent,
            "{} vs {}",
            g.name(),
            h.name()
        );
    }
}

#[test]
fn graph_isomorphism_agrees_with_brute_force() {
    let c = corpus();
    for (i, j) in equal_order_pairs(c, 48) {
        let (g, h) = (&c.groups()[i], &c.groups()[j]);
        for kind in [GraphKind::Enhanced, GraphKind::Power, GraphKind::Cyclic] {
            let (a, b) = (kind.build(g), kind.build(h));
            let fast = graphs_isomorphic(&a, &b);
            assert!(!fast.is_exhausted());
            assert_eq!(
                fast.is_found(),
                brute_force_isomorphic(&a, &b),
                "{kind}: {} vs {}",
                g.name(),
                h.name()
            );
        }
    }
}

#[test]
fn canonical_forms_agree_with_isomorphism() {
    let c = corpus();
    for (i, j) in equal_order_pairs(c, 48) {
        let (g, h) = (&c.groups()[i], &c.groups()[j]);
        for kind in [GraphKind::Enhanced, GraphKind::Power, GraphKind::Cyclic] {
            let (a, b) = (kind.build(g), kind.build(h));
            let same = canonical_certificate(&a).unwrap().as_bytes()
                == canonical_certificate(&b).unwrap().as_bytes();
            assert_eq!(
                same,
                graphs_isomorphic(&a, &b).is_found(),
                "{kind}: {} vs {}",
                g.name(),
                h.name()
            );
        }
    }
}

#[test]
fn certificates_preserve_spectra() {
    let c = corpus();
    let mut found = 0;
    for (i, j) in equal_order_pairs(c, 72) {
        let (g, h) = (&c.groups()[i], &c.groups()[j]);
        let (a, b) = (enhanced_power_graph(g), enhanced_power_graph(h));
        if let SearchOutcome::Found(cert) = graphs_isomorphic(&a, &b) {
            assert!(cert.verify(&a, &b));
            assert_eq!(
                g.order_spectrum(),
                h.order_spectrum(),
                "{} vs {}",
                g.name(),
                h.name()
            );
            found += 1;
        }
    }
    assert!(found > c.len());
}

#[test]
fn large_constructors_satisfy_the_axioms() {
    for expr in [
        "D512",
        "Q512",
        "Heis7",
        "S5",
        "Z512",
        "Q8 x Z64",
        "D6 x Z3 x Z3 x Z3 x Z3",
        "S4 x Z2 x Z2 x Z2 x Z2",
        "Heis5 x Z4",
    ] {
        let g = pegraph::parse_group_expr(expr).unwrap().build().unwrap();
        assert!(g.order() <= 512);
        g.validate_fully().unwrap_or_else(|e| panic!("{expr}: {e}"));
        for x in 0..g.order() {
            assert_eq!(g.order() % g.element_order(x).unwrap(), 0);
        }
    }
}
