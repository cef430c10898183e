mod common;

use common::*;
use proptest::prelude::*;
use spl_core::combinat::{is_perfect, is_perfect_by_holes, is_perfect_by_subsets, Graph};

#[test]
fn named_graphs() {
    for n in 3..9 {
        let c = Graph::cycle(n);
        assert_eq!(c.alpha(), n / 2);
        assert_eq!(c.chromatic_number(), if n % 2 == 1 { 3 } else { 2 });
        assert_eq!(is_perfect(&c).unwrap(), n % 2 == 0 || n == 3, "C{n}");
        assert_eq!(is_perfect(&c.complement()).unwrap(), n % 2 == 0 || n == 3, "complement of C{n}");
    }
    assert_eq!(Graph::complete_bipartite(3, 4).chromatic_number(), 2);
    assert_eq!(Graph::complete(5).omega(), 5);
    assert!(Graph::path(6).is_bipartite());
}

#[test]
fn perfection_agrees_on_all_graphs_up_to_six() {
    for n in 1..=6 {
        for code in 0..1u64 << (n * (n - 1) / 2) {
            let g = Graph::from_edge_code(n, code);
            let a = is_perfect_by_subsets(&g).unwrap();
            assert_eq!(a, is_perfect_by_holes(&g), "n={n} code={code}");
            if n <= 5 {
                assert_eq!(a, perfect(&g), "n={n} code={code}");
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn alpha_and_omega(g in graph(9)) {
        let e = graph_edges(&g);
        prop_assert_eq!(g.alpha() as u32, alpha(g.n(), &e));
        prop_assert_eq!(g.alpha(), g.complement().omega());
        prop_assert_eq!(g.omega() as u32, omega(&g));
        let inv = g.invariants();
        prop_assert_eq!(inv.alpha + inv.tau, g.n());
    }

    #[test]
    fn chromatic_number_by_covers(g in graph(8)) {
        let e = graph_edges(&g);
        prop_assert_eq!(g.chromatic_number() as u32, chi(g.n(), &e));
        // χ of the complement is the least number of cliques covering V
        let cliques = cover_numbers(g.n(), |s| is_clique(&g, s))[full(g.n()) as usize];
        prop_assert_eq!(g.complement().chromatic_number() as u32, cliques);
    }

    #[test]
    fn hypergraph_invariants(h in hypergraph(7)) {
        prop_assert_eq!(h.alpha() as u32, alpha(h.n(), h.edges()));
        prop_assert_eq!(h.alpha() + h.tau(), h.n());
        prop_assert_eq!(h.chromatic_number().unwrap() as u32, chi(h.n(), h.edges()));
        let covers = min_covers(h.n(), h.edges());
        prop_assert_eq!(h.tau() as u32, covers.iter().map(|c| c.count_ones()).min().unwrap());
    }

    #[test]
    fn perfection_algorithms_agree(g in graph(9)) {
        let a = is_perfect_by_subsets(&g).unwrap();
        prop_assert_eq!(a, is_perfect_by_holes(&g));
        prop_assert_eq!(a, is_perfect(&g).unwrap());
        prop_assert_eq!(a, is_perfect(&g.complement()).unwrap());
    }

    #[test]
    fn perfection_matches_definition(g in graph(7)) {
        prop_assert_eq!(is_perfect(&g).unwrap(), perfect(&g));
    }

    #[test]
    fn replication_keeps_perfection(g in graph(7), v in 0usize..7, k in 1u32..4) {
        let v = v % g.n();
        let before = is_perfect(&g).unwrap();
        prop_assert_eq!(is_perfect(&g.replicate(v, k)).unwrap(), before);
    }

    #[test]
    fn zero_one_blowup_is_induced(g in graph(8), mask in any::<u64>()) {
        let mask = mask & full(g.n());
        let a: Vec<u32> = (0..g.n()).map(|i| (mask >> i & 1) as u32).collect();
        let b = g.blowup(&a).unwrap();
        let (sub, map) = g.induced(mask);
        prop_assert_eq!(b.labels.iter().map(|l| l.0).collect::<Vec<_>>(), map);
        prop_assert_eq!(b.graph, sub);
    }

    #[test]
    fn blowup_edges(g in graph(5), a in exps(5, 3)) {
        let a = &a[..g.n()];
        let b = g.blowup(a).unwrap();
        prop_assert_eq!(b.graph.n() as u32, a.iter().sum::<u32>());
        for (x, &(i, _)) in b.labels.iter().enumerate() {
            for (y, &(j, _)) in b.labels.iter().enumerate() {
                prop_assert_eq!(b.graph.has_edge(x, y), x != y && g.has_edge(i, j));
            }
        }
        // an independent set of the blowup projects to one of g
        let weight = |s: u64| (0..g.n()).filter(|&i| s >> i & 1 == 1).map(|i| a[i]).sum::<u32>();
        let best = subsets(g.n()).filter(|&s| g.is_independent(s)).map(weight).max().unwrap();
        prop_assert_eq!(b.graph.alpha() as u32, best);
    }
}
