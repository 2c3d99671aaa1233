mod common;

use common::{arb_connected, arb_graph, floyd, oracle_all_bases, oracle_edim, separates};
use edim::distance::{all_pairs_distances, bfs, vertex_edge_distance, UNREACHABLE};
use edim::generate::connected_graphs;
use edim::solver::{
    edim_exact, edim_exact_with, edim_greedy_upper, enumerate_all_minimum_bases,
    is_edge_metric_generator, Method, SolverOptions,
};
use edim::Graph;
use proptest::prelude::*;

fn is_generator(g: &Graph, s: &[usize]) -> bool {
    is_edge_metric_generator(g, s).unwrap().is_generator()
}

#[test]
fn matches_oracle_on_all_connected_graphs_up_to_six() {
    for n in 1..=6 {
        for g in connected_graphs(n) {
            let r = edim_exact(&g);
            assert_eq!(r.value, oracle_edim(&g), "{g:?}");
            assert_eq!(r.method, Method::Exact);
        }
    }
}

#[test]
fn basis_enumeration_matches_oracle() {
    for n in 2..=6 {
        for g in connected_graphs(n) {
            let ours = enumerate_all_minimum_bases(&g, usize::MAX);
            assert!(!ours.cap_hit);
            assert_eq!(ours.bases, oracle_all_bases(&g), "{g:?}");
            assert_eq!(
                edim_exact(&g).basis,
                ours.bases[0],
                "lex-smallest basis for {g:?}"
            );
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn distances_match_floyd(g in arb_graph(1, 10)) {
        let d = all_pairs_distances(&g);
        let f = floyd(&g);
        for (a, row) in f.iter().enumerate() {
            prop_assert_eq!(&bfs(&g, a), row);
            for b in 0..g.n() {
                prop_assert_eq!(d.get(a, b), d.get(b, a));
            }
        }
    }

    #[test]
    fn vertex_edge_distance_properties(g in arb_graph(2, 9)) {
        let d = all_pairs_distances(&g);
        let comps = g.components();
        let comp_of = |v: usize| comps.iter().position(|c| c.contains(&v)).unwrap();
        for &e in g.edges() {
            for w in 0..g.n() {
                let x = vertex_edge_distance(&d, e, w);
                prop_assert_eq!(x == 0, e.has_endpoint(w));
                prop_assert_eq!(x == UNREACHABLE, comp_of(w) != comp_of(e.u));
            }
        }
    }

    #[test]
    fn exact_matches_oracle(g in arb_graph(1, 7)) {
        prop_assert_eq!(edim_exact(&g).value, oracle_edim(&g));
    }

    #[test]
    fn results_are_generators_and_ordered(g in arb_graph(1, 9)) {
        let exact = edim_exact(&g);
        let greedy = edim_greedy_upper(&g);
        prop_assert!(greedy.value >= exact.value);
        if g.m() > 0 {
            prop_assert!(is_generator(&g, &exact.basis));
            prop_assert!(is_generator(&g, &greedy.basis));
        }
        prop_assert_eq!(exact.basis.len(), exact.value);
        prop_assert_eq!(exact.pairs_total, g.m() * g.m().saturating_sub(1) / 2);
    }

    #[test]
    fn connected_bounds(g in arb_connected(2, 9)) {
        let r = edim_exact(&g);
        prop_assert!(r.value >= 1);
        prop_assert!(r.value < g.n());
        // No generator one smaller exists.
        let d = floyd(&g);
        let edges: Vec<_> = g.edge_pairs().collect();
        if r.value >= 2 {
            let all: Vec<usize> = (0..g.n()).collect();
            prop_assert!(!common::any_subset(&all, r.value - 1, &mut |s| separates(&d, &edges, s)));
        }
    }

    #[test]
    fn superset_of_generator_is_generator(g in arb_connected(2, 8), extra in 0usize..8) {
        let mut s = edim_exact(&g).basis;
        let w = extra % g.n();
        if !s.contains(&w) {
            s.push(w);
        }
        prop_assert!(is_generator(&g, &s));
    }

    #[test]
    fn additive_over_components(a in arb_connected(1, 6), b in arb_connected(1, 6)) {
        let u = a.disjoint_union(&b);
        let r = edim_exact(&u);
        prop_assert_eq!(r.value, edim_exact(&a).value + edim_exact(&b).value);
        if u.m() > 0 {
            prop_assert!(is_generator(&u, &r.basis));
        }
    }

    #[test]
    fn deterministic(g in arb_graph(1, 9)) {
        let opts = SolverOptions { time_budget: None, all_bases_cap: Some(50) };
        prop_assert_eq!(edim_exact_with(&g, &opts), edim_exact_with(&g, &opts));
    }

    #[test]
    fn relabeling_preserves_value(g in arb_graph(1, 8), seed in any::<u64>()) {
        let n = g.n();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut x = seed;
        for i in (1..n).rev() {
            x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (x >> 33) as usize % (i + 1));
        }
        prop_assert_eq!(edim_exact(&g).value, edim_exact(&g.relabel(&perm)).value);
    }
}

#[test]
fn generator_check_reports_a_failing_pair() {
    let c4 = Graph::new(4, [(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
    let check = is_edge_metric_generator(&c4, &[0]).unwrap();
    assert!(!check.is_generator());
    assert!(is_edge_metric_generator(&c4, &[]).is_err());
    assert!(is_edge_metric_generator(&c4, &[4]).is_err());
}

#[test]
fn time_budget_is_flagged() {
    let opts = SolverOptions {
        time_budget: Some(std::time::Duration::ZERO),
        all_bases_cap: None,
    };
    let mut flagged = 0;
    for seed in 0..20 {
        let g = edim::generate::gnp(16, 0.3, seed).unwrap();
        let r = edim_exact_with(&g, &opts);
        let exact = edim_exact(&g).value;
        assert!(is_generator(&g, &r.basis));
        match r.method {
            // The greedy bound can meet the lower bound and be proven.
            Method::Exact => assert_eq!(r.value, exact),
            Method::GreedyUpper => {
                assert!(r.value >= exact);
                flagged += 1;
            }
        }
    }
    assert!(flagged > 0);
}
