use proptest::prelude::*;
use pursuitlab::graph::enumerate_graphs;
use pursuitlab::named;
use pursuitlab::patterns::{
    clique_number, contains_induced, find_induced_embedding, has_long_induced_cycle, independence_number,
    max_induced_matching, PatternSpec,
};
use pursuitlab::Graph;

/// Naive oracle: try every injective map from pattern vertices to host vertices.
fn naive_contains(host: &Graph, pattern: &Graph) -> bool {
    fn extend(host: &Graph, pattern: &Graph, map: &mut Vec<usize>) -> bool {
        let i = map.len();
        if i == pattern.n() {
            return true;
        }
        for x in 0..host.n() {
            if map.contains(&x) {
                continue;
            }
            if (0..i).all(|j| pattern.has_edge(i, j) == host.has_edge(x, map[j])) {
                map.push(x);
                if extend(host, pattern, map) {
                    return true;
                }
                map.pop();
            }
        }
        false
    }
    extend(host, pattern, &mut Vec::new())
}

fn small_patterns() -> Vec<PatternSpec> {
    let mut out: Vec<PatternSpec> =
        ["4K1", "3K1", "2K2", "2K1+K2", "3K1+K2", "P3", "P4", "P5", "C4", "C5", "co-C5", "K4", "g6:DQc"]
            .iter()
            .map(|s| s.parse().unwrap())
            .collect();
    out.push(PatternSpec::Explicit(named::petersen().induced_subgraph([0, 1, 2, 5, 7].into_iter().collect()).unwrap()));
    out
}

#[test]
fn detectors_agree_with_naive_embedding_up_to_seven() {
    let patterns = small_patterns();
    for n in 1..=7 {
        for g in enumerate_graphs(n, false).unwrap() {
            for p in &patterns {
                let pg = p.graph();
                let found = contains_induced(&g, p);
                assert_eq!(found.is_some(), naive_contains(&g, &pg), "{g} {p}");
                if let Some(e) = found {
                    assert!(e.verify(&g, &pg), "{g} {p} bad embedding");
                }
            }
        }
    }
}

#[test]
fn specialised_routines_agree_with_generic_embedder() {
    let specs: Vec<PatternSpec> = ["1K1", "2K1", "3K1", "4K1", "K2", "2K2", "3K2", "2K1+K2", "2K1+2K2"]
        .iter()
        .map(|s| s.parse().unwrap())
        .collect();
    for n in 1..=7 {
        for g in enumerate_graphs(n, false).unwrap() {
            for p in &specs {
                assert_eq!(
                    contains_induced(&g, p).is_some(),
                    find_induced_embedding(&g, &p.graph()).is_some(),
                    "{g} {p}"
                );
            }
        }
    }
}

#[test]
fn pattern_examples() {
    let co_sh = named::shrikhande_complement();
    assert_eq!(independence_number(&named::complete(4)), 1);
    assert_eq!(independence_number(&co_sh), 3);
    assert_eq!(independence_number(&named::cycle(5)), 2);
    assert_eq!(max_induced_matching(&named::complete(2)), 1);
    assert_eq!(max_induced_matching(&named::pk1_qk2(0, 3)), 3);
    assert_eq!(max_induced_matching(&named::cycle(5)), 1);
    assert!(contains_induced(&co_sh, &PatternSpec::IndependentSet(4)).is_none());
    assert!(contains_induced(&named::cycle(6), &PatternSpec::Path(5)).is_some());
    assert!(contains_induced(&named::shrikhande(), &"K4".parse().unwrap()).is_none());
    assert!(has_long_induced_cycle(&co_sh, 6).is_none());
    let c7 = has_long_induced_cycle(&named::cycle(7), 6).unwrap();
    assert_eq!(c7.map.len(), 7);
}

#[test]
fn shortest_long_hole_in_the_shrikhande_complement_is_a_four_cycle() {
    let co_sh = named::shrikhande_complement();
    let e = has_long_induced_cycle(&co_sh, 4).expect("an induced C4 or C5");
    // recorded outcome of the exhaustive search: an induced C4
    assert_eq!(e.map.len(), 4);
    assert!(e.verify(&co_sh, &named::cycle(4)));
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|j| (0..j).map(move |i| (i, j)));
            let edges: Vec<_> = pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e).collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn independence_is_clique_of_complement(g in arb_graph(24)) {
        prop_assert_eq!(independence_number(&g), clique_number(&g.complement()));
    }

    #[test]
    fn independence_is_monotone_under_vertex_deletion(g in arb_graph(20)) {
        prop_assume!(g.n() >= 2);
        let a = independence_number(&g);
        for u in 0..g.n() {
            let b = independence_number(&g.remove_vertex(u).unwrap());
            prop_assert!(b <= a && b + 1 >= a);
        }
    }

    #[test]
    fn freeness_is_hereditary(g in arb_graph(9), drop in any::<usize>()) {
        prop_assume!(g.n() >= 2);
        let h = g.remove_vertex(drop % g.n()).unwrap();
        for p in small_patterns() {
            if contains_induced(&g, &p).is_none() {
                prop_assert!(contains_induced(&h, &p).is_none());
            }
        }
    }
}
