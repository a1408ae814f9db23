use std::collections::BTreeSet;

use proptest::prelude::*;
use pursuitlab::graph::{canonical_code, enumerate_graphs, is_isomorphic, parse_graph6, write_graph6};
use pursuitlab::named;
use pursuitlab::{Graph, VertexSet};

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect()
}

fn labelled(n: usize, mask: u64) -> Graph {
    let edges: Vec<_> = pairs(n).into_iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, e)| e).collect();
    Graph::from_edges(n, &edges).unwrap()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Brute-force canonical key: the smallest edge mask over all relabellings.
fn brute_key(g: &Graph, perms: &[Vec<usize>]) -> u64 {
    let ps = pairs(g.n());
    perms
        .iter()
        .map(|p| ps.iter().enumerate().filter(|(_, &(i, j))| g.has_edge(p[i], p[j])).fold(0u64, |m, (b, _)| m | 1 << b))
        .min()
        .unwrap()
}

fn brute_classes(n: usize, connected_only: bool) -> usize {
    let perms = permutations(n);
    let m = pairs(n).len();
    (0..1u64 << m)
        .map(|mask| labelled(n, mask))
        .filter(|g| !connected_only || g.is_connected())
        .map(|g| brute_key(&g, &perms))
        .collect::<BTreeSet<_>>()
        .len()
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn partitions(n: usize, max: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in (1..=max.min(n)).rev() {
        for mut rest in partitions(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Unlabelled graph count by Burnside over cycle types of S_n acting on pairs.
fn burnside(n: usize) -> u64 {
    let fact = |k: usize| (1..=k as u64).product::<u64>();
    let mut total = 0u128;
    for lambda in partitions(n, n) {
        // class size n! / prod(k^m_k m_k!)
        let mut denom = 1u64;
        for k in 1..=n {
            let m = lambda.iter().filter(|&&x| x == k).count();
            denom *= (k as u64).pow(m as u32) * fact(m);
        }
        let size = fact(n) / denom;
        let mut cycles = 0u64;
        for (i, &a) in lambda.iter().enumerate() {
            cycles += (a / 2) as u64;
            for &b in &lambda[i + 1..] {
                cycles += gcd(a as u64, b as u64);
            }
        }
        total += size as u128 * (1u128 << cycles);
    }
    (total / fact(n) as u128) as u64
}

/// Connected counts from all-graph counts by inverting the Euler transform.
fn connected_counts(all: &[u64]) -> Vec<i128> {
    let n = all.len() - 1;
    let a: Vec<i128> = all.iter().map(|&x| x as i128).collect();
    let mut c = vec![0i128; n + 1];
    for m in 1..=n {
        // a_m = (1/m) sum_{k=1..m} b_k a_{m-k}, b_k = sum_{d | k} d c_d
        let b = |k: usize, c: &[i128]| (1..=k).filter(|d| k.is_multiple_of(*d)).map(|d| d as i128 * c[d]).sum::<i128>();
        let known: i128 = (1..m).map(|k| b(k, &c) * a[m - k]).sum();
        let b_m = m as i128 * a[m] - known;
        let others: i128 = (1..m).filter(|d| m % d == 0).map(|d| d as i128 * c[d]).sum();
        c[m] = (b_m - others) / m as i128;
    }
    c
}

#[test]
fn enumeration_matches_brute_force_up_to_five() {
    for n in 1..=5 {
        for connected in [false, true] {
            assert_eq!(
                enumerate_graphs(n, connected).unwrap().len(),
                brute_classes(n, connected),
                "n={n} connected={connected}"
            );
        }
    }
}

#[test]
fn enumeration_matches_burnside_and_euler_up_to_seven() {
    let mut all = vec![1u64];
    all.extend((1..=7).map(burnside));
    assert_eq!(&all[1..], &[1, 2, 4, 11, 34, 156, 1044]);
    let conn = connected_counts(&all);
    for n in 1..=7 {
        assert_eq!(enumerate_graphs(n, false).unwrap().len() as u64, all[n], "all n={n}");
        assert_eq!(enumerate_graphs(n, true).unwrap().len() as i128, conn[n], "connected n={n}");
    }
    assert_eq!(conn[7], 853);
}

#[test]
fn enumerated_classes_are_pairwise_non_isomorphic() {
    let perms = permutations(5);
    let graphs = enumerate_graphs(5, false).unwrap();
    let keys: BTreeSet<_> = graphs.iter().map(|g| brute_key(g, &perms)).collect();
    assert_eq!(keys.len(), graphs.len());
    assert_eq!(enumerate_graphs(1, false).unwrap().len(), 1);
}

#[test]
fn graph6_examples() {
    let k2 = parse_graph6("A_").unwrap();
    assert_eq!((k2.n(), k2.edge_count()), (2, 1));
    let e2 = parse_graph6("A?").unwrap();
    assert_eq!((e2.n(), e2.edge_count()), (2, 0));
    assert!(parse_graph6("").is_err());
    assert_eq!(write_graph6(&named::complete(2)), "A_");
    assert_eq!(write_graph6(&named::complete(3)), "Bw");
    assert_eq!(write_graph6(&named::complete(1)), "@");
}

#[test]
fn graph_core_examples() {
    assert_eq!(named::complete(4).complement(), named::empty(4));
    let g = named::petersen();
    assert_eq!(g.induced_subgraph(g.all_vertices()).unwrap(), g);
    let c5 = named::cycle(5);
    assert!(is_isomorphic(&c5.remove_vertex(2).unwrap(), &named::path(4)).unwrap());
    assert_eq!(named::path(3).cut_vertices(), VertexSet::singleton(1));
    assert_eq!(named::shrikhande_complement().min_degree(), 9);
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let edges: Vec<_> = pairs(n).into_iter().zip(bits).filter(|(_, b)| *b).map(|(e, _)| e).collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn graph6_round_trip(g in arb_graph(62)) {
        prop_assert_eq!(parse_graph6(&write_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn complement_is_an_involution(g in arb_graph(62)) {
        prop_assert_eq!(g.complement().complement(), g.clone());
        prop_assert_eq!(g.edge_count() + g.complement().edge_count(), g.n() * (g.n() - 1) / 2);
    }

    #[test]
    fn canonical_code_ignores_labels((g, order) in arb_graph(9).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), Just((0..n).collect::<Vec<usize>>()).prop_shuffle())
    })) {
        let h = g.permuted(&order);
        prop_assert_eq!(canonical_code(&g).unwrap(), canonical_code(&h).unwrap());
    }

    #[test]
    fn cut_vertices_disconnect(g in arb_graph(10)) {
        prop_assume!(g.is_connected() && g.n() >= 2);
        for u in 0..g.n() {
            let disconnects = !g.remove_vertex(u).unwrap().is_connected();
            prop_assert_eq!(g.cut_vertices().contains(u), disconnects);
        }
    }
}
