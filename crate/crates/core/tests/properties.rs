use std::f64::consts::{PI, SQRT_2};

use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sombor_core::families::{complete, complete_bipartite, cycle};
use sombor_core::index::weighted_profile_sum;
use sombor_core::ops::{cartesian_product, disjoint_union, link, point_attach, relabel, Identification, LinkSpec};
use sombor_core::{all_indices, compute, edge_sum_index, generate, Family, FamilySpec, Graph, IndexId};

/// Degree-by-degree evaluation straight from the definitions.
fn oracle(g: &Graph, id: IndexId) -> f64 {
    let n = g.vertex_count();
    let mut adj = vec![vec![false; n]; n];
    for &(u, v) in g.edges() {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    let deg: Vec<f64> = adj
        .iter()
        .map(|row| row.iter().filter(|&&x| x).count() as f64)
        .collect();
    let mut total = 0.0;
    for u in 0..n {
        for v in u + 1..n {
            if !adj[u][v] {
                continue;
            }
            let (a, b) = (deg[u], deg[v]);
            let s = a * a + b * b;
            let d = a * a - b * b;
            let r = SQRT_2 + 2.0 * s.sqrt();
            total += match id {
                IndexId::So => s.sqrt(),
                IndexId::So1 => d.abs() / 2.0,
                IndexId::So2 => d.abs() / s,
                IndexId::So3 => SQRT_2 * PI * s / (a + b),
                IndexId::So4 => PI / 2.0 * (s / (a + b)).powi(2),
                IndexId::So5 => 2.0 * PI * d.abs() / r,
                IndexId::So6 => PI * (d / r).powi(2),
            };
        }
    }
    total
}

fn rel(a: f64, b: f64) -> f64 {
    if a == 0.0 || b == 0.0 {
        (a - b).abs()
    } else {
        (a - b).abs() / a.abs().max(b.abs())
    }
}

fn random_connected(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let p: f64 = rng.gen_range(0.05..0.95);
    loop {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::new(n, edges).unwrap();
        if g.is_connected() {
            return g;
        }
    }
}

#[test]
fn profile_route_matches_edge_sum_and_oracle_on_500_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..500 {
        let n = rng.gen_range(2..=40);
        let g = random_connected(&mut rng, n);
        let profile = g.degree_pair_profile().unwrap();
        let all = all_indices(&g).unwrap();
        for id in IndexId::ALL {
            let by_profile = weighted_profile_sum(&profile, &id).unwrap().value;
            let by_edges = edge_sum_index(&g, &id).unwrap().value;
            let direct = oracle(&g, id);
            assert!(rel(by_profile, by_edges) <= 1e-12, "{id} {by_profile} {by_edges}");
            assert!(rel(by_edges, direct) <= 1e-12, "{id} {by_edges} {direct}");
            assert!(rel(all[&id].value, direct) <= 1e-12);
        }
    }
}

#[test]
fn relabeling_does_not_change_any_index() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let g = random_connected(&mut rng, 25);
    let base = all_indices(&g).unwrap();
    for _ in 0..100 {
        let mut perm: Vec<usize> = (0..g.vertex_count()).collect();
        perm.shuffle(&mut rng);
        let h = relabel(&g, &perm).unwrap();
        assert_eq!(h.degree_pair_profile().unwrap(), g.degree_pair_profile().unwrap());
        let other = all_indices(&h).unwrap();
        for id in IndexId::ALL {
            assert!(rel(base[&id].value, other[&id].value) <= 1e-12);
        }
    }
}

fn regular_instances() -> Vec<Graph> {
    let mut out: Vec<Graph> = (3..=9).map(cycle).collect();
    out.extend((2..=7).map(complete));
    out.extend((1..=4).map(|k| complete_bipartite(k, k)));
    out.push(cartesian_product(&cycle(4), &cycle(5)).unwrap());
    out.push(cartesian_product(&complete(3), &complete(4)).unwrap());
    out.push(cartesian_product(&cycle(6), &complete(2)).unwrap());
    out
}

#[test]
fn regular_graphs_zero_the_difference_indices() {
    let graphs = regular_instances();
    assert_eq!(graphs.len(), 20);
    for g in &graphs {
        assert!(g.is_regular());
        for id in [IndexId::So1, IndexId::So2, IndexId::So5, IndexId::So6] {
            assert_eq!(compute(g, id).unwrap().value, 0.0, "{id}");
        }
    }
}

#[test]
fn disjoint_union_is_additive() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..50 {
        let (a, b) = (rng.gen_range(2..=20), rng.gen_range(2..=20));
        let g = random_connected(&mut rng, a);
        let h = random_connected(&mut rng, b);
        let u = disjoint_union(&g, &h);
        for id in IndexId::ALL {
            let sum = compute(&g, id).unwrap().value + compute(&h, id).unwrap().value;
            assert!(rel(compute(&u, id).unwrap().value, sum) <= 1e-12);
        }
    }
}

#[test]
fn para_and_meta_hexagonal_chains_share_a_profile() {
    for n in 2..=30 {
        let para = generate(&FamilySpec::new(Family::HexParaChain, n)).unwrap();
        let meta = generate(&FamilySpec::new(Family::HexMetaChain, n)).unwrap();
        assert_eq!(
            para.degree_pair_profile().unwrap(),
            meta.degree_pair_profile().unwrap(),
            "n={n}"
        );
        assert_ne!(para, meta);
    }
}

#[test]
fn chain_generators_have_the_stated_sizes() {
    for (family, polygon) in [
        (Family::TriChain, 3),
        (Family::SquareParaChain, 4),
        (Family::SquareOrthoChain, 4),
        (Family::HexOrthoChain, 6),
        (Family::HexParaChain, 6),
        (Family::HexMetaChain, 6),
    ] {
        for n in 2..=30 {
            let g = generate(&FamilySpec::new(family, n)).unwrap();
            assert_eq!(g.edge_count(), polygon * n);
            assert_eq!(g.vertex_count(), polygon * n - (n - 1));
            assert!(g.is_connected());
        }
    }
}

fn small_graph() -> impl Strategy<Value = Graph> {
    (2usize..9)
        .prop_flat_map(|n| (Just(n), proptest::collection::vec(any::<bool>(), n * (n - 1) / 2)))
        .prop_map(|(n, mask)| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if mask[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::new(n, edges).unwrap()
        })
}

proptest! {
    #[test]
    fn product_counts(g in small_graph(), h in small_graph()) {
        let p = cartesian_product(&g, &h).unwrap();
        prop_assert_eq!(p.vertex_count(), g.vertex_count() * h.vertex_count());
        prop_assert_eq!(p.edge_count(), g.vertex_count() * h.edge_count() + h.vertex_count() * g.edge_count());
        for a in 0..g.vertex_count() {
            for x in 0..h.vertex_count() {
                prop_assert_eq!(p.degree(a * h.vertex_count() + x), g.degree(a) + h.degree(x));
            }
        }
    }

    #[test]
    fn link_counts(gs in proptest::collection::vec(small_graph(), 2..5), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let anchors: Vec<_> = gs.iter().map(|g| (rng.gen_range(0..g.vertex_count()), rng.gen_range(0..g.vertex_count()))).collect();
        let spec = LinkSpec::new(gs.clone(), anchors).unwrap();
        let l = link(&spec);
        prop_assert_eq!(l.vertex_count(), gs.iter().map(Graph::vertex_count).sum::<usize>());
        prop_assert_eq!(l.edge_count(), gs.iter().map(Graph::edge_count).sum::<usize>() + gs.len() - 1);
    }

    #[test]
    fn point_attach_counts(gs in proptest::collection::vec(small_graph(), 2..5), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let ids: Vec<_> = (1..gs.len())
            .map(|i| {
                let j = rng.gen_range(0..i);
                Identification::new(j, rng.gen_range(0..gs[j].vertex_count()), i, rng.gen_range(0..gs[i].vertex_count()))
            })
            .collect();
        let g = point_attach(&gs, &ids).unwrap();
        prop_assert_eq!(g.vertex_count(), gs.iter().map(Graph::vertex_count).sum::<usize>() - (gs.len() - 1));
        prop_assert_eq!(g.edge_count(), gs.iter().map(Graph::edge_count).sum::<usize>());
    }
}
