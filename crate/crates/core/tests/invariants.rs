mod common;

use berge_forge_core::constructions::{double_one_side, triangle_hypergraph};
use berge_forge_core::decompose::{build_g2, check_triangle_lemma, decompose, rainbow_tripartition};
use berge_forge_core::detect::{find_berge_cycle, find_cycle};
use berge_forge_core::hypergraph::pairs_of;
use berge_forge_core::{BipartiteGraph, Graph, TripleSystem};
use proptest::prelude::*;

fn graphs(max_n: usize) -> impl Strategy<Value = Graph> {
    (0usize..=max_n).prop_flat_map(move |n| {
        let pairs = n * n.saturating_sub(1) / 2;
        (Just(n), prop::collection::vec(any::<bool>(), pairs)).prop_map(|(n, bits)| {
            let mut edges = Vec::new();
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[i] {
                        edges.push((u, v));
                    }
                    i += 1;
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn triple_systems(max_n: usize, max_edges: usize) -> impl Strategy<Value = TripleSystem> {
    (3usize..=max_n).prop_flat_map(move |n| {
        let m = n * (n - 1) * (n - 2) / 6;
        (Just(n), prop::collection::vec(0..m, 0..=max_edges)).prop_map(|(n, picks)| common::triples_from_picks(n, &picks))
    })
}

/// Keeps the edges of `g`, in order, that do not close a `C_len`.
fn cycle_free_part(g: &Graph, len: usize) -> Graph {
    let mut out = Graph::new(g.n());
    for (u, v) in g.edges() {
        out.add_edge(u, v).unwrap();
        if find_cycle(&out, len).unwrap().is_some() {
            out.remove_edge(u, v);
        }
    }
    out
}

/// Keeps the triples of `h`, in order, that do not close a Berge `C_len`.
fn berge_free_part(h: &TripleSystem, len: usize) -> TripleSystem {
    let mut kept: Vec<[usize; 3]> = Vec::new();
    for &t in h.edges() {
        kept.push(t);
        if find_berge_cycle(&TripleSystem::from_edges(h.n(), kept.clone()).unwrap(), len).unwrap().is_some() {
            kept.pop();
        }
    }
    TripleSystem::from_edges(h.n(), kept).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn shadow_multiplicities_sum_to_three_per_edge(h in triple_systems(9, 30)) {
        let deg = h.shadow_pairs();
        prop_assert_eq!(deg.total(), 3 * h.len());
        for (p, d) in deg.iter() {
            let direct = h.edges().iter().filter(|t| pairs_of(**t).contains(&p)).count();
            prop_assert_eq!(d, direct);
        }
    }

    #[test]
    fn triple_systems_are_deduplicated(picks in prop::collection::vec(0usize..35, 0..40)) {
        let h = common::triples_from_picks(7, &picks);
        let mut distinct: Vec<usize> = picks.iter().map(|p| p % 35).collect();
        distinct.sort_unstable();
        distinct.dedup();
        prop_assert_eq!(h.len(), distinct.len());
        prop_assert!(h.edges().windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn triangle_counts_agree(g in graphs(10)) {
        let t = g.triangle_count();
        prop_assert_eq!(t, common::triangles(&g));
        prop_assert_eq!(g.triangle_list().len(), t);
        let through_edges: usize = g.edges().map(|(u, v)| g.common_neighbors(u, v).count()).sum();
        prop_assert_eq!(through_edges, 3 * t);
    }

    #[test]
    fn decomposition_holds_on_random_systems(h in triple_systems(9, 40)) {
        let d = decompose(&h).unwrap();
        prop_assert!(d.verify().is_ok());
        prop_assert!(d.h1.len() <= 4 * d.h3.len());
        prop_assert!(d.h5.len() <= 3 * d.h6.len());
        prop_assert!(h.subsystem(&d.h6).is_linear());
        prop_assert_eq!(d.h1.len() + d.h2.len(), h.len());
        prop_assert_eq!(d.h4.len() + d.h5.len(), d.h3.len());
    }

    #[test]
    fn shadow_of_berge_free_system_has_no_long_cycle(h in triple_systems(8, 30), len in 3usize..=5) {
        let h = berge_free_part(&h, len);
        prop_assert!(find_cycle(&build_g2(&h), len).unwrap().is_none());
    }

    #[test]
    fn tripartition_is_balanced_and_rainbow_enough(g in graphs(12)) {
        let g = if g.n() >= 3 { g } else { Graph::complete(3) };
        let p = rainbow_tripartition(&g).unwrap();
        for i in 1..=3u8 {
            prop_assert_eq!(p.class_size(i), (g.n() + i as usize - 1) / 3);
        }
        prop_assert!(9 * p.rainbow_count >= 2 * g.triangle_count());
    }

    #[test]
    fn triangle_lemma_on_cycle_free_graphs(g in graphs(9), len in 4usize..=6) {
        let g = cycle_free_part(&g, len);
        prop_assert!(check_triangle_lemma(&g, len).unwrap());
    }

    #[test]
    fn triangle_hypergraph_inherits_freeness(g in graphs(9)) {
        let g = cycle_free_part(&g, 5);
        let h = triangle_hypergraph(&g);
        prop_assert_eq!(h.len(), g.triangle_count());
        prop_assert!(find_berge_cycle(&h, 5).unwrap().is_none());
    }
}

#[test]
fn doubled_even_cycles_are_berge_free() {
    let c6 = double_one_side(&BipartiteGraph::even_cycle(6).unwrap());
    assert!(find_berge_cycle(&c6, 4).unwrap().is_none());
    let c10 = double_one_side(&BipartiteGraph::even_cycle(10).unwrap());
    assert_eq!((c10.n(), c10.len()), (15, 10));
    assert!(find_berge_cycle(&c10, 4).unwrap().is_none());
    assert!(find_berge_cycle(&c10, 6).unwrap().is_none());
}
