mod common;

use proptest::prelude::*;
use sidecast::graphcore::{
    chromatic_interval, max_independent_set_exact, tabu_coloring, verify_coloring,
    verify_independent_set, SearchLimits,
};
use sidecast::minrank::{min_rank_search, rank_gf, MinRankOutcome};
use sidecast::rates::BetaStar;
use sidecast::{confusion_generators, or_product, BitGraph, BroadcastHypergraph, Graph, Receiver};

use common::*;

fn random_graph(n: usize, bits: u64) -> BitGraph {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    BitGraph::from_edges(n, pairs.into_iter().enumerate().filter(|(i, _)| bits >> (i % 64) & 1 == 1).map(|(_, e)| e))
}

/// Receivers from a seed: each block gets up to two receivers with
/// pseudo-random known sets.
fn random_network(n: usize, seed: u64) -> BroadcastHypergraph {
    let mut edges = Vec::new();
    let mut x = seed | 1;
    for target in 0..n {
        for _ in 0..1 + (x % 2) as usize {
            x ^= x << 13;
            x ^= x >> 7;
            x ^= x << 17;
            let known = (0..n).filter(|&j| j != target && x >> j & 1 == 1);
            edges.push(Receiver::new(target, known));
        }
    }
    BroadcastHypergraph::new(n, edges).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn confusion_graph_matches_the_definition(n in 2usize..6, seed in any::<u64>(), t in 1usize..3) {
        let h = random_network(n, seed);
        let c = confusion_generators(&h, t).unwrap();
        let v = 1u64 << (n * t);
        for x in 0..v {
            for y in x + 1..v {
                prop_assert_eq!(c.adjacent_words(x, y), confusable(&h, t, x, y));
            }
        }
    }

    #[test]
    fn or_product_is_confusion_of_the_union(a in 2usize..5, b in 2usize..5, s1 in any::<u64>(), s2 in any::<u64>()) {
        let (h1, h2) = (random_network(a, s1), random_network(b, s2));
        let union = confusion_generators(&h1.disjoint_union(&h2), 1).unwrap();
        let product = or_product(confusion_generators(&h1, 1).unwrap(), confusion_generators(&h2, 1).unwrap());
        let explicit = product.to_cayley().unwrap();
        prop_assert_eq!(union.generators(), explicit.generators());
    }

    #[test]
    fn exact_searches_agree_with_brute_force(n in 1usize..13, bits in any::<u64>()) {
        let g = random_graph(n, bits);
        let masks = neighbor_masks(n, |u, v| g.adjacent(u, v));
        let mis = max_independent_set_exact(&g, SearchLimits::mis()).unwrap();
        prop_assert!(verify_independent_set(&g, &mis).is_ok());
        prop_assert_eq!(mis.len(), brute_alpha(&masks));
        let chi = chromatic_interval(&g, SearchLimits::chromatic(), 0).unwrap();
        prop_assert!(chi.is_exact());
        prop_assert_eq!(verify_coloring(&g, &chi.coloring).unwrap(), chi.upper);
        prop_assert_eq!(chi.upper, chromatic(&masks));
    }

    #[test]
    fn tabu_colorings_are_proper(n in 2usize..20, bits in any::<u64>(), seed in any::<u64>()) {
        let g = random_graph(n, bits);
        let k = chromatic(&neighbor_masks(n, |u, v| g.adjacent(u, v))) + 1;
        if let Some(table) = tabu_coloring(&g, k, seed, 5_000) {
            prop_assert!(g.edges().iter().all(|&(u, v)| table[u] != table[v]));
            prop_assert!(table.iter().all(|&c| (c as usize) < k));
        }
    }

    #[test]
    fn min_rank_witness_fits_and_bounds_alpha(n in 1usize..7, bits in any::<u64>()) {
        let g = random_graph(n, bits);
        let masks = neighbor_masks(n, |u, v| g.adjacent(u, v));
        match min_rank_search(&g, 2, n.min(4)).unwrap() {
            MinRankOutcome::Found { rank, witness } => {
                let rows: Vec<u64> = (0..n)
                    .map(|i| (0..n).filter(|&j| witness.get(i, j) == 1).fold(0, |r, j| r | 1 << j))
                    .collect();
                for i in 0..n {
                    prop_assert!(rows[i] >> i & 1 == 1);
                    prop_assert_eq!(rows[i] & !(masks[i] | 1 << i), 0);
                }
                prop_assert_eq!(rank_gf(&witness).unwrap(), rank);
                prop_assert_eq!(gf2_rank(&rows), rank);
                // alpha <= min-rank <= chromatic number of the complement
                let co = neighbor_masks(n, |u, v| !g.adjacent(u, v));
                prop_assert!(brute_alpha(&masks) <= rank);
                prop_assert!(rank <= chromatic(&co));
            }
            MinRankOutcome::Above(r) => prop_assert!(n > r),
        }
    }

    #[test]
    fn beta_star_comparison_is_exact(n in 1usize..20, gamma_seed in any::<u64>(), p in 0u64..400, q in 1u64..20) {
        let gamma = 1 + gamma_seed % (1u64 << n);
        let star = BetaStar::new(n, gamma, true).unwrap();
        let value = n as f64 - (gamma as f64).log2();
        let r = p as f64 / q as f64;
        if (value - r).abs() > 1e-9 {
            prop_assert_eq!(star.cmp_ratio(p, q), value.partial_cmp(&r).unwrap());
        }
    }
}
