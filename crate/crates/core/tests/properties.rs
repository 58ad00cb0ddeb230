use std::collections::BTreeSet;

use proptest::prelude::*;
use pushlab_core::census::planar_upc_census;
use pushlab_core::decide::{is_underlying_oriented_clique, is_underlying_push_clique_all_orientations};
use pushlab_core::orient::all_orientations;
use pushlab_core::{
    canonical_code, canonical_form, enumerate_graphs, is_planar, is_push_clique_bruteforce, is_underlying_push_clique,
    CanonicalCode, Graph, Orientation, VertexSet,
};

fn graph_from_bits(n: usize, bits: u64) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bits >> k & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::build(n, &edges).unwrap()
}

fn arb_orientation() -> impl Strategy<Value = Orientation> {
    (1usize..=7, any::<u64>(), any::<u64>()).prop_map(|(n, gb, ob)| {
        let g = graph_from_bits(n, gb);
        Orientation::from_edge_mask(&g, ob as u128 & ((1u128 << g.size()) - 1))
    })
}

fn arb_permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #[test]
    fn push_is_an_involution(d in arb_orientation(), s in any::<u16>()) {
        let s = VertexSet::from_bits(s).intersection(VertexSet::full(d.order()));
        prop_assert_eq!(d.push(s).push(s), d);
    }

    #[test]
    fn complementary_pushes_agree(d in arb_orientation(), s in any::<u16>()) {
        let n = d.order();
        let s = VertexSet::from_bits(s).intersection(VertexSet::full(n));
        prop_assert_eq!(d.push(s), d.push(s.complement(n)));
    }

    #[test]
    fn push_clique_is_push_invariant(d in arb_orientation(), s in any::<u16>()) {
        let s = VertexSet::from_bits(s).intersection(VertexSet::full(d.order()));
        prop_assert_eq!(d.is_push_clique(), d.push(s).is_push_clique());
        prop_assert_eq!(d.is_push_clique(), is_push_clique_bruteforce(&d).unwrap());
    }

    #[test]
    fn canonical_code_is_label_invariant((n, bits, perm) in (1usize..=8).prop_flat_map(|n| (Just(n), any::<u64>(), arb_permutation(n)))) {
        let g = graph_from_bits(n, bits);
        let h = g.permute(&perm);
        prop_assert_eq!(canonical_code(&g), canonical_code(&h));
        let f = canonical_form(&g);
        prop_assert_eq!(g.permute(&f.perm()), f.graph());
    }

    #[test]
    fn spanning_containment_is_monotone(n in 2usize..=7, a in any::<u64>(), b in any::<u64>(), extra in any::<u64>()) {
        let g = graph_from_bits(n, a);
        let h = graph_from_bits(n, a & b);
        prop_assert!(g.contains_spanning_subgraph(&h));
        let bigger = graph_from_bits(n, a | extra);
        prop_assert!(bigger.contains_spanning_subgraph(&h));
    }

    #[test]
    fn domination_certificates_dominate(n in 1usize..=8, bits in any::<u64>()) {
        let g = graph_from_bits(n, bits);
        let (k, set) = g.domination_number();
        prop_assert!(k >= 1 && k <= n && set.len() == k && g.dominates(set));
        let (a, ind) = g.independence_number();
        prop_assert!(ind.len() == a && g.is_independent(ind));
    }
}

#[test]
fn gauge_fixing_matches_all_orientations() {
    for n in 1..=5 {
        for g in enumerate_graphs(n).unwrap() {
            let fast = is_underlying_push_clique(&g).unwrap();
            assert_eq!(fast.holds, is_underlying_push_clique_all_orientations(&g).unwrap(), "{g:?}");
            if let Some(w) = fast.witness {
                assert!(w.is_push_clique() && w.base() == &g);
            }
            if let Some(w) = is_underlying_oriented_clique(&g).unwrap().witness {
                assert!(w.is_oriented_clique() && w.base() == &g);
            }
        }
    }
}

#[test]
fn push_clique_property_is_edge_monotone() {
    for n in 1..=6 {
        for g in enumerate_graphs(n).unwrap() {
            if !is_underlying_push_clique(&g).unwrap().holds {
                continue;
            }
            for u in 0..n {
                for v in u + 1..n {
                    if !g.has_edge(u, v) {
                        assert!(is_underlying_push_clique(&g.with_edge(u, v)).unwrap().holds);
                    }
                }
            }
        }
    }
}

#[test]
fn planarity_is_minor_monotone() {
    for n in 1..=6 {
        for g in enumerate_graphs(n).unwrap().into_iter().filter(is_planar) {
            for (u, v) in g.edges() {
                assert!(is_planar(&g.without_edge(u, v)));
                assert!(is_planar(&g.contract(u, v)));
            }
        }
    }
}

/// Independent route to the census for n <= 5: every labeled graph, every
/// orientation, the all-pushes test, planarity as "not K5", and isomorphism
/// classes by minimizing over all permutations.
#[test]
fn census_matches_labeled_brute_force_up_to_five() {
    fn min_code(g: &Graph) -> CanonicalCode {
        let n = g.order();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut best = CanonicalCode::of(g);
        // Heap's algorithm over all n! relabelings.
        let mut c = vec![0; n];
        let mut i = 0;
        while i < n {
            if c[i] < i {
                perm.swap(if i % 2 == 0 { 0 } else { c[i] }, i);
                best = best.min(CanonicalCode::of(&g.permute(&perm)));
                c[i] += 1;
                i = 0;
            } else {
                c[i] = 0;
                i += 1;
            }
        }
        best
    }
    let census = planar_upc_census(5).unwrap();
    for n in 1..=5 {
        let pairs = n * (n - 1) / 2;
        let mut expected = BTreeSet::new();
        for bits in 0u64..1 << pairs {
            let g = graph_from_bits(n, bits);
            let planar = !(n == 5 && g.size() == 10);
            let upc = all_orientations(&g).any(|d| is_push_clique_bruteforce(&d).unwrap());
            if planar && upc {
                expected.insert(min_code(&g));
            }
        }
        let found: BTreeSet<_> = census.of_order(n).iter().map(|r| CanonicalCode::of(&r.graph)).collect();
        assert_eq!(found, expected, "order {n}");
    }
}

/// The census decision at orders 6 to 8 against a search over all `2^m`
/// orientations, without gauge fixing.
#[test]
fn census_decisions_match_all_orientation_search() {
    let census = planar_upc_census(8).unwrap();
    for n in 6..=8 {
        let mut found = BTreeSet::new();
        for g in enumerate_graphs(n).unwrap() {
            if pushlab_core::decide::common_neighbor_deficit(&g, 2).is_some() || !is_planar(&g) {
                continue;
            }
            if is_underlying_push_clique_all_orientations(&g).unwrap() {
                found.insert(CanonicalCode::of(&g));
            }
        }
        let census_codes: BTreeSet<_> = census.of_order(n).iter().map(|r| CanonicalCode::of(&r.graph)).collect();
        assert_eq!(found, census_codes, "order {n}");
    }
}
