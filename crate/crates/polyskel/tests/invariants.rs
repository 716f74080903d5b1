//! Exhaustive small-scale checks of the combinatorial core's invariants.

use polyskel::enumerate::{all_graphs, all_posets};
use polyskel::graph::SimpleGraph;
use polyskel::poset::Poset;
use polyskel::random::{random_poset, SplitMix64};
use polyskel::subset::Subset;

use proptest::prelude::*;

fn posets_up_to(max_d: usize) -> Vec<Poset> {
    (1..=max_d).flat_map(all_posets).collect()
}

#[test]
fn ideal_families_form_distributive_lattices() {
    // For every poset with d <= 5: the ideal family contains the empty and
    // the full set, every member passes is_ideal, and the family is closed
    // under union and intersection.
    for p in posets_up_to(5) {
        let ideals: Vec<Subset> = p.ideals().iter().map(|i| i.subset()).collect();
        let family: std::collections::HashSet<Subset> = ideals.iter().copied().collect();
        assert_eq!(family.len(), ideals.len(), "duplicate ideals");
        assert!(family.contains(&Subset::EMPTY));
        assert!(family.contains(&Subset::full(p.size())));
        for &i in &ideals {
            assert!(p.is_ideal(i).unwrap());
        }
        for &a in &ideals {
            for &b in &ideals {
                assert!(family.contains(&(a | b)), "union escapes the family");
                assert!(family.contains(&(a & b)), "intersection escapes the family");
            }
        }
    }
}

#[test]
fn nested_ideal_differences_are_convex() {
    // If I is contained in J, the difference J - I is convex in P: for
    // a < b < c with a, c in the difference, b lies in it too. This is what
    // makes the Hasse-induced connectivity convention safe.
    for p in posets_up_to(5) {
        let ideals: Vec<Subset> = p.ideals().iter().map(|i| i.subset()).collect();
        for &small in &ideals {
            for &large in &ideals {
                if small != large && small.is_subset_of(large) {
                    assert!(p.is_convex(large - small).unwrap());
                }
            }
        }
    }
}

#[test]
fn antichains_are_the_stable_sets_of_the_comparability_graph() {
    for p in posets_up_to(5) {
        let antichains = p.antichains();
        let stable: Vec<Subset> = p
            .comparability_graph()
            .stable_sets()
            .iter()
            .map(|s| s.subset())
            .collect();
        assert_eq!(antichains, stable);
    }
}

#[test]
fn comparability_graphs_are_perfect_in_random_samples() {
    let mut rng = SplitMix64::new(0x5eed);
    for _ in 0..1000 {
        let p = random_poset(&mut rng, 6);
        assert!(p.comparability_graph().is_perfect());
    }
}

#[test]
fn maximal_cliques_are_maximal_cliques_and_cover() {
    for g in (1..=5).flat_map(all_graphs) {
        let cliques = g.maximal_cliques();
        let mut covered = Subset::EMPTY;
        for &c in &cliques {
            assert!(g.is_clique(c));
            covered = covered | c;
            // Maximality: no vertex extends the clique.
            for v in 0..g.size() {
                if !c.contains(v) {
                    assert!(!g.is_clique(c.insert(v)));
                }
            }
        }
        assert_eq!(covered, Subset::full(g.size()), "isolated vertex missed");
        // No duplicates.
        let set: std::collections::HashSet<_> = cliques.iter().collect();
        assert_eq!(set.len(), cliques.len());
    }
}

#[test]
fn connected_bipartite_matches_brute_force_exhaustively() {
    // Brute force: connectivity by DFS over the edge list, bipartiteness by
    // trying all 2-colorings.
    fn brute(g: &SimpleGraph) -> bool {
        let n = g.size();
        if n == 0 {
            return false;
        }
        let mut reached = Subset::singleton(0);
        let mut stack = vec![0usize];
        while let Some(v) = stack.pop() {
            for w in 0..n {
                if g.has_edge(v, w) && !reached.contains(w) {
                    reached = reached.insert(w);
                    stack.push(w);
                }
            }
        }
        if reached != Subset::full(n) {
            return false;
        }
        (0..(1u128 << n)).any(|bits| {
            let side = Subset::from_bits(bits);
            g.edges()
                .iter()
                .all(|&(a, b)| side.contains(a) != side.contains(b))
        })
    }

    for n in 0..=6 {
        for g in all_graphs(n) {
            assert_eq!(g.is_connected_bipartite(), brute(&g), "graph {g:?}");
        }
    }
}

proptest! {
    /// Bron-Kerbosch against brute-force subset filtering on random graphs.
    #[test]
    fn bron_kerbosch_matches_brute_force(n in 1usize..=8, edge_bits in any::<u64>()) {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
            .collect();
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(k, _)| edge_bits & (1 << k) != 0)
            .map(|(_, &e)| e)
            .collect();
        let g = SimpleGraph::from_edges(n, &edges).unwrap();

        let cliques: Vec<Subset> = (1..(1u128 << n))
            .map(Subset::from_bits)
            .filter(|&s| g.is_clique(s))
            .collect();
        let mut expected: Vec<Subset> = cliques
            .iter()
            .copied()
            .filter(|&c| !cliques.iter().any(|&d| c != d && c.is_subset_of(d)))
            .collect();
        expected.sort_by(Subset::canonical_cmp);

        prop_assert_eq!(g.maximal_cliques(), expected);
    }

    /// Stable sets and ideals agree with their definitions on random posets.
    #[test]
    fn ideals_are_downward_closed(seed in any::<u64>()) {
        let mut rng = SplitMix64::new(seed);
        let p = random_poset(&mut rng, 5);
        for i in p.ideals() {
            let s = i.subset();
            for x in s.iter() {
                for y in 0..p.size() {
                    if p.lt(y, x) {
                        prop_assert!(s.contains(y));
                    }
                }
            }
        }
    }
}
