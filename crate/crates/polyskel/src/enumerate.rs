//! Exhaustive enumeration of small labeled instances for sweeps.

use crate::graph::SimpleGraph;
use crate::poset::Poset;
use crate::subset::Subset;

/// All labeled posets on `d` elements, by assigning `<`, `>`, or
/// incomparable to every pair and keeping the transitive outcomes.
/// Counts follow the labeled-poset sequence 1, 3, 19, 219, 4231, ..
pub fn all_posets(d: usize) -> Vec<Poset> {
    assert!(d >= 1, "posets have positive size");
    assert!(d <= 6, "exhaustive poset enumeration capped at d = 6");
    let pairs: Vec<(usize, usize)> = (0..d)
        .flat_map(|i| ((i + 1)..d).map(move |j| (i, j)))
        .collect();
    let mut out = Vec::new();
    let mut assignment = vec![0u8; pairs.len()];
    loop {
        let mut less = vec![Subset::EMPTY; d];
        for (k, &(i, j)) in pairs.iter().enumerate() {
            match assignment[k] {
                1 => less[i] = less[i].insert(j),
                2 => less[j] = less[j].insert(i),
                _ => {}
            }
        }
        if let Ok(p) = Poset::from_less_table(d, less) {
            out.push(p);
        }
        // odometer over {0,1,2}^pairs
        let mut pos = 0;
        loop {
            if pos == assignment.len() {
                return out;
            }
            assignment[pos] += 1;
            if assignment[pos] < 3 {
                break;
            }
            assignment[pos] = 0;
            pos += 1;
        }
    }
}

/// All labeled graphs on `n` vertices (all edge subsets).
pub fn all_graphs(n: usize) -> Vec<SimpleGraph> {
    assert!(n <= 6, "exhaustive graph enumeration capped at n = 6");
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
        .collect();
    (0u64..(1u64 << pairs.len()))
        .map(|mask| {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(k, _)| mask & (1 << k) != 0)
                .map(|(_, &e)| e)
                .collect();
            SimpleGraph::from_edges(n, &edges).expect("subset of pairs is simple")
        })
        .collect()
}
