//! Seeded random instances.
//!
//! The generator is a self-contained SplitMix64 so that a fixed seed gives
//! byte-identical output everywhere, independent of external crates.
//! Random perfect graphs are produced as comparability graphs of random
//! posets, which guarantees perfectness without a recognition step.

use crate::graph::SimpleGraph;
use crate::poset::Poset;

/// SplitMix64, the standard 64-bit mixer.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> SplitMix64 {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform value in `0..n` (n > 0), via rejection sampling.
    pub fn below(&mut self, n: u64) -> u64 {
        assert!(n > 0);
        let zone = u64::MAX - (u64::MAX % n);
        loop {
            let v = self.next_u64();
            if v < zone {
                return v % n;
            }
        }
    }

    /// Bernoulli draw with probability `num / den`.
    pub fn chance(&mut self, num: u64, den: u64) -> bool {
        self.below(den) < num
    }

    /// A uniform permutation of `0..n`.
    pub fn permutation(&mut self, n: usize) -> Vec<usize> {
        let mut perm: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            let j = self.below(i as u64 + 1) as usize;
            perm.swap(i, j);
        }
        perm
    }
}

/// A random labeled poset on `d` elements: a random relation density is
/// drawn, relations are added along a random topological order, and the
/// transitive closure makes it a poset.
pub fn random_poset(rng: &mut SplitMix64, d: usize) -> Poset {
    assert!(d >= 1);
    // Density between 20% and 80% in steps, so both sparse and dense
    // orders show up while ideal counts stay at desk scale.
    let density = 20 + rng.below(61);
    let order = rng.permutation(d);
    let mut covers = Vec::new();
    for i in 0..d {
        for j in (i + 1)..d {
            if rng.chance(density, 100) {
                covers.push((order[i], order[j]));
            }
        }
    }
    Poset::from_covers(d, &covers).expect("relations along a permutation are acyclic")
}

/// A random perfect graph: the comparability graph of a random poset.
pub fn random_comparability_graph(rng: &mut SplitMix64, n: usize) -> SimpleGraph {
    random_poset(rng, n).comparability_graph()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixed_seed_reproduces() {
        let a: Vec<u64> = {
            let mut r = SplitMix64::new(42);
            (0..5).map(|_| r.next_u64()).collect()
        };
        let b: Vec<u64> = {
            let mut r = SplitMix64::new(42);
            (0..5).map(|_| r.next_u64()).collect()
        };
        assert_eq!(a, b);
        let mut r1 = SplitMix64::new(7);
        let mut r2 = SplitMix64::new(7);
        assert_eq!(random_poset(&mut r1, 5), random_poset(&mut r2, 5));
    }

    #[test]
    fn random_posets_validate() {
        let mut rng = SplitMix64::new(1);
        for _ in 0..200 {
            let p = random_poset(&mut rng, 6);
            // Round-tripping through the constructor re-runs validation.
            assert_eq!(Poset::from_covers(6, p.hasse_edges()).unwrap(), p);
        }
    }

    #[test]
    fn random_comparability_graphs_are_perfect() {
        let mut rng = SplitMix64::new(9);
        for _ in 0..50 {
            assert!(random_comparability_graph(&mut rng, 6).is_perfect());
        }
    }

    #[test]
    fn permutations_are_permutations() {
        let mut rng = SplitMix64::new(3);
        for n in 1..8 {
            let mut p = rng.permutation(n);
            p.sort_unstable();
            assert_eq!(p, (0..n).collect::<Vec<_>>());
        }
    }
}
