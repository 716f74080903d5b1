//! Finite posets, poset ideals, and Hasse diagrams.
//!
//! A [`Poset`] on `d` elements stores its strict order as a bitmask table and
//! is constructed either from a list of cover relations (the compact,
//! human-writable form) or from a full strict-less table. Elements are
//! indexed `0..d`.

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::subset::Subset;

/// A finite partially ordered set on elements `0..size`.
///
/// The strict order is irreflexive, antisymmetric and transitive; the cover
/// relation (Hasse diagram) is derived as its transitive reduction.
///
/// ```
/// use polyskel::poset::Poset;
/// // a < c, b < c
/// let p = Poset::from_covers(3, &[(0, 2), (1, 2)]).unwrap();
/// assert!(p.lt(0, 2));
/// assert!(!p.comparable(0, 1));
/// assert_eq!(p.ideals().len(), 5);
/// ```
#[derive(Clone, PartialEq, Eq)]
pub struct Poset {
    size: usize,
    /// `above[i]` is the set of `j` with `p_i < p_j`.
    above: Vec<Subset>,
    /// `below[i]` is the set of `j` with `p_j < p_i`.
    below: Vec<Subset>,
    /// Cover pairs `(i, j)` with `p_i` covered by `p_j`, sorted.
    covers: Vec<(usize, usize)>,
}

impl Poset {
    /// Builds a poset from cover relations `(lower, upper)`.
    ///
    /// The transitive closure is computed, acyclicity validated, and the
    /// cover list re-derived as the transitive reduction (so redundant input
    /// pairs are absorbed). Duplicate input pairs and loops are rejected.
    pub fn from_covers(size: usize, covers: &[(usize, usize)]) -> Result<Poset> {
        if size == 0 {
            return Err(Error::EmptyPoset);
        }
        if size > Subset::MAX_GROUND {
            return Err(Error::GroundSetTooLarge {
                size,
                max: Subset::MAX_GROUND,
            });
        }
        let mut succ = vec![Subset::EMPTY; size];
        let mut seen = std::collections::HashSet::new();
        for &(lo, hi) in covers {
            for ix in [lo, hi] {
                if ix >= size {
                    return Err(Error::IndexOutOfRange { index: ix, size });
                }
            }
            if lo == hi {
                return Err(Error::CyclicCovers {
                    lower: lo,
                    upper: hi,
                });
            }
            if !seen.insert((lo, hi)) {
                return Err(Error::DuplicateCover {
                    lower: lo,
                    upper: hi,
                });
            }
            succ[lo] = succ[lo].insert(hi);
        }
        // Reachability from each element; a cycle shows up as i reaching i.
        let mut above = vec![Subset::EMPTY; size];
        for i in 0..size {
            let mut reach = Subset::EMPTY;
            let mut stack: Vec<usize> = succ[i].iter().collect();
            while let Some(v) = stack.pop() {
                if reach.contains(v) {
                    continue;
                }
                reach = reach.insert(v);
                stack.extend(succ[v].iter());
            }
            if reach.contains(i) {
                // Attribute the cycle to one of its cover pairs.
                let &(lo, hi) = covers
                    .iter()
                    .find(|&&(lo, hi)| reach.contains(lo) && reach.contains(hi))
                    .expect("cycle must pass through input covers");
                return Err(Error::CyclicCovers {
                    lower: lo,
                    upper: hi,
                });
            }
            above[i] = reach;
        }
        Ok(Self::from_above_table(size, above))
    }

    /// Builds a poset from a full strict-less table: `less[i]` is the set of
    /// `j` with `p_i < p_j`. The table must be a strict partial order.
    pub fn from_less_table(size: usize, less: Vec<Subset>) -> Result<Poset> {
        if size == 0 {
            return Err(Error::EmptyPoset);
        }
        if less.len() != size {
            return Err(Error::DimensionMismatch {
                row: 0,
                got: less.len(),
                expected: size,
            });
        }
        let full = Subset::full(size);
        for (i, &s) in less.iter().enumerate() {
            if !s.is_subset_of(full) || s.contains(i) {
                return Err(Error::NotAPartialOrder);
            }
        }
        for i in 0..size {
            for j in less[i].iter() {
                // antisymmetry and transitivity
                if less[j].contains(i) || !less[j].is_subset_of(less[i]) {
                    return Err(Error::NotAPartialOrder);
                }
            }
        }
        Ok(Self::from_above_table(size, less))
    }

    fn from_above_table(size: usize, above: Vec<Subset>) -> Poset {
        let mut below = vec![Subset::EMPTY; size];
        for (i, up) in above.iter().enumerate() {
            for j in up.iter() {
                below[j] = below[j].insert(i);
            }
        }
        // Transitive reduction: i covered by j iff i < j and nothing between.
        let mut covers = Vec::new();
        for (i, up) in above.iter().enumerate() {
            for j in up.iter() {
                if (*up & below[j]).is_empty() {
                    covers.push((i, j));
                }
            }
        }
        covers.sort_unstable();
        Poset {
            size,
            above,
            below,
            covers,
        }
    }

    /// The chain `p_0 < p_1 < .. < p_{d-1}`.
    pub fn chain(size: usize) -> Poset {
        let covers: Vec<_> = (1..size).map(|i| (i - 1, i)).collect();
        Poset::from_covers(size, &covers).expect("chain covers are valid")
    }

    /// The antichain on `d` pairwise incomparable elements.
    pub fn antichain(size: usize) -> Poset {
        Poset::from_covers(size, &[]).expect("empty cover list is valid")
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Strict order test `p_i < p_j`.
    pub fn lt(&self, i: usize, j: usize) -> bool {
        self.above[i].contains(j)
    }

    pub fn comparable(&self, i: usize, j: usize) -> bool {
        self.lt(i, j) || self.lt(j, i)
    }

    /// Elements strictly below `i`.
    pub fn down_set(&self, i: usize) -> Subset {
        self.below[i]
    }

    /// Elements strictly above `i`.
    pub fn up_set(&self, i: usize) -> Subset {
        self.above[i]
    }

    pub fn minimal_elements(&self) -> Subset {
        let mut s = Subset::EMPTY;
        for i in 0..self.size {
            if self.below[i].is_empty() {
                s = s.insert(i);
            }
        }
        s
    }

    pub fn maximal_elements(&self) -> Subset {
        let mut s = Subset::EMPTY;
        for i in 0..self.size {
            if self.above[i].is_empty() {
                s = s.insert(i);
            }
        }
        s
    }

    /// Cover pairs `(lower, upper)` of the Hasse diagram, sorted.
    pub fn hasse_edges(&self) -> &[(usize, usize)] {
        &self.covers
    }

    /// Is `s` downward closed?
    pub fn is_ideal(&self, s: Subset) -> Result<bool> {
        self.check_range(s)?;
        Ok(s.iter().all(|i| self.below[i].is_subset_of(s)))
    }

    /// All poset ideals in canonical order (cardinality, then index-list
    /// lexicographic). Always contains the empty set and the full set.
    pub fn ideals(&self) -> Vec<Ideal> {
        let mut out: Vec<Subset> = (0..(1u128 << self.size))
            .map(Subset::from_bits)
            .filter(|&s| s.iter().all(|i| self.below[i].is_subset_of(s)))
            .collect();
        out.sort_by(Subset::canonical_cmp);
        out.into_iter().map(Ideal).collect()
    }

    /// Is the subgraph of the Hasse diagram induced on `s` connected?
    ///
    /// The empty set is rejected rather than given a convention.
    pub fn connected_in_hasse(&self, s: Subset) -> Result<bool> {
        self.check_range(s)?;
        let start = s.min().ok_or(Error::EmptySubset)?;
        let mut reached = Subset::singleton(start);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            let nbrs = (self.cover_neighbors(v) & s) - reached;
            for w in nbrs.iter() {
                reached = reached.insert(w);
                stack.push(w);
            }
        }
        Ok(reached == s)
    }

    /// Neighbors of `v` in the Hasse diagram (covers in both directions).
    fn cover_neighbors(&self, v: usize) -> Subset {
        let mut s = Subset::EMPTY;
        for &(lo, hi) in &self.covers {
            if lo == v {
                s = s.insert(hi);
            } else if hi == v {
                s = s.insert(lo);
            }
        }
        s
    }

    /// All antichains (subsets of pairwise incomparable elements), canonical
    /// order. Cross-checked elsewhere against the stable sets of the
    /// comparability graph.
    pub fn antichains(&self) -> Vec<Subset> {
        let mut out: Vec<Subset> = (0..(1u128 << self.size))
            .map(Subset::from_bits)
            .filter(|&s| {
                s.iter()
                    .all(|i| (self.above[i] & s).is_empty() && (self.below[i] & s).is_empty())
            })
            .collect();
        out.sort_by(Subset::canonical_cmp);
        out
    }

    /// The comparability graph: an edge for every comparable pair.
    pub fn comparability_graph(&self) -> SimpleGraph {
        let mut edges = Vec::new();
        for i in 0..self.size {
            for j in (i + 1)..self.size {
                if self.comparable(i, j) {
                    edges.push((i, j));
                }
            }
        }
        SimpleGraph::from_edges(self.size, &edges).expect("comparable pairs form a simple graph")
    }

    /// Is `s` convex (`a < b < c` with `a, c` in `s` forces `b` in `s`)?
    pub fn is_convex(&self, s: Subset) -> Result<bool> {
        self.check_range(s)?;
        for a in s.iter() {
            for c in s.iter() {
                if self.lt(a, c) && !(self.above[a] & self.below[c]).is_subset_of(s) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    fn check_range(&self, s: Subset) -> Result<()> {
        match s.iter().find(|&i| i >= self.size) {
            Some(index) => Err(Error::IndexOutOfRange {
                index,
                size: self.size,
            }),
            None => Ok(()),
        }
    }
}

impl std::fmt::Debug for Poset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Poset(d={}, covers={:?})", self.size, self.covers)
    }
}

/// A poset ideal (down-set), validated against its poset at construction.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Ideal(Subset);

impl Ideal {
    pub fn new(poset: &Poset, s: Subset) -> Result<Ideal> {
        if poset.is_ideal(s)? {
            Ok(Ideal(s))
        } else {
            Err(Error::NotAnIdeal)
        }
    }

    pub fn subset(&self) -> Subset {
        self.0
    }
}

impl std::fmt::Display for Ideal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}
