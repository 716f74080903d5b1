//! Simple graphs, stable sets, maximal cliques, and perfectness.

use crate::error::{Error, Result};
use crate::subset::Subset;

/// An undirected simple graph on vertices `0..size`.
///
/// ```
/// use polyskel::graph::SimpleGraph;
/// let path = SimpleGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
/// assert_eq!(path.stable_sets().len(), 5);
/// assert_eq!(path.maximal_cliques().len(), 2);
/// ```
#[derive(Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    size: usize,
    adj: Vec<Subset>,
    edges: Vec<(usize, usize)>,
}

impl SimpleGraph {
    /// Builds a graph from an edge list. Loops and duplicate edges are
    /// rejected; a zero-vertex graph is allowed (it arises as an induced
    /// subgraph on the empty set).
    pub fn from_edges(size: usize, edges: &[(usize, usize)]) -> Result<SimpleGraph> {
        if size > Subset::MAX_GROUND {
            return Err(Error::GroundSetTooLarge {
                size,
                max: Subset::MAX_GROUND,
            });
        }
        let mut adj = vec![Subset::EMPTY; size];
        let mut canon: Vec<(usize, usize)> = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            for ix in [a, b] {
                if ix >= size {
                    return Err(Error::IndexOutOfRange { index: ix, size });
                }
            }
            if a == b {
                return Err(Error::LoopEdge(a));
            }
            let (lo, hi) = (a.min(b), a.max(b));
            if adj[lo].contains(hi) {
                return Err(Error::DuplicateEdge(lo, hi));
            }
            adj[lo] = adj[lo].insert(hi);
            adj[hi] = adj[hi].insert(lo);
            canon.push((lo, hi));
        }
        canon.sort_unstable();
        Ok(SimpleGraph {
            size,
            adj,
            edges: canon,
        })
    }

    /// The empty graph on `size` vertices.
    pub fn empty(size: usize) -> SimpleGraph {
        SimpleGraph::from_edges(size, &[]).expect("empty edge list is valid")
    }

    /// The complete graph.
    pub fn complete(size: usize) -> SimpleGraph {
        let mut edges = Vec::new();
        for i in 0..size {
            for j in (i + 1)..size {
                edges.push((i, j));
            }
        }
        SimpleGraph::from_edges(size, &edges).expect("complete edge list is valid")
    }

    /// The cycle `0 - 1 - .. - (n-1) - 0` (requires `n >= 3`).
    pub fn cycle(size: usize) -> SimpleGraph {
        assert!(size >= 3, "a cycle needs at least 3 vertices");
        let mut edges: Vec<_> = (1..size).map(|i| (i - 1, i)).collect();
        edges.push((0, size - 1));
        SimpleGraph::from_edges(size, &edges).expect("cycle edge list is valid")
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.size && self.adj[a].contains(b)
    }

    pub fn neighbors(&self, v: usize) -> Subset {
        self.adj[v]
    }

    pub fn complement(&self) -> SimpleGraph {
        let mut edges = Vec::new();
        for i in 0..self.size {
            for j in (i + 1)..self.size {
                if !self.adj[i].contains(j) {
                    edges.push((i, j));
                }
            }
        }
        SimpleGraph::from_edges(self.size, &edges).expect("complement is simple")
    }

    /// Is `s` a stable (independent) set?
    pub fn is_stable(&self, s: Subset) -> Result<bool> {
        self.check_range(s)?;
        Ok(s.iter().all(|i| (self.adj[i] & s).is_empty()))
    }

    /// All stable sets in canonical order; always contains the empty set.
    pub fn stable_sets(&self) -> Vec<StableSet> {
        let mut out: Vec<Subset> = (0..(1u128 << self.size))
            .map(Subset::from_bits)
            .filter(|&s| s.iter().all(|i| (self.adj[i] & s).is_empty()))
            .collect();
        out.sort_by(Subset::canonical_cmp);
        out.into_iter().map(StableSet).collect()
    }

    /// Is `s` a clique?
    pub fn is_clique(&self, s: Subset) -> bool {
        s.iter().all(|i| (s - self.adj[i]) == Subset::singleton(i))
    }

    /// All inclusion-maximal cliques, each exactly once, in canonical order.
    ///
    /// Bron–Kerbosch with pivoting; isolated vertices come out as singleton
    /// maximal cliques.
    pub fn maximal_cliques(&self) -> Vec<Subset> {
        let mut out = Vec::new();
        bron_kerbosch(
            &self.adj,
            Subset::EMPTY,
            Subset::full(self.size),
            Subset::EMPTY,
            &mut out,
        );
        out.sort_by(Subset::canonical_cmp);
        out
    }

    /// The subgraph induced on `s`, with the map from new indices back to
    /// the original labels.
    pub fn induced_subgraph(&self, s: Subset) -> Result<(SimpleGraph, Vec<usize>)> {
        self.check_range(s)?;
        let labels = s.indices();
        let mut edges = Vec::new();
        for (new_a, &a) in labels.iter().enumerate() {
            for (new_b, &b) in labels.iter().enumerate().skip(new_a + 1) {
                if self.adj[a].contains(b) {
                    edges.push((new_a, new_b));
                }
            }
        }
        let g = SimpleGraph::from_edges(labels.len(), &edges)?;
        Ok((g, labels))
    }

    /// Is the graph connected and bipartite (no odd cycle)?
    ///
    /// The zero-vertex graph counts as not connected; a single vertex is
    /// connected and vacuously bipartite.
    pub fn is_connected_bipartite(&self) -> bool {
        if self.size == 0 {
            return false;
        }
        let mut color = vec![None::<bool>; self.size];
        color[0] = Some(false);
        let mut queue = std::collections::VecDeque::from([0usize]);
        let mut reached = 1usize;
        while let Some(v) = queue.pop_front() {
            let cv = color[v].expect("queued vertices are colored");
            for w in self.adj[v].iter() {
                match color[w] {
                    None => {
                        color[w] = Some(!cv);
                        reached += 1;
                        queue.push_back(w);
                    }
                    Some(cw) => {
                        if cw == cv {
                            return false;
                        }
                    }
                }
            }
        }
        reached == self.size
    }

    /// Desk-scale perfectness test: neither the graph nor its complement may
    /// contain an induced odd cycle of length at least 5. Exponential in the
    /// vertex count; intended for `n <= ~12`.
    pub fn is_perfect(&self) -> bool {
        !has_induced_odd_hole(self) && !has_induced_odd_hole(&self.complement())
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

impl std::fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SimpleGraph(n={}, edges={:?})", self.size, self.edges)
    }
}

/// A stable set, validated against its graph at construction.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct StableSet(Subset);

impl StableSet {
    pub fn new(graph: &SimpleGraph, s: Subset) -> Result<StableSet> {
        if graph.is_stable(s)? {
            Ok(StableSet(s))
        } else {
            Err(Error::NotStable)
        }
    }

    pub fn subset(&self) -> Subset {
        self.0
    }
}

impl std::fmt::Display for StableSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Bron–Kerbosch with pivoting over bitmask adjacency. Exposed within the
/// crate so skeleton graphs can reuse it.
pub(crate) fn bron_kerbosch(
    adj: &[Subset],
    r: Subset,
    mut p: Subset,
    mut x: Subset,
    out: &mut Vec<Subset>,
) {
    if p.is_empty() && x.is_empty() {
        if !r.is_empty() {
            out.push(r);
        }
        return;
    }
    // Pivot: vertex of P | X with the most neighbors in P; ties go to the
    // smallest index so the recursion is deterministic.
    let pivot = (p | x)
        .iter()
        .max_by_key(|&u| ((adj[u] & p).card(), usize::MAX - u))
        .expect("P | X nonempty");
    for v in (p - adj[pivot]).indices() {
        let nv = adj[v];
        bron_kerbosch(adj, r.insert(v), p & nv, x & nv, out);
        p = p.remove(v);
        x = x.insert(v);
    }
}

fn has_induced_odd_hole(g: &SimpleGraph) -> bool {
    let n = g.size();
    let mut k = 5;
    while k <= n {
        let mut mask: u128 = (1u128 << k) - 1;
        let limit: u128 = if n == 128 { u128::MAX } else { 1u128 << n };
        // Gosper's hack over all k-subsets of the vertex set.
        loop {
            let s = Subset::from_bits(mask);
            if induces_cycle(g, s) {
                return true;
            }
            // next k-subset
            let c = mask & mask.wrapping_neg();
            let r = mask + c;
            if r >= limit || c == 0 {
                break;
            }
            mask = (((r ^ mask) >> 2) / c) | r;
            if mask >= limit {
                break;
            }
        }
        k += 2;
    }
    false
}

/// Does `g` induce a (chordless) cycle on `s`? Since the subgraph is
/// induced, it is a cycle exactly when it is connected and 2-regular.
fn induces_cycle(g: &SimpleGraph, s: Subset) -> bool {
    if !s.iter().all(|v| (g.neighbors(v) & s).card() == 2) {
        return false;
    }
    let start = s.min().expect("cycle candidate nonempty");
    let mut reached = Subset::singleton(start);
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for w in ((g.neighbors(v) & s) - reached).iter() {
            reached = reached.insert(w);
            stack.push(w);
        }
    }
    reached == s
}
