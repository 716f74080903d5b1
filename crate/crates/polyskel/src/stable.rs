//! The stable set polytope of a perfect graph: vertices, the maximal-clique
//! facet system, the symmetric-difference edge criterion, and the
//! clique-family construction that carves a skeleton clique out as a face.
//!
//! The edge and clique criteria are proved through the facet description
//! that is valid for perfect graphs only, so the guarded entry points
//! refuse imperfect input; `_unchecked` variants exist for experiments
//! outside the hypothesis.

use crate::complex::SkeletonGraph;
use crate::error::{Error, Result};
use crate::geometry::{Hyperplane, LatticePoint, Relation};
use crate::graph::{SimpleGraph, StableSet};
use crate::poset::Poset;
use crate::subset::Subset;

/// Indicator vectors of all stable sets, aligned index-for-index with
/// [`SimpleGraph::stable_sets`].
pub fn stab_vertices(graph: &SimpleGraph) -> Vec<LatticePoint> {
    graph
        .stable_sets()
        .iter()
        .map(|w| LatticePoint::indicator(graph.size(), w.subset()))
        .collect()
}

/// The facet system `x_i >= 0` plus `sum_{i in C} x_i <= 1` over maximal
/// cliques `C`. Guarded: the real solution set equals the polytope only for
/// perfect graphs.
pub fn stab_h_description(graph: &SimpleGraph) -> Result<Vec<Hyperplane>> {
    ensure_perfect(graph)?;
    Ok(stab_h_description_unchecked(graph))
}

/// The same system without the perfectness guard. Its 0/1 solutions are the
/// stable-set indicators for every graph; only the fractional part of the
/// claim needs perfectness.
pub fn stab_h_description_unchecked(graph: &SimpleGraph) -> Vec<Hyperplane> {
    let n = graph.size();
    let mut out = Vec::new();
    for i in 0..n {
        let mut coeffs = vec![0i64; n];
        coeffs[i] = 1;
        out.push(Hyperplane::from_ints(&coeffs, Relation::Ge, 0));
    }
    for clique in graph.maximal_cliques() {
        out.push(Hyperplane::subset_sum(n, clique, Relation::Le, 1));
    }
    out
}

/// Edge criterion: distinct stable sets span an edge iff the induced
/// subgraph on their symmetric difference is connected and bipartite.
pub fn is_stab_edge(graph: &SimpleGraph, a: &StableSet, b: &StableSet) -> Result<bool> {
    ensure_perfect(graph)?;
    is_stab_edge_unchecked(graph, a, b)
}

/// The criterion evaluated without the perfectness guard (for experiments
/// on graphs outside the hypothesis).
pub fn is_stab_edge_unchecked(graph: &SimpleGraph, a: &StableSet, b: &StableSet) -> Result<bool> {
    if a.subset() == b.subset() {
        return Err(Error::IdenticalInputs);
    }
    let (induced, _) = graph.induced_subgraph(a.subset() ^ b.subset())?;
    Ok(induced.is_connected_bipartite())
}

/// The skeleton on stable-set indices, edges by [`is_stab_edge`].
pub fn stab_skeleton(graph: &SimpleGraph) -> Result<SkeletonGraph<StableSet>> {
    ensure_perfect(graph)?;
    stab_skeleton_unchecked(graph)
}

/// Skeleton by the unguarded criterion; outside perfect graphs this is an
/// experimental prediction, not a theorem.
pub fn stab_skeleton_unchecked(graph: &SimpleGraph) -> Result<SkeletonGraph<StableSet>> {
    SkeletonGraph::from_edge_predicate(graph.stable_sets(), |a, b| {
        is_stab_edge_unchecked(graph, a, b)
    })
}

/// Clique criterion: pairwise distinct stable sets form a skeleton clique
/// iff every pair passes the edge criterion.
pub fn is_stab_clique(graph: &SimpleGraph, sets: &[StableSet]) -> Result<bool> {
    ensure_perfect(graph)?;
    is_stab_clique_unchecked(graph, sets)
}

pub fn is_stab_clique_unchecked(graph: &SimpleGraph, sets: &[StableSet]) -> Result<bool> {
    let mut seen = std::collections::HashSet::new();
    for s in sets {
        if !seen.insert(s.subset()) {
            return Err(Error::DuplicateInput);
        }
    }
    for (k, a) in sets.iter().enumerate() {
        for b in sets.iter().skip(k + 1) {
            if !is_stab_edge_unchecked(graph, a, b)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// A family of maximal cliques of a graph, validated at construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueFamily {
    cliques: Vec<Subset>,
}

impl CliqueFamily {
    pub fn new(graph: &SimpleGraph, cliques: Vec<Subset>) -> Result<CliqueFamily> {
        let maximal: std::collections::HashSet<Subset> =
            graph.maximal_cliques().into_iter().collect();
        let mut seen = std::collections::HashSet::new();
        for &c in &cliques {
            if !maximal.contains(&c) {
                return Err(Error::NotAMaximalClique(c));
            }
            if !seen.insert(c) {
                return Err(Error::DuplicateInput);
            }
        }
        let mut cliques = cliques;
        cliques.sort_by(Subset::canonical_cmp);
        Ok(CliqueFamily { cliques })
    }

    pub fn members(&self) -> &[Subset] {
        &self.cliques
    }

    pub fn len(&self) -> usize {
        self.cliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }
}

/// The maximal cliques of `graph` meeting every one of the given sets; the
/// family is empty as soon as one of the sets is empty.
pub fn cliques_meeting_all(graph: &SimpleGraph, sets: &[StableSet]) -> CliqueFamily {
    let cliques = graph
        .maximal_cliques()
        .into_iter()
        .filter(|&c| sets.iter().all(|w| c.intersects(w.subset())))
        .collect();
    CliqueFamily { cliques }
}

/// The equality system whose intersection with the polytope is the face
/// spanned by a skeleton clique `C = {W_0, .., W_q}`:
///
/// * `sum_{i in C'} x_i = 1` for every maximal clique `C'` meeting every
///   `W_k` (an empty family imposes nothing),
/// * `x_i = 0` for every vertex outside `W_0 | .. | W_q`.
pub fn stab_clique_face_system(graph: &SimpleGraph, sets: &[StableSet]) -> Result<Vec<Hyperplane>> {
    ensure_perfect(graph)?;
    stab_clique_face_system_unchecked(graph, sets)
}

pub fn stab_clique_face_system_unchecked(
    graph: &SimpleGraph,
    sets: &[StableSet],
) -> Result<Vec<Hyperplane>> {
    if !is_stab_clique_unchecked(graph, sets)? {
        return Err(Error::NotAStabClique);
    }
    let n = graph.size();
    let mut out = Vec::new();
    for &clique in cliques_meeting_all(graph, sets).members() {
        out.push(Hyperplane::subset_sum(n, clique, Relation::Eq, 1));
    }
    let union = sets.iter().fold(Subset::EMPTY, |acc, w| acc | w.subset());
    for i in 0..n {
        if !union.contains(i) {
            out.push(Hyperplane::coord_fixed(n, i, 0));
        }
    }
    Ok(out)
}

/// Vertices of the chain polytope of a poset: the stable set polytope of
/// its comparability graph, whose stable sets are the antichains.
pub fn chain_polytope_vertices(poset: &Poset) -> Vec<LatticePoint> {
    stab_vertices(&poset.comparability_graph())
}

fn ensure_perfect(graph: &SimpleGraph) -> Result<()> {
    if graph.is_perfect() {
        Ok(())
    } else {
        Err(Error::NotPerfect)
    }
}
