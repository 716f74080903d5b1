//! The order polytope of a poset: vertices, facet system, combinatorial
//! edge and clique criteria, and the hyperplane construction that carves a
//! skeleton clique out as a face.
//!
//! Vertices are indicator vectors of poset ideals. Two ideals span an edge
//! exactly when one contains the other and their difference induces a
//! connected piece of the Hasse diagram; a vertex set is a clique exactly
//! when it sorts into an inclusion chain whose pairwise differences are all
//! connected.

use crate::complex::SkeletonGraph;
use crate::error::{Error, Result};
use crate::geometry::{Hyperplane, LatticePoint, Relation};
use crate::poset::{Ideal, Poset};
use crate::subset::Subset;

/// Indicator vectors of all ideals, aligned index-for-index with
/// [`Poset::ideals`].
pub fn order_polytope_vertices(poset: &Poset) -> Vec<LatticePoint> {
    poset
        .ideals()
        .iter()
        .map(|i| LatticePoint::indicator(poset.size(), i.subset()))
        .collect()
}

/// The facet system of the order polytope, oriented for ideal indicators:
/// `x_lo >= x_hi` for every cover `lo < hi`, `x_i <= 1` for minimal
/// elements, `x_i >= 0` for maximal elements.
///
/// Its 0/1 solutions are exactly the ideal indicators.
pub fn order_polytope_h_description(poset: &Poset) -> Vec<Hyperplane> {
    let d = poset.size();
    let mut out = Vec::new();
    for i in poset.minimal_elements().iter() {
        let mut coeffs = vec![0i64; d];
        coeffs[i] = 1;
        out.push(Hyperplane::from_ints(&coeffs, Relation::Le, 1));
    }
    for i in poset.maximal_elements().iter() {
        let mut coeffs = vec![0i64; d];
        coeffs[i] = 1;
        out.push(Hyperplane::from_ints(&coeffs, Relation::Ge, 0));
    }
    for &(lo, hi) in poset.hasse_edges() {
        let mut coeffs = vec![0i64; d];
        coeffs[lo] = 1;
        coeffs[hi] = -1;
        out.push(Hyperplane::from_ints(&coeffs, Relation::Ge, 0));
    }
    out
}

/// Edge criterion: distinct ideals span an edge iff one contains the other
/// and the difference is connected in the Hasse diagram.
pub fn is_order_edge(poset: &Poset, a: &Ideal, b: &Ideal) -> Result<bool> {
    let (sa, sb) = (a.subset(), b.subset());
    if sa == sb {
        return Err(Error::IdenticalInputs);
    }
    let (small, large) = if sa.is_subset_of(sb) {
        (sa, sb)
    } else if sb.is_subset_of(sa) {
        (sb, sa)
    } else {
        return Ok(false);
    };
    poset.connected_in_hasse(large - small)
}

/// The skeleton on ideal indices, edges by [`is_order_edge`].
pub fn order_skeleton(poset: &Poset) -> SkeletonGraph<Ideal> {
    SkeletonGraph::from_edge_predicate(poset.ideals(), |a, b| is_order_edge(poset, a, b))
        .expect("ideal count fits the skeleton size cap")
}

/// Clique test returning the inclusion chain when the ideals do form a
/// clique of the skeleton. Pairwise distinctness is required.
pub fn order_clique_chain(poset: &Poset, ideals: &[Ideal]) -> Result<Option<Vec<Ideal>>> {
    let mut seen = std::collections::HashSet::new();
    for i in ideals {
        if !seen.insert(i.subset()) {
            return Err(Error::DuplicateInput);
        }
    }
    let mut chain = ideals.to_vec();
    chain.sort_by(|a, b| Subset::canonical_cmp(&a.subset(), &b.subset()));
    for (k, a) in chain.iter().enumerate() {
        for b in chain.iter().skip(k + 1) {
            if !is_order_edge(poset, a, b)? {
                return Ok(None);
            }
        }
    }
    Ok(Some(chain))
}

/// The equality system whose intersection with the polytope is the face
/// spanned by a skeleton clique, given as its inclusion chain
/// `I_0 c I_1 c .. c I_q`:
///
/// * `x_i = x_j` for every pair inside each consecutive difference,
/// * `x_i = 1` for every element of `I_0`,
/// * `x_i = 0` for every element outside `I_q`.
pub fn order_clique_face_system(poset: &Poset, chain: &[Ideal]) -> Result<Vec<Hyperplane>> {
    match order_clique_chain(poset, chain)? {
        Some(sorted) if chains_equal(&sorted, chain) => {}
        _ => return Err(Error::NotAnOrderClique),
    }
    let d = poset.size();
    let mut out = Vec::new();
    let first = chain.first().expect("clique is nonempty").subset();
    let last = chain.last().expect("clique is nonempty").subset();
    for i in first.iter() {
        out.push(Hyperplane::coord_fixed(d, i, 1));
    }
    for i in Subset::full(d).iter() {
        if !last.contains(i) {
            out.push(Hyperplane::coord_fixed(d, i, 0));
        }
    }
    for window in chain.windows(2) {
        let diff = window[1].subset() - window[0].subset();
        let idx = diff.indices();
        for (k, &i) in idx.iter().enumerate() {
            for &j in &idx[k + 1..] {
                out.push(Hyperplane::coords_equal(d, i, j));
            }
        }
    }
    Ok(out)
}

fn chains_equal(a: &[Ideal], b: &[Ideal]) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x.subset() == y.subset())
}
