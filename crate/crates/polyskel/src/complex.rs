//! Skeleton graphs, clique enumeration, and simplicial complexes.

use crate::error::{Error, Result};
use crate::graph::bron_kerbosch;
use crate::subset::Subset;

/// The 1-skeleton of a polytope: a simple graph on vertex indices carrying
/// a payload (ideal, stable set, lattice point, ..) per vertex so reports
/// stay human-readable.
#[derive(Clone, Debug)]
pub struct SkeletonGraph<P> {
    payloads: Vec<P>,
    adj: Vec<Subset>,
    edges: Vec<(usize, usize)>,
}

impl<P> SkeletonGraph<P> {
    pub fn new(payloads: Vec<P>, edges: &[(usize, usize)]) -> Result<SkeletonGraph<P>> {
        let n = payloads.len();
        if n > Subset::MAX_GROUND {
            return Err(Error::GroundSetTooLarge {
                size: n,
                max: Subset::MAX_GROUND,
            });
        }
        let mut adj = vec![Subset::EMPTY; n];
        let mut canon = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            for ix in [a, b] {
                if ix >= n {
                    return Err(Error::IndexOutOfRange { index: ix, size: n });
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
        Ok(SkeletonGraph {
            payloads,
            adj,
            edges: canon,
        })
    }

    /// Builds the skeleton by running an edge predicate over all payload
    /// pairs.
    pub fn from_edge_predicate(
        payloads: Vec<P>,
        mut adjacent: impl FnMut(&P, &P) -> Result<bool>,
    ) -> Result<SkeletonGraph<P>> {
        let n = payloads.len();
        let mut edges = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                if adjacent(&payloads[i], &payloads[j])? {
                    edges.push((i, j));
                }
            }
        }
        SkeletonGraph::new(payloads, &edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.payloads.len()
    }

    pub fn payload(&self, i: usize) -> &P {
        &self.payloads[i]
    }

    pub fn payloads(&self) -> &[P] {
        &self.payloads
    }

    /// Edges as sorted `(lo, hi)` pairs.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.adj.len() && self.adj[a].contains(b)
    }

    pub fn neighbors(&self, v: usize) -> Subset {
        self.adj[v]
    }

    /// All inclusion-maximal cliques, canonical order.
    pub fn maximal_cliques(&self) -> Vec<Subset> {
        let mut out = Vec::new();
        bron_kerbosch(
            &self.adj,
            Subset::EMPTY,
            Subset::full(self.vertex_count()),
            Subset::EMPTY,
            &mut out,
        );
        out.sort_by(Subset::canonical_cmp);
        out
    }

    /// Every nonempty clique (vertices, edges, triangles, ..), canonical
    /// order: maximal cliques expanded by downward closure.
    pub fn all_cliques(&self) -> Vec<Subset> {
        let mut seen = std::collections::HashSet::new();
        for m in self.maximal_cliques() {
            for s in m.subsets() {
                if !s.is_empty() {
                    seen.insert(s);
                }
            }
        }
        let mut out: Vec<Subset> = seen.into_iter().collect();
        out.sort_by(Subset::canonical_cmp);
        out
    }

    /// The clique complex: facets are exactly the maximal cliques.
    pub fn clique_complex(&self) -> SimplicialComplex {
        SimplicialComplex::from_faces(self.vertex_count(), self.maximal_cliques())
    }
}

/// A simplicial complex on `ambient` vertex indices, stored by its
/// inclusion-maximal faces.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SimplicialComplex {
    ambient: usize,
    facets: Vec<Subset>,
}

impl SimplicialComplex {
    /// Builds the complex generated by `faces` (downward closure implied);
    /// only the maximal ones are kept.
    pub fn from_faces(
        ambient: usize,
        faces: impl IntoIterator<Item = Subset>,
    ) -> SimplicialComplex {
        let faces: Vec<Subset> = faces.into_iter().filter(|f| !f.is_empty()).collect();
        let mut facets: Vec<Subset> = faces
            .iter()
            .copied()
            .filter(|&f| !faces.iter().any(|&g| f != g && f.is_subset_of(g)))
            .collect();
        facets.sort_by(Subset::canonical_cmp);
        facets.dedup();
        SimplicialComplex { ambient, facets }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// Inclusion-maximal faces, canonical order; empty for the void complex.
    pub fn facets(&self) -> &[Subset] {
        &self.facets
    }

    pub fn contains(&self, face: Subset) -> bool {
        !face.is_empty() && self.facets.iter().any(|&f| face.is_subset_of(f))
    }

    /// All nonempty faces, canonical order.
    pub fn all_faces(&self) -> Vec<Subset> {
        let mut seen = std::collections::HashSet::new();
        for f in &self.facets {
            for s in f.subsets() {
                if !s.is_empty() {
                    seen.insert(s);
                }
            }
        }
        let mut out: Vec<Subset> = seen.into_iter().collect();
        out.sort_by(Subset::canonical_cmp);
        out
    }

    /// Dimension of the complex (`None` for the void complex).
    pub fn dimension(&self) -> Option<usize> {
        self.facets.iter().map(|f| f.card() - 1).max()
    }

    /// Face counts by dimension: entry `k` counts the k-dimensional faces.
    pub fn f_vector(&self) -> Vec<usize> {
        let faces = self.all_faces();
        let dim = match self.dimension() {
            None => return Vec::new(),
            Some(d) => d,
        };
        let mut f = vec![0usize; dim + 1];
        for face in faces {
            f[face.card() - 1] += 1;
        }
        f
    }
}

/// One face present in only one of two complexes.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ComplexDifference {
    pub face: Subset,
    /// True when the face belongs to the first complex only.
    pub only_in_first: bool,
}

/// Compares two complexes on the same ambient vertex set. Returns `None`
/// when they are equal, otherwise one face from the symmetric difference of
/// the face families.
///
/// Facet sets determine the complexes, so equality is a facet-list
/// comparison; the diagnostic hunts for a facet of one that the other does
/// not contain as a face.
pub fn compare_complexes(
    a: &SimplicialComplex,
    b: &SimplicialComplex,
) -> Result<Option<ComplexDifference>> {
    if a.ambient() != b.ambient() {
        return Err(Error::AmbientMismatch(a.ambient(), b.ambient()));
    }
    if a.facets == b.facets {
        return Ok(None);
    }
    for &f in a.facets() {
        if !b.contains(f) {
            return Ok(Some(ComplexDifference {
                face: f,
                only_in_first: true,
            }));
        }
    }
    for &f in b.facets() {
        if !a.contains(f) {
            return Ok(Some(ComplexDifference {
                face: f,
                only_in_first: false,
            }));
        }
    }
    // Same face families force identical facet lists.
    unreachable!("facet lists differ but each is contained in the other");
}
