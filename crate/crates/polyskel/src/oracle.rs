//! Independent face oracle for 0/1 polytopes given by their vertex lists.
//!
//! A subset `S` of the vertices spans a face exactly when some linear
//! functional is constant on `S` and strictly smaller on every other
//! vertex. Scaling lets the strict gap be taken as 1, which turns the
//! question into exact LP feasibility over the functional's coefficients.
//! Everything here is decided in rational arithmetic; this module never
//! consults the combinatorial edge criteria it is used to audit.

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::complex::{SimplicialComplex, SkeletonGraph};
use crate::error::{Error, Result};
use crate::geometry::{LatticePoint, Relation};
use crate::lp::{lp_feasible_ints, Feasibility, IntConstraint, Rational};
use crate::subset::Subset;

/// A supporting functional `normal . x = offset` certifying a face: equality
/// holds on the face's vertices and `normal . w <= offset - 1` off it.
#[derive(Clone, Debug)]
pub struct FaceWitness {
    pub normal: Vec<Rational>,
    pub offset: Rational,
}

impl FaceWitness {
    /// Exact substitution check of the certificate.
    pub fn certifies(&self, vertices: &[LatticePoint], s: Subset) -> bool {
        let eval = |p: &LatticePoint| -> Rational {
            self.normal
                .iter()
                .zip(p.coords())
                .filter(|(_, &x)| x == 1)
                .map(|(a, _)| a.clone())
                .sum()
        };
        vertices.iter().enumerate().all(|(i, v)| {
            if s.contains(i) {
                eval(v) == self.offset
            } else {
                eval(v) <= &self.offset - BigRational::one()
            }
        })
    }
}

fn validate_vertices(vertices: &[LatticePoint]) -> Result<()> {
    let mut seen = std::collections::HashSet::new();
    for v in vertices {
        if !seen.insert(v.coords()) {
            return Err(Error::DuplicateVertices);
        }
    }
    Ok(())
}

fn check_subset(len: usize, s: Subset) -> Result<()> {
    if s.is_empty() {
        return Err(Error::EmptySubset);
    }
    match s.iter().find(|&i| i >= len) {
        Some(index) => Err(Error::IndexOutOfRange { index, size: len }),
        None => Ok(()),
    }
}

/// Core decision, assuming validated input.
///
/// Two cases have closed-form certificates: the improper face (zero
/// functional) and single vertices, where the +/-1 functional pointing at
/// the vertex separates it from every other 0/1 point by at least its
/// Hamming distance. Everything else goes through the LP.
fn decide_face(vertices: &[LatticePoint], s: Subset) -> Result<Option<FaceWitness>> {
    let dim = vertices.first().map_or(0, LatticePoint::dim);

    let closed_form = if s.card() == vertices.len() {
        Some(FaceWitness {
            normal: vec![Rational::zero(); dim],
            offset: Rational::zero(),
        })
    } else if s.card() == 1 {
        let v = &vertices[s.min().expect("nonempty")];
        let normal: Vec<Rational> = v
            .coords()
            .iter()
            .map(|&c| Rational::from_integer((2 * i64::from(c) - 1).into()))
            .collect();
        let offset = normal
            .iter()
            .zip(v.coords())
            .filter(|(_, &x)| x == 1)
            .map(|(a, _)| a.clone())
            .sum();
        Some(FaceWitness { normal, offset })
    } else {
        None
    };
    if let Some(w) = closed_form {
        assert!(
            w.certifies(vertices, s),
            "closed-form face witness failed certification"
        );
        return Ok(Some(w));
    }

    // Variables (a_1, .., a_d, b): equalities on S, gap-1 inequalities off S.
    let rows: Vec<IntConstraint> = vertices
        .iter()
        .enumerate()
        .map(|(i, v)| {
            let mut coeffs: Vec<i64> = v.coords().iter().map(|&x| i64::from(x)).collect();
            coeffs.push(-1);
            let (relation, bound) = if s.contains(i) {
                (Relation::Eq, 0)
            } else {
                (Relation::Le, -1)
            };
            IntConstraint {
                coeffs,
                relation,
                bound,
            }
        })
        .collect();

    match lp_feasible_ints(dim + 1, &rows)? {
        Feasibility::Feasible(mut w) => {
            let offset = w.pop().expect("witness has d+1 entries");
            let witness = FaceWitness { normal: w, offset };
            // The LP solver already re-substituted; certify once more
            // against the original geometry.
            assert!(
                witness.certifies(vertices, s),
                "face witness failed certification"
            );
            Ok(Some(witness))
        }
        Feasibility::Infeasible => Ok(None),
    }
}

/// Searches for a supporting functional proving that the vertices indexed
/// by `s` are exactly the vertex set of a face. Returns `None` when no such
/// functional exists (so `conv(s)` is not a face).
pub fn face_witness(vertices: &[LatticePoint], s: Subset) -> Result<Option<FaceWitness>> {
    validate_vertices(vertices)?;
    check_subset(vertices.len(), s)?;
    decide_face(vertices, s)
}

/// Is `conv(s)` a face of the polytope spanned by `vertices`, with vertex
/// set exactly `s`?
pub fn is_face(vertices: &[LatticePoint], s: Subset) -> Result<bool> {
    Ok(face_witness(vertices, s)?.is_some())
}

/// A face oracle over one vertex list that validates once and memoizes
/// decisions, for harnesses that query many overlapping subsets.
pub struct FaceCache<'a> {
    vertices: &'a [LatticePoint],
    memo: std::collections::HashMap<Subset, bool>,
}

impl<'a> FaceCache<'a> {
    pub fn new(vertices: &'a [LatticePoint]) -> Result<FaceCache<'a>> {
        validate_vertices(vertices)?;
        Ok(FaceCache {
            vertices,
            memo: std::collections::HashMap::new(),
        })
    }

    pub fn vertices(&self) -> &'a [LatticePoint] {
        self.vertices
    }

    pub fn is_face(&mut self, s: Subset) -> Result<bool> {
        check_subset(self.vertices.len(), s)?;
        if let Some(&hit) = self.memo.get(&s) {
            return Ok(hit);
        }
        let verdict = decide_face(self.vertices, s)?.is_some();
        self.memo.insert(s, verdict);
        Ok(verdict)
    }
}

/// The 1-skeleton computed purely by the oracle: an edge wherever the hull
/// of a vertex pair is a face.
pub fn brute_force_skeleton(vertices: &[LatticePoint]) -> Result<SkeletonGraph<LatticePoint>> {
    if vertices.len() < 2 {
        return Err(Error::EmptySubset);
    }
    let mut cache = FaceCache::new(vertices)?;
    let n = vertices.len();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if cache.is_face(Subset::from_indices(&[i, j]))? {
                edges.push((i, j));
            }
        }
    }
    SkeletonGraph::new(vertices.to_vec(), &edges)
}

/// Exact affine-independence test on 0/1 points (rank of the difference
/// vectors, by fraction-free integer elimination).
pub fn affinely_independent(points: &[LatticePoint]) -> bool {
    if points.len() <= 1 {
        return true;
    }
    let dim = points[0].dim();
    if points.len() > dim + 1 {
        return false;
    }
    let base = &points[0];
    let mut rows: Vec<Vec<i64>> = points[1..]
        .iter()
        .map(|p| {
            (0..dim)
                .map(|k| i64::from(p.coord(k)) - i64::from(base.coord(k)))
                .collect()
        })
        .collect();
    // Entries stay minor-sized, far below i64 range at desk scale.
    let mut rank = 0;
    let mut prev_pivot = 1i64;
    for col in 0..dim {
        let Some(pivot_row) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot_row);
        let pivot = rows[rank][col];
        for r in (rank + 1)..rows.len() {
            for c in (col + 1)..dim {
                rows[r][c] = (rows[r][c] * pivot - rows[r][col] * rows[rank][c]) / prev_pivot;
            }
            rows[r][col] = 0;
        }
        prev_pivot = pivot;
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank == rows.len()
}

/// All subsets of the vertices that are simplices and faces, as a
/// simplicial complex.
pub fn simplicial_faces(vertices: &[LatticePoint]) -> Result<SimplicialComplex> {
    let mut cache = FaceCache::new(vertices)?;
    simplicial_faces_cached(&mut cache)
}

/// [`simplicial_faces`] over a shared cache, so pair decisions made while
/// building a skeleton are reused.
pub(crate) fn simplicial_faces_cached(cache: &mut FaceCache<'_>) -> Result<SimplicialComplex> {
    let n = cache.vertices().len();
    let mut level: Vec<Subset> = Vec::new();
    for i in 0..n {
        let s = Subset::singleton(i);
        if cache.is_face(s)? {
            level.push(s);
        }
    }
    let mut faces = level.clone();

    // Climb by cardinality: a candidate is examined only when all its
    // maximal proper subsets already qualified, which is sound because
    // every subset of a simplex face is itself a face of the polytope.
    while !level.is_empty() {
        let current: std::collections::HashSet<Subset> = level.iter().copied().collect();
        let mut next = Vec::new();
        for &s in &level {
            let top = s.indices().last().copied().unwrap_or(0);
            for v in (top + 1)..n {
                let cand = s.insert(v);
                if !cand.iter().all(|w| current.contains(&cand.remove(w))) {
                    continue;
                }
                let pts: Vec<LatticePoint> =
                    cand.iter().map(|i| cache.vertices()[i].clone()).collect();
                if !affinely_independent(&pts) {
                    continue;
                }
                if cache.is_face(cand)? {
                    next.push(cand);
                }
            }
        }
        next.sort_by(Subset::canonical_cmp);
        faces.extend(next.iter().copied());
        level = next;
    }
    Ok(SimplicialComplex::from_faces(n, faces))
}
