//! Instance verification: predicate skeleton vs oracle skeleton, face
//! construction per clique, and clique complex vs simplicial-face complex.

use crate::complex::{compare_complexes, SkeletonGraph};
use crate::error::Result;
use crate::geometry::{vertices_on_system, Hyperplane, LatticePoint};
use crate::oracle::{self, FaceCache};
use crate::subset::Subset;

/// What to run; the oracle half can be switched off for quick looks.
#[derive(Clone, Copy, Debug)]
pub struct VerifyConfig {
    pub with_oracle: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { with_oracle: true }
    }
}

/// First failure found, if any. One is enough: a single counterexample
/// would already falsify the statement being checked.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Counterexample {
    /// The edge predicate and the oracle disagree on a vertex pair.
    SkeletonMismatch {
        pair: (usize, usize),
        predicate_edge: bool,
        oracle_edge: bool,
    },
    /// The hyperplane construction does not isolate the clique's vertices.
    ConstructionMismatch {
        clique: Vec<usize>,
        system_vertices: Vec<usize>,
    },
    /// The oracle denies that the clique's hull is a face.
    OracleRejectsClique { clique: Vec<usize> },
    /// Clique complex and simplicial-face complex differ.
    ComplexMismatch {
        face: Vec<usize>,
        in_clique_complex: bool,
    },
}

/// Outcome of verifying one polytope instance.
#[derive(Clone, Debug)]
pub struct VerificationOutcome {
    pub num_vertices: usize,
    pub edges: Vec<(usize, usize)>,
    pub cliques_checked: usize,
    pub oracle_ran: bool,
    pub counterexample: Option<Counterexample>,
}

impl VerificationOutcome {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Verifies one instance end to end.
///
/// `skeleton` is the predicate-built skeleton on `vertices`;
/// `clique_system` maps a clique (as sorted vertex indices) to the equality
/// system of the face construction. The checks, in order:
///
/// 1. oracle skeleton equals the predicate skeleton (edge criterion);
/// 2. for every clique of the skeleton, the construction system isolates
///    exactly the clique's vertices, and the oracle confirms the hull is a
///    face;
/// 3. the clique complex equals the complex of simplicial faces.
pub fn verify_instance<P>(
    vertices: &[LatticePoint],
    skeleton: &SkeletonGraph<P>,
    mut clique_system: impl FnMut(&[usize]) -> Result<Vec<Hyperplane>>,
    config: VerifyConfig,
) -> Result<VerificationOutcome> {
    let mut outcome = VerificationOutcome {
        num_vertices: vertices.len(),
        edges: skeleton.edges().to_vec(),
        cliques_checked: 0,
        oracle_ran: config.with_oracle,
        counterexample: None,
    };

    // One cache serves all three stages, so each subset meets the LP once.
    let mut cache = if config.with_oracle {
        Some(FaceCache::new(vertices)?)
    } else {
        None
    };

    if let Some(cache) = cache.as_mut() {
        for i in 0..vertices.len() {
            for j in (i + 1)..vertices.len() {
                let pe = skeleton.has_edge(i, j);
                let oe = cache.is_face(Subset::from_indices(&[i, j]))?;
                if pe != oe {
                    outcome.counterexample = Some(Counterexample::SkeletonMismatch {
                        pair: (i, j),
                        predicate_edge: pe,
                        oracle_edge: oe,
                    });
                    return Ok(outcome);
                }
            }
        }
    }

    for clique in skeleton.all_cliques() {
        outcome.cliques_checked += 1;
        let indices = clique.indices();
        let system = clique_system(&indices)?;
        let survivors = vertices_on_system(vertices, &system);
        if survivors != indices {
            outcome.counterexample = Some(Counterexample::ConstructionMismatch {
                clique: indices,
                system_vertices: survivors,
            });
            return Ok(outcome);
        }
        if let Some(cache) = cache.as_mut() {
            if !cache.is_face(clique)? {
                outcome.counterexample =
                    Some(Counterexample::OracleRejectsClique { clique: indices });
                return Ok(outcome);
            }
        }
    }

    if let Some(cache) = cache.as_mut() {
        let clique_complex = skeleton.clique_complex();
        let face_complex = oracle::simplicial_faces_cached(cache)?;
        if let Some(diff) = compare_complexes(&clique_complex, &face_complex)? {
            outcome.counterexample = Some(Counterexample::ComplexMismatch {
                face: diff.face.indices(),
                in_clique_complex: diff.only_in_first,
            });
            return Ok(outcome);
        }
    }

    Ok(outcome)
}
