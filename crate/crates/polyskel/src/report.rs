//! JSON instance reports with a fixed field order.
//!
//! Index conventions: `poset.covers` and `graph.edges` are 1-indexed like
//! the text file formats; skeleton `edges` and counterexample cliques are
//! 0-indexed positions into the polytope's vertex list.

use serde::{Deserialize, Serialize};

use crate::graph::SimpleGraph;
use crate::poset::Poset;
use crate::verify::{Counterexample, VerificationOutcome};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetDesc {
    pub d: usize,
    pub covers: Vec<(usize, usize)>,
}

impl PosetDesc {
    pub fn from_poset(p: &Poset) -> PosetDesc {
        PosetDesc {
            d: p.size(),
            covers: p
                .hasse_edges()
                .iter()
                .map(|&(a, b)| (a + 1, b + 1))
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDesc {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl GraphDesc {
    pub fn from_graph(g: &SimpleGraph) -> GraphDesc {
        GraphDesc {
            n: g.size(),
            edges: g.edges().iter().map(|&(a, b)| (a + 1, b + 1)).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CounterexampleReport {
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub pair: Option<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub clique: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub face: Option<Vec<usize>>,
    pub detail: String,
}

impl CounterexampleReport {
    fn from_counterexample(c: &Counterexample) -> CounterexampleReport {
        match c {
            Counterexample::SkeletonMismatch {
                pair,
                predicate_edge,
                oracle_edge,
            } => CounterexampleReport {
                kind: "skeleton_mismatch".into(),
                pair: Some(*pair),
                clique: None,
                face: None,
                detail: format!(
                    "predicate says edge={predicate_edge}, oracle says edge={oracle_edge}"
                ),
            },
            Counterexample::ConstructionMismatch {
                clique,
                system_vertices,
            } => CounterexampleReport {
                kind: "construction_mismatch".into(),
                pair: None,
                clique: Some(clique.clone()),
                face: None,
                detail: format!("system isolates {system_vertices:?}"),
            },
            Counterexample::OracleRejectsClique { clique } => CounterexampleReport {
                kind: "oracle_rejects_clique".into(),
                pair: None,
                clique: Some(clique.clone()),
                face: None,
                detail: "hull of the clique is not a face".into(),
            },
            Counterexample::ComplexMismatch {
                face,
                in_clique_complex,
            } => CounterexampleReport {
                kind: "complex_mismatch".into(),
                pair: None,
                clique: None,
                face: Some(face.clone()),
                detail: if *in_clique_complex {
                    "face in clique complex only".into()
                } else {
                    "face in simplicial-face complex only".into()
                },
            },
        }
    }
}

/// The per-instance JSON report. Field order is fixed by declaration
/// order; sorted arrays come from the canonical orders upstream.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InstanceReport {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub poset: Option<PosetDesc>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub graph: Option<GraphDesc>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub perfect: Option<bool>,
    pub num_vertices: usize,
    pub edges: Vec<(usize, usize)>,
    pub cliques_checked: usize,
    pub all_faces: bool,
    pub counterexample: Option<CounterexampleReport>,
}

impl InstanceReport {
    pub fn for_poset(poset: &Poset, outcome: &VerificationOutcome) -> InstanceReport {
        InstanceReport {
            poset: Some(PosetDesc::from_poset(poset)),
            graph: None,
            perfect: None,
            num_vertices: outcome.num_vertices,
            edges: outcome.edges.clone(),
            cliques_checked: outcome.cliques_checked,
            all_faces: outcome.passed(),
            counterexample: outcome
                .counterexample
                .as_ref()
                .map(CounterexampleReport::from_counterexample),
        }
    }

    pub fn for_graph(
        graph: &SimpleGraph,
        perfect: bool,
        outcome: &VerificationOutcome,
    ) -> InstanceReport {
        InstanceReport {
            poset: None,
            graph: Some(GraphDesc::from_graph(graph)),
            perfect: Some(perfect),
            num_vertices: outcome.num_vertices,
            edges: outcome.edges.clone(),
            cliques_checked: outcome.cliques_checked,
            all_faces: outcome.passed(),
            counterexample: outcome
                .counterexample
                .as_ref()
                .map(CounterexampleReport::from_counterexample),
        }
    }

    /// Stable pretty serialization; re-serializing a parsed report is
    /// byte-identical.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    pub fn from_json(s: &str) -> serde_json::Result<InstanceReport> {
        serde_json::from_str(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order;
    use crate::verify::{verify_instance, VerifyConfig};

    #[test]
    fn report_round_trips_byte_identically() {
        let p = Poset::from_covers(3, &[(0, 2), (1, 2)]).unwrap();
        let vertices = order::order_polytope_vertices(&p);
        let skeleton = order::order_skeleton(&p);
        let outcome = verify_instance(
            &vertices,
            &skeleton,
            |indices| {
                let chain: Vec<_> = indices.iter().map(|&i| *skeleton.payload(i)).collect();
                order::order_clique_face_system(&p, &chain)
            },
            VerifyConfig::default(),
        )
        .unwrap();
        let report = InstanceReport::for_poset(&p, &outcome);
        let json = report.to_json();
        let parsed = InstanceReport::from_json(&json).unwrap();
        assert_eq!(parsed, report);
        assert_eq!(parsed.to_json(), json);
        // Field order is fixed.
        let poset_pos = json.find("\"poset\"").unwrap();
        let nv_pos = json.find("\"num_vertices\"").unwrap();
        let cx_pos = json.find("\"counterexample\"").unwrap();
        assert!(poset_pos < nv_pos && nv_pos < cx_pos);
        assert!(json.contains("\"all_faces\": true"));
        assert!(json.contains("\"counterexample\": null"));
    }

    #[test]
    fn graph_report_has_perfect_field() {
        let g = SimpleGraph::from_edges(2, &[(0, 1)]).unwrap();
        let vertices = crate::stable::stab_vertices(&g);
        let skeleton = crate::stable::stab_skeleton(&g).unwrap();
        let outcome = verify_instance(
            &vertices,
            &skeleton,
            |indices| {
                let sets: Vec<_> = indices.iter().map(|&i| *skeleton.payload(i)).collect();
                crate::stable::stab_clique_face_system(&g, &sets)
            },
            VerifyConfig::default(),
        )
        .unwrap();
        let report = InstanceReport::for_graph(&g, true, &outcome);
        let json = report.to_json();
        assert!(json.contains("\"perfect\": true"));
        assert!(!json.contains("\"poset\""));
        // 1-indexed edge list of the input graph.
        assert!(json.contains("[\n      1,\n      2\n    ]"));
    }
}
