//! Cross-module agreement at small scale: combinatorial predicates vs the
//! exact face oracle. The full-size populations live in the acceptance
//! suite; these runs are the fast inner loop.

use polyskel::enumerate::{all_graphs, all_posets};
use polyskel::geometry::{zero_one_solutions_match, LatticePoint};
use polyskel::graph::SimpleGraph;
use polyskel::oracle;
use polyskel::order;
use polyskel::poset::Poset;
use polyskel::stable;
use polyskel::subset::Subset;
use polyskel::verify::{verify_instance, VerifyConfig};

fn verify_order(p: &Poset) -> polyskel::verify::VerificationOutcome {
    let vertices = order::order_polytope_vertices(p);
    let skeleton = order::order_skeleton(p);
    verify_instance(
        &vertices,
        &skeleton,
        |indices| {
            let chain: Vec<_> = indices.iter().map(|&i| *skeleton.payload(i)).collect();
            order::order_clique_face_system(p, &chain)
        },
        VerifyConfig::default(),
    )
    .unwrap()
}

fn verify_stab(g: &SimpleGraph) -> polyskel::verify::VerificationOutcome {
    let vertices = stable::stab_vertices(g);
    let skeleton = stable::stab_skeleton(g).unwrap();
    verify_instance(
        &vertices,
        &skeleton,
        |indices| {
            let sets: Vec<_> = indices.iter().map(|&i| *skeleton.payload(i)).collect();
            stable::stab_clique_face_system(g, &sets)
        },
        VerifyConfig::default(),
    )
    .unwrap()
}

#[test]
fn order_polytopes_verify_exhaustively_up_to_d3() {
    for d in 1..=3 {
        for p in all_posets(d) {
            let outcome = verify_order(&p);
            assert!(
                outcome.passed(),
                "poset {p:?}: {:?}",
                outcome.counterexample
            );
        }
    }
}

#[test]
fn stable_polytopes_verify_exhaustively_up_to_n4() {
    for n in 1..=4 {
        for g in all_graphs(n) {
            let outcome = verify_stab(&g);
            assert!(
                outcome.passed(),
                "graph {g:?}: {:?}",
                outcome.counterexample
            );
        }
    }
}

#[test]
fn chain_polytope_is_a_simplex_and_every_subset_is_a_face() {
    // The order polytope of a chain is a simplex: complete skeleton and a
    // full face complex.
    let p = Poset::chain(3);
    let vertices = order::order_polytope_vertices(&p);
    let skeleton = order::order_skeleton(&p);
    assert_eq!(skeleton.edges().len(), 6); // K4
    for bits in 1..(1u128 << 4) {
        assert!(oracle::is_face(&vertices, Subset::from_bits(bits)).unwrap());
    }
    let complex = oracle::simplicial_faces(&vertices).unwrap();
    assert_eq!(complex.all_faces().len(), 15);
}

#[test]
fn antichain_skeleton_is_the_hypercube_graph() {
    let p = Poset::antichain(3);
    let skeleton = order::order_skeleton(&p);
    // 3-cube: 8 vertices, 12 edges, adjacency = Hamming distance one on
    // the ideal indicators.
    assert_eq!(skeleton.vertex_count(), 8);
    assert_eq!(skeleton.edges().len(), 12);
    for &(i, j) in skeleton.edges() {
        let a = skeleton.payload(i).subset();
        let b = skeleton.payload(j).subset();
        assert_eq!((a ^ b).card(), 1);
    }
    // Triangle-free skeleton: the clique complex is 1-dimensional, matching
    // the fact that a cube has no simplicial faces beyond edges.
    assert_eq!(skeleton.clique_complex().dimension(), Some(1));
    let outcome = verify_order(&p);
    assert!(outcome.passed());
}

#[test]
fn v_poset_brute_force_skeleton_agrees_with_the_predicate() {
    let p = Poset::from_covers(3, &[(0, 2), (1, 2)]).unwrap();
    let vertices = order::order_polytope_vertices(&p);
    let brute = oracle::brute_force_skeleton(&vertices).unwrap();
    assert_eq!(brute.edges().len(), 8);
    assert_eq!(brute.edges(), order::order_skeleton(&p).edges());
}

#[test]
fn two_element_faces_have_face_singletons() {
    // Monotone consistency, specialized to edges: if {i, j} spans a face,
    // both endpoints are faces.
    let p = Poset::from_covers(4, &[(0, 1), (0, 2), (1, 3)]).unwrap();
    let vertices = order::order_polytope_vertices(&p);
    let skeleton = oracle::brute_force_skeleton(&vertices).unwrap();
    for &(i, j) in skeleton.edges() {
        assert!(oracle::is_face(&vertices, Subset::singleton(i)).unwrap());
        assert!(oracle::is_face(&vertices, Subset::singleton(j)).unwrap());
    }
}

#[test]
fn h_descriptions_select_exactly_the_vertices_small() {
    for d in 1..=4 {
        for p in all_posets(d) {
            let sys = order::order_polytope_h_description(&p);
            let verts = order::order_polytope_vertices(&p);
            assert_eq!(
                zero_one_solutions_match(d, &sys, &verts).unwrap(),
                None,
                "poset {p:?}"
            );
        }
    }
    for n in 1..=4 {
        for g in all_graphs(n) {
            // The 0/1 statement needs no perfectness.
            let sys = stable::stab_h_description_unchecked(&g);
            let verts = stable::stab_vertices(&g);
            assert_eq!(
                zero_one_solutions_match(n, &sys, &verts).unwrap(),
                None,
                "graph {g:?}"
            );
        }
    }
}

#[test]
fn c5_experiment_is_recorded_not_asserted() {
    // C5 sits outside the perfect-graph hypothesis. The edge criterion and
    // the face construction are evaluated unchecked and compared against
    // the oracle; the outcome is printed for the record.
    let c5 = SimpleGraph::cycle(5);
    let vertices = stable::stab_vertices(&c5);
    let skeleton = stable::stab_skeleton_unchecked(&c5).unwrap();
    let brute = oracle::brute_force_skeleton(&vertices).unwrap();

    let mut edge_disagreements = 0;
    for i in 0..vertices.len() {
        for j in (i + 1)..vertices.len() {
            if skeleton.has_edge(i, j) != brute.has_edge(i, j) {
                edge_disagreements += 1;
            }
        }
    }

    let outcome = verify_instance(
        &vertices,
        &skeleton,
        |indices| {
            let sets: Vec<_> = indices.iter().map(|&i| *skeleton.payload(i)).collect();
            stable::stab_clique_face_system_unchecked(&c5, &sets)
        },
        VerifyConfig::default(),
    )
    .unwrap();

    println!(
        "C5 experiment: {} edge disagreements across {} pairs; full pipeline verdict: {}",
        edge_disagreements,
        vertices.len() * (vertices.len() - 1) / 2,
        if outcome.passed() { "PASS" } else { "FAIL" },
    );
    if let Some(cx) = &outcome.counterexample {
        println!("C5 first counterexample: {cx:?}");
    }
}

#[test]
fn one_vertex_and_tiny_instances() {
    // Smallest poset: one element, two ideals, one edge.
    let p = Poset::chain(1);
    let outcome = verify_order(&p);
    assert!(outcome.passed());
    assert_eq!(outcome.num_vertices, 2);
    assert_eq!(outcome.edges.len(), 1);

    // Graph with one vertex: stable sets {} and {0}.
    let g = SimpleGraph::empty(1);
    let outcome = verify_stab(&g);
    assert!(outcome.passed());
    assert_eq!(outcome.num_vertices, 2);
}

#[test]
fn square_volume_of_checks_match_known_geometry() {
    // Empty graph on 2 vertices: Stab is the unit square; its simplicial
    // faces are vertices and edges only, and the diagonal pairs are the
    // non-faces.
    let g = SimpleGraph::empty(2);
    let vertices = stable::stab_vertices(&g);
    assert_eq!(vertices.len(), 4);
    let complex = oracle::simplicial_faces(&vertices).unwrap();
    assert_eq!(complex.all_faces().len(), 8);
    let stable_sets: Vec<Subset> = g.stable_sets().iter().map(|s| s.subset()).collect();
    // Diagonals: ({}, {0,1}) and ({0}, {1}).
    let diag1 = Subset::from_indices(&[
        stable_sets
            .iter()
            .position(|&s| s == Subset::EMPTY)
            .unwrap(),
        stable_sets
            .iter()
            .position(|&s| s == Subset::from_indices(&[0, 1]))
            .unwrap(),
    ]);
    let diag2 = Subset::from_indices(&[
        stable_sets
            .iter()
            .position(|&s| s == Subset::singleton(0))
            .unwrap(),
        stable_sets
            .iter()
            .position(|&s| s == Subset::singleton(1))
            .unwrap(),
    ]);
    assert!(!oracle::is_face(&vertices, diag1).unwrap());
    assert!(!oracle::is_face(&vertices, diag2).unwrap());
}

#[test]
fn report_json_round_trip_for_both_flavors() {
    let p = Poset::chain(3);
    let outcome = verify_order(&p);
    let report = polyskel::report::InstanceReport::for_poset(&p, &outcome);
    let json = report.to_json();
    let reparsed = polyskel::report::InstanceReport::from_json(&json).unwrap();
    assert_eq!(reparsed.to_json(), json);

    let g = SimpleGraph::from_edges(3, &[(0, 1)]).unwrap();
    let outcome = verify_stab(&g);
    let report = polyskel::report::InstanceReport::for_graph(&g, true, &outcome);
    let json = report.to_json();
    let reparsed = polyskel::report::InstanceReport::from_json(&json).unwrap();
    assert_eq!(reparsed.to_json(), json);
}

#[test]
fn lattice_point_ambient_checks() {
    // Mixed-dimension input is a programming error surfaced by the LP
    // layer's dimension validation rather than silent misbehavior.
    let verts = vec![LatticePoint::new(vec![0, 0]), LatticePoint::new(vec![1, 0])];
    assert!(oracle::is_face(&verts, Subset::singleton(0)).unwrap());
}
