//! Rough timing probe for the verification pipeline at sweep sizes.

use std::time::Instant;

use polyskel::enumerate::all_posets;
use polyskel::random::{random_comparability_graph, random_poset, SplitMix64};
use polyskel::verify::{verify_instance, VerifyConfig};
use polyskel::{order, stable};

fn verify_order(p: &polyskel::poset::Poset) -> (bool, usize) {
    let vertices = order::order_polytope_vertices(p);
    let skeleton = order::order_skeleton(p);
    let out = verify_instance(
        &vertices,
        &skeleton,
        |indices| {
            let chain: Vec<_> = indices.iter().map(|&i| *skeleton.payload(i)).collect();
            order::order_clique_face_system(p, &chain)
        },
        VerifyConfig::default(),
    )
    .unwrap();
    (out.passed(), out.cliques_checked)
}

fn verify_stab(g: &polyskel::graph::SimpleGraph) -> (bool, usize) {
    let vertices = stable::stab_vertices(g);
    let skeleton = stable::stab_skeleton(g).unwrap();
    let out = verify_instance(
        &vertices,
        &skeleton,
        |indices| {
            let sets: Vec<_> = indices.iter().map(|&i| *skeleton.payload(i)).collect();
            stable::stab_clique_face_system(g, &sets)
        },
        VerifyConfig::default(),
    )
    .unwrap();
    (out.passed(), out.cliques_checked)
}

fn main() {
    let t = Instant::now();
    let posets = all_posets(4);
    let mut failures = 0;
    for p in &posets {
        if !verify_order(p).0 {
            failures += 1;
        }
    }
    println!(
        "exhaustive d<=4 ({} posets): {:?}, {} failures",
        posets.len(),
        t.elapsed(),
        failures
    );

    let mut rng = SplitMix64::new(11);
    for d in [5usize, 6] {
        let t = Instant::now();
        let n_inst = 20;
        let mut total_vertices = 0;
        let mut total_cliques = 0;
        for _ in 0..n_inst {
            let p = random_poset(&mut rng, d);
            total_vertices += p.ideals().len();
            let (ok, cl) = verify_order(&p);
            total_cliques += cl;
            assert!(ok);
        }
        println!(
            "random d={d} x{n_inst}: {:?} (avg |V| = {}, avg cliques = {})",
            t.elapsed(),
            total_vertices / n_inst,
            total_cliques / n_inst
        );
    }

    let mut rng = SplitMix64::new(12);
    for n in [6usize, 7] {
        let t = Instant::now();
        let n_inst = 10;
        let mut total_vertices = 0;
        let mut total_cliques = 0;
        for _ in 0..n_inst {
            let g = random_comparability_graph(&mut rng, n);
            total_vertices += g.stable_sets().len();
            let (ok, cl) = verify_stab(&g);
            total_cliques += cl;
            assert!(ok);
        }
        println!(
            "random comparability n={n} x{n_inst}: {:?} (avg |V| = {}, avg cliques = {})",
            t.elapsed(),
            total_vertices / n_inst,
            total_cliques / n_inst
        );
    }
}
