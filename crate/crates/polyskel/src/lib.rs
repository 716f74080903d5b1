//! Polytope skeletons and clique complexes, verified exactly.
//!
//! This crate builds two families of 0/1 polytopes (order polytopes of
//! finite posets, stable set polytopes of perfect graphs), computes
//! their 1-skeletons by purely combinatorial edge criteria, and verifies
//! two facts instance by instance:
//!
//! * the combinatorial criteria match the true polytope edges, and
//! * the convex hull of every skeleton clique is a face, so the clique
//!   complex of the skeleton equals the complex of simplicial faces.
//!
//! Both facts are checked twice: once through explicit hyperplane
//! constructions (equality systems read off the clique itself) and once
//! through an independent face oracle that decides face-ness by exact
//! rational LP feasibility. Everything is exact; no floating point is
//! involved in any decision.
//!
//! ```
//! use polyskel::poset::Poset;
//! use polyskel::{order, oracle};
//!
//! // a < c, b < c
//! let p = Poset::from_covers(3, &[(0, 2), (1, 2)]).unwrap();
//! let vertices = order::order_polytope_vertices(&p);
//! let skeleton = order::order_skeleton(&p);
//! assert_eq!(vertices.len(), 5);
//! assert_eq!(skeleton.edges().len(), 8);
//!
//! // The oracle agrees edge by edge.
//! let brute = oracle::brute_force_skeleton(&vertices).unwrap();
//! assert_eq!(brute.edges(), skeleton.edges());
//! ```

pub mod complex;
pub mod enumerate;
pub mod error;
pub mod geometry;
pub mod graph;
pub mod io;
pub mod lp;
pub mod oracle;
pub mod order;
pub mod parallel;
pub mod poset;
pub mod random;
pub mod report;
pub mod stable;
pub mod subset;
pub mod verify;

pub use error::{Error, Result};
pub use subset::Subset;

// The guide's code blocks run as doctests so the book cannot drift from
// the library.
#[cfg(doctest)]
mod book {
    macro_rules! chapter {
        ($name:ident, $path:literal) => {
            #[doc = include_str!($path)]
            pub struct $name;
        };
    }

    chapter!(Introduction, "../../../book/src/introduction.md");
    chapter!(Posets, "../../../book/src/posets.md");
    chapter!(OrderPolytopes, "../../../book/src/order-polytope.md");
    chapter!(GraphsAndStableSets, "../../../book/src/graphs.md");
    chapter!(StablePolytopes, "../../../book/src/stable-polytope.md");
    chapter!(ChainPolytopes, "../../../book/src/chain-polytope.md");
    chapter!(FaceOracle, "../../../book/src/face-oracle.md");
    chapter!(CliqueComplexes, "../../../book/src/clique-complexes.md");
    chapter!(CommandLine, "../../../book/src/cli.md");
}
