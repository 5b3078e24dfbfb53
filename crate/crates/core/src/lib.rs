//! Zero forcing on simple graphs.
//!
//! The crate provides the zero forcing process itself ([`forcing`]), the
//! algebra of forcing arc sets and chain twists ([`arcs`]), path
//! decompositions ([`decomposition`]), a `(w+1)`-approximation that returns a
//! zero forcing set together with a fort packing certifying its quality
//! ([`approx`]), and brute-force oracles used as ground truth ([`oracles`]).
//!
//! ```
//! use zf_core::{approx, decomposition, graph::Graph};
//!
//! let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
//! let (_, pd) = decomposition::exact_pathwidth(&g).unwrap();
//! let nice = decomposition::make_nice(&g, &pd).unwrap();
//! let result = approx::approximate_zero_forcing(&g, &nice).unwrap();
//! assert!(approx::verify_result(&g, &result).all_passed());
//! ```

pub mod approx;
pub mod arcs;
pub mod certificate;
pub mod cli;
pub mod decomposition;
pub mod forcing;
pub mod generators;
pub mod graph;
pub mod interval;
pub mod oracles;

pub use approx::{approximate_zero_forcing, verify_result, ApproxResult, FortPacking};
pub use arcs::{ArcSet, ChainTwist};
pub use forcing::Colouring;
pub use graph::{Graph, VertexSet};
