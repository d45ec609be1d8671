//! Canonical matching structure of undirected graphs.
//!
//! The crate computes maximum matchings (Edmonds' blossom algorithm), the
//! Gallai–Edmonds and Dulmage–Mendelsohn decompositions, the generalized
//! canonical partition together with the cathedral poset of factor-components,
//! and the decomposition of odd-maximal barriers into canonical classes.
//!
//! Everything here is pure computation over immutable [`Graph`] values and
//! builds without `std` (only `alloc` is required). File formats, JSON and the
//! command-line front end live in the `cathedral-cli` crate.
//!
//! ```
//! use cathedral::{fixtures, algorithm1};
//!
//! let paw = fixtures::paw();
//! let s = algorithm1(&paw).unwrap();
//! assert_eq!(s.components().len(), 2);
//! assert!(s.leq(0, 1));
//! ```
#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;
#[cfg(any(test, feature = "std"))]
extern crate std;

pub mod barrier;
mod blossom;
pub mod cathedral;
pub mod decomposition;
pub mod digraph;
mod error;
pub mod fixtures;
pub mod graph;
pub mod matching;
pub mod oracle;
pub mod random;
pub mod verify;

pub use barrier::{
    barrier_report, build_hx, decompose_odd_maximal_barrier, enumerate_odd_maximal_barriers, general_graph_atoms,
    BarrierReport, GeneralAtoms, HxGraph, MainTheoremDecomposition,
};
pub use cathedral::{algorithm1, AuxDigraph, CanonicalPartition, CathedralStructure};
pub use decomposition::{dm_decompose, dm_order_leq, gallai_edmonds, DmDecomposition, GallaiEdmonds};
pub use error::{Error, Result};
pub use graph::{ContractionMap, Graph, GraphBuilder, OddComponents, Relabeling, VertexSet};
pub use matching::{
    is_factor_critical, is_factorizable, maximum_matching, near_perfect_matching_exposing, saturated_path_exists,
    Matching,
};

/// Vertex identifier; vertices of a graph are always `0..n`.
pub type Vertex = usize;
