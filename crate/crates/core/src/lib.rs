//! Exact combinatorics of the push operation on oriented graphs.
//!
//! Everything here is pure computation over graphs of at most
//! [`MAX_ORDER`] vertices, usable without `std`. IO, file formats, threading
//! and the command line live in the `pushlab` crate.

#![no_std]

extern crate alloc;

pub mod canon;
pub mod census;
pub mod decide;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod orient;
pub mod planarity;

pub use canon::{are_isomorphic, canonical_code, canonical_form, canonical_graph, CanonicalCode, CanonicalForm};
pub use census::{planar_upc_census, Census, CensusRecord};
pub use decide::{is_underlying_oriented_clique, is_underlying_push_clique, star_augment, verify_star_lemma, Decision};
pub use enumerate::enumerate_graphs;
pub use error::{DecideError, GraphError, OrientError};
pub use graph::{Diameter, Graph, VertexSet, MAX_ORDER};
pub use orient::{
    is_push_clique_bruteforce, oriented_chromatic_number, push_class_reps, push_related, pushable_chromatic_number,
    AgreeStatus, ColoringCertificate, Orientation, PushClassReps,
};
pub use planarity::{generate_triangulations, is_outerplanar, is_planar, RotationSystem};
