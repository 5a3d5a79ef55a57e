//! Homophily measures for group interactions.
//!
//! Classical homophily asks whether edges connect same-class nodes more
//! often than random relabeling would. For groups of three or more the
//! question splits in two: are groups homogeneous more often than a random
//! *node set* of that size (node baseline), and more often than a random
//! *placement into the positions the pairwise structure already allows*
//! (skeleton baseline)? The second isolates genuinely group-level
//! assortativity from what edges alone explain.
//!
//! The crate provides:
//!
//! * labeled simplicial complexes and hypergraphs with skeleton extraction
//!   and potential-simplex enumeration ([`complex`], [`hypergraph`]);
//! * both homophily score families, homogeneous and per-type
//!   ([`homophily`]);
//! * a two-stage block-model generator that decouples edge and triangle
//!   assortativity, with sweep experiments ([`ssbm`]);
//! * a triangle-closure prediction benchmark with PR-curve evaluation
//!   ([`linkpred`]);
//! * node-subset bootstrap and cross-dataset regression ([`stats`]);
//! * loaders for simplex-stream and edge-list datasets ([`dataset`]).

pub mod combin;
pub mod complex;
pub mod dataset;
pub mod error;
pub mod fixtures;
pub mod homophily;
pub mod hypergraph;
pub mod labeling;
pub mod linkpred;
pub mod simplex;
pub mod ssbm;
pub mod stats;

pub use complex::{SimplicialComplex, SkeletonView};
pub use error::{Error, Result};
pub use hypergraph::Hypergraph;
pub use labeling::ClassLabeling;
pub use simplex::{NodeId, Simplex, TimestampedSimplex};
