//! Structural analysis of small, dense, undirected graphs.
//!
//! The crate covers the full workflow used to characterise a "concentrated
//! world" network: global structural indices compared against an
//! Erdős–Rényi baseline, degree-ordered rich-club profiles, three
//! modularity-driven partitioners with stable-community extraction, and a
//! hemicycle layout built from Czekanowski–Dice dissimilarities.
//!
//! Every analysis consumes an immutable [`Graph`]. Randomised routines take
//! explicit seeds and are reproducible bit-for-bit.

pub mod communities;
pub mod ensemble;
pub mod error;
pub mod generators;
pub mod graph;
pub mod io;
pub mod layout;
pub mod linalg;
pub mod metrics;
pub mod report;
pub mod richclub;
pub mod rng;

pub use error::{Error, Result};
pub use graph::{Graph, GraphBuilder, VertexId};
