//! Exact zero forcing numbers on small graphs, structural recognition of
//! tree, unicyclic and cactus families, and closed-form predictions for the
//! zero forcing number of their complements.
//!
//! Graphs have at most 64 vertices and store one adjacency word per vertex.

pub mod error;
pub mod forcing;
pub mod gen;
pub mod graph;
pub mod graph6;
pub mod predict;
pub mod structure;
pub mod vertex_set;

pub use error::{Error, Result};
pub use forcing::{
    closure, is_zfs, reverse_chains, zero_forcing_number, zero_forcing_number_within, Budget,
    ColorState, ForcingChains, ZfResult,
};
pub use gen::{enumerate_family, generate, EnumFamily, GenFamily, GenParams, GenSpec};
pub use graph::{Graph, MAX_VERTICES};
pub use graph6::parse_graph6;
pub use predict::{predict_complement_zf, Prediction, Rule};
pub use structure::{classify, Classification, Family, FamilyKind};
pub use vertex_set::VertexSet;
