//! Oriented graphs and elementary structural queries.

pub mod clique;
pub mod dense;
mod digraph;
mod ops;
mod vertex_set;

pub use digraph::{Arc, OrientedGraph};
pub use ops::{
    arc_neighborhood, bfs_distances, independence_number, is_acyclic, nonedge_neighborhood,
    punch_neighborhood, scc_decompose, topological_order, Estimate,
};
pub use vertex_set::VertexSet;
