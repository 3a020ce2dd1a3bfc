//! Colouring tournaments and dense oriented graphs through their arc
//! neighbourhoods.

pub mod chromatic;
pub mod clusters;
pub mod error;
pub mod graph;
pub mod local;
pub mod par;
pub mod pipeline;
pub mod refine;
pub mod toolkit;

pub use chromatic::{Coloring, UndirectedGraph};
pub use error::{Error, Result};
pub use graph::{Arc, OrientedGraph, VertexSet};
