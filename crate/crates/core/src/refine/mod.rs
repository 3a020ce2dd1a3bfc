//! Heavy and light arcs, complete pairs, and colouring through backedge
//! graphs.

mod backedge;
mod classify;
mod light;
mod pairs;
mod sizes;

pub use backedge::{backedge_graph, BackedgeGraph};
pub use classify::{
    classify_arcs, extract_cluster_from_heavy_clique, heavy_graph, light_graph, ArcClassification,
};
pub use light::{light_color_then_refine, ExactGraphOracle, GraphOracle, Refinement};
pub use pairs::{find_complete_pair, split_by_trace, CompletePair, PairSearch, TraceClass};
pub use sizes::{clust_value, s_saturating, s_table, s_value};
