//! Dichromatic-number solvers, colouring verification and small undirected
//! colouring oracles.

mod coloring;
mod exact;
mod greedy;
mod undirected;

pub use coloring::{verify_coloring, verify_partial, Coloring};
#[allow(unused_imports)]
pub(crate) use exact::{dichromatic_at_least, dichromatic_dense, partition};
pub use exact::{dichromatic_exact, dichromatic_of_set, DEFAULT_EXACT_LIMIT};
pub use greedy::{closes_cycle, dichromatic_greedy, greedy_on};
pub use undirected::{
    graph_chromatic_exact, graph_clique_exact, graph_coloring_exact, graph_greedy_coloring,
    graph_max_clique, UndirectedGraph, DEFAULT_GRAPH_LIMIT,
};
