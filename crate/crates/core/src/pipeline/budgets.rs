use serde::{Deserialize, Serialize};

use crate::chromatic::{DEFAULT_EXACT_LIMIT, DEFAULT_GRAPH_LIMIT};
use crate::clusters::{DEFAULT_CLUSTER_WORK, DEFAULT_DOMINATION_LIMIT};

/// Search budgets shared by the pipelines. They stand in for the
/// existential constants of the underlying arguments.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budgets {
    /// Vertex limit for exact dichromatic numbers.
    pub exact_limit: usize,
    /// Vertex limit for exact undirected chromatic and clique numbers.
    pub graph_limit: usize,
    /// Vertex limit for exact independence numbers.
    pub alpha_limit: usize,
    /// Vertex limit for exact domination numbers.
    pub domination_limit: usize,
    /// Largest cluster size searched (`ell`).
    pub ell: usize,
    /// Domination size above which the dichotomy is flagged (`K`).
    pub k_budget: usize,
    /// Work units per cluster search.
    pub cluster_work: u64,
    /// Chain extensions tried when a jewel turns up inside `Y`.
    pub retry_cap: usize,
    /// Recursive sub-instances up to this size are coloured exactly.
    pub leaf_exact: usize,
    /// Overrides the jewel parameter `d` of the dense pipeline.
    pub jewel_d: Option<usize>,
    /// Recursive calls allowed in the dense pipeline before falling back.
    pub recursion_limit: usize,
    /// Merge colour classes whose union stays acyclic after colouring.
    pub merge_classes: bool,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            exact_limit: DEFAULT_EXACT_LIMIT,
            graph_limit: DEFAULT_GRAPH_LIMIT,
            alpha_limit: 64,
            domination_limit: DEFAULT_DOMINATION_LIMIT,
            ell: 8,
            k_budget: 6,
            cluster_work: DEFAULT_CLUSTER_WORK,
            retry_cap: 3,
            leaf_exact: 10,
            jewel_d: None,
            recursion_limit: 20_000,
            merge_classes: true,
        }
    }
}
