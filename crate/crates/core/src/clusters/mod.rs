//! Cluster search, domination, short cycles and jewel-chains.

mod chain;
mod domination;
mod girth;
mod search;

pub use chain::{
    assert_chain_forward, check_chain, find_jewel, grow_jewel_chain, grow_jewel_chain_within,
    ChainGrowth, JewelChain,
};
pub use domination::{
    absorbing_set, dominating_set, dominating_set_with_work, domination_pair, greedy_dominating,
    DominationPair, DEFAULT_DOMINATION_LIMIT, DEFAULT_DOMINATION_WORK,
};
pub use girth::{girth, short_cycle_if_undominated};
pub use search::{
    find_cluster, find_cluster_in, min_order, Cluster, ClusterSearch, DEFAULT_CLUSTER_WORK,
};

use serde::Serialize;

use crate::graph::OrientedGraph;

/// Either a cluster or small domination sets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Dichotomy {
    Cluster(Cluster),
    Domination {
        pair: DominationPair,
        /// The cluster search ran out of work rather than proving absence.
        search_exhausted: bool,
        /// A set exceeds the configured size budget.
        over_budget: bool,
    },
}

/// Looks for a `(k, ell)`-cluster; failing that, returns dominating and
/// absorbing sets, flagged when either is larger than `k_budget`.
pub fn cluster_or_domination(
    d: &OrientedGraph,
    k: usize,
    ell: usize,
    k_budget: usize,
    work: u64,
    domination_limit: usize,
) -> Dichotomy {
    let search = find_cluster(d, k, ell, work);
    if let ClusterSearch::Found(c) = search {
        return Dichotomy::Cluster(c);
    }
    let pair = domination_pair(d, domination_limit);
    let over_budget = pair.dominating.len() > k_budget || pair.absorbing.len() > k_budget;
    Dichotomy::Domination {
        pair,
        search_exhausted: search == ClusterSearch::BudgetExceeded,
        over_budget,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dichotomy_examples() {
        let qr7 =
            OrientedGraph::from_arcs(7, (0..7).flat_map(|i| [1, 2, 4].map(|r| (i, (i + r) % 7))))
                .unwrap();
        assert!(matches!(
            cluster_or_domination(&qr7, 2, 8, 6, DEFAULT_CLUSTER_WORK, 64),
            Dichotomy::Cluster(_)
        ));
        match cluster_or_domination(
            &OrientedGraph::transitive(10),
            2,
            8,
            6,
            DEFAULT_CLUSTER_WORK,
            64,
        ) {
            Dichotomy::Domination {
                pair, over_budget, ..
            } => {
                assert_eq!(pair.dominating.to_vec(), vec![0]);
                assert_eq!(pair.absorbing.to_vec(), vec![9]);
                assert!(!over_budget);
            }
            other => panic!("unexpected {other:?}"),
        }
        match cluster_or_domination(
            &OrientedGraph::cycle(3).unwrap(),
            3,
            8,
            6,
            DEFAULT_CLUSTER_WORK,
            64,
        ) {
            Dichotomy::Domination { pair, .. } => {
                assert_eq!(pair.dominating.len(), 2);
                assert_eq!(pair.absorbing.len(), 2);
            }
            other => panic!("unexpected {other:?}"),
        }
    }
}
