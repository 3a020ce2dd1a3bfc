use serde::Serialize;

use super::search::{find_cluster_in, Cluster, ClusterSearch};
use crate::error::{Error, Result};
use crate::graph::{OrientedGraph, VertexSet};

/// Disjoint jewels `X_1, ..., X_p` with every `X_i` complete to `X_{i+1}`
/// in the ambient tournament.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JewelChain {
    pub blocks: Vec<Cluster>,
}

impl JewelChain {
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn first(&self) -> Option<&VertexSet> {
        self.blocks.first().map(|b| &b.members)
    }

    pub fn last(&self) -> Option<&VertexSet> {
        self.blocks.last().map(|b| &b.members)
    }

    /// Union of all blocks.
    pub fn vertices(&self, n: usize) -> VertexSet {
        let mut all = VertexSet::empty(n);
        for b in &self.blocks {
            all.union_with(&b.members);
        }
        all
    }
}

/// Result of [`grow_jewel_chain`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainGrowth {
    pub chain: JewelChain,
    /// Some search stopped on its work budget, so the chain may be extendable.
    pub budget_exceeded: bool,
}

/// A `(d + 1, ell)`-cluster of `reference`.
pub fn find_jewel(reference: &OrientedGraph, d: usize, ell: usize, work: u64) -> ClusterSearch {
    find_cluster_in(reference, &reference.vertices(), d + 1, ell, work)
}

/// Grows a chain greedily: start from the first jewel found, then keep
/// prepending a jewel complete to the first block or appending one complete
/// from the last block. Jewels are clusters of `reference`; completeness is
/// read in the tournament `t`.
pub fn grow_jewel_chain(
    t: &OrientedGraph,
    reference: &OrientedGraph,
    d: usize,
    ell: usize,
    work: u64,
) -> ChainGrowth {
    grow_jewel_chain_within(t, reference, &t.vertices(), d, ell, work)
}

/// [`grow_jewel_chain`] using only vertices of `within`.
pub fn grow_jewel_chain_within(
    t: &OrientedGraph,
    reference: &OrientedGraph,
    within: &VertexSet,
    d: usize,
    ell: usize,
    work: u64,
) -> ChainGrowth {
    let mut over = false;
    let mut blocks: Vec<Cluster> = Vec::new();
    match find_cluster_in(reference, within, d + 1, ell, work) {
        ClusterSearch::Found(c) => blocks.push(c),
        ClusterSearch::BudgetExceeded => over = true,
        ClusterSearch::Absent => {}
    }
    if blocks.is_empty() {
        return ChainGrowth {
            chain: JewelChain { blocks },
            budget_exceeded: over,
        };
    }
    let mut used = blocks[0].members.clone();
    loop {
        let free = within.difference(&used);
        let first = &blocks[0].members;
        let before: VertexSet = VertexSet::from_iter_in(
            t.n(),
            free.iter().filter(|&v| first.is_subset(t.out_neighbors(v))),
        );
        if let Some(c) = extend(reference, &before, d, ell, work, &mut over) {
            used.union_with(&c.members);
            blocks.insert(0, c);
            continue;
        }
        let last = &blocks.last().expect("non-empty").members;
        let after: VertexSet = VertexSet::from_iter_in(
            t.n(),
            free.iter().filter(|&v| last.is_subset(t.in_neighbors(v))),
        );
        match extend(reference, &after, d, ell, work, &mut over) {
            Some(c) => {
                used.union_with(&c.members);
                blocks.push(c);
            }
            None => break,
        }
    }
    ChainGrowth {
        chain: JewelChain { blocks },
        budget_exceeded: over,
    }
}

fn extend(
    reference: &OrientedGraph,
    candidates: &VertexSet,
    d: usize,
    ell: usize,
    work: u64,
    over: &mut bool,
) -> Option<Cluster> {
    if candidates.is_empty() {
        return None;
    }
    match find_cluster_in(reference, candidates, d + 1, ell, work) {
        ClusterSearch::Found(c) => Some(c),
        ClusterSearch::BudgetExceeded => {
            *over = true;
            None
        }
        ClusterSearch::Absent => None,
    }
}

/// True iff no arc of `t` runs from a later block to an earlier one.
pub fn assert_chain_forward(t: &OrientedGraph, chain: &JewelChain) -> bool {
    for (j, later) in chain.blocks.iter().enumerate() {
        for earlier in &chain.blocks[..j] {
            if later
                .members
                .iter()
                .any(|v| t.out_neighbors(v).intersects(&earlier.members))
            {
                return false;
            }
        }
    }
    true
}

/// Checks disjointness and consecutive completeness.
pub fn check_chain(t: &OrientedGraph, chain: &JewelChain) -> Result<()> {
    let mut seen = VertexSet::empty(t.n());
    for b in &chain.blocks {
        if b.members.intersects(&seen) {
            return Err(Error::contract("jewel-chain blocks overlap"));
        }
        seen.union_with(&b.members);
    }
    for pair in chain.blocks.windows(2) {
        let (x, y) = (&pair[0].members, &pair[1].members);
        if x.iter().any(|v| !y.is_subset(t.out_neighbors(v))) {
            return Err(Error::contract(
                "consecutive jewel-chain blocks are not complete",
            ));
        }
    }
    Ok(())
}
