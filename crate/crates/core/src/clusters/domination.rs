use serde::Serialize;

use crate::graph::dense::{bit, ones, Dense, Mask, MAX_DENSE};
use crate::graph::{Estimate, OrientedGraph, VertexSet};

/// Default vertex budget for exact domination.
pub const DEFAULT_DOMINATION_LIMIT: usize = 64;

/// Default cap on branching nodes for exact domination.
pub const DEFAULT_DOMINATION_WORK: u64 = 2_000_000;

/// A dominating set and an absorbing set of the same digraph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DominationPair {
    pub dominating: VertexSet,
    pub absorbing: VertexSet,
    /// Both sets are minimum.
    pub exact: bool,
}

/// A minimum dominating set (every outside vertex has an in-neighbour in
/// it) when `n <= exact_limit`; otherwise a greedy one flagged inexact.
/// Among minimum sets, the first found by branching on the smallest
/// undominated vertex with candidates in increasing order.
pub fn dominating_set(d: &OrientedGraph, exact_limit: usize) -> Estimate<VertexSet> {
    dominating_set_with_work(d, exact_limit, DEFAULT_DOMINATION_WORK)
}

/// [`dominating_set`] with an explicit cap on branching nodes; when the cap
/// is hit the greedy set is returned, flagged inexact.
pub fn dominating_set_with_work(
    d: &OrientedGraph,
    exact_limit: usize,
    work: u64,
) -> Estimate<VertexSet> {
    let n = d.n();
    if n == 0 {
        return Estimate::exact(VertexSet::empty(0));
    }
    if n <= exact_limit.min(MAX_DENSE) {
        let g = Dense::whole(d).expect("within dense bound");
        if let Some(found) = min_dominating(&g, work) {
            return Estimate::exact(g.lift(found, n));
        }
    }
    Estimate::bound(greedy_dominating(d))
}

/// The arc-reversal dual of [`dominating_set`].
pub fn absorbing_set(d: &OrientedGraph, exact_limit: usize) -> Estimate<VertexSet> {
    dominating_set(&d.reversed(), exact_limit)
}

/// Both sets at once.
pub fn domination_pair(d: &OrientedGraph, exact_limit: usize) -> DominationPair {
    let dom = dominating_set(d, exact_limit);
    let abs = absorbing_set(d, exact_limit);
    DominationPair {
        exact: dom.exact && abs.exact,
        dominating: dom.value,
        absorbing: abs.value,
    }
}

/// Picks the vertex dominating the most undominated vertices until done;
/// ties go to the smallest id.
pub fn greedy_dominating(d: &OrientedGraph) -> VertexSet {
    let n = d.n();
    let mut undominated = VertexSet::full(n);
    let mut chosen = VertexSet::empty(n);
    while !undominated.is_empty() {
        let gain = |v: usize| {
            d.out_neighbors(v).intersection_len(&undominated) + usize::from(undominated.contains(v))
        };
        let best = (0..n)
            .max_by_key(|&v| (gain(v), std::cmp::Reverse(v)))
            .expect("n > 0");
        chosen.insert(best);
        undominated.remove(best);
        undominated.difference_with(d.out_neighbors(best));
    }
    chosen
}

fn min_dominating(g: &Dense, work: u64) -> Option<Mask> {
    let mut search = Search {
        out: (0..g.n).map(|v| g.out[v] | bit(v)).collect(),
        inn: (0..g.n).map(|v| g.inn[v] | bit(v)).collect(),
        all: g.all(),
        work: 0,
        cap: work,
    };
    let mut size = 1;
    loop {
        if let Some(found) = search.dominate(0, 0, size) {
            return Some(found);
        }
        if search.work > search.cap {
            return None;
        }
        size += 1;
    }
}

struct Search {
    out: Vec<Mask>,
    inn: Vec<Mask>,
    all: Mask,
    work: u64,
    cap: u64,
}

impl Search {
    fn dominate(&mut self, chosen: Mask, covered: Mask, left: usize) -> Option<Mask> {
        self.work += 1;
        if self.work > self.cap {
            return None;
        }
        let (out, all) = (&self.out, self.all);
        let open = all & !covered;
        if open == 0 {
            return Some(chosen);
        }
        if left == 0 {
            return None;
        }
        let best_gain = ones(all)
            .map(|v| (out[v] & open).count_ones())
            .max()
            .unwrap_or(0) as usize;
        if left * best_gain < open.count_ones() as usize {
            return None;
        }
        let x = open.trailing_zeros() as usize;
        for v in ones(self.inn[x] & all) {
            let next = covered | self.out[v];
            if let Some(found) = self.dominate(chosen | bit(v), next, left - 1) {
                return Some(found);
            }
        }
        None
    }
}
