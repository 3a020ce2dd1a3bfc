use std::collections::VecDeque;

use serde::Serialize;

use super::clique::max_clique;
use super::dense::{bit, low_mask, Mask, MAX_DENSE};
use super::{Arc, OrientedGraph, VertexSet};
use crate::error::Result;

/// A value that is exact within budget, or a certified bound otherwise.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Estimate<T> {
    pub value: T,
    pub exact: bool,
}

impl<T> Estimate<T> {
    pub fn exact(value: T) -> Self {
        Estimate { value, exact: true }
    }

    pub fn bound(value: T) -> Self {
        Estimate {
            value,
            exact: false,
        }
    }
}

/// `N(e) = N+(head) ∩ N-(tail)`: the vertices closing a directed triangle
/// with `e`.
pub fn arc_neighborhood(d: &OrientedGraph, e: Arc) -> Result<VertexSet> {
    d.check_arc(e)?;
    Ok(d.out_neighbors(e.head).intersection(d.in_neighbors(e.tail)))
}

/// True iff `D[set]` has a topological order.
pub fn is_acyclic(d: &OrientedGraph, set: &VertexSet) -> bool {
    topological_order(d, set).is_some()
}

/// Kahn's algorithm on `D[set]`, always taking the smallest available
/// source. `None` if `D[set]` has a cycle.
pub fn topological_order(d: &OrientedGraph, set: &VertexSet) -> Option<Vec<usize>> {
    let mut indeg = vec![0usize; d.n()];
    for v in set.iter() {
        indeg[v] = d.in_neighbors(v).intersection_len(set);
    }
    let mut ready: std::collections::BTreeSet<usize> =
        set.iter().filter(|&v| indeg[v] == 0).collect();
    let mut order = Vec::with_capacity(set.len());
    while let Some(v) = ready.pop_first() {
        order.push(v);
        for w in d.out_neighbors(v).intersection(set).iter() {
            indeg[w] -= 1;
            if indeg[w] == 0 {
                ready.insert(w);
            }
        }
    }
    (order.len() == set.len()).then_some(order)
}

/// Strongly connected components, listed in a topological order of the
/// condensation (every arc between two blocks goes from the earlier to the
/// later block). Members inside a block are in increasing order.
pub fn scc_decompose(d: &OrientedGraph) -> Vec<VertexSet> {
    let n = d.n();
    let succ: Vec<Vec<usize>> = (0..n).map(|v| d.out_neighbors(v).to_vec()).collect();
    let mut index = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut next_index = 0;
    let mut comps = Vec::new();

    for root in 0..n {
        if index[root] != usize::MAX {
            continue;
        }
        // (vertex, next successor position)
        let mut call: Vec<(usize, usize)> = vec![(root, 0)];
        index[root] = next_index;
        low[root] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack[root] = true;

        while let Some(&(v, pos)) = call.last() {
            if pos < succ[v].len() {
                let w = succ[v][pos];
                call.last_mut().expect("non-empty").1 += 1;
                if index[w] == usize::MAX {
                    index[w] = next_index;
                    low[w] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                call.pop();
                if let Some(&(parent, _)) = call.last() {
                    low[parent] = low[parent].min(low[v]);
                }
                if low[v] == index[v] {
                    let mut comp = VertexSet::empty(n);
                    loop {
                        let w = stack.pop().expect("tarjan stack");
                        on_stack[w] = false;
                        comp.insert(w);
                        if w == v {
                            break;
                        }
                    }
                    comps.push(comp);
                }
            }
        }
    }
    // Tarjan emits sinks first.
    comps.reverse();
    comps
}

/// BFS distances from `source` inside `within`; `usize::MAX` if unreachable.
pub fn bfs_distances(
    d: &OrientedGraph,
    source: usize,
    within: &VertexSet,
    reverse: bool,
) -> Vec<usize> {
    let mut dist = vec![usize::MAX; d.n()];
    if !within.contains(source) {
        return dist;
    }
    dist[source] = 0;
    let mut queue = VecDeque::from([source]);
    while let Some(v) = queue.pop_front() {
        let next = if reverse {
            d.in_neighbors(v)
        } else {
            d.out_neighbors(v)
        };
        for w in next.iter() {
            if within.contains(w) && dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Maximum size of an arc-free vertex set. Exact when `n <= exact_limit`
/// (and within the dense kernel); otherwise a greedy lower bound.
pub fn independence_number(d: &OrientedGraph, exact_limit: usize) -> Estimate<usize> {
    let n = d.n();
    if n == 0 {
        return Estimate::exact(0);
    }
    if d.is_tournament() {
        return Estimate::exact(1);
    }
    if n <= exact_limit.min(MAX_DENSE) {
        let all = low_mask(n);
        let comp: Vec<Mask> = (0..n)
            .map(|v| {
                let adj = d.out_neighbors(v).union(d.in_neighbors(v));
                let mut m: Mask = 0;
                for w in adj.iter() {
                    m |= bit(w);
                }
                all & !m & !bit(v)
            })
            .collect();
        return Estimate::exact(max_clique(&comp, all).count_ones() as usize);
    }
    Estimate::bound(greedy_independent_set(d).len())
}

/// Min-degree greedy independent set of the underlying undirected graph.
pub fn greedy_independent_set(d: &OrientedGraph) -> VertexSet {
    let n = d.n();
    let mut alive = VertexSet::full(n);
    let mut chosen = VertexSet::empty(n);
    while let Some(v) = alive.iter().min_by_key(|&v| {
        (
            d.out_neighbors(v)
                .union(d.in_neighbors(v))
                .intersection_len(&alive),
            v,
        )
    }) {
        chosen.insert(v);
        alive.remove(v);
        alive.difference_with(d.out_neighbors(v));
        alive.difference_with(d.in_neighbors(v));
    }
    chosen
}

/// All `u != v` with neither `uv` nor `vu` an arc.
pub fn nonedge_neighborhood(d: &OrientedGraph, v: usize) -> Result<VertexSet> {
    d.check_vertex(v)?;
    let mut set = d.out_neighbors(v).union(d.in_neighbors(v)).complement();
    set.remove(v);
    Ok(set)
}

/// `N±(S)`: vertices outside `S` with an in-arc from `S` and an out-arc into `S`.
pub fn punch_neighborhood(d: &OrientedGraph, set: &VertexSet) -> VertexSet {
    let mut result = VertexSet::empty(d.n());
    for v in set.complement().iter() {
        if d.in_neighbors(v).intersects(set) && d.out_neighbors(v).intersects(set) {
            result.insert(v);
        }
    }
    result
}
