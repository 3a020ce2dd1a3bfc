use super::Coloring;
use crate::graph::{OrientedGraph, VertexSet};

/// First-fit colouring in vertex-id order: each vertex joins the lowest
/// colour class that stays acyclic.
pub fn dichromatic_greedy(d: &OrientedGraph) -> Coloring {
    greedy_on(d, &d.vertices())
}

/// [`dichromatic_greedy`] restricted to `set`; other vertices stay uncoloured.
pub fn greedy_on(d: &OrientedGraph, set: &VertexSet) -> Coloring {
    let mut classes: Vec<VertexSet> = Vec::new();
    let mut coloring = Coloring::empty(d.n());
    for v in set.iter() {
        let c = match classes.iter().position(|class| !closes_cycle(d, class, v)) {
            Some(c) => c,
            None => {
                classes.push(VertexSet::empty(d.n()));
                classes.len() - 1
            }
        };
        classes[c].insert(v);
        coloring.set(v, c);
    }
    coloring
}

/// True if adding `v` to the acyclic set `class` creates a directed cycle,
/// i.e. some out-neighbour of `v` in `class` reaches an in-neighbour of `v`.
pub fn closes_cycle(d: &OrientedGraph, class: &VertexSet, v: usize) -> bool {
    let target = d.in_neighbors(v).intersection(class);
    if target.is_empty() {
        return false;
    }
    let mut seen = d.out_neighbors(v).intersection(class);
    let mut frontier = seen.to_vec();
    while let Some(w) = frontier.pop() {
        if target.contains(w) {
            return true;
        }
        for x in d.out_neighbors(w).intersection(class).iter() {
            if !seen.contains(x) {
                seen.insert(x);
                frontier.push(x);
            }
        }
    }
    false
}
