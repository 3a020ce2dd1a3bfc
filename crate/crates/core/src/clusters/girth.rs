use std::collections::VecDeque;

use crate::graph::OrientedGraph;

/// A shortest directed cycle, or `None` when `d` is acyclic. Among the
/// shortest cycles, the one through the smallest possible start vertex,
/// traced by breadth-first search with neighbours in increasing order.
pub fn short_cycle_if_undominated(d: &OrientedGraph) -> Option<Vec<usize>> {
    let n = d.n();
    let mut best: Option<Vec<usize>> = None;
    for s in 0..n {
        if d.in_neighbors(s).is_empty() || d.out_neighbors(s).is_empty() {
            continue;
        }
        let bound = best.as_ref().map_or(usize::MAX, Vec::len);
        if let Some(cycle) = shortest_cycle_through(d, s, bound) {
            if cycle.len() < bound {
                best = Some(cycle);
            }
        }
    }
    best
}

/// Length of a shortest directed cycle.
pub fn girth(d: &OrientedGraph) -> Option<usize> {
    short_cycle_if_undominated(d).map(|c| c.len())
}

fn shortest_cycle_through(d: &OrientedGraph, s: usize, bound: usize) -> Option<Vec<usize>> {
    let n = d.n();
    let mut parent = vec![usize::MAX; n];
    let mut dist = vec![usize::MAX; n];
    dist[s] = 0;
    let mut queue = VecDeque::from([s]);
    while let Some(v) = queue.pop_front() {
        if dist[v] + 1 >= bound {
            break;
        }
        if d.has_arc(v, s) {
            let mut cycle = vec![v];
            let mut x = v;
            while x != s {
                x = parent[x];
                cycle.push(x);
            }
            cycle.reverse();
            return Some(cycle);
        }
        for w in d.out_neighbors(v).iter() {
            if dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                parent[w] = v;
                queue.push_back(w);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(
            short_cycle_if_undominated(&OrientedGraph::cycle(3).unwrap()),
            Some(vec![0, 1, 2])
        );
        assert_eq!(
            short_cycle_if_undominated(&OrientedGraph::transitive(5)),
            None
        );
        let qr7 =
            OrientedGraph::from_arcs(7, (0..7).flat_map(|i| [1, 2, 4].map(|r| (i, (i + r) % 7))))
                .unwrap();
        assert_eq!(girth(&qr7), Some(3));
        assert_eq!(girth(&OrientedGraph::cycle(6).unwrap()), Some(6));
    }
}
