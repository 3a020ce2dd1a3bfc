use crate::error::{Error, Result};
use crate::graph::{Arc, OrientedGraph, VertexSet};

/// A tournament on the vertices of `d` containing every arc of `d`.
/// Arcs of `d` are tagged A, the added ones B.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Completion {
    pub d: OrientedGraph,
    pub t: OrientedGraph,
    pub added: OrientedGraph,
}

impl Completion {
    pub fn is_original(&self, e: Arc) -> bool {
        self.d.has_arc(e.tail, e.head)
    }

    pub fn b_arcs(&self) -> Vec<Arc> {
        self.added.arc_list()
    }

    /// B-arcs `uv` for which `N_A+(v) ∩ N_A-(u)` is non-empty while
    /// `N_A+(u) ∩ N_A-(v)` is empty.
    pub fn violations(&self) -> Vec<Arc> {
        self.added
            .arcs()
            .filter(|&e| {
                let back = a_between(&self.d, e.head, e.tail);
                let fwd = a_between(&self.d, e.tail, e.head);
                !back.is_empty() && fwd.is_empty()
            })
            .collect()
    }

    pub fn check(&self) -> Result<()> {
        if !self.t.is_tournament() {
            return Err(Error::contract("completion is not a tournament"));
        }
        if self.d.arcs().any(|e| !self.t.has_arc(e.tail, e.head)) {
            return Err(Error::contract("completion lost an original arc"));
        }
        if let Some(e) = self.violations().first() {
            return Err(Error::contract(format!(
                "added arc ({}, {}) breaks the orientation rule",
                e.tail, e.head
            )));
        }
        Ok(())
    }
}

/// `N_A+(x) ∩ N_A-(y)`: middle vertices of A-paths `x -> m -> y`.
pub fn a_between(d: &OrientedGraph, x: usize, y: usize) -> VertexSet {
    d.out_neighbors(x).intersection(d.in_neighbors(y))
}

/// Orients every non-edge `{u, v}` (`u < v`): toward `u` when only `v`
/// reaches `u` through a two-arc A-path, toward `v` when only `u` reaches
/// `v`, and from `u` to `v` otherwise.
pub fn complete_to_tournament(d: &OrientedGraph) -> Completion {
    let n = d.n();
    let mut added = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if d.adjacent(u, v) {
                continue;
            }
            let x = a_between(d, u, v);
            let y = a_between(d, v, u);
            if x.is_empty() && !y.is_empty() {
                added.push((v, u));
            } else {
                added.push((u, v));
            }
        }
    }
    let added = OrientedGraph::from_arcs(n, added).expect("non-edges only");
    let t = d.union(&added).expect("disjoint arc sets");
    let comp = Completion {
        d: d.clone(),
        t,
        added,
    };
    debug_assert!(comp.check().is_ok());
    comp
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let c3 = OrientedGraph::cycle(3).unwrap();
        let comp = complete_to_tournament(&c3);
        assert_eq!(comp.added.arc_count(), 0);
        assert_eq!(comp.t, c3);

        let path = OrientedGraph::from_arcs(3, [(0, 1), (1, 2)]).unwrap();
        let comp = complete_to_tournament(&path);
        assert_eq!(comp.b_arcs(), vec![Arc::new(0, 2)]);
        assert!(comp.check().is_ok());

        let comp = complete_to_tournament(&OrientedGraph::empty(2));
        assert_eq!(comp.b_arcs(), vec![Arc::new(0, 1)]);
    }

    #[test]
    fn orients_toward_lower_when_forced() {
        // 2 -> 1 -> 0 with non-edge {0, 2}: only 2 reaches 0.
        let g = OrientedGraph::from_arcs(3, [(2, 1), (1, 0)]).unwrap();
        let comp = complete_to_tournament(&g);
        assert_eq!(comp.b_arcs(), vec![Arc::new(2, 0)]);
        assert!(comp.violations().is_empty());
    }
}
