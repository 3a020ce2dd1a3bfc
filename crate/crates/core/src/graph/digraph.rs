use serde::{Deserialize, Serialize};

use super::VertexSet;
use crate::error::{Error, Result};

/// An arc `tail -> head`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Arc {
    pub tail: usize,
    pub head: usize,
}

impl Arc {
    pub const fn new(tail: usize, head: usize) -> Self {
        Arc { tail, head }
    }

    pub fn reversed(self) -> Self {
        Arc::new(self.head, self.tail)
    }
}

impl From<(usize, usize)> for Arc {
    fn from((tail, head): (usize, usize)) -> Self {
        Arc::new(tail, head)
    }
}

/// A loop-free, digon-free directed graph on vertices `0..n`.
///
/// Adjacency is kept as out- and in-neighbourhood bitmasks per vertex, so
/// neighbourhood intersections are word-parallel. Values are immutable once
/// built.
#[derive(Clone, PartialEq, Eq)]
pub struct OrientedGraph {
    n: usize,
    out: Vec<VertexSet>,
    inn: Vec<VertexSet>,
    arc_count: usize,
}

impl OrientedGraph {
    pub fn empty(n: usize) -> Self {
        OrientedGraph {
            n,
            out: vec![VertexSet::empty(n); n],
            inn: vec![VertexSet::empty(n); n],
            arc_count: 0,
        }
    }

    /// Builds a graph from an arc list. Duplicate arcs are merged.
    pub fn from_arcs<I, A>(n: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = A>,
        A: Into<Arc>,
    {
        let mut g = OrientedGraph::empty(n);
        for arc in arcs {
            g.add_arc(arc.into())?;
        }
        Ok(g)
    }

    pub(crate) fn add_arc(&mut self, arc: Arc) -> Result<()> {
        let Arc { tail, head } = arc;
        for v in [tail, head] {
            if v >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    n: self.n,
                });
            }
        }
        if tail == head {
            return Err(Error::Loop(tail));
        }
        if self.out[head].contains(tail) {
            return Err(Error::Digon(tail.min(head), tail.max(head)));
        }
        if !self.out[tail].contains(head) {
            self.out[tail].insert(head);
            self.inn[head].insert(tail);
            self.arc_count += 1;
        }
        Ok(())
    }

    pub fn transitive(n: usize) -> Self {
        let mut g = OrientedGraph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_arc(Arc::new(u, v))
                    .expect("transitive arcs are valid");
            }
        }
        g
    }

    /// Directed cycle `0 -> 1 -> ... -> n-1 -> 0`. Requires `n != 2`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n == 2 {
            return Err(Error::parameter("a directed 2-cycle is a digon"));
        }
        let mut g = OrientedGraph::empty(n);
        if n >= 3 {
            for v in 0..n {
                g.add_arc(Arc::new(v, (v + 1) % n))?;
            }
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.arc_count
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn has_arc(&self, tail: usize, head: usize) -> bool {
        tail < self.n && head < self.n && self.out[tail].contains(head)
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.has_arc(u, v) || self.has_arc(v, u)
    }

    pub fn out_neighbors(&self, v: usize) -> &VertexSet {
        &self.out[v]
    }

    pub fn in_neighbors(&self, v: usize) -> &VertexSet {
        &self.inn[v]
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out[v].len()
    }

    /// All arcs, sorted lexicographically by (tail, head).
    pub fn arcs(&self) -> impl Iterator<Item = Arc> + '_ {
        (0..self.n).flat_map(move |u| self.out[u].iter().map(move |v| Arc::new(u, v)))
    }

    pub fn arc_list(&self) -> Vec<Arc> {
        self.arcs().collect()
    }

    pub fn is_tournament(&self) -> bool {
        self.arc_count == self.n * self.n.saturating_sub(1) / 2
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    pub fn check_arc(&self, arc: Arc) -> Result<()> {
        if self.has_arc(arc.tail, arc.head) {
            Ok(())
        } else {
            Err(Error::InvalidArc(arc))
        }
    }

    /// The same vertex set with every arc reversed.
    pub fn reversed(&self) -> Self {
        OrientedGraph {
            n: self.n,
            out: self.inn.clone(),
            inn: self.out.clone(),
            arc_count: self.arc_count,
        }
    }

    /// The subgraph induced by `set`, relabelled to `0..|set|` in increasing
    /// id order. The returned map sends new ids back to ids of `self`.
    pub fn induced(&self, set: &VertexSet) -> (OrientedGraph, Vec<usize>) {
        let map = set.to_vec();
        let mut local = vec![usize::MAX; self.n];
        for (i, &v) in map.iter().enumerate() {
            local[v] = i;
        }
        let mut g = OrientedGraph::empty(map.len());
        for (i, &v) in map.iter().enumerate() {
            for w in self.out[v].intersection(set).iter() {
                g.out[i].insert(local[w]);
                g.inn[local[w]].insert(i);
                g.arc_count += 1;
            }
        }
        (g, map)
    }

    /// Vertices of `set` that `v` reaches by an arc, restricted to `set`.
    pub fn out_within(&self, v: usize, set: &VertexSet) -> VertexSet {
        self.out[v].intersection(set)
    }

    pub fn in_within(&self, v: usize, set: &VertexSet) -> VertexSet {
        self.inn[v].intersection(set)
    }

    /// Union with `other` (same vertex count). Fails on digons.
    pub fn union(&self, other: &OrientedGraph) -> Result<OrientedGraph> {
        if self.n != other.n {
            return Err(Error::parameter("graphs differ in vertex count"));
        }
        let mut g = self.clone();
        for arc in other.arcs() {
            g.add_arc(arc)?;
        }
        Ok(g)
    }
}

impl std::fmt::Debug for OrientedGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("OrientedGraph")
            .field("n", &self.n)
            .field(
                "arcs",
                &self
                    .arc_list()
                    .iter()
                    .map(|a| (a.tail, a.head))
                    .collect::<Vec<_>>(),
            )
            .finish()
    }
}
