use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{arc_neighborhood, bfs_distances, Arc, OrientedGraph, VertexSet};

/// A directed path `v0 -> v1 -> ... -> vk`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Path {
    vertices: Vec<usize>,
}

impl Path {
    pub fn new(g: &OrientedGraph, vertices: Vec<usize>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::parameter("a path needs at least one vertex"));
        }
        for &v in &vertices {
            g.check_vertex(v)?;
        }
        for w in vertices.windows(2) {
            g.check_arc(Arc::new(w[0], w[1]))?;
        }
        Ok(Path { vertices })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// Number of arcs `k`.
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn start(&self) -> usize {
        self.vertices[0]
    }

    pub fn end(&self) -> usize {
        *self.vertices.last().expect("non-empty path")
    }

    /// The arc `e_i = v_{i-1} v_i`, for `1 <= i <= k`.
    pub fn arc(&self, i: usize) -> Arc {
        Arc::new(self.vertices[i - 1], self.vertices[i])
    }

    pub fn vertex_set(&self, n: usize) -> VertexSet {
        VertexSet::from_iter_in(n, self.vertices.iter().copied())
    }
}

/// Shortest `u -> v` path; among shortest paths, the lexicographically
/// smallest vertex sequence.
pub fn shortest_path(g: &OrientedGraph, u: usize, v: usize) -> Result<Path> {
    shortest_path_within(g, u, v, &g.vertices())
}

/// [`shortest_path`] inside `D[within]`.
pub fn shortest_path_within(
    g: &OrientedGraph,
    u: usize,
    v: usize,
    within: &VertexSet,
) -> Result<Path> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    let to_v = bfs_distances(g, v, within, true);
    if !within.contains(u) || to_v[u] == usize::MAX {
        return Err(Error::NoPath { from: u, to: v });
    }
    let mut vertices = vec![u];
    let mut cur = u;
    while cur != v {
        cur = g
            .out_neighbors(cur)
            .iter()
            .find(|&w| to_v[w] != usize::MAX && to_v[w] + 1 == to_v[cur])
            .expect("distance decreases along some arc");
        vertices.push(cur);
    }
    Ok(Path { vertices })
}

/// Where a vertex of a path region is coloured from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Slot {
    /// The neighbourhood of path arc `e_i` (1-based).
    Arc(usize),
    /// The inner vertex of a two-arc path.
    Middle,
    /// An endpoint of a path with at most one arc.
    Endpoint,
}

/// `S = (N-(v0) ∩ N+(vk)) ∪ V(P)` with one slot per member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegionAssignment {
    pub region: VertexSet,
    pub slots: BTreeMap<usize, Slot>,
}

impl RegionAssignment {
    pub fn slot(&self, v: usize) -> Option<Slot> {
        self.slots.get(&v).copied()
    }

    /// Keeps only members of `keep`.
    pub fn restrict(&self, keep: &VertexSet) -> RegionAssignment {
        RegionAssignment {
            region: self.region.intersection(keep),
            slots: self
                .slots
                .iter()
                .filter(|(v, _)| keep.contains(**v))
                .map(|(&v, &s)| (v, s))
                .collect(),
        }
    }
}

/// Assigns every vertex of the path region to an arc neighbourhood.
///
/// Vertices off the path take `e_{i+1}` for the largest `i` with
/// `w -> v_i`. Path vertices take the smallest arc whose neighbourhood
/// contains them when `k >= 3`; for `k = 2` the ends swap onto the other
/// arc and the middle vertex is tagged; for `k <= 1` the ends are tagged.
pub fn path_region(g: &OrientedGraph, p: &Path) -> Result<RegionAssignment> {
    let n = g.n();
    let k = p.len();
    let dist = bfs_distances(g, p.start(), &g.vertices(), false);
    if dist[p.end()] != k {
        return Err(Error::contract(format!(
            "path of length {k} from {} to {} is not shortest (distance {})",
            p.start(),
            p.end(),
            dist[p.end()]
        )));
    }
    let vs = p.vertices();
    let on_path = p.vertex_set(n);
    let nbhd: Vec<VertexSet> = (1..=k)
        .map(|i| arc_neighborhood(g, p.arc(i)))
        .collect::<Result<_>>()?;
    let in_nbhd = |v: usize, i: usize| nbhd[i - 1].contains(v);

    let mut slots = BTreeMap::new();
    let outside = g
        .in_neighbors(p.start())
        .intersection(g.out_neighbors(p.end()));
    for w in outside.difference(&on_path).iter() {
        let i = (0..=k)
            .rev()
            .find(|&i| g.has_arc(w, vs[i]))
            .expect("w -> v0");
        let slot = if i < k && in_nbhd(w, i + 1) {
            i + 1
        } else {
            // Only reachable when g is not a tournament.
            (1..=k).find(|&j| in_nbhd(w, j)).ok_or_else(|| {
                Error::contract(format!(
                    "vertex {w} lies in no arc neighbourhood of the path"
                ))
            })?
        };
        slots.insert(w, Slot::Arc(slot));
    }
    match k {
        0 | 1 => {
            for &v in vs {
                slots.insert(v, Slot::Endpoint);
            }
        }
        2 => {
            slots.insert(vs[0], Slot::Arc(2));
            slots.insert(vs[1], Slot::Middle);
            slots.insert(vs[2], Slot::Arc(1));
        }
        _ => {
            for &v in vs {
                let j = (1..=k).find(|&j| in_nbhd(v, j)).ok_or_else(|| {
                    Error::contract(format!("path vertex {v} lies in no arc neighbourhood"))
                })?;
                slots.insert(v, Slot::Arc(j));
            }
        }
    }
    let region = outside.union(&on_path);
    Ok(RegionAssignment { region, slots })
}

/// Arcs of `reference` running from `N(e_i)` to `N(e_j)` with `j >= i + 5`,
/// neighbourhoods taken in `g`. Empty along every shortest path.
pub fn long_forward_arcs(
    reference: &OrientedGraph,
    g: &OrientedGraph,
    p: &Path,
) -> Result<Vec<(Arc, usize, usize)>> {
    let k = p.len();
    let nbhd: Vec<VertexSet> = (1..=k)
        .map(|i| arc_neighborhood(g, p.arc(i)))
        .collect::<Result<_>>()?;
    let mut found = Vec::new();
    for i in 1..=k {
        for j in i + 5..=k {
            for x in nbhd[i - 1].iter() {
                for y in reference.out_neighbors(x).intersection(&nbhd[j - 1]).iter() {
                    found.push((Arc::new(x, y), i, j));
                }
            }
        }
    }
    Ok(found)
}
