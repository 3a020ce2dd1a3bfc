//! Small undirected graphs with exact chromatic and clique numbers.

use crate::error::{Error, Result};
use crate::graph::clique::max_clique;
use crate::graph::dense::{bit, low_mask, ones, Mask, MAX_DENSE};
use crate::graph::VertexSet;

/// Default vertex budget for the exact undirected solvers.
pub const DEFAULT_GRAPH_LIMIT: usize = 16;

#[derive(Clone, PartialEq, Eq)]
pub struct UndirectedGraph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl UndirectedGraph {
    pub fn empty(n: usize) -> Self {
        UndirectedGraph {
            n,
            adj: vec![VertexSet::empty(n); n],
        }
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Self::empty(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v).expect("valid edge");
            }
        }
        g
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for x in [u, v] {
            if x >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: x,
                    n: self.n,
                });
            }
        }
        if u == v {
            return Err(Error::Loop(u));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.adj[u]
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// Subgraph induced by `set`, relabelled to `0..|set|` in increasing order.
    pub fn induced(&self, set: &VertexSet) -> (UndirectedGraph, Vec<usize>) {
        let map = set.to_vec();
        let mut local = vec![usize::MAX; self.n];
        for (i, &v) in map.iter().enumerate() {
            local[v] = i;
        }
        let mut g = UndirectedGraph::empty(map.len());
        for (i, &v) in map.iter().enumerate() {
            for w in self.adj[v].intersection(set).iter() {
                g.adj[i].insert(local[w]);
            }
        }
        (g, map)
    }

    fn masks(&self) -> Vec<Mask> {
        self.adj
            .iter()
            .map(|s| s.iter().fold(0, |m, w| m | bit(w)))
            .collect()
    }

    fn check_budget(&self, limit: usize, upper_bound: usize) -> Result<()> {
        if self.n > limit || self.n > MAX_DENSE {
            return Err(Error::OverBudget {
                n: self.n,
                limit: limit.min(MAX_DENSE),
                upper_bound,
            });
        }
        Ok(())
    }
}

impl std::fmt::Debug for UndirectedGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("UndirectedGraph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Exact chromatic number.
pub fn graph_chromatic_exact(g: &UndirectedGraph, limit: usize) -> Result<usize> {
    graph_coloring_exact(g, limit).map(|c| c.iter().map(|&x| x + 1).max().unwrap_or(0))
}

/// An optimal proper colouring, colours `0..χ`.
pub fn graph_coloring_exact(g: &UndirectedGraph, limit: usize) -> Result<Vec<usize>> {
    g.check_budget(
        limit,
        graph_greedy_coloring(g)
            .iter()
            .map(|&c| c + 1)
            .max()
            .unwrap_or(0),
    )?;
    let n = g.n;
    if n == 0 {
        return Ok(Vec::new());
    }
    let adj = g.masks();
    let lower = max_clique(&adj, low_mask(n)).count_ones() as usize;
    let mut k = lower.max(1);
    loop {
        let mut colors = vec![usize::MAX; n];
        if k_color(&adj, low_mask(n), k, &mut colors, 0) {
            return Ok(colors);
        }
        k += 1;
    }
}

/// Exact clique number.
pub fn graph_clique_exact(g: &UndirectedGraph, limit: usize) -> Result<usize> {
    graph_max_clique(g, limit).map(|c| c.len())
}

/// A maximum clique.
pub fn graph_max_clique(g: &UndirectedGraph, limit: usize) -> Result<VertexSet> {
    g.check_budget(limit, g.n)?;
    let m = max_clique(&g.masks(), low_mask(g.n));
    Ok(VertexSet::from_iter_in(g.n, ones(m)))
}

/// First-fit proper colouring in vertex-id order.
pub fn graph_greedy_coloring(g: &UndirectedGraph) -> Vec<usize> {
    let mut colors: Vec<usize> = Vec::with_capacity(g.n);
    for v in 0..g.n {
        let used: Vec<usize> = g.adj[v]
            .iter()
            .filter(|&w| w < v)
            .map(|w| colors[w])
            .collect();
        let c = (0..)
            .find(|c| !used.contains(c))
            .expect("some colour is free");
        colors.push(c);
    }
    colors
}

/// DSATUR-style backtracking for a proper `k`-colouring of `uncolored`.
fn k_color(adj: &[Mask], uncolored: Mask, k: usize, colors: &mut [usize], used: usize) -> bool {
    if uncolored == 0 {
        return true;
    }
    let mut pick = usize::MAX;
    let mut pick_forbidden = 0u128;
    let mut best = (-1i64, -1i64);
    for v in ones(uncolored) {
        let mut forbidden = 0u128;
        for w in ones(adj[v] & !uncolored) {
            forbidden |= bit(colors[w]);
        }
        let sat = forbidden.count_ones() as i64;
        let deg = (adj[v] & uncolored).count_ones() as i64;
        if (sat, deg) > best {
            best = (sat, deg);
            pick = v;
            pick_forbidden = forbidden;
        }
    }
    let v = pick;
    // A fresh colour is interchangeable with any other unused one.
    for c in 0..k.min(used + 1) {
        if pick_forbidden & bit(c) != 0 {
            continue;
        }
        colors[v] = c;
        if k_color(adj, uncolored & !bit(v), k, colors, used.max(c + 1)) {
            return true;
        }
    }
    colors[v] = usize::MAX;
    false
}
