//! Heavy and light arcs, and clusters assembled from heavy cliques.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::chromatic::dichromatic_of_set;
use crate::clusters::{find_cluster_in, Cluster, ClusterSearch};
use crate::error::{Error, Result};
use crate::graph::{arc_neighborhood, Arc, OrientedGraph, VertexSet};
use crate::par;
use crate::pipeline::Budgets;

use super::sizes::s_saturating;

/// Arcs split by whether their neighbourhood holds a `(t - 1)`-cluster.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ArcClassification {
    pub t: usize,
    pub heavy: Vec<Arc>,
    pub light: Vec<Arc>,
    /// One cluster inside `N(e)` per heavy arc.
    pub witnesses: BTreeMap<Arc, Cluster>,
    /// Light arcs whose search ran out of work.
    pub unresolved: Vec<Arc>,
}

impl ArcClassification {
    pub fn is_heavy(&self, e: Arc) -> bool {
        self.witnesses.contains_key(&e)
    }

    /// True when every arc was classified by an exhaustive search.
    pub fn is_exhaustive(&self) -> bool {
        self.unresolved.is_empty()
    }

    /// The digraph of light arcs on the same vertices.
    pub fn light_digraph(&self, n: usize) -> OrientedGraph {
        OrientedGraph::from_arcs(n, self.light.iter().map(|e| (e.tail, e.head)))
            .expect("arcs of a tournament")
    }
}

/// Classifies every arc of `t_graph` at parameter `t`: heavy when `N(e)`
/// holds a `(t - 1, min(s(t - 1), ell))`-cluster. Searches that run out of
/// work count as light and are listed as unresolved.
pub fn classify_arcs(
    t_graph: &OrientedGraph,
    t: usize,
    budgets: &Budgets,
) -> Result<ArcClassification> {
    if !t_graph.is_tournament() {
        return Err(Error::parameter("arc classification needs a tournament"));
    }
    if t == 0 {
        return Err(Error::parameter("t must be at least 1"));
    }
    let k = t - 1;
    let ell = s_saturating(k).min(budgets.ell);
    let arcs = t_graph.arc_list();
    let searches = par::map(&arcs, |&e| {
        let nb = arc_neighborhood(t_graph, e).expect("arc of the tournament");
        find_cluster_in(t_graph, &nb, k, ell, budgets.cluster_work)
    });
    let mut out = ArcClassification {
        t,
        heavy: Vec::new(),
        light: Vec::new(),
        witnesses: BTreeMap::new(),
        unresolved: Vec::new(),
    };
    for (e, search) in arcs.into_iter().zip(searches) {
        match search {
            ClusterSearch::Found(c) => {
                out.heavy.push(e);
                out.witnesses.insert(e, c);
            }
            ClusterSearch::Absent => out.light.push(e),
            ClusterSearch::BudgetExceeded => {
                out.light.push(e);
                out.unresolved.push(e);
            }
        }
    }
    Ok(out)
}

/// Joins a clique of pairwise heavy arcs with the clusters witnessing their
/// heaviness. With `t = |clique|` every `(t - 1)`-colouring would have to
/// separate the ends of each heavy arc, so the union needs `t` colours; this
/// is re-checked exactly when the union fits `exact_limit`.
pub fn extract_cluster_from_heavy_clique(
    t_graph: &OrientedGraph,
    clique: &VertexSet,
    witnesses: &BTreeMap<Arc, Cluster>,
    exact_limit: usize,
) -> Result<Cluster> {
    let members = clique.to_vec();
    if members.is_empty() {
        return Err(Error::contract("empty clique"));
    }
    let mut set = clique.clone();
    for (i, &x) in members.iter().enumerate() {
        for &y in &members[i + 1..] {
            let e = if t_graph.has_arc(x, y) {
                Arc::new(x, y)
            } else {
                Arc::new(y, x)
            };
            let witness = witnesses.get(&e).ok_or_else(|| {
                Error::contract(format!("arc ({}, {}) is not heavy", e.tail, e.head))
            })?;
            set.union_with(&witness.members);
        }
    }
    let k = members.len();
    if set.len() <= exact_limit {
        let (chi, _) = dichromatic_of_set(t_graph, &set, exact_limit)?;
        if chi < k {
            return Err(Error::contract(format!(
                "union of a heavy {k}-clique has dichromatic number {chi}"
            )));
        }
    }
    Ok(Cluster {
        ell: set.len(),
        members: set,
        k,
    })
}

/// The undirected graph of heavy arcs.
pub fn heavy_graph(n: usize, classes: &ArcClassification) -> crate::chromatic::UndirectedGraph {
    crate::chromatic::UndirectedGraph::from_edges(n, classes.heavy.iter().map(|e| (e.tail, e.head)))
        .expect("arcs of a tournament")
}

/// The undirected graph of light arcs.
pub fn light_graph(n: usize, classes: &ArcClassification) -> crate::chromatic::UndirectedGraph {
    crate::chromatic::UndirectedGraph::from_edges(n, classes.light.iter().map(|e| (e.tail, e.head)))
        .expect("arcs of a tournament")
}
