use serde::Serialize;

use crate::chromatic::UndirectedGraph;
use crate::error::{Error, Result};
use crate::graph::OrientedGraph;

/// The backward arcs of a tournament under a vertex ordering, as an
/// undirected graph on the original ids.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BackedgeGraph {
    pub ordering: Vec<usize>,
    #[serde(serialize_with = "edges")]
    pub graph: UndirectedGraph,
}

fn edges<S: serde::Serializer>(g: &UndirectedGraph, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(g.edges())
}

/// `{x, y}` is an edge iff the arc between them runs from the later to the
/// earlier position of `ordering`.
pub fn backedge_graph(t: &OrientedGraph, ordering: &[usize]) -> Result<BackedgeGraph> {
    let n = t.n();
    let mut position = vec![usize::MAX; n];
    for (i, &v) in ordering.iter().enumerate() {
        t.check_vertex(v)?;
        if position[v] != usize::MAX {
            return Err(Error::parameter(format!(
                "vertex {v} appears twice in the ordering"
            )));
        }
        position[v] = i;
    }
    if ordering.len() != n {
        return Err(Error::parameter("ordering is not a permutation"));
    }
    let mut graph = UndirectedGraph::empty(n);
    for e in t.arcs() {
        if position[e.tail] > position[e.head] {
            graph.add_edge(e.tail, e.head)?;
        }
    }
    Ok(BackedgeGraph {
        ordering: ordering.to_vec(),
        graph,
    })
}
