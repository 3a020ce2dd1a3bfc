//! Helpers shared by the two pipelines.

use crate::chromatic::{dichromatic_greedy, greedy_on, verify_coloring, verify_partial, Coloring};
use crate::error::Result;
use crate::graph::dense::{bit, ones, Dense, Mask, MAX_DENSE};
use crate::graph::{
    arc_neighborhood, is_acyclic, punch_neighborhood, Arc, OrientedGraph, VertexSet,
};
use crate::local::{color_set, ArcOracle, PaletteColoring};

use super::trace::{FlagKind, Node};
use super::Budgets;

/// An oracle for an induced subgraph, answered by a parent oracle.
/// `map[local] = parent id`.
pub(crate) struct Projected<'a> {
    pub parent: &'a dyn ArcOracle,
    pub map: &'a [usize],
}

impl ArcOracle for Projected<'_> {
    fn color(&self, e: Arc) -> Result<Coloring> {
        let lifted = Arc::new(self.map[e.tail], self.map[e.head]);
        Ok(self.parent.color(lifted)?.project(self.map))
    }
}

/// A directed Hamilton cycle of `g[set]`, starting at the smallest member.
/// Exhaustive search; `set` is expected to be block sized.
pub fn hamilton_cycle(g: &OrientedGraph, set: &VertexSet) -> Option<Vec<usize>> {
    if set.len() < 2 || set.len() > MAX_DENSE {
        return None;
    }
    let dense = Dense::induced(g, set)?;
    let all = dense.all();
    let mut order = vec![0usize];
    if extend_cycle(&dense, all, bit(0), &mut order) {
        Some(order.into_iter().map(|v| dense.map[v]).collect())
    } else {
        None
    }
}

fn extend_cycle(g: &Dense, all: Mask, used: Mask, order: &mut Vec<usize>) -> bool {
    let last = *order.last().expect("non-empty");
    if used == all {
        return g.out[last] & bit(0) != 0;
    }
    // Every unused vertex must still be reachable from the path end.
    if g.reach(last, all & !used | bit(last)) & (all & !used) != all & !used {
        return false;
    }
    for v in ones(g.out[last] & all & !used) {
        order.push(v);
        if extend_cycle(g, all, used | bit(v), order) {
            return true;
        }
        order.pop();
    }
    false
}

/// Colours `N±(block) ∩ target` from the arc neighbourhoods along a
/// Hamilton cycle of `t[block]`: each vertex joins the first cycle arc
/// whose neighbourhood contains it. Returns `None` when the block has no
/// Hamilton cycle.
pub(crate) fn hamilton_palettes(
    t: &OrientedGraph,
    block: &VertexSet,
    target: &VertexSet,
    oracle: &dyn ArcOracle,
    out: &mut PaletteColoring,
) -> Result<bool> {
    let wanted = punch_neighborhood(t, block).intersection(target);
    if wanted.is_empty() {
        return Ok(true);
    }
    let Some(cycle) = hamilton_cycle(t, block) else {
        return Ok(false);
    };
    let mut left = wanted;
    for i in 0..cycle.len() {
        let e = Arc::new(cycle[i], cycle[(i + 1) % cycle.len()]);
        let members = arc_neighborhood(t, e)?.intersection(&left);
        if members.is_empty() {
            continue;
        }
        let c = oracle.color(e)?;
        out.push(
            format!("hamilton arc {}->{}", e.tail, e.head),
            &c.restrict(&members),
        );
        left.difference_with(&members);
    }
    Ok(true)
}

/// Gives every uncoloured vertex of `target` a colour from a greedy palette.
/// Returns true when something had to be filled.
pub(crate) fn fill_greedy(
    d: &OrientedGraph,
    target: &VertexSet,
    label: &str,
    out: &mut PaletteColoring,
) -> bool {
    let missing = target.difference(&out.coloring.domain());
    if missing.is_empty() {
        return false;
    }
    out.push(label, &greedy_on(d, &missing));
    true
}

/// Colours `target` exactly within budget and pushes it as one palette.
pub(crate) fn push_exact(
    d: &OrientedGraph,
    target: &VertexSet,
    label: &str,
    limit: usize,
    out: &mut PaletteColoring,
) {
    let missing = target.difference(&out.coloring.domain());
    if !missing.is_empty() {
        out.push(label, &color_set(d, &missing, limit).0);
    }
}

/// Repeatedly merges a colour class into the earliest class whose union
/// with it stays acyclic. Never increases the colour count.
pub fn merge_classes(d: &OrientedGraph, c: &Coloring) -> Coloring {
    let mut classes: Vec<VertexSet> = c.classes().into_values().collect();
    let mut j = 1;
    while j < classes.len() {
        let target = (0..j).find(|&i| is_acyclic(d, &classes[i].union(&classes[j])));
        match target {
            Some(i) => {
                let moved = classes.remove(j);
                classes[i].union_with(&moved);
            }
            None => j += 1,
        }
    }
    let mut out = Coloring::empty(c.n());
    for (color, class) in classes.iter().enumerate() {
        for v in class.iter() {
            out.set(v, color);
        }
    }
    out
}

/// Final check of a pipeline result: verified colourings are optionally
/// merged and normalised; anything invalid is replaced by greedy colouring
/// with a degradation flag.
pub(crate) fn finalize(
    d: &OrientedGraph,
    c: Coloring,
    budgets: &Budgets,
    node: &mut Node,
) -> Coloring {
    let valid = c.n() == d.n() && verify_coloring(d, &c).unwrap_or(false);
    let c = if valid {
        c
    } else {
        node.flag(
            FlagKind::Degraded,
            "assembled colouring failed verification; greedy fallback",
        );
        dichromatic_greedy(d)
    };
    let before = c.color_count();
    let c = if budgets.merge_classes {
        merge_classes(d, &c)
    } else {
        c.normalized()
    };
    node.detail("colors_before_merge", before);
    debug_assert!(verify_partial(d, &c));
    c
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qr7() -> OrientedGraph {
        OrientedGraph::from_arcs(7, (0..7).flat_map(|i| [1, 2, 4].map(|r| (i, (i + r) % 7))))
            .unwrap()
    }

    fn is_cycle(g: &OrientedGraph, cycle: &[usize]) -> bool {
        (0..cycle.len()).all(|i| g.has_arc(cycle[i], cycle[(i + 1) % cycle.len()]))
    }

    #[test]
    fn hamilton_examples() {
        let c3 = OrientedGraph::cycle(3).unwrap();
        assert_eq!(hamilton_cycle(&c3, &c3.vertices()), Some(vec![0, 1, 2]));
        let q = qr7();
        let cycle = hamilton_cycle(&q, &q.vertices()).unwrap();
        assert_eq!(cycle.len(), 7);
        assert!(is_cycle(&q, &cycle));
        let t4 = OrientedGraph::transitive(4);
        assert_eq!(hamilton_cycle(&t4, &t4.vertices()), None);
    }

    #[test]
    fn merge_reduces_to_valid() {
        let c3 = OrientedGraph::cycle(3).unwrap();
        let merged = merge_classes(&c3, &Coloring::from_colors([0, 1, 2]));
        assert_eq!(merged.to_vec(), vec![0, 0, 1]);
        let t5 = OrientedGraph::transitive(5);
        assert_eq!(
            merge_classes(&t5, &Coloring::from_colors([4, 3, 2, 1, 0])).color_count(),
            1
        );
    }
}
