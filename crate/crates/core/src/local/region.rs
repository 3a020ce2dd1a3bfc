use std::collections::BTreeMap;

use super::oracle::{checked_oracle, ArcOracle};
use super::palette::PaletteColoring;
use super::path::{path_region, shortest_path, Path, RegionAssignment, Slot};
use crate::chromatic::{verify_partial, Coloring};
use crate::error::{Error, Result};
use crate::graph::{OrientedGraph, VertexSet};
use crate::par;

/// Colours the path region of a shortest path:
/// five rotating palettes for `k >= 3`, two arc palettes plus a private
/// middle colour for `k = 2`, one arc palette plus private endpoint colours
/// for `k <= 1`.
pub fn color_path_region(
    t: &OrientedGraph,
    p: &Path,
    oracle: &dyn ArcOracle,
) -> Result<PaletteColoring> {
    let assignment = path_region(t, p)?;
    color_assignment(t, t, p, &assignment, oracle)
}

/// Colours an assignment produced by [`path_region`] (possibly restricted).
/// Neighbourhoods are taken in `t`; validity is required in `d`.
pub fn color_assignment(
    d: &OrientedGraph,
    t: &OrientedGraph,
    p: &Path,
    assignment: &RegionAssignment,
    oracle: &dyn ArcOracle,
) -> Result<PaletteColoring> {
    let n = t.n();
    let k = p.len();
    let mut by_arc: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    let mut tagged = Vec::new();
    for (&v, &slot) in &assignment.slots {
        match slot {
            Slot::Arc(i) => by_arc.entry(i).or_default().push(v),
            Slot::Middle | Slot::Endpoint => tagged.push(v),
        }
    }
    let mut sub: BTreeMap<usize, Coloring> = BTreeMap::new();
    for &i in by_arc.keys() {
        sub.insert(i, checked_oracle(d, t, p.arc(i), oracle)?);
    }
    let mut out = PaletteColoring::new(n);
    if k >= 3 {
        let w = sub.values().map(Coloring::color_count).max().unwrap_or(0);
        let mut widths = [0usize; 5];
        for &i in by_arc.keys() {
            widths[i % 5] = w;
        }
        let mut offsets = [0usize; 5];
        for r in 1..5 {
            offsets[r] = offsets[r - 1] + widths[r - 1];
        }
        let mut layout = Coloring::empty(n);
        for (&i, members) in &by_arc {
            for &v in members {
                layout.set(v, offsets[i % 5] + sub[&i].get(v).expect("oracle covers"));
            }
        }
        let parts = (0..5)
            .map(|r| (format!("arcs = {r} mod 5"), widths[r]))
            .collect();
        out.push_layout(parts, &layout);
    } else {
        for (&i, members) in &by_arc {
            let set = VertexSet::from_iter_in(n, members.iter().copied());
            out.push(format!("e{i}"), &sub[&i].restrict(&set));
        }
        let label = if k == 2 { "middle" } else { "endpoints" };
        out.push_private(label, tagged);
    }
    Ok(out)
}

/// Colours all of `t` from a shortest `u -> v` path region plus colourings
/// of `N+(u)` and `N-(v)`. Palette priority: region, out, in.
pub fn color_via_endpoints(
    t: &OrientedGraph,
    u: usize,
    v: usize,
    out_coloring: &Coloring,
    in_coloring: &Coloring,
    oracle: &dyn ArcOracle,
) -> Result<PaletteColoring> {
    let p = shortest_path(t, u, v)?;
    let region = color_path_region(t, &p, oracle)?;
    let mut out = PaletteColoring::new(t.n());
    out.absorb("region", &region);
    let out_set = t.out_neighbors(u);
    let in_set = t.in_neighbors(v);
    check_side(t, out_coloring, out_set, "out-neighbourhood")?;
    check_side(t, in_coloring, in_set, "in-neighbourhood")?;
    out.push("out", &out_coloring.restrict(out_set));
    out.push("in", &in_coloring.restrict(in_set));
    check_covered(&out.coloring)?;
    Ok(out)
}

/// Colours `t` from one path region per (absorbing, dominating) pair plus a
/// private colour for each vertex of `dom ∪ abs`.
pub fn color_via_domination(
    t: &OrientedGraph,
    dom: &VertexSet,
    abs: &VertexSet,
    oracle: &dyn ArcOracle,
) -> Result<PaletteColoring> {
    domination_coloring(t, t, dom, abs, oracle, true, true)
}

/// Shared body of the domination colourers. With `include_path = false`
/// only `N-(u) ∩ N+(w)` is coloured per pair (the dense-digraph variant).
/// Pairs run on the thread pool when `parallel` is set.
pub(crate) fn domination_coloring(
    d: &OrientedGraph,
    t: &OrientedGraph,
    dom: &VertexSet,
    abs: &VertexSet,
    oracle: &dyn ArcOracle,
    include_path: bool,
    parallel: bool,
) -> Result<PaletteColoring> {
    if !is_dominating(t, dom) {
        return Err(Error::contract("the given set is not dominating"));
    }
    if !is_dominating_reversed(t, abs) {
        return Err(Error::contract("the given set is not absorbing"));
    }
    let pairs: Vec<(usize, usize)> = abs
        .iter()
        .flat_map(|u| dom.iter().map(move |w| (u, w)))
        .collect();
    let region = |&(u, w): &(usize, usize)| -> Result<PaletteColoring> {
        let p = shortest_path(t, u, w)?;
        let mut assignment = path_region(t, &p)?;
        if !include_path {
            let between = t.in_neighbors(u).intersection(t.out_neighbors(w));
            assignment = assignment.restrict(&between);
        }
        color_assignment(d, t, &p, &assignment, oracle)
    };
    let regions = if parallel {
        par::map(&pairs, region)
    } else {
        pairs.iter().map(region).collect()
    };
    let mut out = PaletteColoring::new(t.n());
    for (&(u, w), region) in pairs.iter().zip(regions) {
        out.absorb(&format!("pair {u}->{w}"), &region?);
    }
    out.push_private("dominating and absorbing", dom.union(abs).iter());
    check_covered(&out.coloring)?;
    Ok(out)
}

/// Every vertex outside `set` has an in-neighbour in `set`.
pub fn is_dominating(g: &OrientedGraph, set: &VertexSet) -> bool {
    set.complement()
        .iter()
        .all(|v| g.in_neighbors(v).intersects(set))
}

/// Every vertex outside `set` has an out-neighbour in `set`.
pub fn is_absorbing(g: &OrientedGraph, set: &VertexSet) -> bool {
    is_dominating_reversed(g, set)
}

fn is_dominating_reversed(g: &OrientedGraph, set: &VertexSet) -> bool {
    set.complement()
        .iter()
        .all(|v| g.out_neighbors(v).intersects(set))
}

fn check_side(t: &OrientedGraph, c: &Coloring, side: &VertexSet, what: &str) -> Result<()> {
    if c.n() != t.n()
        || side.iter().any(|v| !c.is_colored(v))
        || !verify_partial(t, &c.restrict(side))
    {
        return Err(Error::contract(format!(
            "{what} colouring is missing or invalid"
        )));
    }
    Ok(())
}

fn check_covered(c: &Coloring) -> Result<()> {
    match (0..c.n()).find(|&v| !c.is_colored(v)) {
        Some(v) => Err(Error::contract(format!(
            "vertex {v} is covered by no palette"
        ))),
        None => Ok(()),
    }
}
