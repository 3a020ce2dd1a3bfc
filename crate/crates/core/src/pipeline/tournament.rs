//! Colouring tournaments from their arc neighbourhoods.

use crate::chromatic::{greedy_on, Coloring};
use crate::clusters::{cluster_or_domination, grow_jewel_chain, Dichotomy, JewelChain};
use crate::error::{Error, Result};
use crate::graph::{scc_decompose, OrientedGraph, VertexSet};
use crate::local::{
    color_via_domination, color_via_endpoints, ArcOracle, NeighborhoodTable, PaletteColoring,
};

use super::common::{fill_greedy, finalize, hamilton_palettes, push_exact, Projected};
use super::trace::{FlagKind, Node, Trace};
use super::Budgets;

/// Colours a tournament using only colourings of its arc neighbourhoods.
///
/// Every strong component is handled on its own: either a small dominating
/// and absorbing pair exists and the domination colourer applies, or a
/// jewel chain is grown and the colouring is assembled around its end
/// blocks. Budget failures fall back to greedy colouring and are flagged.
pub fn color_tournament_arc_local(
    t: &OrientedGraph,
    budgets: &Budgets,
) -> Result<(Coloring, Trace)> {
    if !t.is_tournament() {
        return Err(Error::parameter("input is not a tournament"));
    }
    let table = NeighborhoodTable::exact(t, budgets.exact_limit);
    let mut root = Node::new("tournament", t.n(), "strong-components");
    root.detail("t", table.t());
    if !table.is_exact() {
        root.flag(
            FlagKind::Inexact,
            "some arc neighbourhood exceeded the exact budget",
        );
    }
    let c = color_tournament_with(t, &table, budgets, &mut root)?;
    let c = finalize(t, c, budgets, &mut root);
    let trace = Trace::new("tournament", t.n(), c.color_count(), budgets, root);
    Ok((c, trace))
}

/// Colours every strong component with `oracle` answering for arcs of `t`.
/// Components share colour ids, since every cycle stays inside one.
pub(crate) fn color_tournament_with(
    t: &OrientedGraph,
    oracle: &dyn ArcOracle,
    budgets: &Budgets,
    node: &mut Node,
) -> Result<Coloring> {
    let mut out = Coloring::empty(t.n());
    for part in scc_decompose(t) {
        let (sub, map) = t.induced(&part);
        let projected = Projected {
            parent: oracle,
            map: &map,
        };
        let (c, child) = color_strong_tournament(&sub, &projected, budgets);
        for (v, color) in c.colored() {
            out.set(map[v], color);
        }
        node.children.push(child);
    }
    Ok(out)
}

/// Colours a strongly connected tournament. Never fails: errors from the
/// structured colourers degrade to greedy with a flag.
pub(crate) fn color_strong_tournament(
    t: &OrientedGraph,
    oracle: &dyn ArcOracle,
    budgets: &Budgets,
) -> (Coloring, Node) {
    let mut node = Node::new("strong tournament", t.n(), "");
    if t.n() <= 1 {
        node.branch = "single vertex".into();
        return (Coloring::from_colors(vec![0; t.n()]), node);
    }
    let result = NeighborhoodTable::build(&t.arc_list(), oracle, true).and_then(|table| {
        let width = table.t();
        node.detail("t", width);
        let k = width.max(1) + 1;
        node.detail("k", k);
        match cluster_or_domination(
            t,
            k,
            budgets.ell,
            budgets.k_budget,
            budgets.cluster_work,
            budgets.domination_limit,
        ) {
            Dichotomy::Domination {
                pair,
                search_exhausted,
                over_budget,
            } => {
                node.branch = "domination".into();
                node.detail("dominating", &pair.dominating);
                node.detail("absorbing", &pair.absorbing);
                if search_exhausted {
                    node.flag(
                        FlagKind::Inexact,
                        "cluster search exhausted its work budget",
                    );
                }
                if over_budget {
                    node.flag(
                        FlagKind::OverBudget,
                        "domination sets exceed the size budget",
                    );
                }
                if !pair.exact {
                    node.flag(FlagKind::Inexact, "domination sets are greedy");
                }
                color_via_domination(t, &pair.dominating, &pair.absorbing, &table)
            }
            Dichotomy::Cluster(_) => {
                node.branch = "jewel-chain".into();
                jewel_branch(t, &table, width.max(1), budgets, &mut node)
            }
        }
    });
    match result {
        Ok(pc) => {
            node.palettes = pc.palettes;
            (pc.coloring, node)
        }
        Err(e) => {
            node.flag(FlagKind::Degraded, format!("greedy fallback: {e}"));
            (greedy_on(t, &t.vertices()), node)
        }
    }
}

/// The cluster branch: grow a chain, colour the two sides of the end
/// blocks, and finish along a path from the last block to the first.
fn jewel_branch(
    t: &OrientedGraph,
    table: &NeighborhoodTable,
    d: usize,
    budgets: &Budgets,
    node: &mut Node,
) -> Result<PaletteColoring> {
    let growth = grow_jewel_chain(t, t, d, budgets.ell, budgets.cluster_work);
    if growth.budget_exceeded {
        node.flag(FlagKind::Inexact, "chain growth exhausted its work budget");
    }
    let mut chain = growth.chain;
    if chain.is_empty() {
        return Err(Error::contract("cluster branch without a jewel"));
    }
    let mut retries = 0;
    let (y_in, y_out) = loop {
        let degrade = retries >= budgets.retry_cap;
        let first = chain.first().expect("non-empty chain").clone();
        let last = chain.last().expect("non-empty chain").clone();
        let used = chain.vertices(t.n());
        let before = complete_side(t, &used, &first, true);
        let after = complete_side(t, &used, &last, false);
        let y_in = match color_jewel_free(t, &before, table, d, budgets, degrade, node)? {
            Ok(c) => c,
            Err(jewel) => {
                chain.blocks.insert(0, jewel);
                retries += 1;
                continue;
            }
        };
        let y_out = match color_jewel_free(t, &after, table, d, budgets, degrade, node)? {
            Ok(c) => c,
            Err(jewel) => {
                chain.blocks.push(jewel);
                retries += 1;
                continue;
            }
        };
        break (y_in, y_out);
    };
    if retries > 0 {
        node.detail("chain_retries", retries);
    }
    record_chain(node, &chain);
    let first = chain.first().expect("non-empty chain");
    let last = chain.last().expect("non-empty chain");
    let b = first.first().expect("non-empty block");
    let a = last.first().expect("non-empty block");
    node.detail("a", a);
    node.detail("b", b);

    let in_set = t.in_neighbors(b).clone();
    let mut in_side = PaletteColoring::new(t.n());
    in_side.push("Y", &y_in.restrict(&in_set));
    if !hamilton_palettes(t, first, &in_set, table, &mut in_side)? {
        node.flag(FlagKind::Degraded, "first block has no Hamilton cycle");
    }
    push_exact(
        t,
        &first.intersection(&in_set),
        "first block",
        budgets.exact_limit,
        &mut in_side,
    );
    if fill_greedy(t, &in_set, "in fallback", &mut in_side) {
        node.flag(
            FlagKind::Degraded,
            "in-neighbourhood of b needed a greedy palette",
        );
    }

    let out_set = t.out_neighbors(a).clone();
    let mut out_side = PaletteColoring::new(t.n());
    out_side.push("Y'", &y_out.restrict(&out_set));
    if !hamilton_palettes(t, last, &out_set, table, &mut out_side)? {
        node.flag(FlagKind::Degraded, "last block has no Hamilton cycle");
    }
    push_exact(
        t,
        &last.intersection(&out_set),
        "last block",
        budgets.exact_limit,
        &mut out_side,
    );
    if fill_greedy(t, &out_set, "out fallback", &mut out_side) {
        node.flag(
            FlagKind::Degraded,
            "out-neighbourhood of a needed a greedy palette",
        );
    }
    node.detail("in_palettes", &in_side.palettes);
    node.detail("out_palettes", &out_side.palettes);
    color_via_endpoints(t, a, b, &out_side.coloring, &in_side.coloring, table)
}

pub(crate) fn record_chain(node: &mut Node, chain: &JewelChain) {
    let blocks: Vec<&VertexSet> = chain.blocks.iter().map(|c| &c.members).collect();
    node.detail("chain", blocks);
}

/// Vertices outside `used` complete to `block` (`into = true`) or complete
/// from it.
pub(crate) fn complete_side(
    t: &OrientedGraph,
    used: &VertexSet,
    block: &VertexSet,
    into: bool,
) -> VertexSet {
    let free = used.complement();
    VertexSet::from_iter_in(
        t.n(),
        free.iter().filter(|&v| {
            let nb = if into {
                t.out_neighbors(v)
            } else {
                t.in_neighbors(v)
            };
            block.is_subset(nb)
        }),
    )
}

/// Colours `t[set]` component by component through the domination branch.
/// A component holding a jewel is returned as `Err(jewel)` unless
/// `degrade` is set, in which case it is coloured greedily and flagged.
fn color_jewel_free(
    t: &OrientedGraph,
    set: &VertexSet,
    oracle: &dyn ArcOracle,
    d: usize,
    budgets: &Budgets,
    degrade: bool,
    node: &mut Node,
) -> Result<Result<Coloring, crate::clusters::Cluster>> {
    let mut out = Coloring::empty(t.n());
    if set.is_empty() {
        return Ok(Ok(out));
    }
    let (sub, map) = t.induced(set);
    for part in scc_decompose(&sub) {
        let (inner, inner_map) = sub.induced(&part);
        let global: Vec<usize> = inner_map.iter().map(|&v| map[v]).collect();
        let projected = Projected {
            parent: oracle,
            map: &global,
        };
        let colored = match cluster_or_domination(
            &inner,
            d + 1,
            budgets.ell,
            budgets.k_budget,
            budgets.cluster_work,
            budgets.domination_limit,
        ) {
            Dichotomy::Cluster(mut jewel) if !degrade => {
                jewel.members =
                    VertexSet::from_iter_in(t.n(), jewel.members.iter().map(|v| global[v]));
                return Ok(Err(jewel));
            }
            Dichotomy::Cluster(_) => {
                node.flag(
                    FlagKind::Degraded,
                    "jewel inside Y after the retry cap; greedy",
                );
                greedy_on(&inner, &inner.vertices())
            }
            Dichotomy::Domination { pair, .. } => {
                match color_via_domination(&inner, &pair.dominating, &pair.absorbing, &projected) {
                    Ok(pc) => pc.coloring,
                    Err(e) => {
                        node.flag(
                            FlagKind::Degraded,
                            format!("Y component fell back to greedy: {e}"),
                        );
                        greedy_on(&inner, &inner.vertices())
                    }
                }
            }
        };
        for (v, c) in colored.colored() {
            out.set(global[v], c);
        }
    }
    Ok(Ok(out))
}
