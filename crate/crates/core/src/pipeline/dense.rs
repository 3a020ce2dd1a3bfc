//! Colouring oriented graphs of bounded independence number by recursion
//! on α over tournament completions.

use std::collections::HashMap;
use std::sync::Mutex;

use num_traits::ToPrimitive;
use serde::Serialize;

use crate::chromatic::{greedy_on, verify_partial, Coloring};
use crate::clusters::{
    cluster_or_domination, domination_pair, grow_jewel_chain, min_order, Dichotomy,
};
use crate::error::{Error, Result};
use crate::graph::{
    arc_neighborhood, independence_number, scc_decompose, Arc, OrientedGraph, VertexSet,
};
use crate::local::{
    color_assignment, color_set, domination_coloring, path_region, shortest_path, ArcOracle,
    NeighborhoodTable, PaletteColoring,
};

use super::bounds::evaluate_bounds;
use super::common::{fill_greedy, finalize, hamilton_palettes, push_exact, Projected};
use super::completion::{a_between, complete_to_tournament, Completion};
use super::tournament::{color_strong_tournament, complete_side, record_chain};
use super::trace::{Flag, FlagKind, Node, Trace};
use super::Budgets;

/// Sets up to this size get their independence number checked exactly
/// whenever the recursion descends into them.
pub const ALPHA_CHECK_LIMIT: usize = 30;

/// Colours a vertex subset of a completion (ids of the completion).
pub trait SetColorer: Sync {
    fn color(&self, set: &VertexSet) -> Result<Coloring>;
}

impl<F> SetColorer for F
where
    F: Fn(&VertexSet) -> Result<Coloring> + Sync,
{
    fn color(&self, set: &VertexSet) -> Result<Coloring> {
        self(set)
    }
}

/// Colours `N_T(e)` for an arc `e = uv` of the completion, validly in `D`.
///
/// The neighbourhood splits into `S1` (both arcs original), `S2` (the arc
/// into `u` added) and `S3` (the arc out of `v` added). `S1` comes from
/// `oracle` for an original arc; for an added arc it is covered through a
/// middle vertex `w` of an A-path `u -> w -> v` by the two neighbourhoods
/// of `uw` and `wv`, with the remainder (non-adjacent to `w`) recursed on.
/// `S2` and `S3` are recursed on.
pub fn color_completed_arc_neighborhood(
    comp: &Completion,
    e: Arc,
    oracle: &dyn ArcOracle,
    recurse: &dyn SetColorer,
) -> Result<PaletteColoring> {
    let (d, t) = (&comp.d, &comp.t);
    let (u, v) = (e.tail, e.head);
    let nt = arc_neighborhood(t, e)?;
    let s1 = a_between(d, v, u);
    let s2 = comp.added.in_neighbors(u).intersection(&nt);
    let s3 = comp
        .added
        .out_neighbors(v)
        .intersection(&nt)
        .difference(&s2);
    let mut out = PaletteColoring::new(t.n());
    if comp.is_original(e) {
        out.push("S1", &covering(oracle, e, &s1)?);
    } else if !s1.is_empty() {
        let w = a_between(d, u, v)
            .first()
            .ok_or_else(|| Error::contract("added arc with a back path but no forward path"))?;
        let via_uw = s1.intersection(&arc_neighborhood(d, Arc::new(u, w))?);
        let via_wv = s1
            .intersection(&arc_neighborhood(d, Arc::new(w, v))?)
            .difference(&via_uw);
        let rest = s1.difference(&via_uw).difference(&via_wv);
        out.push("S1 via uw", &covering(oracle, Arc::new(u, w), &via_uw)?);
        out.push("S1 via wv", &covering(oracle, Arc::new(w, v), &via_wv)?);
        out.push("S1 rest", &recursed(recurse, &rest)?);
    }
    out.push("S2", &recursed(recurse, &s2)?);
    out.push("S3", &recursed(recurse, &s3)?);
    if !nt.is_subset(&out.coloring.domain()) || !verify_partial(d, &out.coloring) {
        return Err(Error::InvalidOracleColoring(e));
    }
    Ok(out)
}

fn covering(oracle: &dyn ArcOracle, e: Arc, set: &VertexSet) -> Result<Coloring> {
    if set.is_empty() {
        return Ok(Coloring::empty(set.universe()));
    }
    let c = oracle.color(e)?;
    if set.iter().any(|v| !c.is_colored(v)) {
        return Err(Error::InvalidOracleColoring(e));
    }
    Ok(c.restrict(set))
}

fn recursed(recurse: &dyn SetColorer, set: &VertexSet) -> Result<Coloring> {
    if set.is_empty() {
        return Ok(Coloring::empty(set.universe()));
    }
    let c = recurse.color(set)?;
    if set.iter().any(|v| !c.is_colored(v)) {
        return Err(Error::contract(
            "recursive colourer left a vertex uncoloured",
        ));
    }
    Ok(c.restrict(set))
}

/// The completed-neighbourhood colourer as an arc oracle on `comp.t`.
pub struct CompletionOracle<'a> {
    pub comp: &'a Completion,
    pub oracle: &'a dyn ArcOracle,
    pub recurse: &'a dyn SetColorer,
}

impl ArcOracle for CompletionOracle<'_> {
    fn color(&self, e: Arc) -> Result<Coloring> {
        Ok(color_completed_arc_neighborhood(self.comp, e, self.oracle, self.recurse)?.coloring)
    }
}

/// Colours `N_T-(u) ∩ N_T+(v)` along a shortest `u -> v` path of the
/// completion with five rotating palettes, validly in `D`.
pub fn color_between_in_completion(
    comp: &Completion,
    u: usize,
    v: usize,
    oracle: &dyn ArcOracle,
    recurse: &dyn SetColorer,
) -> Result<PaletteColoring> {
    let lifted = CompletionOracle {
        comp,
        oracle,
        recurse,
    };
    between_region(comp, u, v, &lifted)
}

fn between_region(
    comp: &Completion,
    u: usize,
    v: usize,
    oracle: &dyn ArcOracle,
) -> Result<PaletteColoring> {
    let t = &comp.t;
    let p = shortest_path(t, u, v)?;
    let between = t.in_neighbors(u).intersection(t.out_neighbors(v));
    let assignment = path_region(t, &p)?.restrict(&between);
    color_assignment(&comp.d, t, &p, &assignment, oracle)
}

/// Counters reported in the trace of the dense pipeline.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct RecursionStats {
    pub calls: usize,
    pub memo_hits: usize,
    pub max_depth: usize,
    pub exact_leaves: usize,
    pub tournament_parts: usize,
    pub domination_parts: usize,
    pub jewel_parts: usize,
    pub alpha_checks: usize,
    pub alpha_violations: usize,
    pub greedy_fallbacks: usize,
}

/// Colours an oriented graph from colourings of its arc neighbourhoods.
///
/// Independence number 1 is the tournament case. Otherwise every strong
/// part is completed to a tournament and coloured through the
/// cluster-or-domination dichotomy, recursing on subsets of smaller
/// independence number. Failures degrade to greedy colouring and are
/// flagged in the trace.
pub fn color_digraph_arc_local(d: &OrientedGraph, budgets: &Budgets) -> Result<(Coloring, Trace)> {
    let table = NeighborhoodTable::exact(d, budgets.exact_limit);
    color_digraph_with(d, &table, table.t(), table.is_exact(), budgets, "dense")
}

/// [`color_digraph_arc_local`] with an injected arc oracle of measured
/// width `t`.
pub fn color_digraph_with(
    d: &OrientedGraph,
    oracle: &dyn ArcOracle,
    t: usize,
    exact: bool,
    budgets: &Budgets,
    method: &str,
) -> Result<(Coloring, Trace)> {
    let alpha = independence_number(d, budgets.alpha_limit);
    let mut root = Node::new(method, d.n(), "strong-components");
    root.detail("t", t);
    root.detail("alpha", &alpha);
    if !exact {
        root.flag(
            FlagKind::Inexact,
            "some arc neighbourhood exceeded the exact budget",
        );
    }
    if !alpha.exact {
        root.flag(FlagKind::Inexact, "independence number is a greedy bound");
    }
    if alpha.value >= 1 {
        root.detail(
            "bounds",
            evaluate_bounds(t, alpha.value, budgets.k_budget, budgets.ell)?,
        );
    }
    let run = Recursion {
        d,
        oracle,
        t,
        budgets,
        memo: Mutex::new(HashMap::new()),
        stats: Mutex::new(RecursionStats::default()),
        flags: Mutex::new(Vec::new()),
    };
    let c = run.color_top(&mut root);
    root.detail("recursion", &*run.stats.lock().expect("stats lock"));
    root.flags
        .extend(run.flags.into_inner().expect("flags lock"));
    let c = finalize(d, c, budgets, &mut root);
    let trace = Trace::new(method, d.n(), c.color_count(), budgets, root);
    Ok((c, trace))
}

struct Recursion<'a> {
    d: &'a OrientedGraph,
    oracle: &'a dyn ArcOracle,
    t: usize,
    budgets: &'a Budgets,
    memo: Mutex<HashMap<VertexSet, Coloring>>,
    stats: Mutex<RecursionStats>,
    flags: Mutex<Vec<Flag>>,
}

impl Recursion<'_> {
    fn stat(&self, f: impl FnOnce(&mut RecursionStats)) {
        f(&mut self.stats.lock().expect("stats lock"));
    }

    fn flag(&self, kind: FlagKind, message: impl Into<String>) {
        let flag = Flag::new(kind, message);
        let mut flags = self.flags.lock().expect("flags lock");
        if !flags.contains(&flag) {
            flags.push(flag);
        }
    }

    fn color_top(&self, root: &mut Node) -> Coloring {
        let (c, children) = self.color_parts(&self.d.vertices(), 0, true);
        root.children = children;
        c
    }

    /// Colours `D[set]` (global ids); always valid.
    fn color(&self, set: &VertexSet, depth: usize) -> Coloring {
        if let Some(c) = self.memo.lock().expect("memo lock").get(set) {
            self.stat(|s| s.memo_hits += 1);
            return c.clone();
        }
        let mut over = false;
        self.stat(|s| {
            s.calls += 1;
            s.max_depth = s.max_depth.max(depth);
            over = s.calls > self.budgets.recursion_limit;
        });
        let c = if over {
            self.flag(
                FlagKind::Degraded,
                "recursion limit reached; greedy for the remaining subsets",
            );
            self.stat(|s| s.greedy_fallbacks += 1);
            greedy_on(self.d, set).normalized()
        } else {
            self.color_parts(set, depth, false).0
        };
        self.memo
            .lock()
            .expect("memo lock")
            .insert(set.clone(), c.clone());
        c
    }

    fn color_parts(&self, set: &VertexSet, depth: usize, record: bool) -> (Coloring, Vec<Node>) {
        let n = self.d.n();
        let mut out = Coloring::empty(n);
        let mut nodes = Vec::new();
        if set.is_empty() {
            return (out, nodes);
        }
        let (sub, map) = self.d.induced(set);
        for part in scc_decompose(&sub) {
            let global = VertexSet::from_iter_in(n, part.iter().map(|v| map[v]));
            let mut node = Node::new("strong part", global.len(), "");
            let c = self.color_strong(&global, depth, &mut node);
            for (v, color) in c.colored() {
                out.set(v, color);
            }
            if record {
                nodes.push(node);
            }
        }
        (out, nodes)
    }

    /// Colours a strongly connected `D[part]`, returning global ids.
    fn color_strong(&self, part: &VertexSet, depth: usize, node: &mut Node) -> Coloring {
        let n = self.d.n();
        if part.len() == 1 {
            node.branch = "single vertex".into();
            return Coloring::monochromatic(part);
        }
        if depth > 0 && part.len() <= self.budgets.leaf_exact {
            node.branch = "exact leaf".into();
            self.stat(|s| s.exact_leaves += 1);
            return color_set(self.d, part, self.budgets.exact_limit).0;
        }
        let (ds, map) = self.d.induced(part);
        let projected = Projected {
            parent: self.oracle,
            map: &map,
        };
        if ds.is_tournament() {
            self.stat(|s| s.tournament_parts += 1);
            let (c, inner) = color_strong_tournament(&ds, &projected, self.budgets);
            for f in inner.all_flags() {
                self.flag(f.kind, f.message);
            }
            *node = inner;
            return c.lift(&map, n);
        }
        let alpha = independence_number(&ds, self.budgets.alpha_limit);
        node.detail("alpha", &alpha);
        match self.color_completed(&ds, &map, &projected, alpha.value, alpha.exact, depth, node) {
            Ok(pc) => {
                node.palettes = pc.palettes;
                pc.coloring.lift(&map, n)
            }
            Err(e) => {
                self.flag(FlagKind::Degraded, format!("greedy fallback: {e}"));
                self.stat(|s| s.greedy_fallbacks += 1);
                node.flag(FlagKind::Degraded, format!("greedy fallback: {e}"));
                greedy_on(self.d, part).normalized()
            }
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn color_completed(
        &self,
        ds: &OrientedGraph,
        map: &[usize],
        oracle: &dyn ArcOracle,
        alpha: usize,
        alpha_exact: bool,
        depth: usize,
        node: &mut Node,
    ) -> Result<PaletteColoring> {
        let n = self.d.n();
        let comp = complete_to_tournament(ds);
        comp.check()?;
        let lift = |local: &VertexSet| VertexSet::from_iter_in(n, local.iter().map(|v| map[v]));
        // Subsets handed to the completed-neighbourhood colourer must have
        // smaller independence number.
        let recurse = |local: &VertexSet| -> Result<Coloring> {
            if alpha_exact && local.len() <= ALPHA_CHECK_LIMIT {
                let (inner, _) = ds.induced(local);
                let a = independence_number(&inner, ALPHA_CHECK_LIMIT);
                let bad = a.value >= alpha;
                self.stat(|s| {
                    s.alpha_checks += 1;
                    if bad {
                        s.alpha_violations += 1;
                    }
                });
                if bad {
                    self.flag(
                        FlagKind::Degraded,
                        "a recursive subset did not lose independence",
                    );
                }
            }
            Ok(self.color(&lift(local), depth + 1).project(map))
        };
        let plain = |local: &VertexSet| self.color(&lift(local), depth + 1).project(map);
        let lifted = CompletionOracle {
            comp: &comp,
            oracle,
            recurse: &recurse,
        };

        let jewel_d = match self.budgets.jewel_d {
            Some(d) => Some(d),
            None => evaluate_bounds(
                self.t,
                alpha.max(1),
                self.budgets.k_budget,
                self.budgets.ell,
            )?
            .d
            .to_usize(),
        };
        node.detail("jewel_d", jewel_d);
        let searchable = jewel_d.filter(|&d| min_order(d + 1) <= self.budgets.ell.min(ds.n()));
        let dichotomy = match searchable {
            Some(d) => cluster_or_domination(
                ds,
                d + 1,
                self.budgets.ell,
                self.budgets.k_budget,
                self.budgets.cluster_work,
                self.budgets.domination_limit,
            ),
            None => {
                let pair = domination_pair(ds, self.budgets.domination_limit);
                let over_budget = pair.dominating.len() > self.budgets.k_budget
                    || pair.absorbing.len() > self.budgets.k_budget;
                Dichotomy::Domination {
                    pair,
                    search_exhausted: false,
                    over_budget,
                }
            }
        };
        match dichotomy {
            Dichotomy::Domination {
                pair,
                search_exhausted,
                over_budget,
            } => {
                self.stat(|s| s.domination_parts += 1);
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
                domination_coloring(
                    ds,
                    &comp.t,
                    &pair.dominating,
                    &pair.absorbing,
                    &lifted,
                    false,
                    false,
                )
            }
            Dichotomy::Cluster(_) => {
                self.stat(|s| s.jewel_parts += 1);
                node.branch = "jewel-chain".into();
                let d = searchable.expect("cluster search ran");
                self.jewel_branch(ds, &comp, &lifted, &plain, d, node)
            }
        }
    }

    fn jewel_branch(
        &self,
        ds: &OrientedGraph,
        comp: &Completion,
        lifted: &dyn ArcOracle,
        plain: &dyn Fn(&VertexSet) -> Coloring,
        d: usize,
        node: &mut Node,
    ) -> Result<PaletteColoring> {
        let t = &comp.t;
        let growth = grow_jewel_chain(t, ds, d, self.budgets.ell, self.budgets.cluster_work);
        if growth.budget_exceeded {
            node.flag(FlagKind::Inexact, "chain growth exhausted its work budget");
        }
        let chain = growth.chain;
        if chain.is_empty() {
            return Err(Error::contract("cluster branch without a jewel"));
        }
        record_chain(node, &chain);
        let used = chain.vertices(t.n());
        let first = chain.first().expect("non-empty chain");
        let last = chain.last().expect("non-empty chain");
        let b = first.first().expect("non-empty block");
        let a = last.first().expect("non-empty block");
        node.detail("a", a);
        node.detail("b", b);
        let y_in = plain(&complete_side(t, &used, first, true));
        let y_out = plain(&complete_side(t, &used, last, false));
        let limit = self.budgets.exact_limit;

        let in_set = t.in_neighbors(b).clone();
        let mut in_side = PaletteColoring::new(t.n());
        in_side.push("Y", &y_in.restrict(&in_set));
        if !hamilton_palettes(t, first, &in_set, lifted, &mut in_side)? {
            node.flag(FlagKind::Degraded, "first block has no Hamilton cycle");
        }
        push_exact(
            ds,
            &first.intersection(&in_set),
            "first block",
            limit,
            &mut in_side,
        );
        if fill_greedy(ds, &in_set, "in fallback", &mut in_side) {
            node.flag(
                FlagKind::Degraded,
                "in-neighbourhood of b needed a greedy palette",
            );
        }

        let out_set = t.out_neighbors(a).clone();
        let mut out_side = PaletteColoring::new(t.n());
        out_side.push("Y'", &y_out.restrict(&out_set));
        if !hamilton_palettes(t, last, &out_set, lifted, &mut out_side)? {
            node.flag(FlagKind::Degraded, "last block has no Hamilton cycle");
        }
        push_exact(
            ds,
            &last.intersection(&out_set),
            "last block",
            limit,
            &mut out_side,
        );
        if fill_greedy(ds, &out_set, "out fallback", &mut out_side) {
            node.flag(
                FlagKind::Degraded,
                "out-neighbourhood of a needed a greedy palette",
            );
        }

        let mut out = PaletteColoring::new(t.n());
        if a != b {
            out.absorb("between", &between_region(comp, a, b, lifted)?);
        }
        out.absorb("out", &out_side);
        out.absorb("in", &in_side);
        out.push_private("endpoints", [a, b]);
        if fill_greedy(ds, &ds.vertices(), "fallback", &mut out) {
            node.flag(FlagKind::Degraded, "jewel branch left vertices uncoloured");
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chromatic::{dichromatic_exact, verify_coloring};
    use crate::pipeline::color_tournament_arc_local;

    fn qr7() -> OrientedGraph {
        OrientedGraph::from_arcs(7, (0..7).flat_map(|i| [1, 2, 4].map(|r| (i, (i + r) % 7))))
            .unwrap()
    }

    /// Replaces each vertex by an independent set of `size` copies.
    fn blowup(base: &OrientedGraph, size: usize) -> OrientedGraph {
        let arcs = base.arcs().flat_map(|e| {
            (0..size)
                .flat_map(move |i| (0..size).map(move |j| (e.tail * size + i, e.head * size + j)))
        });
        OrientedGraph::from_arcs(base.n() * size, arcs).unwrap()
    }

    fn no_recurse(_: &VertexSet) -> Result<Coloring> {
        Err(Error::contract("unexpected recursion"))
    }

    #[test]
    fn tournament_arc_neighborhood_is_the_oracle() {
        let q = qr7();
        let comp = complete_to_tournament(&q);
        let table = NeighborhoodTable::exact(&q, 20);
        let pc =
            color_completed_arc_neighborhood(&comp, Arc::new(0, 1), &table, &no_recurse).unwrap();
        assert_eq!(pc.coloring.domain().to_vec(), vec![3, 5]);
        assert_eq!(pc.palettes[0].label, "S1");
    }

    #[test]
    fn path_completion_empty_s1() {
        let path = OrientedGraph::from_arcs(3, [(0, 1), (1, 2)]).unwrap();
        let comp = complete_to_tournament(&path);
        let table = NeighborhoodTable::exact(&path, 20);
        let rec = |s: &VertexSet| Ok(Coloring::monochromatic(s));
        let pc = color_completed_arc_neighborhood(&comp, Arc::new(0, 2), &table, &rec).unwrap();
        assert!(pc.coloring.domain().is_empty());
    }

    #[test]
    fn between_on_c3() {
        let c3 = OrientedGraph::cycle(3).unwrap();
        let comp = complete_to_tournament(&c3);
        let table = NeighborhoodTable::exact(&c3, 20);
        let pc = color_between_in_completion(&comp, 0, 1, &table, &no_recurse).unwrap();
        assert!(verify_partial(&c3, &pc.coloring));
        assert_eq!(pc.coloring.domain().to_vec(), vec![2]);
    }

    #[test]
    fn blowup_between_is_valid() {
        let d = blowup(&OrientedGraph::cycle(3).unwrap(), 2);
        let comp = complete_to_tournament(&d);
        let table = NeighborhoodTable::exact(&d, 20);
        let rec = |s: &VertexSet| Ok(color_set(&d, s, 20).0);
        for u in 0..6 {
            for v in 0..6 {
                if u != v {
                    let pc = color_between_in_completion(&comp, u, v, &table, &rec).unwrap();
                    let target = comp.t.in_neighbors(u).intersection(comp.t.out_neighbors(v));
                    assert!(target.is_subset(&pc.coloring.domain()));
                    assert!(verify_partial(&d, &pc.coloring));
                }
            }
        }
    }

    #[test]
    fn tournaments_match_the_tournament_pipeline() {
        for t in [
            qr7(),
            OrientedGraph::cycle(3).unwrap(),
            OrientedGraph::transitive(6),
        ] {
            let b = Budgets::default();
            let (a, _) = color_digraph_arc_local(&t, &b).unwrap();
            let (c, _) = color_tournament_arc_local(&t, &b).unwrap();
            assert_eq!(a, c);
        }
    }

    #[test]
    fn blowups_are_valid() {
        for (base, size, exact) in [(OrientedGraph::cycle(3).unwrap(), 2, 2), (qr7(), 2, 3)] {
            let d = blowup(&base, size);
            let (c, trace) = color_digraph_arc_local(&d, &Budgets::default()).unwrap();
            assert!(verify_coloring(&d, &c).unwrap());
            assert_eq!(dichromatic_exact(&d, 20).unwrap().0, exact);
            assert!(c.color_count() >= exact);
            assert!(!trace.degraded, "{}", trace.to_json());
        }
    }

    #[test]
    fn forced_jewel_branch_is_valid() {
        let d = blowup(&qr7(), 2);
        let budgets = Budgets {
            jewel_d: Some(1),
            leaf_exact: 0,
            ..Budgets::default()
        };
        let (c, trace) = color_digraph_arc_local(&d, &budgets).unwrap();
        assert!(verify_coloring(&d, &c).unwrap());
        assert_eq!(trace.root.children[0].branch, "jewel-chain");
    }
}
