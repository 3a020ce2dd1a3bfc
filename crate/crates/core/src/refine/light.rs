//! Colour the light arcs first, then refine every colour class through its
//! backedge graph.

use std::collections::HashMap;

use crate::chromatic::{
    graph_chromatic_exact, graph_coloring_exact, graph_greedy_coloring, Coloring, UndirectedGraph,
};
use crate::error::{Error, Result};
use crate::graph::{arc_neighborhood, topological_order, Arc, OrientedGraph, VertexSet};
use crate::local::{color_set, NeighborhoodTable};
use crate::par;
use crate::pipeline::{color_digraph_with, merge_classes, Budgets, FlagKind, Node, Trace};

use super::backedge::{backedge_graph, BackedgeGraph};
use super::classify::classify_arcs;
use super::pairs::CompletePair;

/// Answers chromatic questions about undirected graphs.
pub trait GraphOracle: Sync {
    /// A proper colouring of `g`.
    fn color(&self, g: &UndirectedGraph) -> Result<Vec<usize>>;

    /// Two vertex sets with no edge between them, each of chromatic number
    /// at least `c`, when the oracle can certify them.
    fn anticomplete_pair(&self, g: &UndirectedGraph, c: usize) -> Option<(VertexSet, VertexSet)>;
}

/// Exact colouring within `limit` vertices (greedy beyond). Anticomplete
/// pairs are certified from two connected components that each reach `c`.
#[derive(Debug, Clone, Copy)]
pub struct ExactGraphOracle {
    pub limit: usize,
}

impl GraphOracle for ExactGraphOracle {
    fn color(&self, g: &UndirectedGraph) -> Result<Vec<usize>> {
        Ok(graph_coloring_exact(g, self.limit).unwrap_or_else(|_| graph_greedy_coloring(g)))
    }

    fn anticomplete_pair(&self, g: &UndirectedGraph, c: usize) -> Option<(VertexSet, VertexSet)> {
        let mut big = components(g).into_iter().filter(|comp| {
            let (sub, _) = g.induced(comp);
            graph_chromatic_exact(&sub, self.limit).is_ok_and(|chi| chi >= c)
        });
        let first = big.next()?;
        let second = big.next()?;
        Some((first, second))
    }
}

fn components(g: &UndirectedGraph) -> Vec<VertexSet> {
    let n = g.n();
    let mut seen = VertexSet::empty(n);
    let mut out = Vec::new();
    for s in 0..n {
        if seen.contains(s) {
            continue;
        }
        let mut comp = VertexSet::singleton(n, s);
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for w in g.neighbors(v).iter() {
                if !comp.contains(w) {
                    comp.insert(w);
                    stack.push(w);
                }
            }
        }
        seen.union_with(&comp);
        out.push(comp);
    }
    out
}

/// Either a colouring or a complete pair certifying that none is needed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Refinement {
    Coloring(Coloring),
    Pair(CompletePair),
}

/// Colours the digraph of light arcs, recursing at `t - 1` inside light
/// neighbourhoods, then colours each colour class `T_i` through the
/// backedge graph of an ordering in which all light arcs go forward. When
/// `oracle` certifies two anticomplete `2tc`-chromatic sets in some
/// backedge graph, the prefix/suffix rule turns them into a complete pair,
/// which is returned only after exact re-verification.
pub fn light_color_then_refine(
    t_graph: &OrientedGraph,
    t: usize,
    c: usize,
    budgets: &Budgets,
    oracle: &dyn GraphOracle,
) -> Result<(Refinement, Trace)> {
    if !t_graph.is_tournament() {
        return Err(Error::parameter("refinement needs a tournament"));
    }
    let mut root = Node::new("refine", t_graph.n(), "");
    let out = refine(t_graph, t, c, budgets, oracle, &mut root)?;
    let (out, colors) = match out {
        Refinement::Coloring(col) => {
            let col = finish(t_graph, col, budgets, &mut root);
            let k = col.color_count();
            (Refinement::Coloring(col), k)
        }
        pair => (pair, 0),
    };
    let trace = Trace::new("refine", t_graph.n(), colors, budgets, root);
    Ok((out, trace))
}

fn finish(t_graph: &OrientedGraph, col: Coloring, budgets: &Budgets, node: &mut Node) -> Coloring {
    node.detail("colors_before_merge", col.color_count());
    if budgets.merge_classes {
        merge_classes(t_graph, &col)
    } else {
        col.normalized()
    }
}

fn refine(
    t_graph: &OrientedGraph,
    t: usize,
    c: usize,
    budgets: &Budgets,
    oracle: &dyn GraphOracle,
    node: &mut Node,
) -> Result<Refinement> {
    let n = t_graph.n();
    node.detail("t", t);
    node.detail("c", c);
    if n == 0 {
        node.branch = "empty".into();
        return Ok(Refinement::Coloring(Coloring::empty(0)));
    }
    if t <= 1 {
        node.branch = "base".into();
        node.flag(
            FlagKind::Inexact,
            "a vertex survived to parameter 1; coloured directly",
        );
        return Ok(Refinement::Coloring(
            color_set(t_graph, &t_graph.vertices(), budgets.exact_limit).0,
        ));
    }
    let classes = classify_arcs(t_graph, t, budgets)?;
    node.detail("heavy", classes.heavy.len());
    node.detail("light", classes.light.len());
    if !classes.is_exhaustive() {
        node.flag(
            FlagKind::Inexact,
            "some arcs are light only within the search budget",
        );
    }

    let inner = par::map(&classes.light, |&e| {
        let nb = arc_neighborhood(t_graph, e).expect("arc of the tournament");
        let (sub, map) = t_graph.induced(&nb);
        let mut child = Node::new("light neighbourhood", sub.n(), "");
        let r = refine(&sub, t - 1, c, budgets, oracle, &mut child);
        (r, child, map)
    });
    let mut table: HashMap<Arc, Coloring> = HashMap::new();
    for (&e, (r, child, map)) in classes.light.iter().zip(inner) {
        for f in child.all_flags() {
            if !node.flags.contains(&f) {
                node.flags.push(f);
            }
        }
        match r? {
            Refinement::Pair(p) => {
                node.branch = "pair inside a light neighbourhood".into();
                let lift = |s: &VertexSet| VertexSet::from_iter_in(n, s.iter().map(|v| map[v]));
                return Ok(Refinement::Pair(CompletePair {
                    a: lift(&p.a),
                    b: lift(&p.b),
                    c: p.c,
                }));
            }
            Refinement::Coloring(col) => {
                table.insert(e, col.lift(&map, n));
            }
        }
    }
    let lookup = |e: Arc| {
        table
            .get(&e)
            .cloned()
            .ok_or(Error::InvalidOracleColoring(e))
    };
    let light_table = NeighborhoodTable::build(&classes.light, &lookup, true)?;
    let d_l = classes.light_digraph(n);
    let (light_coloring, light_trace) =
        color_digraph_with(&d_l, &light_table, light_table.t(), true, budgets, "light")?;
    node.children.push(light_trace.root);

    let c2 = 2 * t * c;
    node.detail("c2", c2);
    let mut product = Coloring::empty(n);
    let mut next = 0;
    let mut class_sizes = Vec::new();
    for class in light_coloring.classes().into_values() {
        let (ti, map) = t_graph.induced(&class);
        let (li, _) = d_l.induced(&class);
        let order = topological_order(&li, &li.vertices())
            .ok_or_else(|| Error::contract("a light colour class is not acyclic"))?;
        let bg = backedge_graph(&ti, &order)?;
        for (x, y) in bg.graph.edges() {
            let e = if ti.has_arc(x, y) {
                Arc::new(map[x], map[y])
            } else {
                Arc::new(map[y], map[x])
            };
            if !classes.is_heavy(e) && !classes.unresolved.contains(&e) {
                return Err(Error::contract("a light arc points backward"));
            }
        }
        if let Some((s1, s2)) = oracle.anticomplete_pair(&bg.graph, c2) {
            match prefix_pair(&ti, &bg, &s1, &s2, t * c, c, budgets) {
                Some(p) => {
                    node.branch = "pair".into();
                    let lift = |s: &VertexSet| VertexSet::from_iter_in(n, s.iter().map(|v| map[v]));
                    return Ok(Refinement::Pair(CompletePair {
                        a: lift(&p.a),
                        b: lift(&p.b),
                        c,
                    }));
                }
                None => node.flag(
                    FlagKind::Inexact,
                    "certified anticomplete sets gave no verified pair",
                ),
            }
        }
        let g_col = oracle.color(&bg.graph)?;
        if g_col.len() != ti.n() || bg.graph.edges().any(|(x, y)| g_col[x] == g_col[y]) {
            return Err(Error::contract(
                "graph oracle returned an improper colouring",
            ));
        }
        let width = g_col.iter().map(|&x| x + 1).max().unwrap_or(0);
        for (v, &g) in g_col.iter().enumerate() {
            product.set(map[v], next + g);
        }
        next += width;
        class_sizes.push((class.len(), width));
    }
    node.branch = "product".into();
    node.detail("classes", class_sizes);
    Ok(Refinement::Coloring(product))
}

/// The prefix/suffix rule on anticomplete sets `s1`, `s2` of a backedge
/// graph: `a` and `b` are the first positions where the prefix inside
/// `s1` (resp. `s2`) reaches chromatic number `tc`; the earlier one gives
/// the prefix side, the other set contributes the suffix after its index.
fn prefix_pair(
    ti: &OrientedGraph,
    bg: &BackedgeGraph,
    s1: &VertexSet,
    s2: &VertexSet,
    tc: usize,
    c: usize,
    budgets: &Budgets,
) -> Option<CompletePair> {
    let a = first_reaching(bg, s1, tc, budgets.graph_limit)?;
    let b = first_reaching(bg, s2, tc, budgets.graph_limit)?;
    let ((early, ei), (late, li)) = if a < b {
        ((s1, a), (s2, b))
    } else {
        ((s2, b), (s1, a))
    };
    let n = ti.n();
    let ord = &bg.ordering;
    let pair = CompletePair {
        a: VertexSet::from_iter_in(n, ord[..=ei].iter().copied().filter(|&v| early.contains(v))),
        b: VertexSet::from_iter_in(
            n,
            ord[li + 1..].iter().copied().filter(|&v| late.contains(v)),
        ),
        c,
    };
    pair.verify(ti, budgets.exact_limit).then_some(pair)
}

fn first_reaching(bg: &BackedgeGraph, s: &VertexSet, target: usize, limit: usize) -> Option<usize> {
    let mut prefix = VertexSet::empty(bg.graph.n());
    for (i, &v) in bg.ordering.iter().enumerate() {
        if !s.contains(v) {
            continue;
        }
        prefix.insert(v);
        let (sub, _) = bg.graph.induced(&prefix);
        if graph_chromatic_exact(&sub, limit).ok()? >= target {
            return Some(i);
        }
    }
    None
}
