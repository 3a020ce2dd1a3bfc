use std::collections::HashMap;

use crate::chromatic::{dichromatic_of_set, greedy_on, verify_partial, Coloring};
use crate::error::{Error, Result};
use crate::graph::{arc_neighborhood, Arc, Estimate, OrientedGraph, VertexSet};
use crate::par;

/// Colours arc neighbourhoods on demand.
///
/// `color(e)` must colour every vertex of the neighbourhood of `e` in the
/// structure graph, validly with respect to the reference digraph (the two
/// coincide for tournaments).
pub trait ArcOracle: Sync {
    fn color(&self, e: Arc) -> Result<Coloring>;
}

impl<F> ArcOracle for F
where
    F: Fn(Arc) -> Result<Coloring> + Sync,
{
    fn color(&self, e: Arc) -> Result<Coloring> {
        self(e)
    }
}

/// Colours `D[set]` exactly when `|set| <= limit`, greedily otherwise.
/// The flag says whether the colouring is optimal.
pub fn color_set(d: &OrientedGraph, set: &VertexSet, limit: usize) -> (Coloring, bool) {
    match dichromatic_of_set(d, set, limit) {
        Ok((_, c)) => (c, true),
        Err(_) => (greedy_on(d, set).normalized(), false),
    }
}

/// Precomputed neighbourhood colourings for a fixed set of arcs.
#[derive(Debug, Clone)]
pub struct NeighborhoodTable {
    colorings: HashMap<Arc, Coloring>,
    width: usize,
    exact: bool,
}

impl NeighborhoodTable {
    /// Colours `D[N(e)]` for every arc of `d`, exactly within `limit`.
    pub fn exact(d: &OrientedGraph, limit: usize) -> Self {
        let arcs = d.arc_list();
        let results = par::map(&arcs, |&e| {
            let nb = arc_neighborhood(d, e).expect("arc of d");
            color_set(d, &nb, limit)
        });
        let exact = results.iter().all(|(_, ok)| *ok);
        Self::from_parts(
            arcs.into_iter().zip(results.into_iter().map(|(c, _)| c)),
            exact,
        )
    }

    /// Evaluates `oracle` on every arc in `arcs`.
    pub fn build(arcs: &[Arc], oracle: &dyn ArcOracle, exact: bool) -> Result<Self> {
        let results = par::map(arcs, |&e| oracle.color(e));
        let mut pairs = Vec::with_capacity(arcs.len());
        for (&e, c) in arcs.iter().zip(results) {
            pairs.push((e, c?));
        }
        Ok(Self::from_parts(pairs, exact))
    }

    fn from_parts(pairs: impl IntoIterator<Item = (Arc, Coloring)>, exact: bool) -> Self {
        let colorings: HashMap<Arc, Coloring> = pairs
            .into_iter()
            .map(|(e, c)| (e, c.normalized()))
            .collect();
        let width = colorings
            .values()
            .map(Coloring::color_count)
            .max()
            .unwrap_or(0);
        NeighborhoodTable {
            colorings,
            width,
            exact,
        }
    }

    /// Largest palette over all arcs; the arc-boundedness when exact.
    pub fn t(&self) -> usize {
        self.width
    }

    pub fn is_exact(&self) -> bool {
        self.exact
    }

    pub fn get(&self, e: Arc) -> Option<&Coloring> {
        self.colorings.get(&e)
    }

    pub fn width(&self, e: Arc) -> usize {
        self.get(e).map_or(0, Coloring::color_count)
    }
}

impl ArcOracle for NeighborhoodTable {
    fn color(&self, e: Arc) -> Result<Coloring> {
        self.get(e).cloned().ok_or(Error::InvalidArc(e))
    }
}

/// Largest dichromatic number of an arc neighbourhood (0 when all are
/// empty). Inexact when some neighbourhood exceeds `exact_limit`, in which
/// case the value is a greedy upper bound.
pub fn arc_boundedness(d: &OrientedGraph, exact_limit: usize) -> Estimate<usize> {
    let table = NeighborhoodTable::exact(d, exact_limit);
    Estimate {
        value: table.t(),
        exact: table.is_exact(),
    }
}

/// Calls the oracle for `e` and checks the result against the structure
/// graph `t` and the reference digraph `d`. Returns the colouring
/// restricted to the neighbourhood and renumbered densely.
pub(crate) fn checked_oracle(
    d: &OrientedGraph,
    t: &OrientedGraph,
    e: Arc,
    oracle: &dyn ArcOracle,
) -> Result<Coloring> {
    let nb = arc_neighborhood(t, e)?;
    let c = oracle.color(e)?;
    if c.n() != t.n() || nb.iter().any(|v| !c.is_colored(v)) {
        return Err(Error::InvalidOracleColoring(e));
    }
    let c = c.restrict(&nb).normalized();
    if !verify_partial(d, &c) {
        return Err(Error::InvalidOracleColoring(e));
    }
    Ok(c)
}
