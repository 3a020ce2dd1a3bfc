use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{is_acyclic, OrientedGraph, VertexSet};

/// A (possibly partial) vertex colouring of a graph on `0..n`.
///
/// A colouring is *valid* for a digraph when every colour class induces an
/// acyclic subdigraph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    colors: Vec<Option<usize>>,
}

impl Coloring {
    pub fn empty(n: usize) -> Self {
        Coloring {
            colors: vec![None; n],
        }
    }

    pub fn from_colors(colors: impl IntoIterator<Item = usize>) -> Self {
        Coloring {
            colors: colors.into_iter().map(Some).collect(),
        }
    }

    pub fn monochromatic(set: &VertexSet) -> Self {
        let mut c = Coloring::empty(set.universe());
        for v in set.iter() {
            c.set(v, 0);
        }
        c
    }

    pub fn n(&self) -> usize {
        self.colors.len()
    }

    pub fn get(&self, v: usize) -> Option<usize> {
        self.colors.get(v).copied().flatten()
    }

    pub fn set(&mut self, v: usize, color: usize) {
        self.colors[v] = Some(color);
    }

    pub fn unset(&mut self, v: usize) {
        self.colors[v] = None;
    }

    pub fn is_colored(&self, v: usize) -> bool {
        self.get(v).is_some()
    }

    pub fn domain(&self) -> VertexSet {
        VertexSet::from_iter_in(self.n(), self.colored().map(|(v, _)| v))
    }

    pub fn is_complete(&self) -> bool {
        self.colors.iter().all(Option::is_some)
    }

    /// `(vertex, colour)` pairs in vertex order.
    pub fn colored(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.colors
            .iter()
            .enumerate()
            .filter_map(|(v, c)| c.map(|c| (v, c)))
    }

    /// Number of distinct colours in use.
    pub fn color_count(&self) -> usize {
        self.classes().len()
    }

    /// Largest colour id plus one (0 when nothing is coloured).
    pub fn palette_span(&self) -> usize {
        self.colored().map(|(_, c)| c + 1).max().unwrap_or(0)
    }

    /// Colour classes keyed by colour id.
    pub fn classes(&self) -> BTreeMap<usize, VertexSet> {
        let mut classes: BTreeMap<usize, VertexSet> = BTreeMap::new();
        for (v, c) in self.colored() {
            classes
                .entry(c)
                .or_insert_with(|| VertexSet::empty(self.n()))
                .insert(v);
        }
        classes
    }

    /// Relabels colours to `0..color_count()`, preserving their order.
    pub fn normalized(&self) -> Coloring {
        let relabel: BTreeMap<usize, usize> = self
            .classes()
            .keys()
            .enumerate()
            .map(|(new, &old)| (old, new))
            .collect();
        Coloring {
            colors: self.colors.iter().map(|c| c.map(|c| relabel[&c])).collect(),
        }
    }

    /// Keeps only vertices of `set`.
    pub fn restrict(&self, set: &VertexSet) -> Coloring {
        Coloring {
            colors: self
                .colors
                .iter()
                .enumerate()
                .map(|(v, &c)| if set.contains(v) { c } else { None })
                .collect(),
        }
    }

    /// Moves a colouring of an induced subgraph (local ids) to the parent
    /// graph on `universe` vertices; `map[local] = parent id`.
    pub fn lift(&self, map: &[usize], universe: usize) -> Coloring {
        let mut out = Coloring::empty(universe);
        for (v, c) in self.colored() {
            out.set(map[v], c);
        }
        out
    }

    /// The inverse of [`lift`](Self::lift): reads the parent colouring at
    /// `map[local]` for every local id.
    pub fn project(&self, map: &[usize]) -> Coloring {
        Coloring {
            colors: map.iter().map(|&v| self.get(v)).collect(),
        }
    }

    /// Colours as a dense vector; panics on uncoloured vertices.
    pub fn to_vec(&self) -> Vec<usize> {
        self.colors
            .iter()
            .map(|c| c.expect("complete colouring"))
            .collect()
    }
}

impl std::fmt::Debug for Coloring {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_map().entries(self.colored()).finish()
    }
}

/// True iff `c` covers every vertex of `d` and every colour class is acyclic.
pub fn verify_coloring(d: &OrientedGraph, c: &Coloring) -> Result<bool> {
    if let Some(v) = (0..d.n()).find(|&v| !c.is_colored(v)) {
        return Err(Error::IncompleteColoring(v));
    }
    if c.n() != d.n() {
        return Err(Error::parameter(format!(
            "colouring is over {} vertices, graph has {}",
            c.n(),
            d.n()
        )));
    }
    Ok(verify_partial(d, c))
}

/// Validity restricted to the coloured vertices.
pub fn verify_partial(d: &OrientedGraph, c: &Coloring) -> bool {
    c.n() == d.n() && c.classes().values().all(|class| is_acyclic(d, class))
}
