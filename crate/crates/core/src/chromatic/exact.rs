//! Exact dichromatic number by iterative deepening on the number of classes.

use super::greedy::dichromatic_greedy;
use super::Coloring;
use crate::error::{Error, Result};
use crate::graph::dense::{bit, ones, Dense, Mask, MAX_DENSE};
use crate::graph::{OrientedGraph, VertexSet};

/// Default vertex budget for the exact solver.
pub const DEFAULT_EXACT_LIMIT: usize = 20;

/// Exact dichromatic number and a witness colouring with exactly that many
/// colours. Deterministic: classes are explored in increasing colour id.
pub fn dichromatic_exact(d: &OrientedGraph, limit: usize) -> Result<(usize, Coloring)> {
    let n = d.n();
    if n > limit || n > MAX_DENSE {
        return Err(Error::OverBudget {
            n,
            limit: limit.min(MAX_DENSE),
            upper_bound: dichromatic_greedy(d).color_count(),
        });
    }
    let dense = Dense::whole(d).expect("within dense bound");
    let (k, colors) = dichromatic_dense(&dense, dense.all());
    let mut coloring = Coloring::empty(n);
    for (v, &c) in colors.iter().enumerate().take(n) {
        coloring.set(v, c);
    }
    Ok((k, coloring))
}

/// Exact dichromatic number of `D[set]`, with the witness restricted to
/// `set`. Falls over budget like [`dichromatic_exact`].
pub fn dichromatic_of_set(
    d: &OrientedGraph,
    set: &VertexSet,
    limit: usize,
) -> Result<(usize, Coloring)> {
    let (sub, map) = d.induced(set);
    let (k, c) = dichromatic_exact(&sub, limit)?;
    Ok((k, c.lift(&map, d.n())))
}

/// Exact solve on the vertices of `within`. Returned colours are indexed
/// by local id; vertices outside `within` get colour `usize::MAX`.
pub(crate) fn dichromatic_dense(g: &Dense, within: Mask) -> (usize, Vec<usize>) {
    let mut colors = vec![usize::MAX; g.n];
    if within == 0 {
        return (0, colors);
    }
    if g.is_acyclic(within) {
        for v in ones(within) {
            colors[v] = 0;
        }
        return (1, colors);
    }
    let mut k = 2;
    loop {
        if let Some(found) = partition(g, within, k) {
            for (v, c) in found.into_iter().enumerate() {
                if within & bit(v) != 0 {
                    colors[v] = c as usize;
                }
            }
            return (k, colors);
        }
        k += 1;
    }
}

/// True iff `D[within]` needs at least `k` colours.
pub(crate) fn dichromatic_at_least(g: &Dense, within: Mask, k: usize) -> bool {
    if k == 0 {
        return true;
    }
    if within == 0 {
        return false;
    }
    if k == 1 {
        return true;
    }
    if k == 2 {
        return !g.is_acyclic(within);
    }
    partition(g, within, k - 1).is_none()
}

/// Searches for a partition of `within` into at most `k` acyclic classes.
pub(crate) fn partition(g: &Dense, within: Mask, k: usize) -> Option<Vec<u8>> {
    let mut search = Search {
        g,
        k,
        classes: vec![0; k],
        used: 0,
        color: vec![u8::MAX; g.n],
        uncolored: within,
    };
    search.run().then_some(search.color)
}

struct Search<'a> {
    g: &'a Dense,
    k: usize,
    classes: Vec<Mask>,
    used: usize,
    color: Vec<u8>,
    uncolored: Mask,
}

impl Search<'_> {
    fn feasible(&self, v: usize) -> Mask {
        let mut f: Mask = 0;
        for c in 0..self.used {
            if !self.g.closes_cycle(self.classes[c], v) {
                f |= bit(c);
            }
        }
        if self.used < self.k {
            f |= bit(self.used);
        }
        f
    }

    fn run(&mut self) -> bool {
        if self.uncolored == 0 {
            return true;
        }
        // Most constrained vertex first; ties go to the smallest id.
        let mut pick = None;
        let mut pick_options: Mask = 0;
        let mut pick_count = u32::MAX;
        for v in ones(self.uncolored) {
            let f = self.feasible(v);
            let count = f.count_ones();
            if count == 0 {
                return false;
            }
            if count < pick_count {
                pick = Some(v);
                pick_options = f;
                pick_count = count;
                if count == 1 {
                    break;
                }
            }
        }
        let v = pick.expect("uncolored vertex");
        self.uncolored &= !bit(v);
        for c in ones(pick_options) {
            let opened = c == self.used;
            self.classes[c] |= bit(v);
            self.color[v] = c as u8;
            if opened {
                self.used += 1;
            }
            if self.run() {
                return true;
            }
            if opened {
                self.used -= 1;
            }
            self.classes[c] &= !bit(v);
        }
        self.color[v] = u8::MAX;
        self.uncolored |= bit(v);
        false
    }
}
