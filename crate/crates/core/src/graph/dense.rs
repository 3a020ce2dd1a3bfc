//! Single-word bitmask kernel for exhaustive searches on small (sub)graphs.

use super::{OrientedGraph, VertexSet};

pub type Mask = u128;

/// Largest vertex count a [`Dense`] graph can hold.
pub const MAX_DENSE: usize = Mask::BITS as usize;

#[inline]
pub fn bit(v: usize) -> Mask {
    1 << v
}

#[inline]
pub fn low_mask(n: usize) -> Mask {
    if n >= MAX_DENSE {
        Mask::MAX
    } else {
        (1 << n) - 1
    }
}

/// Iterates the set bits of a mask in increasing order.
#[inline]
pub fn ones(mut m: Mask) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(v)
        }
    })
}

/// A digraph on at most [`MAX_DENSE`] vertices with local ids `0..n`.
#[derive(Clone, Debug)]
pub struct Dense {
    pub n: usize,
    pub out: Vec<Mask>,
    pub inn: Vec<Mask>,
    /// Local id -> id in the source graph.
    pub map: Vec<usize>,
}

impl Dense {
    /// The subgraph of `g` induced by `set`. `None` if `set` is too large.
    pub fn induced(g: &OrientedGraph, set: &VertexSet) -> Option<Dense> {
        let map = set.to_vec();
        if map.len() > MAX_DENSE {
            return None;
        }
        let mut local = vec![usize::MAX; g.n()];
        for (i, &v) in map.iter().enumerate() {
            local[v] = i;
        }
        let n = map.len();
        let mut out = vec![0; n];
        let mut inn = vec![0; n];
        for (i, &v) in map.iter().enumerate() {
            for w in g.out_neighbors(v).intersection(set).iter() {
                out[i] |= bit(local[w]);
                inn[local[w]] |= bit(i);
            }
        }
        Some(Dense { n, out, inn, map })
    }

    pub fn whole(g: &OrientedGraph) -> Option<Dense> {
        Self::induced(g, &g.vertices())
    }

    pub fn all(&self) -> Mask {
        low_mask(self.n)
    }

    /// Maps a local mask back to a set in the source graph.
    pub fn lift(&self, m: Mask, universe: usize) -> VertexSet {
        VertexSet::from_iter_in(universe, ones(m).map(|i| self.map[i]))
    }

    /// True if adding `v` to the acyclic set `class` creates a directed cycle.
    #[inline]
    pub fn closes_cycle(&self, class: Mask, v: usize) -> bool {
        let target = self.inn[v];
        let mut reach = self.out[v] & class;
        if reach & target != 0 {
            return true;
        }
        let mut frontier = reach;
        while frontier != 0 {
            let mut next = 0;
            for w in ones(frontier) {
                next |= self.out[w];
            }
            next &= class & !reach;
            if next & target != 0 {
                return true;
            }
            reach |= next;
            frontier = next;
        }
        false
    }

    /// True if the subgraph induced by `set` has no directed cycle.
    pub fn is_acyclic(&self, set: Mask) -> bool {
        // Repeatedly strip sources.
        let mut rest = set;
        loop {
            let mut stripped = false;
            for v in ones(rest) {
                if self.inn[v] & rest == 0 {
                    rest &= !bit(v);
                    stripped = true;
                }
            }
            if rest == 0 {
                return true;
            }
            if !stripped {
                return false;
            }
        }
    }

    /// Vertices reachable from `from` inside `within` (including `from`).
    pub fn reach(&self, from: usize, within: Mask) -> Mask {
        let mut seen = bit(from) & within;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for w in ones(frontier) {
                next |= self.out[w];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    pub fn back_reach(&self, from: usize, within: Mask) -> Mask {
        let mut seen = bit(from) & within;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for w in ones(frontier) {
                next |= self.inn[w];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    pub fn is_strongly_connected(&self, set: Mask) -> bool {
        if set == 0 {
            return true;
        }
        let v = set.trailing_zeros() as usize;
        self.reach(v, set) == set && self.back_reach(v, set) == set
    }

    /// Undirected adjacency (in ∪ out) of `v`.
    #[inline]
    pub fn adj(&self, v: usize) -> Mask {
        self.out[v] | self.inn[v]
    }
}
