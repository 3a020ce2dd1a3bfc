use serde::Serialize;

use crate::chromatic::{dichromatic_at_least, dichromatic_exact};
use crate::graph::dense::{bit, ones, Dense, Mask};
use crate::graph::{scc_decompose, OrientedGraph, VertexSet};
use crate::par;

/// Default cap on cluster-search work units (one unit per enumerated subset).
pub const DEFAULT_CLUSTER_WORK: u64 = 200_000;

/// Seeds handled per parallel batch. Fixed so that results do not depend on
/// the number of worker threads.
const SEED_BATCH: usize = 8;

/// A strongly connected vertex set of bounded size with dichromatic number
/// at least `k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Cluster {
    pub members: VertexSet,
    pub k: usize,
    pub ell: usize,
}

impl Cluster {
    /// Re-checks size, strong connectivity and the colouring lower bound
    /// with independent routines.
    pub fn verify(&self, d: &OrientedGraph, exact_limit: usize) -> bool {
        if self.members.len() > self.ell {
            return false;
        }
        let (sub, _) = d.induced(&self.members);
        if self.members.len() > 1 && scc_decompose(&sub).len() != 1 {
            return false;
        }
        match dichromatic_exact(&sub, exact_limit) {
            Ok((chi, _)) => chi >= self.k,
            Err(_) => false,
        }
    }
}

/// Outcome of a bounded cluster search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum ClusterSearch {
    Found(Cluster),
    /// Exhaustive search proved that no cluster exists within the size bound.
    Absent,
    /// The work budget ran out first.
    BudgetExceeded,
}

impl ClusterSearch {
    pub fn found(&self) -> Option<&Cluster> {
        match self {
            ClusterSearch::Found(c) => Some(c),
            _ => None,
        }
    }

    pub fn into_found(self) -> Option<Cluster> {
        match self {
            ClusterSearch::Found(c) => Some(c),
            _ => None,
        }
    }
}

/// Fewest vertices an oriented graph with dichromatic number `k` can have.
/// Removing two vertices (always an acyclic pair) lowers the dichromatic
/// number by at most one, and every oriented graph on six vertices is
/// 2-colourable.
pub fn min_order(k: usize) -> usize {
    match k {
        0 => 0,
        1 => 1,
        2 => 3,
        _ => 7 + 2 * (k - 3),
    }
}

/// Searches for a `(k, ell)`-cluster of `d`. Subsets are visited by size,
/// then by smallest member, then in canonical connected-expansion order;
/// the first hit is returned.
pub fn find_cluster(d: &OrientedGraph, k: usize, ell: usize, work: u64) -> ClusterSearch {
    find_cluster_in(d, &d.vertices(), k, ell, work)
}

/// [`find_cluster`] restricted to `D[within]`.
pub fn find_cluster_in(
    d: &OrientedGraph,
    within: &VertexSet,
    k: usize,
    ell: usize,
    work: u64,
) -> ClusterSearch {
    let n = within.len();
    if k == 0 {
        return ClusterSearch::Found(Cluster {
            members: VertexSet::empty(d.n()),
            k,
            ell,
        });
    }
    let lo = min_order(k);
    if lo > ell.min(n) {
        return ClusterSearch::Absent;
    }
    if k == 1 {
        let v = within.first().expect("non-empty");
        return ClusterSearch::Found(Cluster {
            members: VertexSet::singleton(d.n(), v),
            k,
            ell,
        });
    }
    let Some(g) = Dense::induced(d, within) else {
        return ClusterSearch::BudgetExceeded;
    };
    let adj: Vec<Mask> = (0..g.n).map(|v| g.adj(v)).collect();
    let mut remaining = work;
    for size in lo..=ell.min(n) {
        for batch in (0..n).collect::<Vec<_>>().chunks(SEED_BATCH) {
            let cap = remaining;
            let results = par::map(batch, |&seed| {
                let mut s = Enumerator {
                    g: &g,
                    adj: &adj,
                    k,
                    seed_floor: !((bit(seed) << 1).wrapping_sub(1)),
                    work: 0,
                    cap,
                };
                let hit = s.extend(
                    bit(seed),
                    adj[seed] & s.seed_floor,
                    adj[seed] | bit(seed),
                    size - 1,
                );
                (hit, s.work)
            });
            for (hit, used) in results {
                if let Some(mask) = hit {
                    return ClusterSearch::Found(Cluster {
                        members: g.lift(mask, d.n()),
                        k,
                        ell,
                    });
                }
                if used > remaining {
                    return ClusterSearch::BudgetExceeded;
                }
                remaining -= used;
            }
        }
    }
    ClusterSearch::Absent
}

struct Enumerator<'a> {
    g: &'a Dense,
    adj: &'a [Mask],
    k: usize,
    /// Vertices larger than the seed.
    seed_floor: Mask,
    work: u64,
    cap: u64,
}

impl Enumerator<'_> {
    fn extend(&mut self, sub: Mask, mut ext: Mask, closed: Mask, left: usize) -> Option<Mask> {
        self.work += 1;
        if self.work > self.cap {
            return None;
        }
        if left == 0 {
            return self.accept(sub).then_some(sub);
        }
        while ext != 0 {
            let w = ext.trailing_zeros() as usize;
            ext &= !bit(w);
            let fresh = self.adj[w] & !closed & self.seed_floor;
            if let Some(hit) =
                self.extend(sub | bit(w), ext | fresh, closed | self.adj[w], left - 1)
            {
                return Some(hit);
            }
            if self.work > self.cap {
                return None;
            }
        }
        None
    }

    /// Sets are visited by increasing size, so any hit is vertex-critical:
    /// every member has in- and out-degree at least `k - 1` inside it.
    fn accept(&self, sub: Mask) -> bool {
        let need = self.k as u32 - 1;
        for v in ones(sub) {
            if (self.g.out[v] & sub).count_ones() < need
                || (self.g.inn[v] & sub).count_ones() < need
            {
                return false;
            }
        }
        self.g.is_strongly_connected(sub)
            && greedy_count(self.g, sub) >= self.k
            && dichromatic_at_least(self.g, sub, self.k)
    }
}

fn greedy_count(g: &Dense, set: Mask) -> usize {
    let mut classes: Vec<Mask> = Vec::new();
    for v in ones(set) {
        match classes.iter_mut().find(|c| !g.closes_cycle(**c, v)) {
            Some(c) => *c |= bit(v),
            None => classes.push(bit(v)),
        }
    }
    classes.len()
}
