//! Maximum clique by branch and bound with a greedy-colouring bound.

use super::dense::{bit, ones, Mask};

/// A maximum clique of the undirected graph `adj` restricted to `candidates`.
/// Among maximum cliques, the one found first in increasing-id branching.
pub fn max_clique(adj: &[Mask], candidates: Mask) -> Mask {
    let mut best = 0;
    let mut best_len = 0;
    expand(adj, 0, 0, candidates, &mut best, &mut best_len);
    best
}

fn expand(
    adj: &[Mask],
    current: Mask,
    len: u32,
    mut cand: Mask,
    best: &mut Mask,
    best_len: &mut u32,
) {
    if cand == 0 {
        if len > *best_len {
            *best_len = len;
            *best = current;
        }
        return;
    }
    let (order, bounds) = color_bound(adj, cand);
    for i in 0..order.len() {
        if len + bounds[i] <= *best_len {
            return;
        }
        let v = order[i];
        expand(
            adj,
            current | bit(v),
            len + 1,
            cand & adj[v],
            best,
            best_len,
        );
        cand &= !bit(v);
    }
}

/// Greedy sequential colouring of `cand`; returns vertices with their
/// colour-count bounds, ordered so that bounds are non-increasing along the
/// branching order.
fn color_bound(adj: &[Mask], cand: Mask) -> (Vec<usize>, Vec<u32>) {
    let mut order = Vec::new();
    let mut bounds = Vec::new();
    let mut uncolored = cand;
    let mut classes: Vec<Vec<usize>> = Vec::new();
    while uncolored != 0 {
        let mut avail = uncolored;
        let mut class = Vec::new();
        while avail != 0 {
            let v = avail.trailing_zeros() as usize;
            class.push(v);
            uncolored &= !bit(v);
            avail &= !bit(v) & !adj[v];
        }
        classes.push(class);
    }
    // Branch on the highest colour class first.
    for (c, class) in classes.iter().enumerate().rev() {
        for &v in class {
            order.push(v);
            bounds.push(c as u32 + 1);
        }
    }
    (order, bounds)
}

/// Greedy maximal clique, scanning vertices by increasing id.
pub fn greedy_clique(adj: &[Mask], candidates: Mask) -> Mask {
    let mut clique = 0;
    let mut cand = candidates;
    for v in ones(candidates) {
        if cand & bit(v) != 0 {
            clique |= bit(v);
            cand &= adj[v];
        }
    }
    clique
}
