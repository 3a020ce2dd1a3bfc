//! Trace classes around a cluster and complete pairs.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::chromatic::dichromatic_of_set;
use crate::clusters::{find_cluster, Cluster, ClusterSearch};
use crate::error::Result;
use crate::graph::{OrientedGraph, VertexSet};
use crate::pipeline::Budgets;

use super::sizes::s_saturating;

/// Vertices outside `C` sharing the same out- and in-neighbourhood in `C`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceClass {
    pub out: VertexSet,
    pub inn: VertexSet,
    pub members: VertexSet,
}

/// Partitions `V \ C` by `(N+(v) ∩ C, N-(v) ∩ C)`. Classes are listed by
/// their smallest member.
pub fn split_by_trace(t: &OrientedGraph, c: &VertexSet) -> Vec<TraceClass> {
    let mut classes: BTreeMap<(Vec<usize>, Vec<usize>), TraceClass> = BTreeMap::new();
    for v in c.complement().iter() {
        let out = t.out_neighbors(v).intersection(c);
        let inn = t.in_neighbors(v).intersection(c);
        classes
            .entry((out.to_vec(), inn.to_vec()))
            .or_insert_with(|| TraceClass {
                out,
                inn,
                members: VertexSet::empty(t.n()),
            })
            .members
            .insert(v);
    }
    let mut out: Vec<TraceClass> = classes.into_values().collect();
    out.sort_by_key(|class| class.members.first());
    out
}

/// `A` complete to `B`, both of dichromatic number at least `c`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CompletePair {
    pub a: VertexSet,
    pub b: VertexSet,
    pub c: usize,
}

impl CompletePair {
    /// Re-checks disjointness, completeness and both colouring bounds
    /// exactly. Sets beyond `exact_limit` fail the check.
    pub fn verify(&self, t: &OrientedGraph, exact_limit: usize) -> bool {
        if !self.a.is_disjoint(&self.b) {
            return false;
        }
        if !self.a.iter().all(|x| self.b.is_subset(t.out_neighbors(x))) {
            return false;
        }
        let chi = |s: &VertexSet| dichromatic_of_set(t, s, exact_limit).map(|(k, _)| k);
        matches!((chi(&self.a), chi(&self.b)), (Ok(x), Ok(y)) if x >= self.c && y >= self.c)
    }
}

/// Result of [`find_complete_pair`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairSearch {
    pub pair: Option<CompletePair>,
    pub cluster: Option<Cluster>,
    /// The cluster search ran out of work, or some class was too large to
    /// colour exactly.
    pub budget_limited: bool,
}

/// Looks for a `2c`-cluster `C`, then for a trace class `S` with
/// dichromatic number at least `c`; with `v` its smallest member the pair
/// is `(N-(v) ∩ C, S)` or `(S, N+(v) ∩ C)`, whichever half of `C` reaches
/// `c`. Returned pairs are always re-verified.
pub fn find_complete_pair(t: &OrientedGraph, c: usize, budgets: &Budgets) -> Result<PairSearch> {
    let ell = s_saturating(2 * c).min(budgets.ell);
    let cluster = match find_cluster(t, 2 * c, ell, budgets.cluster_work) {
        ClusterSearch::Found(cl) => cl,
        other => {
            return Ok(PairSearch {
                pair: None,
                cluster: None,
                budget_limited: other == ClusterSearch::BudgetExceeded,
            })
        }
    };
    let limit = budgets.exact_limit;
    let mut limited = false;
    for class in split_by_trace(t, &cluster.members) {
        match dichromatic_of_set(t, &class.members, limit) {
            Ok((chi, _)) if chi >= c => {}
            Ok(_) => continue,
            Err(_) => {
                limited = true;
                continue;
            }
        }
        let v = class.members.first().expect("non-empty class");
        let before = t.in_neighbors(v).intersection(&cluster.members);
        let after = t.out_neighbors(v).intersection(&cluster.members);
        let candidates = [
            CompletePair {
                a: before,
                b: class.members.clone(),
                c,
            },
            CompletePair {
                a: class.members.clone(),
                b: after,
                c,
            },
        ];
        if let Some(pair) = candidates.into_iter().find(|p| p.verify(t, limit)) {
            return Ok(PairSearch {
                pair: Some(pair),
                cluster: Some(cluster),
                budget_limited: limited,
            });
        }
    }
    Ok(PairSearch {
        pair: None,
        cluster: Some(cluster),
        budget_limited: limited,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qr7() -> OrientedGraph {
        OrientedGraph::from_arcs(7, (0..7).flat_map(|i| [1, 2, 4].map(|r| (i, (i + r) % 7))))
            .unwrap()
    }

    fn set(n: usize, v: &[usize]) -> VertexSet {
        VertexSet::from_iter_in(n, v.iter().copied())
    }

    #[test]
    fn trace_examples() {
        let classes = split_by_trace(&qr7(), &set(7, &[0, 1, 3]));
        let got: Vec<(Vec<usize>, Vec<usize>)> = classes
            .iter()
            .map(|c| (c.members.to_vec(), c.out.to_vec()))
            .collect();
        assert_eq!(
            got,
            vec![
                (vec![2], vec![3]),
                (vec![4], vec![1]),
                (vec![5], vec![0]),
                (vec![6], vec![0, 1, 3])
            ]
        );
        let t3 = OrientedGraph::transitive(3);
        let classes = split_by_trace(&t3, &set(3, &[0]));
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].members.to_vec(), vec![1, 2]);
        assert!(classes[0].out.is_empty());
        assert_eq!(classes[0].inn.to_vec(), vec![0]);
        assert!(split_by_trace(&t3, &t3.vertices()).is_empty());
    }

    #[test]
    fn pair_examples() {
        let b = Budgets::default();
        let none = find_complete_pair(&OrientedGraph::transitive(8), 1, &b).unwrap();
        assert!(none.pair.is_none() && none.cluster.is_none());
        let q = qr7();
        let found = find_complete_pair(&q, 1, &b).unwrap();
        let pair = found.pair.expect("a pair around the triangle");
        assert!(pair.verify(&q, 20));
    }
}
