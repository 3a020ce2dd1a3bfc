//! Instance generators.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::rng::InstanceRng;
use crate::error::{Error, Result};
use crate::graph::OrientedGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Model {
    RandomTournament,
    RandomOriented,
    Qr,
    Blowup,
    Transitive,
    Cycle,
}

impl FromStr for Model {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "random-tournament" => Model::RandomTournament,
            "random-oriented" => Model::RandomOriented,
            "qr" => Model::Qr,
            "blowup" => Model::Blowup,
            "transitive" => Model::Transitive,
            "cycle" => Model::Cycle,
            other => return Err(Error::parameter(format!("unknown model {other:?}"))),
        })
    }
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Model::RandomTournament => "random-tournament",
            Model::RandomOriented => "random-oriented",
            Model::Qr => "qr",
            Model::Blowup => "blowup",
            Model::Transitive => "transitive",
            Model::Cycle => "cycle",
        })
    }
}

/// What to generate. `n` sizes the plain models, `q` the quadratic residue
/// tournament, `parts` the blow-up (one part per base vertex).
#[derive(Debug, Clone, PartialEq)]
pub struct GenSpec {
    pub model: Model,
    pub n: Option<usize>,
    pub q: Option<usize>,
    pub p: Option<f64>,
    pub parts: Vec<usize>,
    /// Base of a blow-up; `None` means a directed cycle on `parts.len()`
    /// vertices.
    pub base: Option<OrientedGraph>,
    pub seed: u64,
}

impl GenSpec {
    pub fn new(model: Model) -> Self {
        GenSpec {
            model,
            n: None,
            q: None,
            p: None,
            parts: Vec::new(),
            base: None,
            seed: 0,
        }
    }

    pub fn n(mut self, n: usize) -> Self {
        self.n = Some(n);
        self
    }

    pub fn q(mut self, q: usize) -> Self {
        self.q = Some(q);
        self
    }

    pub fn p(mut self, p: f64) -> Self {
        self.p = Some(p);
        self
    }

    pub fn parts(mut self, parts: Vec<usize>) -> Self {
        self.parts = parts;
        self
    }

    pub fn base(mut self, base: OrientedGraph) -> Self {
        self.base = Some(base);
        self
    }

    pub fn seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }
}

/// Builds the instance described by `spec`; a pure function of it.
pub fn generate(spec: &GenSpec) -> Result<OrientedGraph> {
    let need_n = || {
        spec.n
            .ok_or_else(|| Error::parameter(format!("model {} needs n", spec.model)))
    };
    match spec.model {
        Model::RandomTournament => Ok(random_tournament(need_n()?, spec.seed)),
        Model::RandomOriented => {
            let p = spec
                .p
                .ok_or_else(|| Error::parameter("random-oriented needs p"))?;
            random_oriented(need_n()?, p, spec.seed)
        }
        Model::Qr => qr_tournament(
            spec.q
                .or(spec.n)
                .ok_or_else(|| Error::parameter("qr needs q"))?,
        ),
        Model::Blowup => match &spec.base {
            Some(base) => blowup(base, &spec.parts),
            None => blowup(&OrientedGraph::cycle(spec.parts.len())?, &spec.parts),
        },
        Model::Transitive => Ok(OrientedGraph::transitive(need_n()?)),
        Model::Cycle => OrientedGraph::cycle(need_n()?),
    }
}

/// For `u < v` in lexicographic order, one output each: top bit set means
/// `u -> v`, clear means `v -> u`.
pub fn random_tournament(n: usize, seed: u64) -> OrientedGraph {
    let mut rng = InstanceRng::new(seed);
    let mut arcs = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            arcs.push(if rng.bit() { (u, v) } else { (v, u) });
        }
    }
    OrientedGraph::from_arcs(n, arcs).expect("one arc per pair")
}

/// For `u < v` in lexicographic order: an edge when the next unit draw is
/// below `p`, oriented by the top bit of a further output as in
/// [`random_tournament`].
pub fn random_oriented(n: usize, p: f64, seed: u64) -> Result<OrientedGraph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::parameter(format!("p = {p} is not a probability")));
    }
    let mut rng = InstanceRng::new(seed);
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.unit() < p {
                arcs.push(if rng.bit() { (u, v) } else { (v, u) });
            }
        }
    }
    OrientedGraph::from_arcs(n, arcs)
}

/// `i -> j` iff `j - i` is a non-zero square mod `q`; `q` must be a prime
/// congruent to 3 mod 4.
pub fn qr_tournament(q: usize) -> Result<OrientedGraph> {
    if !is_prime(q) || q % 4 != 3 {
        return Err(Error::parameter(format!(
            "q = {q} is not a prime congruent to 3 mod 4"
        )));
    }
    let mut square = vec![false; q];
    for x in 1..q {
        square[x * x % q] = true;
    }
    let arcs = (0..q).flat_map(|i| (0..q).filter(move |&j| j != i).map(move |j| (i, j)));
    OrientedGraph::from_arcs(q, arcs.filter(|&(i, j)| square[(j + q - i) % q]))
}

fn is_prime(q: usize) -> bool {
    q >= 2 && (2..).take_while(|d| d * d <= q).all(|d| !q.is_multiple_of(d))
}

/// Replaces base vertex `i` by an arc-free part of `parts[i]` vertices,
/// numbered contiguously in base order; arcs between parts copy the base.
pub fn blowup(base: &OrientedGraph, parts: &[usize]) -> Result<OrientedGraph> {
    if parts.len() != base.n() {
        return Err(Error::parameter(format!(
            "{} part sizes for a base on {} vertices",
            parts.len(),
            base.n()
        )));
    }
    if parts.contains(&0) {
        return Err(Error::parameter("blow-up parts must be non-empty"));
    }
    let mut offset = vec![0; parts.len() + 1];
    for (i, &s) in parts.iter().enumerate() {
        offset[i + 1] = offset[i] + s;
    }
    let mut arcs = Vec::new();
    for e in base.arcs() {
        for x in offset[e.tail]..offset[e.tail + 1] {
            for y in offset[e.head]..offset[e.head + 1] {
                arcs.push((x, y));
            }
        }
    }
    OrientedGraph::from_arcs(offset[parts.len()], arcs)
}
