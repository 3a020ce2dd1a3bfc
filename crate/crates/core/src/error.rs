use thiserror::Error;

use crate::graph::Arc;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("({}, {}) is not an arc of the graph", .0.tail, .0.head)]
    InvalidArc(Arc),

    #[error("vertex {vertex} is out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("loop at vertex {0}")]
    Loop(usize),

    #[error("digon between {0} and {1}")]
    Digon(usize, usize),

    #[error("no directed path from {from} to {to}")]
    NoPath { from: usize, to: usize },

    #[error("instance has {n} vertices, above the exact budget of {limit} (greedy upper bound {upper_bound})")]
    OverBudget {
        n: usize,
        limit: usize,
        upper_bound: usize,
    },

    #[error("coloring does not cover vertex {0}")]
    IncompleteColoring(usize),

    #[error("oracle returned an invalid coloring for arc ({}, {})", .0.tail, .0.head)]
    InvalidOracleColoring(Arc),

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    pub(crate) fn contract(msg: impl Into<String>) -> Self {
        Error::Contract(msg.into())
    }

    pub(crate) fn parameter(msg: impl Into<String>) -> Self {
        Error::Parameter(msg.into())
    }
}
