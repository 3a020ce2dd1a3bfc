//! The two headline colourers and their supporting pieces.

mod bounds;
mod budgets;
mod common;
mod completion;
mod dense;
mod tournament;
mod trace;

pub use bounds::{evaluate_bounds, SymbolicBounds};
pub use budgets::Budgets;
pub use common::{hamilton_cycle, merge_classes};
pub use completion::{a_between, complete_to_tournament, Completion};
pub use dense::{
    color_between_in_completion, color_completed_arc_neighborhood, color_digraph_arc_local,
    color_digraph_with, CompletionOracle, RecursionStats, SetColorer, ALPHA_CHECK_LIMIT,
};
pub use tournament::color_tournament_arc_local;
pub use trace::{Flag, FlagKind, Node, Trace};
