//! Arc-boundedness and the path-region decomposition colourers.
//!
//! Every colourer is parameterised by an [`ArcOracle`] that colours single
//! arc neighbourhoods, so the same code serves tournaments (exact
//! neighbourhood colourings) and completed digraphs (recursive colourings).

mod oracle;
mod palette;
mod path;
mod region;

pub use oracle::{arc_boundedness, color_set, ArcOracle, NeighborhoodTable};
pub use palette::{Palette, PaletteColoring};
pub use path::{
    long_forward_arcs, path_region, shortest_path, shortest_path_within, Path, RegionAssignment,
    Slot,
};
pub(crate) use region::domination_coloring;
pub use region::{
    color_assignment, color_path_region, color_via_domination, color_via_endpoints, is_absorbing,
    is_dominating,
};
