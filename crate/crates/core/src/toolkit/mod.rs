//! Instance generators and file formats.

mod format;
mod generate;
mod rng;

pub use format::{parse_coloring, parse_digraph, serialize_coloring, serialize_digraph};
pub use generate::{
    blowup, generate, qr_tournament, random_oriented, random_tournament, GenSpec, Model,
};
pub use rng::InstanceRng;
