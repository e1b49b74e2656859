//! Breadth-first enumeration of packings and super-packings, nesting
//! depth, bounding packings and unit-square location.

mod analysis;
mod bfs;
mod locate;
mod window;

pub use analysis::{
    bounding_packing, crossing_pair, nesting_depth_geometric, periodicity_counterexample, same_depth_violation,
    BoundingPacking,
};
pub use bfs::{
    generate, generate_packing, generate_superpacking, Enumeration, EnumerationBudget, GroupKind, PackedCircle,
};
pub use locate::{locate_in_unit_square, location_is_unique, square_symmetries};
pub use window::Window;
