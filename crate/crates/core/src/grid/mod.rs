//! Grid geometry, the contamination rules and the closure engine.

pub mod bits;
mod cellset;
mod dims;
pub mod engine;
mod rules;
mod shapes;
mod symmetry;

pub use cellset::CellSet;
pub use dims::{Cell, GridDims};
pub use engine::{close, closure, fills, is_full, step, ClosureTrace};
pub use rules::{contaminable, moore, von_neumann, Rule};
pub use shapes::{boundary_edges_covered, has_adjacent_empty_lines, rect_set, Axis};
pub use symmetry::{symmetry_image, Symmetry};
