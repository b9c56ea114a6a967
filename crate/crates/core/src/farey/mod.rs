//! Slopes, continued fractions, the Farey tessellation, and the closed-form
//! tetrahedron counts for layered fillings.

mod cf;
mod counts;
mod path;
mod slope;

pub use cf::{convergents, norm, positive_cf, regular_cf, PositiveCF};
pub use counts::{chain_tet_count, lst_tet_count, BoundaryClass, ChainData};
pub use path::{farey_path, FareyPath, FareyTriple};
pub use slope::{is_farey_neighbor, make_slope, slope, Slope};
