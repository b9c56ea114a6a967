//! Triangulated Dehn fillings of the magic manifold.

pub mod census;
pub mod error;
pub mod farey;
pub mod filling;
pub mod layered;
pub mod seeds;
pub mod triangulation;

pub use census::{CensusRow, FamilyRow};
pub use error::{Error, Result};
pub use farey::{BoundaryClass, FareyPath, FareyTriple, PositiveCF, Slope};
pub use filling::{FillingPlan, FillingResult, KnotType};
pub use seeds::{SeedId, SeedTriangulation};
pub use triangulation::{FaceGluing, HomologyGroup, Perm4, Triangulation, VertexLink};
