use thiserror::Error;

use crate::farey::Slope;
use crate::triangulation::Violation;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("slope numerator and denominator are both zero")]
    ZeroSlopePair,

    #[error("{0}, {1}, {2} are not pairwise Farey neighbours")]
    NotAFareyTriple(Slope, Slope, Slope),

    #[error("the slope 1/0 has no continued fraction or norm")]
    InfiniteSlope,

    #[error("slope {0} cannot be realised by a layered chain (only integer slopes can)")]
    UnrealizableSlope(Slope),

    #[error("slope {0} is an edge slope of the boundary and cannot be killed by folding")]
    SlopeInBoundaryTriple(Slope),

    #[error("boundary class {0} does not support this operation")]
    WrongBoundaryKind(&'static str),

    #[error("invalid triangulation: {0:?}")]
    InvalidTriangulation(Vec<Violation>),

    #[error("triangulation has {0} unglued face(s)")]
    OpenBoundary(usize),

    #[error("edge {edge} has degree {degree}, expected 3")]
    EdgeNotDegreeThree { edge: usize, degree: usize },

    #[error("edge {0} meets some tetrahedron more than once")]
    SharedTetrahedron(usize),

    #[error("no such edge: {0}")]
    NoSuchEdge(usize),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },

    #[error("slope {0} is exceptional")]
    ExceptionalPrimary(Slope),

    #[error("slope {0} is not of the form -{1} + 1/k")]
    NotTypeParameter(Slope, i64),

    #[error("({0}, {1}) is not a hyperbolic knot filling")]
    NotAKnotFilling(Slope, Slope),

    #[error("unknown family {0}")]
    UnknownFamily(String),

    #[error("dataset corrupt: {0}")]
    DatasetCorrupt(String),

    #[error("construction failed: {0}")]
    Construction(String),
}
