use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{farey_path, norm, slope, FareyTriple, Slope};
use crate::error::{Error, Result};

/// Boundary pattern of a seed cusp after the core is built.
///
/// The first four are one-vertex tori (filled by layered solid tori); the
/// hatted two are permissible two-vertex tori (filled by layered chains).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum BoundaryClass {
    P,
    Q,
    R,
    Rp,
    Uhat,
    Vhat,
}

/// Data of a permissible boundary: fillable slopes are `k*alpha + beta`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChainData {
    pub alpha: Slope,
    pub beta: Slope,
    pub positive: bool,
}

impl BoundaryClass {
    pub const ALL: [BoundaryClass; 6] = [
        BoundaryClass::P,
        BoundaryClass::Q,
        BoundaryClass::R,
        BoundaryClass::Rp,
        BoundaryClass::Uhat,
        BoundaryClass::Vhat,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            BoundaryClass::P => "P",
            BoundaryClass::Q => "Q",
            BoundaryClass::R => "R",
            BoundaryClass::Rp => "Rp",
            BoundaryClass::Uhat => "Uh",
            BoundaryClass::Vhat => "Vh",
        }
    }

    /// Edge slopes of a one-vertex boundary; `None` for permissible ones.
    pub fn triple(&self) -> Option<FareyTriple> {
        let inf = Slope::INFINITY;
        let t = |a: i64, b: i64| FareyTriple::new(inf, slope(a, 1), slope(b, 1)).expect("triple");
        match self {
            BoundaryClass::P => Some(t(-1, -2)),
            BoundaryClass::Q => Some(t(-2, -3)),
            BoundaryClass::R => Some(t(1, 0)),
            BoundaryClass::Rp => Some(t(-1, 0)),
            BoundaryClass::Uhat | BoundaryClass::Vhat => None,
        }
    }

    pub fn chain(&self) -> Option<ChainData> {
        match self {
            BoundaryClass::Uhat => Some(ChainData { alpha: Slope::INFINITY, beta: slope(-5, 1), positive: true }),
            BoundaryClass::Vhat => Some(ChainData { alpha: Slope::INFINITY, beta: slope(1, 1), positive: false }),
            _ => None,
        }
    }

    pub fn is_one_vertex(&self) -> bool {
        self.triple().is_some()
    }
}

impl fmt::Display for BoundaryClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BoundaryClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "P" => BoundaryClass::P,
            "Q" => BoundaryClass::Q,
            "R" => BoundaryClass::R,
            "Rp" | "R'" => BoundaryClass::Rp,
            "Uh" | "Uhat" => BoundaryClass::Uhat,
            "Vh" | "Vhat" => BoundaryClass::Vhat,
            _ => return Err(Error::Parse { line: 1, column: 1, message: format!("unknown boundary class {s:?}") }),
        })
    }
}

/// Offset added to the norm, by boundary class and by the open interval
/// `(-inf,-2)`, `(-2,-1)`, `(-1,0)`, `(0,inf)` containing the slope.
fn offset(b: BoundaryClass, interval: usize) -> i64 {
    const TABLE: [[i64; 4]; 4] = [
        [-3, -3, -1, 0],  // P
        [-4, -2, 0, 1],   // Q
        [-1, -1, -1, -2], // R
        [-2, -2, -2, -1], // Rp
    ];
    let row = match b {
        BoundaryClass::P => 0,
        BoundaryClass::Q => 1,
        BoundaryClass::R => 2,
        BoundaryClass::Rp => 3,
        _ => unreachable!(),
    };
    TABLE[row][interval]
}

fn open_interval(s: &Slope) -> Option<usize> {
    let (p, q) = (s.p(), s.q());
    if p < -2 * q {
        Some(0)
    } else if p > -2 * q && p < -q {
        Some(1)
    } else if p > -q && p < 0 {
        Some(2)
    } else if p > 0 {
        Some(3)
    } else {
        None
    }
}

/// Tetrahedra in the layered solid torus filling `b` along `s`.
///
/// Slopes already on the boundary cost nothing. The integers -2, -1, 0 that
/// separate the intervals fall back to the Farey distance.
pub fn lst_tet_count(b: BoundaryClass, s: Slope) -> Result<u64> {
    let tri = b.triple().ok_or(Error::WrongBoundaryKind(b.name()))?;
    if s.is_infinite() {
        return Err(Error::InfiniteSlope);
    }
    if tri.contains(&s) {
        return Ok(0);
    }
    match open_interval(&s) {
        Some(i) => Ok((norm(&s)? as i64 + offset(b, i)).max(0) as u64),
        None => Ok(farey_path(tri, s).len().saturating_sub(1) as u64),
    }
}

/// Tetrahedra in the layered chain filling `b` along the integer slope `s`.
pub fn chain_tet_count(b: BoundaryClass, s: Slope) -> Result<u64> {
    if b.chain().is_none() {
        return Err(Error::WrongBoundaryKind(b.name()));
    }
    if !s.is_integer() {
        return Err(Error::UnrealizableSlope(s));
    }
    let m = s.p();
    Ok(match b {
        BoundaryClass::Uhat => (m + 4).unsigned_abs(),
        _ => m.unsigned_abs(),
    })
}
