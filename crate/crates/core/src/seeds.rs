//! The five core triangulations of the magic manifold and the cusp templates.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::farey::{slope, BoundaryClass, Slope};
use crate::layered::{
    build_chain, build_lst, permissible_cusp, standard_cusp, EdgeLabel, OneVertexBoundary, PermissibleBoundary,
};
use crate::triangulation::{import_gluing_table, FaceRef, Perm4, Triangulation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SeedId {
    T1,
    T2,
    T2p,
    T3,
    T4hat,
    T5hat,
}

impl SeedId {
    pub const ALL: [SeedId; 6] = [SeedId::T1, SeedId::T2, SeedId::T2p, SeedId::T3, SeedId::T4hat, SeedId::T5hat];

    /// T2p is T2 with its boundaries swapped; both are one triangulation.
    pub fn family(self) -> SeedId {
        if self == SeedId::T2p {
            SeedId::T2
        } else {
            self
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            SeedId::T1 => "T1",
            SeedId::T2 => "T2",
            SeedId::T2p => "T2p",
            SeedId::T3 => "T3",
            SeedId::T4hat => "T4h",
            SeedId::T5hat => "T5h",
        }
    }
}

impl fmt::Display for SeedId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SeedId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SeedId::ALL.into_iter().find(|id| id.name() == s || format!("{id:?}") == s).ok_or_else(|| Error::Parse {
            line: 1,
            column: 1,
            message: format!("unknown seed {s:?}"),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum BoundaryDescriptor {
    OneVertex(OneVertexBoundary),
    Permissible(PermissibleBoundary),
}

impl BoundaryDescriptor {
    pub fn class(&self) -> BoundaryClass {
        match self {
            BoundaryDescriptor::OneVertex(b) => b.class,
            BoundaryDescriptor::Permissible(b) => b.class,
        }
    }

    pub fn faces(&self) -> Vec<FaceRef> {
        match self {
            BoundaryDescriptor::OneVertex(b) => b.faces.to_vec(),
            BoundaryDescriptor::Permissible(b) => b.faces.to_vec(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeedTriangulation {
    pub id: SeedId,
    pub core: Triangulation,
    /// Boundary filled along the first slope of a pair.
    pub boundary1: BoundaryDescriptor,
    pub boundary2: BoundaryDescriptor,
}

const T1_CORE: &str = "tet | 012 | 013 | 023 | 123
0 | 1(210) | 1(031) | -- | --
1 | 0(210) | 0(031) | -- | --
";

const T2_CORE: &str = "tet | 012 | 013 | 023 | 123
0 | 1(102) | 1(310) | -- | --
1 | 0(102) | 0(310) | -- | --
";

const T3_CORE: &str = "tet | 012 | 013 | 023 | 123
0 | 1(021) | 2(023) | 3(203) | --
1 | 0(021) | 2(132) | 4(203) | --
2 | 3(130) | 4(310) | 0(013) | 1(031)
3 | 4(021) | 2(201) | 0(203) | --
4 | 3(021) | 2(310) | 1(203) | --
";

const T4_CORE: &str = "tet | 012 | 013 | 023 | 123
0 | 1(021) | -- | -- | --
1 | 0(021) | -- | -- | --
";

const T5_CORE: &str = "tet | 012 | 013 | 023 | 123
0 | -- | -- | 1(320) | --
1 | -- | -- | 0(320) | --
";

fn face(tet: usize, face: u8) -> FaceRef {
    FaceRef { tet, face }
}

type Labels = [(usize, u8, u8, i64, i64); 3];

fn one_vertex(faces: [FaceRef; 2], maps: [[u8; 3]; 2], edges: Labels, class: BoundaryClass) -> BoundaryDescriptor {
    let edges = edges.iter().map(|&(tet, a, b, p, q)| EdgeLabel { tet, a, b, slope: slope(p, q) }).collect();
    BoundaryDescriptor::OneVertex(OneVertexBoundary { faces, maps, edges, class })
}

fn permissible(faces: [FaceRef; 4], maps: [[u8; 3]; 4], class: BoundaryClass) -> BoundaryDescriptor {
    BoundaryDescriptor::Permissible(PermissibleBoundary { faces, maps, class })
}

/// Builds a seed: its core plus the two boundary descriptors.
pub fn build_seed(id: SeedId) -> SeedTriangulation {
    use BoundaryClass::*;
    let core = |text: &str| import_gluing_table(text).expect("seed table parses");
    let (core, boundary1, boundary2) = match id {
        SeedId::T1 => (
            core(T1_CORE),
            one_vertex(
                [face(0, 1), face(1, 1)],
                [[0, 2, 3], [0, 2, 3]],
                [(1, 0, 3, 1, 0), (1, 0, 2, -1, 1), (1, 2, 3, -2, 1)],
                P,
            ),
            one_vertex(
                [face(0, 0), face(1, 0)],
                [[1, 3, 2], [1, 3, 2]],
                [(1, 1, 2, 1, 0), (1, 2, 3, -2, 1), (1, 1, 3, -1, 1)],
                P,
            ),
        ),
        SeedId::T2 | SeedId::T2p => {
            let q = one_vertex(
                [face(0, 1), face(1, 1)],
                T2_MAPS[0],
                [(0, 0, 3, -3, 1), (0, 2, 3, -2, 1), (0, 0, 2, 1, 0)],
                Q,
            );
            let p = one_vertex([face(0, 0), face(1, 0)], T2_MAPS[1], T2_C2, P);
            if id == SeedId::T2 {
                (core(T2_CORE), q, p)
            } else {
                (core(T2_CORE), p, q)
            }
        }
        SeedId::T3 => (
            core(T3_CORE),
            one_vertex([face(3, 0), face(4, 0)], T3_MAPS[0], T3_C1, R),
            one_vertex([face(0, 0), face(1, 0)], T3_MAPS[1], T3_C2, R),
        ),
        SeedId::T4hat => (
            core(T4_CORE),
            permissible([face(0, 1), face(1, 2), face(0, 2), face(1, 1)], T4_MAPS, Vhat),
            one_vertex([face(0, 0), face(1, 0)], T4_C2_MAPS, T4_C2, R),
        ),
        SeedId::T5hat => (
            core(T5_CORE),
            permissible([face(1, 3), face(1, 2), face(0, 2), face(0, 3)], T5_MAPS, Uhat),
            one_vertex([face(0, 0), face(1, 0)], T5_C2_MAPS, T5_C2, Rp),
        ),
    };
    SeedTriangulation { id, core, boundary1, boundary2 }
}

// Cusp gluings and edge slopes not written out in the tables, fixed by
// requiring a valid ideal triangulation and matching first homology of
// fillings against the linking numbers of the chain link.
const T2_MAPS: [[[u8; 3]; 2]; 2] = [[[0, 2, 3], [0, 2, 3]], [[1, 3, 2], [1, 3, 2]]];
const T2_C2: Labels = [(0, 2, 3, -2, 1), (0, 1, 2, 1, 0), (0, 1, 3, -1, 1)];
const T3_MAPS: [[[u8; 3]; 2]; 2] = [[[1, 2, 3], [1, 2, 3]], [[1, 2, 3], [1, 2, 3]]];
const T3_C1: Labels = [(3, 1, 2, 1, 1), (3, 1, 3, 0, 1), (3, 2, 3, 1, 0)];
const T3_C2: Labels = [(0, 1, 2, 1, 1), (0, 1, 3, 0, 1), (0, 2, 3, 1, 0)];
const T4_MAPS: [[u8; 3]; 4] = [[3, 0, 2], [3, 1, 0], [3, 1, 0], [3, 0, 2]];
const T4_C2_MAPS: [[u8; 3]; 2] = [[1, 2, 3], [1, 2, 3]];
const T4_C2: Labels = [(0, 1, 2, 1, 1), (0, 1, 3, 0, 1), (0, 2, 3, 1, 0)];
const T5_MAPS: [[u8; 3]; 4] = [[0, 2, 1], [1, 3, 0], [1, 3, 0], [0, 2, 1]];
const T5_C2_MAPS: [[u8; 3]; 2] = [[1, 2, 3], [1, 2, 3]];
const T5_C2: Labels = [(0, 1, 2, -1, 1), (0, 1, 3, 0, 1), (0, 2, 3, 1, 0)];

/// Cusp face vertices `1, 2, 3` sent to the listed core vertices.
fn cusp_perm(to: [u8; 3]) -> Perm4 {
    Perm4::extend([1, 2, 3], to).expect("three distinct vertices")
}

/// Glues a template's `123` faces to core faces; `maps[k]` gives the core
/// vertices receiving vertices `1, 2, 3` of template tetrahedron `k`.
fn attach_template(
    t: &mut Triangulation,
    template: &Triangulation,
    faces: &[FaceRef],
    maps: &[[u8; 3]],
) -> Result<usize> {
    for f in faces {
        if f.tet >= t.len() || t.gluing(f.tet, f.face).is_some() {
            return Err(Error::OpenBoundary(t.open_faces().len()));
        }
    }
    let off = t.append(template);
    for (k, (f, m)) in faces.iter().zip(maps).enumerate() {
        let perm = cusp_perm(*m);
        if perm.apply(0) != f.face {
            return Err(Error::Construction(format!("map {m:?} does not cover face {}", f.face)));
        }
        t.glue(off + k, 0, f.tet, perm);
    }
    Ok(off)
}

/// Cones a one-vertex boundary with the standard cusp.
pub fn attach_standard_cusp(t: &mut Triangulation, b: &OneVertexBoundary) -> Result<()> {
    attach_template(t, &standard_cusp(), &b.faces, &b.maps).map(|_| ())
}

/// Cones a permissible boundary with the permissible cusp.
pub fn attach_permissible_cusp(t: &mut Triangulation, b: &PermissibleBoundary) -> Result<()> {
    attach_template(t, &permissible_cusp(), &b.faces, &b.maps).map(|_| ())
}

/// Cones a boundary with the matching cusp template.
pub fn attach_cusp(t: &mut Triangulation, b: &BoundaryDescriptor) -> Result<()> {
    match b {
        BoundaryDescriptor::OneVertex(b) => attach_standard_cusp(t, b),
        BoundaryDescriptor::Permissible(b) => attach_permissible_cusp(t, b),
    }
}

/// Fills a boundary along `s`, or cones it off when `s` is `None`;
/// returns the number of tetrahedra added.
pub fn fill_boundary(t: &mut Triangulation, b: &BoundaryDescriptor, s: Option<Slope>) -> Result<usize> {
    let before = t.len();
    match (b, s) {
        (b, None) => attach_cusp(t, b)?,
        (BoundaryDescriptor::OneVertex(b), Some(s)) => {
            build_lst(t, b, s)?;
        }
        (BoundaryDescriptor::Permissible(b), Some(s)) => {
            build_chain(t, b, s)?;
        }
    }
    Ok(t.len() - before)
}

impl SeedTriangulation {
    /// The core with both boundaries coned off: a triangulation of the
    /// three-cusped manifold.
    pub fn with_cusps(&self) -> Result<Triangulation> {
        self.fill(None, None)
    }

    /// Fills the two boundaries (or cones them off for `None`).
    pub fn fill(&self, s1: Option<Slope>, s2: Option<Slope>) -> Result<Triangulation> {
        let mut t = self.core.clone();
        fill_boundary(&mut t, &self.boundary1, s1)?;
        fill_boundary(&mut t, &self.boundary2, s2)?;
        Ok(t)
    }
}
