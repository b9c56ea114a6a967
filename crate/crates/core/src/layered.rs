//! Cusp templates, layered solid tori over one-vertex torus boundaries and
//! layered chains over permissible boundaries.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::farey::{chain_tet_count, farey_path, BoundaryClass, FareyTriple, Slope};
use crate::triangulation::{FaceRef, Perm4, Triangulation};

/// A core edge `a -> b` of tetrahedron `tet` carrying a known slope.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeLabel {
    pub tet: usize,
    pub a: u8,
    pub b: u8,
    pub slope: Slope,
}

/// Two open faces forming a one-vertex torus, with the slopes of its edges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OneVertexBoundary {
    pub faces: [FaceRef; 2],
    /// Core vertices receiving vertices `1, 2, 3` of the cusp tetrahedra
    /// `X, Y` that cone this torus off.
    pub maps: [[u8; 3]; 2],
    /// One labelled edge per edge of the torus.
    pub edges: Vec<EdgeLabel>,
    pub class: BoundaryClass,
}

/// Four open faces `A, B, C, D` forming a permissible two-vertex torus.
///
/// `maps[k][i]` is the core vertex playing the role of vertex `i + 1` of
/// the matching tetrahedron of the permissible cusp, so edge `a` is
/// `A(1 -> 2)` and edge `b` is `B(1 -> 2)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PermissibleBoundary {
    pub faces: [FaceRef; 4],
    pub maps: [[u8; 3]; 4],
    pub class: BoundaryClass,
}

/// Two tetrahedra `X, Y` coning a one-vertex torus to an ideal vertex; the
/// open faces are `X(123)` and `Y(123)`.
pub fn standard_cusp() -> Triangulation {
    let mut t = Triangulation::new();
    let x = t.add_labelled("X");
    let y = t.add_labelled("Y");
    t.glue_faces(x, [0, 1, 2], y, [0, 2, 1]);
    t.glue_faces(x, [0, 1, 3], y, [0, 3, 1]);
    t.glue_faces(x, [0, 2, 3], y, [0, 3, 2]);
    t
}

/// Four tetrahedra `A, B, C, D` coning a permissible torus to an ideal
/// vertex; the open faces are the `123` faces.
pub fn permissible_cusp() -> Triangulation {
    let mut t = Triangulation::new();
    let [a, b, c, d] = ["A", "B", "C", "D"].map(|l| t.add_labelled(l));
    t.glue_faces(a, [0, 1, 2], d, [0, 2, 1]);
    t.glue_faces(a, [0, 1, 3], b, [0, 3, 1]);
    t.glue_faces(a, [0, 2, 3], b, [0, 3, 2]);
    t.glue_faces(b, [0, 1, 2], c, [0, 2, 1]);
    t.glue_faces(c, [0, 1, 3], d, [0, 3, 1]);
    t.glue_faces(c, [0, 2, 3], d, [0, 3, 2]);
    t
}

/// An oriented edge `a -> b` of an open face.
pub type HalfEdge = (FaceRef, u8, u8);

fn apex(face: u8, u: u8, v: u8) -> u8 {
    (0..4u8).find(|&x| x != face && x != u && x != v).expect("face has three vertices")
}

fn face_edges(f: FaceRef) -> [HalfEdge; 3] {
    let v: Vec<u8> = (0..4u8).filter(|&x| x != f.face).collect();
    [(f, v[0], v[1]), (f, v[0], v[2]), (f, v[1], v[2])]
}

fn reversed(h: HalfEdge) -> HalfEdge {
    (h.0, h.2, h.1)
}

/// The open faces of a triangulation forming one torus, with the pairing
/// of their edges and the slopes known for them.
///
/// The core alone need not realise this pairing: two boundary tori of a
/// core may share edges, and edges of one torus may be identified through
/// the core in a different pattern than through the cusp coning it off.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExposedTorus {
    partner: BTreeMap<HalfEdge, HalfEdge>,
    slopes: BTreeMap<HalfEdge, Slope>,
}

impl ExposedTorus {
    /// Pairing induced by coning `faces` with `template`, whose tetrahedron
    /// `k` has vertices `1, 2, 3` sent to `maps[k]`.
    pub fn from_template(template: &Triangulation, faces: &[FaceRef], maps: &[[u8; 3]]) -> Self {
        let mut torus = ExposedTorus { partner: BTreeMap::new(), slopes: BTreeMap::new() };
        let core = |k: usize, i: u8, j: u8| (faces[k], maps[k][i as usize - 1], maps[k][j as usize - 1]);
        for k in 0..faces.len() {
            for f in 1..4u8 {
                let g = template.gluing(k, f).expect("template faces through the cone point are glued");
                let e: Vec<u8> = [1u8, 2, 3].into_iter().filter(|&x| x != f).collect();
                let (i, j) = (e[0], e[1]);
                torus.pair(core(k, i, j), core(g.tet, g.perm.apply(i), g.perm.apply(j)));
            }
        }
        torus
    }

    fn pair(&mut self, h: HalfEdge, p: HalfEdge) {
        self.partner.insert(h, p);
        self.partner.insert(p, h);
        self.partner.insert(reversed(h), reversed(p));
        self.partner.insert(reversed(p), reversed(h));
    }

    pub fn partner(&self, h: HalfEdge) -> Option<HalfEdge> {
        self.partner.get(&h).copied()
    }

    pub fn slope(&self, h: HalfEdge) -> Option<Slope> {
        self.slopes.get(&h).copied()
    }

    /// Labels a torus edge (both of its half-edges, both orientations).
    pub fn set_slope(&mut self, h: HalfEdge, s: Slope) {
        for x in [Some(h), self.partner(h)].into_iter().flatten() {
            self.slopes.insert(x, s);
            self.slopes.insert(reversed(x), s);
        }
    }

    pub fn faces(&self) -> Vec<FaceRef> {
        let mut f: Vec<FaceRef> = self.partner.keys().map(|h| h.0).collect();
        f.dedup();
        f
    }

    fn forget(&mut self, faces: &[FaceRef]) {
        self.partner.retain(|h, _| !faces.contains(&h.0));
        self.slopes.retain(|h, _| !faces.contains(&h.0));
    }

    /// Edges of `f` whose partners lie in `g`, other than those in `skip`.
    pub fn shared_edges(&self, f: FaceRef, g: FaceRef, skip: &[(u8, u8)]) -> Vec<HalfEdge> {
        face_edges(f)
            .into_iter()
            .filter(|h| !skip.iter().any(|&(a, b)| (a, b) == (h.1, h.2) || (b, a) == (h.1, h.2)))
            .filter(|&h| self.partner(h).is_some_and(|p| p.0 == g))
            .collect()
    }

    fn edge_with_slope(&self, f: FaceRef, s: Slope) -> Result<HalfEdge> {
        face_edges(f)
            .into_iter()
            .find(|&h| self.slope(h) == Some(s))
            .ok_or_else(|| Error::Construction(format!("no boundary edge of slope {s}")))
    }

    /// Glues a new tetrahedron over face `hinge.0` and the face holding the
    /// partner of `hinge`. Its edge `01` lies on the hinge, face `012` on
    /// the first face and `013` on the second; the new open faces are `023`
    /// and `123`, sharing the new edge `23`. Returns the new index.
    pub fn layer(&mut self, t: &mut Triangulation, hinge: HalfEdge) -> Result<usize> {
        let (f, u, v) = hinge;
        let (g, ug, vg) =
            self.partner(hinge).ok_or_else(|| Error::Construction("hinge is not a boundary edge".into()))?;
        if g == f {
            return Err(Error::Construction("hinge must join two different faces".into()));
        }
        let (af, ag) = (apex(f.face, u, v), apex(g.face, ug, vg));
        let n = t.add_tet();
        t.glue_faces(n, [0, 1, 2], f.tet, [u, v, af]);
        t.glue_faces(n, [0, 1, 3], g.tet, [ug, vg, ag]);

        let to_new = |h: HalfEdge| -> Option<HalfEdge> {
            if h.0 != f && h.0 != g {
                return Some(h);
            }
            let table = if h.0 == f { [(u, 0), (v, 1), (af, 2)] } else { [(ug, 0), (vg, 1), (ag, 3)] };
            let m = |x: u8| table.iter().find(|p| p.0 == x).expect("face vertex").1;
            let (a, b) = (m(h.1), m(h.2));
            if a.min(b) == 0 && a.max(b) == 1 {
                return None;
            }
            // Edges 02, 03 lie in open face 1; edges 12, 13 in open face 0.
            let face = if a == 0 || b == 0 { 1 } else { 0 };
            Some((FaceRef { tet: n, face }, a, b))
        };
        let old: Vec<(HalfEdge, HalfEdge)> =
            self.partner.iter().filter(|(h, _)| h.0 == f || h.0 == g).map(|(h, p)| (*h, *p)).collect();
        let old_slopes: Vec<(HalfEdge, Slope)> =
            self.slopes.iter().filter(|(h, _)| h.0 == f || h.0 == g).map(|(h, s)| (*h, *s)).collect();
        let moved: Vec<(HalfEdge, HalfEdge)> = self
            .partner
            .iter()
            .filter(|(h, p)| h.0 != f && h.0 != g && (p.0 == f || p.0 == g))
            .map(|(h, p)| (*h, *p))
            .collect();
        self.forget(&[f, g]);
        for (h, p) in old.into_iter().chain(moved) {
            if let (Some(h), Some(p)) = (to_new(h), to_new(p)) {
                self.partner.insert(h, p);
            }
        }
        for (h, s) in old_slopes {
            if let Some(h) = to_new(h) {
                self.slopes.insert(h, s);
            }
        }
        self.pair((FaceRef { tet: n, face: 1 }, 2, 3), (FaceRef { tet: n, face: 0 }, 2, 3));
        Ok(n)
    }

    /// Folds face `hinge.0` onto the face holding the partner of `hinge`,
    /// fixing the hinge and sending apex to apex.
    pub fn fold(&mut self, t: &mut Triangulation, hinge: HalfEdge) -> Result<()> {
        let (f, u, v) = hinge;
        let (g, ug, vg) =
            self.partner(hinge).ok_or_else(|| Error::Construction("hinge is not a boundary edge".into()))?;
        if g == f {
            return Err(Error::Construction("fold needs two different faces".into()));
        }
        let (af, ag) = (apex(f.face, u, v), apex(g.face, ug, vg));
        let perm = Perm4::extend([u, v, af], [ug, vg, ag]).expect("distinct vertices");
        t.glue(f.tet, f.face, g.tet, perm);
        // Outside half-edges paired into f or g are re-paired by following
        // the fold identification and the pairing until leaving f and g.
        let inv = perm.inverse();
        let across = |h: HalfEdge| -> HalfEdge {
            if h.0 == f {
                (g, perm.apply(h.1), perm.apply(h.2))
            } else {
                (f, inv.apply(h.1), inv.apply(h.2))
            }
        };
        let outside: Vec<(HalfEdge, HalfEdge)> = self
            .partner
            .iter()
            .filter(|(h, p)| h.0 != f && h.0 != g && (p.0 == f || p.0 == g))
            .map(|(h, p)| (*h, *p))
            .collect();
        let mut joins = Vec::new();
        for (h, p) in outside {
            let mut q = p;
            for _ in 0..8 {
                q = self
                    .partner(across(q))
                    .ok_or_else(|| Error::Construction("fold leaves an unpaired edge".into()))?;
                if q.0 != f && q.0 != g {
                    joins.push((h, q));
                    break;
                }
            }
        }
        self.forget(&[f, g]);
        for (a, b) in joins {
            self.pair(a, b);
        }
        Ok(())
    }
}

impl OneVertexBoundary {
    /// Edge slopes as a Farey triple, checked against the boundary class.
    pub fn triple(&self) -> Result<FareyTriple> {
        let [a, b, c] = match self.edges.as_slice() {
            [a, b, c] => [a.slope, b.slope, c.slope],
            _ => return Err(Error::Construction("one-vertex boundary needs three edges".into())),
        };
        let tri = FareyTriple::new(a, b, c)?;
        if Some(tri) != self.class.triple() {
            return Err(Error::WrongBoundaryKind(self.class.name()));
        }
        Ok(tri)
    }

    /// The exposed torus with its edge slopes.
    pub fn torus(&self) -> Result<ExposedTorus> {
        let mut torus = ExposedTorus::from_template(&standard_cusp(), &self.faces, &self.maps);
        for l in &self.edges {
            let f =
                self.faces.iter().find(|f| f.tet == l.tet && f.face != l.a && f.face != l.b).ok_or_else(|| {
                    Error::Construction(format!("edge {}({}{}) is not on the boundary", l.tet, l.a, l.b))
                })?;
            torus.set_slope((*f, l.a, l.b), l.slope);
        }
        Ok(torus)
    }
}

/// Fills a one-vertex boundary with a layered solid torus whose meridian is
/// `s`; returns the number of tetrahedra added.
///
/// Each Farey step but the last layers one tetrahedron over the leaving
/// edge; the last step folds the two faces across its leaving edge, which
/// kills the entering slope `s`. A slope already on the boundary would
/// need a fold killing a boundary edge, which no fold does.
pub fn build_lst(t: &mut Triangulation, b: &OneVertexBoundary, s: Slope) -> Result<usize> {
    if s.is_infinite() {
        return Err(Error::InfiniteSlope);
    }
    let tri = b.triple()?;
    let path = farey_path(tri, s);
    if path.is_empty() {
        return Err(Error::SlopeInBoundaryTriple(s));
    }
    let mut torus = b.torus()?;
    let mut f = b.faces[0];
    let start = t.len();
    let (last, layers) = path.steps.split_last().expect("non-empty path");
    for &(leave, enter) in layers {
        let hinge = torus.edge_with_slope(f, leave)?;
        let n = torus.layer(t, hinge)?;
        f = FaceRef { tet: n, face: 1 };
        torus.set_slope((f, 2, 3), enter);
    }
    let hinge = torus.edge_with_slope(f, last.0)?;
    torus.fold(t, hinge)?;
    Ok(t.len() - start)
}

const A: usize = 0;
const B: usize = 1;
const C: usize = 2;
const D: usize = 3;

impl PermissibleBoundary {
    pub fn torus(&self) -> ExposedTorus {
        ExposedTorus::from_template(&permissible_cusp(), &self.faces, &self.maps)
    }

    fn edge(&self, face: usize, i: usize, j: usize) -> HalfEdge {
        (self.faces[face], self.maps[face][i - 1], self.maps[face][j - 1])
    }

    /// Number of layers, and whether to start over `C(2 3)` rather than
    /// `C(1 3)`, for the integer slope `s`.
    pub(crate) fn schedule(&self, s: Slope) -> Result<(usize, bool)> {
        let layers = chain_tet_count(self.class, s)? as usize;
        let m = s.p();
        let over_second = match self.class {
            BoundaryClass::Uhat => m < -4,
            _ => m < 0,
        };
        Ok((layers, over_second))
    }
}

/// Lays a column of `layers` tetrahedra on `C, D` and closes it with two
/// folds: `B` onto the face beyond `b`, then `A` onto the face beyond `a`.
pub(crate) fn build_chain_with(
    t: &mut Triangulation,
    b: &PermissibleBoundary,
    layers: usize,
    over_second: bool,
) -> Result<usize> {
    let start = t.len();
    let mut torus = b.torus();
    let edge_b = b.edge(B, 1, 2);
    let edge_a = b.edge(A, 1, 2);
    let mut top_d = b.faces[D];
    let mut hinge = if over_second { b.edge(C, 2, 3) } else { b.edge(C, 1, 3) };
    for _ in 0..layers {
        let n = torus.layer(t, hinge)?;
        let holds = |face: u8, h: HalfEdge| torus.partner(h).is_some_and(|p| p.0 == FaceRef { tet: n, face });
        let (nc, nd) = if holds(1, edge_b) { (1, 0) } else { (0, 1) };
        let top_c = FaceRef { tet: n, face: nc };
        top_d = FaceRef { tet: n, face: nd };
        if !holds(nd, edge_a) {
            return Err(Error::Construction("column lost edge a".into()));
        }
        // Keep layering over the older of the two shared edges.
        hinge = *torus
            .shared_edges(top_c, top_d, &[(2, 3)])
            .first()
            .ok_or_else(|| Error::Construction("column lost its shared edge".into()))?;
    }
    torus.fold(t, edge_b)?;
    let hinge = *torus
        .shared_edges(b.faces[A], top_d, &[(edge_a.1, edge_a.2)])
        .first()
        .ok_or_else(|| Error::Construction("no edge to close the chain across".into()))?;
    torus.fold(t, hinge)?;
    Ok(t.len() - start)
}

/// Fills a permissible boundary with the layered chain killing `s`.
pub fn build_chain(t: &mut Triangulation, b: &PermissibleBoundary, s: Slope) -> Result<usize> {
    let (layers, over_second) = b.schedule(s)?;
    build_chain_with(t, b, layers, over_second)
}
