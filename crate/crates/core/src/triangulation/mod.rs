//! Generalised triangulations: tetrahedra with face gluings, plus the
//! combinatorial invariants needed to check constructions.

mod homology;
mod io;
mod isosig;
mod links;
mod pachner;
mod perm;
mod snf;
mod validate;

use serde::{Deserialize, Serialize};

pub use homology::{first_homology, HomologyGroup};
pub use io::{export_gluing_table, export_json, import_gluing_table, import_json};
pub use isosig::iso_signature;
pub use links::{orientable, orientation, vertex_links, VertexLink};
pub use pachner::pachner_32;
pub use perm::Perm4;
pub use snf::smith_invariants;
pub use validate::{validate, Violation};

/// Vertex pairs of the six edges of a tetrahedron, in the usual order.
pub const EDGE_VERTICES: [(u8, u8); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// Index into [`EDGE_VERTICES`] of the edge joining `a` and `b`.
pub fn edge_index(a: u8, b: u8) -> usize {
    let (a, b) = if a < b { (a, b) } else { (b, a) };
    EDGE_VERTICES.iter().position(|&e| e == (a, b)).expect("distinct vertices")
}

/// Face `face` of some tetrahedron glued to face `perm(face)` of `tet`,
/// vertex `v` going to vertex `perm(v)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FaceGluing {
    pub tet: usize,
    pub perm: Perm4,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tetrahedron {
    /// Indexed by face number (face `i` omits vertex `i`); `None` is boundary.
    pub faces: [Option<FaceGluing>; 4],
    pub label: Option<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Triangulation {
    tets: Vec<Tetrahedron>,
}

/// A tetrahedron face, named by tetrahedron and omitted vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FaceRef {
    pub tet: usize,
    pub face: u8,
}

impl Triangulation {
    pub fn new() -> Self {
        Triangulation::default()
    }

    pub fn with_tets(n: usize) -> Self {
        Triangulation { tets: vec![Tetrahedron::default(); n] }
    }

    pub fn len(&self) -> usize {
        self.tets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tets.is_empty()
    }

    pub fn tetrahedra(&self) -> &[Tetrahedron] {
        &self.tets
    }

    pub fn add_tet(&mut self) -> usize {
        self.tets.push(Tetrahedron::default());
        self.tets.len() - 1
    }

    pub fn add_labelled(&mut self, label: impl Into<String>) -> usize {
        let t = self.add_tet();
        self.tets[t].label = Some(label.into());
        t
    }

    pub fn label(&self, t: usize) -> Option<&str> {
        self.tets[t].label.as_deref()
    }

    pub fn set_label(&mut self, t: usize, label: Option<String>) {
        self.tets[t].label = label;
    }

    pub fn gluing(&self, t: usize, face: u8) -> Option<FaceGluing> {
        self.tets[t].faces[face as usize]
    }

    /// Raw one-sided assignment; used by parsers and negative tests.
    pub fn set_gluing(&mut self, t: usize, face: u8, g: Option<FaceGluing>) {
        self.tets[t].faces[face as usize] = g;
    }

    /// Glues face `face` of `t` to tetrahedron `target` via `perm`, on both sides.
    pub fn glue(&mut self, t: usize, face: u8, target: usize, perm: Perm4) {
        let back = perm.apply(face);
        self.tets[t].faces[face as usize] = Some(FaceGluing { tet: target, perm });
        self.tets[target].faces[back as usize] = Some(FaceGluing { tet: t, perm: perm.inverse() });
    }

    /// Glues the face `from` of `t` (three vertices) onto `to` of `target`.
    pub fn glue_faces(&mut self, t: usize, from: [u8; 3], target: usize, to: [u8; 3]) {
        let perm = Perm4::extend(from, to).expect("face vertex lists");
        let face = (0..4u8).find(|x| !from.contains(x)).unwrap();
        self.glue(t, face, target, perm);
    }

    pub fn unglue(&mut self, t: usize, face: u8) {
        if let Some(g) = self.tets[t].faces[face as usize].take() {
            self.tets[g.tet].faces[g.perm.apply(face) as usize] = None;
        }
    }

    pub fn open_faces(&self) -> Vec<FaceRef> {
        let mut out = Vec::new();
        for (t, tet) in self.tets.iter().enumerate() {
            for f in 0..4u8 {
                if tet.faces[f as usize].is_none() {
                    out.push(FaceRef { tet: t, face: f });
                }
            }
        }
        out
    }

    pub fn is_closed(&self) -> bool {
        self.open_faces().is_empty()
    }

    /// Appends a copy of `other`, returning the index offset of its tetrahedra.
    pub fn append(&mut self, other: &Triangulation) -> usize {
        let off = self.tets.len();
        for tet in &other.tets {
            let mut t = tet.clone();
            for g in t.faces.iter_mut().flatten() {
                g.tet += off;
            }
            self.tets.push(t);
        }
        off
    }

    /// Renumbers tetrahedron `t` as `tet_map[t]` and its vertex `v` as
    /// `vert_maps[t](v)`.
    pub fn relabel(&self, tet_map: &[usize], vert_maps: &[Perm4]) -> Triangulation {
        let n = self.tets.len();
        let mut out = Triangulation::with_tets(n);
        for t in 0..n {
            let nt = tet_map[t];
            out.tets[nt].label = self.tets[t].label.clone();
            for f in 0..4u8 {
                if let Some(g) = self.gluing(t, f) {
                    let perm = vert_maps[g.tet].compose(&g.perm).compose(&vert_maps[t].inverse());
                    out.tets[nt].faces[vert_maps[t].apply(f) as usize] = Some(FaceGluing { tet: tet_map[g.tet], perm });
                }
            }
        }
        out
    }

    /// Copy with the given tetrahedra deleted (their gluings become boundary)
    /// and the rest renumbered in order.
    pub fn remove_tets(&self, remove: &[usize]) -> Triangulation {
        let mut map = vec![usize::MAX; self.tets.len()];
        let mut out = Triangulation::new();
        for (t, tet) in self.tets.iter().enumerate() {
            if !remove.contains(&t) {
                map[t] = out.tets.len();
                out.tets.push(tet.clone());
            }
        }
        for tet in &mut out.tets {
            for slot in tet.faces.iter_mut() {
                if let Some(g) = slot {
                    if map[g.tet] == usize::MAX {
                        *slot = None;
                    } else {
                        g.tet = map[g.tet];
                    }
                }
            }
        }
        out
    }

    /// Edge classes with orientation; see [`EdgeClasses`].
    pub fn edge_classes(&self) -> EdgeClasses {
        let n = self.tets.len();
        let mut uf = ParityUnionFind::new(6 * n);
        let mut reversed = false;
        for t in 0..n {
            for f in 0..4u8 {
                let Some(g) = self.gluing(t, f) else { continue };
                for &(a, b) in EDGE_VERTICES.iter() {
                    if a == f || b == f {
                        continue;
                    }
                    let (ia, ib) = (g.perm.apply(a), g.perm.apply(b));
                    let flip = ia > ib;
                    if !uf.union(6 * t + edge_index(a, b), 6 * g.tet + edge_index(ia, ib), flip) {
                        reversed = true;
                    }
                }
            }
        }
        let (class_of, flips, count) = uf.classes();
        EdgeClasses { class_of, flips, count, reversed }
    }

    /// Vertex class of each `(tet, vertex)`, numbered by first appearance.
    pub fn vertex_classes(&self) -> (Vec<usize>, usize) {
        let n = self.tets.len();
        let mut uf = ParityUnionFind::new(4 * n);
        for t in 0..n {
            for f in 0..4u8 {
                let Some(g) = self.gluing(t, f) else { continue };
                for v in (0..4u8).filter(|&v| v != f) {
                    uf.union(4 * t + v as usize, 4 * g.tet + g.perm.apply(v) as usize, false);
                }
            }
        }
        let (class_of, _, count) = uf.classes();
        (class_of, count)
    }
}

/// Edge classes of a triangulation.
///
/// Member `(t, e)` is `6t + e`; `flips[m]` says whether its lower-to-higher
/// vertex direction disagrees with the class's reference direction.
#[derive(Debug, Clone)]
pub struct EdgeClasses {
    pub class_of: Vec<usize>,
    pub flips: Vec<bool>,
    pub count: usize,
    /// Some edge is identified with itself in reverse.
    pub reversed: bool,
}

impl EdgeClasses {
    pub fn class(&self, t: usize, a: u8, b: u8) -> usize {
        self.class_of[6 * t + edge_index(a, b)]
    }

    /// Class of edge `a -> b` of `t`, and whether that direction opposes the
    /// class's reference direction.
    pub fn oriented(&self, t: usize, a: u8, b: u8) -> (usize, bool) {
        let m = 6 * t + edge_index(a, b);
        (self.class_of[m], self.flips[m] ^ (a > b))
    }

    pub fn degree(&self, class: usize) -> usize {
        self.class_of.iter().filter(|&&c| c == class).count()
    }
}

/// Union-find over `0..n` tracking a parity bit relative to each root.
#[derive(Debug, Clone)]
pub(crate) struct ParityUnionFind {
    parent: Vec<usize>,
    parity: Vec<bool>,
}

impl ParityUnionFind {
    pub(crate) fn new(n: usize) -> Self {
        ParityUnionFind { parent: (0..n).collect(), parity: vec![false; n] }
    }

    pub(crate) fn find(&mut self, x: usize) -> (usize, bool) {
        let mut path = Vec::new();
        let mut cur = x;
        while self.parent[cur] != cur {
            path.push(cur);
            cur = self.parent[cur];
        }
        let root = cur;
        // Compress from the top down so each parity is relative to the root.
        let mut acc = false;
        for &node in path.iter().rev() {
            acc ^= self.parity[node];
            self.parity[node] = acc;
            self.parent[node] = root;
        }
        (root, if path.is_empty() { false } else { self.parity[x] })
    }

    /// Records `parity(a) ^ parity(b) = rel`; false if that contradicts earlier unions.
    pub(crate) fn union(&mut self, a: usize, b: usize, rel: bool) -> bool {
        let (ra, pa) = self.find(a);
        let (rb, pb) = self.find(b);
        if ra == rb {
            return pa ^ pb == rel;
        }
        self.parent[rb] = ra;
        self.parity[rb] = pa ^ pb ^ rel;
        true
    }

    /// Class index per element (by first appearance), parity per element, class count.
    pub(crate) fn classes(&mut self) -> (Vec<usize>, Vec<bool>, usize) {
        let n = self.parent.len();
        let mut root_class = vec![usize::MAX; n];
        let mut class_of = vec![0; n];
        let mut flips = vec![false; n];
        let mut count = 0;
        for x in 0..n {
            let (r, p) = self.find(x);
            if root_class[r] == usize::MAX {
                root_class[r] = count;
                count += 1;
            }
            class_of[x] = root_class[r];
            flips[x] = p;
        }
        // Re-anchor parities on each class's first member.
        let mut anchor = vec![None; count];
        for x in 0..n {
            let c = class_of[x];
            let a = *anchor[c].get_or_insert(flips[x]);
            flips[x] ^= a;
        }
        (class_of, flips, count)
    }
}
