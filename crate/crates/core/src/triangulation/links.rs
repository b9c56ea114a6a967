use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::{validate, Triangulation, EDGE_VERTICES};
use crate::error::{Error, Result};

/// Link of one ideal vertex class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexLink {
    pub euler_characteristic: i64,
    pub orientable: bool,
    pub num_triangles: usize,
}

impl VertexLink {
    pub fn is_torus(&self) -> bool {
        self.euler_characteristic == 0 && self.orientable
    }
}

fn check_valid(t: &Triangulation) -> Result<()> {
    let v = validate(t);
    if v.is_empty() {
        Ok(())
    } else {
        Err(Error::InvalidTriangulation(v))
    }
}

/// A consistent choice of ±1 per tetrahedron, if one exists.
pub fn orientation(t: &Triangulation) -> Result<Option<Vec<i32>>> {
    check_valid(t)?;
    let n = t.len();
    let mut o = vec![0i32; n];
    for root in 0..n {
        if o[root] != 0 {
            continue;
        }
        o[root] = 1;
        let mut queue = VecDeque::from([root]);
        while let Some(a) = queue.pop_front() {
            for f in 0..4u8 {
                let Some(g) = t.gluing(a, f) else { continue };
                let want = -g.perm.sign() * o[a];
                if o[g.tet] == 0 {
                    o[g.tet] = want;
                    queue.push_back(g.tet);
                } else if o[g.tet] != want {
                    return Ok(None);
                }
            }
        }
    }
    Ok(Some(o))
}

pub fn orientable(t: &Triangulation) -> Result<bool> {
    Ok(orientation(t)?.is_some())
}

/// One link per vertex class, numbered as in [`Triangulation::vertex_classes`].
pub fn vertex_links(t: &Triangulation) -> Result<Vec<VertexLink>> {
    check_valid(t)?;
    let open = t.open_faces().len();
    if open > 0 {
        return Err(Error::OpenBoundary(open));
    }
    let n = t.len();
    let (vclass, nv) = t.vertex_classes();
    let edges = t.edge_classes();

    let mut triangles = vec![0usize; nv];
    for c in &vclass {
        triangles[*c] += 1;
    }

    // Link vertices are edge ends: (edge class, which end), tagged by vertex class.
    let mut ends = std::collections::BTreeSet::new();
    for tet in 0..n {
        for &(a, b) in EDGE_VERTICES.iter() {
            let (class, flipped) = edges.oriented(tet, a, b);
            ends.insert((class, flipped, vclass[4 * tet + a as usize]));
            ends.insert((class, !flipped, vclass[4 * tet + b as usize]));
        }
    }
    let mut link_vertices = vec![0i64; nv];
    for &(_, _, v) in &ends {
        link_vertices[v] += 1;
    }

    // Orient link triangles: corner (tet, v) -> index 4*tet+v.
    let mut o = vec![0i32; 4 * n];
    let mut orientable = vec![true; nv];
    for root in 0..4 * n {
        if o[root] != 0 {
            continue;
        }
        o[root] = 1;
        let mut queue = VecDeque::from([root]);
        while let Some(c) = queue.pop_front() {
            let (tet, v) = (c / 4, (c % 4) as u8);
            for f in (0..4u8).filter(|&f| f != v) {
                let g = t.gluing(tet, f).expect("closed");
                let d = 4 * g.tet + g.perm.apply(v) as usize;
                let want = -g.perm.restricted_sign(v) * o[c];
                if o[d] == 0 {
                    o[d] = want;
                    queue.push_back(d);
                } else if o[d] != want {
                    orientable[vclass[c]] = false;
                }
            }
        }
    }

    Ok((0..nv)
        .map(|v| {
            let f = triangles[v] as i64;
            VertexLink {
                euler_characteristic: link_vertices[v] - 3 * f / 2 + f,
                orientable: orientable[v],
                num_triangles: triangles[v],
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::triangulation::Perm4;

    /// Two-tetrahedron figure-eight knot complement.
    pub(crate) fn figure_eight() -> Triangulation {
        let mut t = Triangulation::with_tets(2);
        let p = |a: [u8; 4]| Perm4::new(a).unwrap();
        t.glue(0, 0, 1, p([1, 3, 0, 2]));
        t.glue(0, 1, 1, p([2, 0, 3, 1]));
        t.glue(0, 2, 1, p([0, 3, 2, 1]));
        t.glue(0, 3, 1, p([2, 1, 0, 3]));
        t
    }

    #[test]
    fn figure_eight_has_one_torus_cusp() {
        let t = figure_eight();
        assert!(validate(&t).is_empty());
        assert!(orientable(&t).unwrap());
        let links = vertex_links(&t).unwrap();
        assert_eq!(links.len(), 1);
        assert!(links[0].is_torus());
        assert_eq!(links[0].num_triangles, 8);
    }

    #[test]
    fn parity_flip_breaks_orientability() {
        let mut t = Triangulation::with_tets(2);
        t.glue(0, 2, 1, Perm4::new([0, 3, 2, 1]).unwrap());
        assert!(orientable(&t).unwrap());
        t.glue(0, 3, 1, Perm4::IDENTITY);
        assert!(!orientable(&t).unwrap());
    }

    #[test]
    fn open_boundary_is_reported() {
        let t = Triangulation::with_tets(1);
        assert_eq!(vertex_links(&t), Err(Error::OpenBoundary(4)));
    }
}
