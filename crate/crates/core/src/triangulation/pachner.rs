use super::homology::other_two;
use super::{validate, Perm4, Triangulation, EDGE_VERTICES};
use crate::error::{Error, Result};

/// `(tet, a, b, c, d)`: edge `ab` of `tet`, with the walk leaving through face `c`.
type Embedding = (usize, u8, u8, u8, u8);

/// Walk around edge class `edge`: the `(tet, a, b, c, d)` embeddings in
/// cyclic order, where `ab` is the edge and the walk leaves through face `c`.
/// `None` if the walk runs into a boundary face.
fn edge_walk(t: &Triangulation, edge: usize) -> Result<Option<Vec<Embedding>>> {
    let classes = t.edge_classes();
    if edge >= classes.count {
        return Err(Error::NoSuchEdge(edge));
    }
    let first = classes.class_of.iter().position(|&c| c == edge).unwrap();
    let (tet, (a, b)) = (first / 6, EDGE_VERTICES[first % 6]);
    let [c, d] = other_two(a, b);
    let start = (tet, a, b, c, d);
    let mut out = vec![start];
    let mut state = start;
    loop {
        let (s, a, b, c, d) = state;
        let Some(g) = t.gluing(s, c) else { return Ok(None) };
        let p = g.perm;
        state = (g.tet, p.apply(a), p.apply(b), p.apply(d), p.apply(c));
        if state == start {
            return Ok(Some(out));
        }
        out.push(state);
    }
}

/// Replaces the three tetrahedra around a degree-three edge by two
/// tetrahedra sharing a triangle.
///
/// The old tetrahedra are removed, the rest keep their order, and the two
/// new ones are appended: `(N, Q0, Q1, Q2)` then `(S, Q0, Q1, Q2)`, where
/// `N`, `S` are the ends of the edge and `Qi` the equatorial vertices.
pub fn pachner_32(t: &Triangulation, edge: usize) -> Result<Triangulation> {
    let v = validate(t);
    if !v.is_empty() {
        return Err(Error::InvalidTriangulation(v));
    }
    let degree = t.edge_classes().degree(edge);
    let walk = match edge_walk(t, edge)? {
        Some(w) if w.len() == 3 => w,
        _ => return Err(Error::EdgeNotDegreeThree { edge, degree }),
    };
    let olds: Vec<usize> = walk.iter().map(|w| w.0).collect();
    if olds[0] == olds[1] || olds[1] == olds[2] || olds[0] == olds[2] {
        return Err(Error::SharedTetrahedron(edge));
    }

    // Tetrahedron i is (N, S, Q_{i-1}, Q_i) = (a_i, b_i, c_i, d_i).
    // phi[i][0]: old labels -> labels in the N tetrahedron; phi[i][1]: in the S one.
    let phi: Vec<[Perm4; 2]> = walk
        .iter()
        .enumerate()
        .map(|(i, &(_, a, b, c, d))| {
            let q = |k: usize| (1 + k % 3) as u8;
            let mut north = [0u8; 4];
            north[a as usize] = 0;
            north[b as usize] = q(i + 1);
            north[c as usize] = q(i + 2);
            north[d as usize] = q(i);
            let mut south = north;
            south[b as usize] = 0;
            south[a as usize] = q(i + 1);
            [Perm4::new(north).unwrap(), Perm4::new(south).unwrap()]
        })
        .collect();

    let mut out = t.remove_tets(&olds);
    let remap = |x: usize| x - olds.iter().filter(|&&o| o < x).count();
    let north = out.add_tet();
    let south = out.add_tet();
    let new_tet = [north, south];

    for (i, &(old, a, b, _, _)) in walk.iter().enumerate() {
        // Face opposite b lands in the N tetrahedron, face opposite a in the S one.
        for (side, f) in [(0usize, b), (1usize, a)] {
            let g = t.gluing(old, f).expect("edge interior");
            let src = phi[i][side];
            let nf = src.apply(f);
            if let Some(j) = olds.iter().position(|&o| o == g.tet) {
                let (_, aj, bj, _, _) = walk[j];
                let back = g.perm.apply(f);
                let jside = if back == bj {
                    0
                } else if back == aj {
                    1
                } else {
                    unreachable!()
                };
                let perm = phi[j][jside].compose(&g.perm).compose(&src.inverse());
                out.glue(new_tet[side], nf, new_tet[jside], perm);
            } else {
                let perm = g.perm.compose(&src.inverse());
                out.glue(new_tet[side], nf, remap(g.tet), perm);
            }
        }
    }
    out.glue(north, 0, south, Perm4::IDENTITY);
    Ok(out)
}
