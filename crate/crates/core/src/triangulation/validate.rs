use serde::{Deserialize, Serialize};

use super::{Perm4, Triangulation};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Violation {
    /// Gluing points at a tetrahedron that does not exist.
    TargetOutOfRange { tet: usize, face: u8 },
    /// The partner face does not glue back with the inverse permutation.
    InvolutionViolation { tet: usize, face: u8 },
    /// A face glued to itself by the identity.
    IdentitySelfGluing { tet: usize, face: u8 },
    /// Some edge is identified with itself in reverse.
    ReversedEdge,
}

/// Structural problems with `t`; empty when the gluings are consistent.
pub fn validate(t: &Triangulation) -> Vec<Violation> {
    let n = t.len();
    let mut out = Vec::new();
    for tet in 0..n {
        for face in 0..4u8 {
            let Some(g) = t.gluing(tet, face) else { continue };
            if g.tet >= n {
                out.push(Violation::TargetOutOfRange { tet, face });
                continue;
            }
            let back_face = g.perm.apply(face);
            if g.tet == tet && g.perm == Perm4::IDENTITY {
                out.push(Violation::IdentitySelfGluing { tet, face });
                continue;
            }
            match t.gluing(g.tet, back_face) {
                Some(b) if b.tet == tet && b.perm == g.perm.inverse() => {}
                _ => out.push(Violation::InvolutionViolation { tet, face }),
            }
        }
    }
    if out.is_empty() && t.edge_classes().reversed {
        out.push(Violation::ReversedEdge);
    }
    out
}
