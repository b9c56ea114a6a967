use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use super::{smith_invariants, validate, Triangulation, EDGE_VERTICES};
use crate::error::{Error, Result};

/// A finitely generated abelian group `Z^betti + sum Z/d_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HomologyGroup {
    pub betti: usize,
    /// Invariant factors greater than one, each dividing the next.
    pub torsion: Vec<BigInt>,
}

impl HomologyGroup {
    pub fn free(betti: usize) -> Self {
        HomologyGroup { betti, torsion: Vec::new() }
    }

    /// Cokernel of the integer matrix whose rows are relations on `generators` symbols.
    pub fn from_relations(generators: usize, relations: &[Vec<i64>]) -> Self {
        let inv = smith_invariants(relations);
        HomologyGroup { betti: generators - inv.len(), torsion: inv.into_iter().filter(|d| !d.is_one()).collect() }
    }
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.betti {
            0 => {}
            1 => parts.push("Z".to_string()),
            b => parts.push(format!("Z^{b}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

/// H1 of the manifold obtained by deleting the vertices, from the dual
/// 2-complex: one generator per face pair off a spanning tree of the dual
/// graph, one relation per edge class.
#[allow(clippy::needless_range_loop)]
pub fn first_homology(t: &Triangulation) -> Result<HomologyGroup> {
    let v = validate(t);
    if !v.is_empty() {
        return Err(Error::InvalidTriangulation(v));
    }
    let open = t.open_faces().len();
    if open > 0 {
        return Err(Error::OpenBoundary(open));
    }
    let n = t.len();
    if n == 0 {
        return Ok(HomologyGroup::free(0));
    }

    // Spanning forest of the dual graph.
    let mut in_tree = vec![[false; 4]; n];
    let mut seen = vec![false; n];
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(a) = queue.pop_front() {
            for f in 0..4u8 {
                let g = t.gluing(a, f).expect("closed");
                if !seen[g.tet] {
                    seen[g.tet] = true;
                    in_tree[a][f as usize] = true;
                    in_tree[g.tet][g.perm.apply(f) as usize] = true;
                    queue.push_back(g.tet);
                }
            }
        }
    }

    // Generators: non-tree face pairs, keyed by their lower side.
    let mut gens: BTreeMap<(usize, u8), usize> = BTreeMap::new();
    for a in 0..n {
        for f in 0..4u8 {
            let g = t.gluing(a, f).expect("closed");
            let other = (g.tet, g.perm.apply(f));
            if !in_tree[a][f as usize] && (a, f) <= other {
                let next = gens.len();
                gens.insert((a, f), next);
            }
        }
    }
    // Each crossing contributes +1 leaving from the lower side, -1 otherwise.
    let crossing = |a: usize, f: u8| -> Option<(usize, i64)> {
        if in_tree[a][f as usize] {
            return None;
        }
        let g = t.gluing(a, f).expect("closed");
        let other = (g.tet, g.perm.apply(f));
        if (a, f) <= other {
            Some((gens[&(a, f)], 1))
        } else {
            Some((gens[&other], -1))
        }
    };

    let edges = t.edge_classes();
    let mut done = vec![false; edges.count];
    let mut relations = Vec::new();
    for tet in 0..n {
        for &(a, b) in EDGE_VERTICES.iter() {
            let class = edges.class(tet, a, b);
            if done[class] {
                continue;
            }
            done[class] = true;
            let mut row = vec![0i64; gens.len()];
            let [c, d] = other_two(a, b);
            let start = (tet, a, b, c, d);
            let mut state = start;
            loop {
                let (s, a, b, c, d) = state;
                let g = t.gluing(s, c).expect("closed");
                if let Some((i, sign)) = crossing(s, c) {
                    row[i] += sign;
                }
                let p = g.perm;
                state = (g.tet, p.apply(a), p.apply(b), p.apply(d), p.apply(c));
                if state == start {
                    break;
                }
            }
            relations.push(row);
        }
    }
    Ok(HomologyGroup::from_relations(gens.len(), &relations))
}

pub(crate) fn other_two(a: u8, b: u8) -> [u8; 2] {
    let mut it = (0..4u8).filter(|&x| x != a && x != b);
    [it.next().unwrap(), it.next().unwrap()]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::triangulation::Perm4;

    #[test]
    fn figure_eight() {
        let mut t = Triangulation::with_tets(2);
        let p = |a: [u8; 4]| Perm4::new(a).unwrap();
        t.glue(0, 0, 1, p([1, 3, 0, 2]));
        t.glue(0, 1, 1, p([2, 0, 3, 1]));
        t.glue(0, 2, 1, p([0, 3, 2, 1]));
        t.glue(0, 3, 1, p([2, 1, 0, 3]));
        assert_eq!(first_homology(&t).unwrap(), HomologyGroup::free(1));
    }

    #[test]
    fn display() {
        assert_eq!(HomologyGroup::free(3).to_string(), "Z^3");
        assert_eq!(HomologyGroup::free(0).to_string(), "0");
        let g = HomologyGroup::from_relations(2, &[vec![5, 0]]);
        assert_eq!(g.to_string(), "Z + Z/5");
    }

    #[test]
    fn open_rejected() {
        assert_eq!(first_homology(&Triangulation::with_tets(1)), Err(Error::OpenBoundary(4)));
    }
}
