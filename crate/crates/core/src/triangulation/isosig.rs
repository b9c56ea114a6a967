use super::{validate, Perm4, Triangulation};
use crate::error::{Error, Result};

const BOUNDARY: u32 = u32::MAX;
const DIGITS: &[u8; 64] = b"ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+-";

/// Canonical code of the component containing `start`, beginning there with
/// vertex relabelling `perm`. Codes list, for each new tetrahedron and new
/// face in order, the new target index and the index of the new gluing perm.
fn code_from(t: &Triangulation, start: usize, perm: Perm4) -> (Vec<u32>, Vec<usize>) {
    let n = t.len();
    let mut new_index = vec![usize::MAX; n];
    let mut maps: Vec<Perm4> = vec![Perm4::IDENTITY; n];
    let mut order = vec![start];
    new_index[start] = 0;
    maps[start] = perm;
    let mut code = Vec::new();
    let mut k = 0;
    while k < order.len() {
        let old = order[k];
        let map = maps[old];
        let inv = map.inverse();
        for nf in 0..4u8 {
            let f = inv.apply(nf);
            match t.gluing(old, f) {
                None => {
                    code.push(BOUNDARY);
                    code.push(0);
                }
                Some(g) => {
                    if new_index[g.tet] == usize::MAX {
                        new_index[g.tet] = order.len();
                        order.push(g.tet);
                        // Chosen so the new gluing permutation is the identity.
                        maps[g.tet] = map.compose(&g.perm.inverse());
                    }
                    let np = maps[g.tet].compose(&g.perm).compose(&inv);
                    code.push(new_index[g.tet] as u32);
                    code.push(np.index() as u32);
                }
            }
        }
        k += 1;
    }
    (code, order)
}

fn encode(code: &[u32], n: usize) -> String {
    let width = {
        let mut w = 1;
        while 64usize.pow(w as u32) <= n {
            w += 1;
        }
        w
    };
    let digit = |mut v: usize, w: usize, out: &mut String| {
        let mut buf = vec![0u8; w];
        for slot in buf.iter_mut().rev() {
            *slot = DIGITS[v % 64];
            v /= 64;
        }
        out.push_str(std::str::from_utf8(&buf).unwrap());
    };
    let mut out = String::new();
    digit(n, width, &mut out);
    for pair in code.chunks(2) {
        if pair[0] == BOUNDARY {
            out.push('.');
        } else {
            digit(pair[0] as usize, width, &mut out);
            out.push(DIGITS[pair[1] as usize] as char);
        }
    }
    out
}

/// String equal for two triangulations exactly when they differ by a
/// renumbering of tetrahedra and of vertices within tetrahedra.
pub fn iso_signature(t: &Triangulation) -> Result<String> {
    let v = validate(t);
    if !v.is_empty() {
        return Err(Error::InvalidTriangulation(v));
    }
    if t.is_empty() {
        return Ok("empty".to_string());
    }
    let n = t.len();
    let mut covered = vec![false; n];
    let mut components = Vec::new();
    for root in 0..n {
        if covered[root] {
            continue;
        }
        let (_, members) = code_from(t, root, Perm4::IDENTITY);
        for &m in &members {
            covered[m] = true;
        }
        let mut best: Option<Vec<u32>> = None;
        for &s in &members {
            for p in Perm4::all() {
                let (code, _) = code_from(t, s, p);
                if best.as_ref().is_none_or(|b| code < *b) {
                    best = Some(code);
                }
            }
        }
        components.push(encode(&best.unwrap(), members.len()));
    }
    components.sort();
    Ok(components.join("_"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};

    fn sample() -> Triangulation {
        let mut t = Triangulation::with_tets(3);
        let p = |a: [u8; 4]| Perm4::new(a).unwrap();
        t.glue(0, 0, 1, p([1, 3, 0, 2]));
        t.glue(0, 1, 1, p([2, 0, 3, 1]));
        t.glue(0, 2, 2, p([0, 3, 2, 1]));
        t.glue(1, 3, 2, p([2, 1, 0, 3]));
        t
    }

    #[test]
    fn empty_sentinel() {
        assert_eq!(iso_signature(&Triangulation::new()).unwrap(), "empty");
    }

    #[test]
    fn invariant_under_relabelling() {
        let t = sample();
        let sig = iso_signature(&t).unwrap();
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        let perms: Vec<Perm4> = Perm4::all().collect();
        for _ in 0..50 {
            let mut order: Vec<usize> = (0..t.len()).collect();
            order.shuffle(&mut rng);
            let verts: Vec<Perm4> = (0..t.len()).map(|_| perms[rng.gen_range(0..24)]).collect();
            assert_eq!(iso_signature(&t.relabel(&order, &verts)).unwrap(), sig);
        }
    }

    #[test]
    fn distinguishes_gluings() {
        let a = sample();
        let mut b = sample();
        b.unglue(1, 3);
        assert_ne!(iso_signature(&a).unwrap(), iso_signature(&b).unwrap());
    }

    #[test]
    fn disconnected_components_sorted() {
        let mut a = sample();
        a.append(&Triangulation::with_tets(1));
        let mut b = Triangulation::with_tets(1);
        b.append(&sample());
        assert_eq!(iso_signature(&a).unwrap(), iso_signature(&b).unwrap());
    }
}
