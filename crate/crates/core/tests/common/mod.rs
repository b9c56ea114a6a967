//! Oracles computed without the library's own algorithms for the thing
//! being tested.
#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap, VecDeque};

use magic_fill::farey::{slope, Slope};
use magic_fill::triangulation::{first_homology, FaceGluing, HomologyGroup, Triangulation};
use num_integer::Integer;

/// `(betti, torsion)` of the knot-or-not `M(a, b)`, read off the linking
/// matrix of the chain link: `Z^3 / <(s, r, s), (u, u, t)>` for `a = r/s`,
/// `b = t/u`, via gcds of entries and of 2x2 minors.
pub fn linking_h1(a: Slope, b: Slope) -> (usize, Vec<i64>) {
    let (r, s) = a.vector();
    let (t, u) = b.vector();
    let rows = [[s, r, s], [u, u, t]];
    let d1 = rows.iter().flatten().fold(0i64, |g, &x| g.gcd(&x));
    let minors = [(0, 1), (0, 2), (1, 2)].map(|(i, j)| rows[0][i] * rows[1][j] - rows[0][j] * rows[1][i]);
    let d12 = minors.iter().fold(0i64, |g, &x| g.gcd(&x));
    let (betti, factors) = if d12 != 0 { (1, vec![d1, d12 / d1]) } else { (2, vec![d1]) };
    (betti, factors.into_iter().filter(|&d| d > 1).collect())
}

pub fn parts(h: &HomologyGroup) -> (usize, Vec<i64>) {
    (h.betti, h.torsion.iter().map(|d| d.to_string().parse().unwrap()).collect())
}

/// Triangles of the Farey tessellation reachable from `start` by flips,
/// restricted to vertices with entries at most `bound`, with their flip
/// distance from `start`.
pub fn farey_distances(start: [Slope; 3], bound: i64) -> HashMap<[Slope; 3], usize> {
    let key = |mut t: [Slope; 3]| {
        t.sort_by_key(|s| s.vector());
        t
    };
    let mut dist = HashMap::new();
    let mut queue = VecDeque::new();
    dist.insert(key(start), 0);
    queue.push_back(key(start));
    while let Some(tri) = queue.pop_front() {
        let d = dist[&tri];
        for i in 0..3 {
            let (b, c) = (tri[(i + 1) % 3].vector(), tri[(i + 2) % 3].vector());
            let a = tri[i];
            for v in [(b.0 + c.0, b.1 + c.1), (b.0 - c.0, b.1 - c.1)] {
                let Ok(x) = Slope::new(v.0, v.1) else { continue };
                if x == a || x.p().abs() > bound || x.q().abs() > bound {
                    continue;
                }
                let mut next = tri;
                next[i] = x;
                let next = key(next);
                if let std::collections::hash_map::Entry::Vacant(e) = dist.entry(next) {
                    e.insert(d + 1);
                    queue.push_back(next);
                }
            }
        }
    }
    dist
}

/// Fewest flips from `start` to a triangle having `s` as a vertex.
pub fn flips_to(dist: &HashMap<[Slope; 3], usize>, s: Slope) -> Option<usize> {
    dist.iter().filter(|(t, _)| t.contains(&s)).map(|(_, &d)| d).min()
}

pub fn reduced_slopes(bound: i64) -> Vec<Slope> {
    let mut out = Vec::new();
    for q in 1..=bound {
        for p in -bound..=bound {
            if p.gcd(&q) == 1 {
                out.push(slope(p, q));
            }
        }
    }
    out
}

/// Embeddings `(tet, a, b, c)` around each edge class, the walk leaving
/// through face `c`.
fn edge_cycles(t: &Triangulation) -> Vec<Vec<(usize, u8, u8, u8)>> {
    let mut seen = vec![false; 6 * t.len()];
    let pairs = [(0u8, 1u8), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    let idx = |a: u8, b: u8| pairs.iter().position(|&e| e == (a.min(b), a.max(b))).unwrap();
    let mut out = Vec::new();
    for tet in 0..t.len() {
        for &(a, b) in &pairs {
            if seen[6 * tet + idx(a, b)] {
                continue;
            }
            let [c, d] = {
                let mut o = (0..4u8).filter(|&v| v != a && v != b);
                [o.next().unwrap(), o.next().unwrap()]
            };
            let start = (tet, a, b, c, d);
            let mut state = start;
            let mut cycle = Vec::new();
            loop {
                let (s, a, b, c, d) = state;
                seen[6 * s + idx(a, b)] = true;
                cycle.push((s, a, b, c));
                let g = t.gluing(s, c).expect("closed up");
                state = (g.tet, g.perm.apply(a), g.perm.apply(b), g.perm.apply(d), g.perm.apply(c));
                if state == start {
                    break;
                }
            }
            out.push(cycle);
        }
    }
    out
}

/// First homology of the `p`-fold cyclic cover, when `H^1(M; Z/p)` is
/// one-dimensional so the cover is unique.
#[allow(clippy::needless_range_loop)]
pub fn cyclic_cover_h1(t: &Triangulation, p: i64) -> Option<HomologyGroup> {
    let n = t.len();
    let mut var = BTreeMap::new();
    for tet in 0..n {
        for f in 0..4u8 {
            let g = t.gluing(tet, f)?;
            if (tet, f) < (g.tet, g.perm.apply(f)) {
                let k = var.len();
                var.insert((tet, f), k);
            }
        }
    }
    let signed = |tet: usize, f: u8| match var.get(&(tet, f)) {
        Some(&k) => (k, 1),
        None => {
            let g = t.gluing(tet, f).unwrap();
            (var[&(g.tet, g.perm.apply(f))], -1)
        }
    };
    let m = var.len();
    let mut rows: Vec<Vec<i64>> = Vec::new();
    // Gauge: zero on a spanning tree of the dual graph.
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut stack = vec![0usize];
    while let Some(x) = stack.pop() {
        for f in 0..4u8 {
            let g = t.gluing(x, f).unwrap();
            if !seen[g.tet] {
                seen[g.tet] = true;
                stack.push(g.tet);
                let mut r = vec![0; m];
                r[signed(x, f).0] = 1;
                rows.push(r);
            }
        }
    }
    for cycle in edge_cycles(t) {
        let mut r = vec![0i64; m];
        for (tet, _, _, c) in cycle {
            let (k, s) = signed(tet, c);
            r[k] = (r[k] + s).rem_euclid(p);
        }
        rows.push(r);
    }
    let inv = |a: i64| (1..p).find(|&x| (a * x).rem_euclid(p) == 1).unwrap();
    let mut pivots = Vec::new();
    let mut r0 = 0;
    for col in 0..m {
        let Some(pr) = (r0..rows.len()).find(|&i| rows[i][col].rem_euclid(p) != 0) else { continue };
        rows.swap(r0, pr);
        let iv = inv(rows[r0][col].rem_euclid(p));
        rows[r0].iter_mut().for_each(|x| *x = (*x * iv).rem_euclid(p));
        for i in 0..rows.len() {
            if i != r0 && rows[i][col] != 0 {
                let f = rows[i][col];
                for j in 0..m {
                    rows[i][j] = (rows[i][j] - f * rows[r0][j]).rem_euclid(p);
                }
            }
        }
        pivots.push(col);
        r0 += 1;
    }
    let free: Vec<usize> = (0..m).filter(|c| !pivots.contains(c)).collect();
    if free.len() != 1 {
        return None;
    }
    let mut x = vec![0i64; m];
    x[free[0]] = 1;
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = (-rows[i][free[0]]).rem_euclid(p);
    }
    let pu = p as usize;
    let mut cover = Triangulation::with_tets(n * pu);
    for tet in 0..n {
        for f in 0..4u8 {
            let g = t.gluing(tet, f).unwrap();
            let (k, s) = signed(tet, f);
            let shift = (s * x[k]).rem_euclid(p) as usize;
            for sheet in 0..pu {
                let target = g.tet * pu + (sheet + shift) % pu;
                cover.set_gluing(tet * pu + sheet, f, Some(FaceGluing { tet: target, perm: g.perm }));
            }
        }
    }
    first_homology(&cover).ok()
}

/// Homology of the 2-, 3- and 5-fold cyclic covers: enough to tell apart
/// most knots with the same first homology, and sensitive to mirroring
/// of the gluing conventions.
pub fn cover_signature(t: &Triangulation) -> Vec<Option<String>> {
    [2, 3, 5].iter().map(|&p| cyclic_cover_h1(t, p).map(|h| h.to_string())).collect()
}
