use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Nonzero invariant factors `d1 | d2 | ...` of an integer matrix (rows of
/// equal length), all positive.
#[allow(clippy::needless_range_loop)]
pub fn smith_invariants(rows: &[Vec<i64>]) -> Vec<BigInt> {
    let mut m: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let nr = m.len();
    let nc = m.first().map_or(0, |r| r.len());
    let mut diag = Vec::new();
    let mut k = 0;
    while k < nr.min(nc) {
        // Pivot: smallest nonzero absolute value in the trailing block.
        let mut best: Option<(usize, usize)> = None;
        for i in k..nr {
            for j in k..nc {
                if !m[i][j].is_zero() && best.is_none_or(|(bi, bj)| m[i][j].abs() < m[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        m.swap(k, pi);
        for row in m.iter_mut() {
            row.swap(k, pj);
        }

        let mut clean = true;
        for i in k + 1..nr {
            if m[i][k].is_zero() {
                continue;
            }
            let q = m[i][k].div_floor(&m[k][k]);
            for j in k..nc {
                let v = &m[k][j] * &q;
                m[i][j] -= v;
            }
            if !m[i][k].is_zero() {
                clean = false;
            }
        }
        for j in k + 1..nc {
            if m[k][j].is_zero() {
                continue;
            }
            let q = m[k][j].div_floor(&m[k][k]);
            for i in k..nr {
                let v = &m[i][k] * &q;
                m[i][j] -= v;
            }
            if !m[k][j].is_zero() {
                clean = false;
            }
        }
        if !clean {
            continue;
        }
        // Enforce divisibility into the trailing block.
        let p = m[k][k].clone();
        let bad = (k + 1..nr).find(|&i| (k + 1..nc).any(|j| !m[i][j].is_multiple_of(&p)));
        if let Some(i) = bad {
            for j in k..nc {
                let v = m[i][j].clone();
                m[k][j] += v;
            }
            continue;
        }
        diag.push(p.abs());
        k += 1;
    }
    diag
}
