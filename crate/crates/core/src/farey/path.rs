use std::fmt;

use serde::{Deserialize, Serialize};

use super::{is_farey_neighbor, Slope};
use crate::error::{Error, Result};

/// Three pairwise Farey-adjacent slopes: a triangle of the Farey tessellation,
/// equivalently a one-vertex triangulation of the torus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FareyTriple {
    slopes: [Slope; 3],
}

impl FareyTriple {
    pub fn new(a: Slope, b: Slope, c: Slope) -> Result<Self> {
        if !(is_farey_neighbor(&a, &b) && is_farey_neighbor(&b, &c) && is_farey_neighbor(&a, &c)) {
            return Err(Error::NotAFareyTriple(a, b, c));
        }
        let mut slopes = [a, b, c];
        slopes.sort();
        Ok(FareyTriple { slopes })
    }

    /// Slopes in increasing order (with `1/0` last).
    pub fn slopes(&self) -> [Slope; 3] {
        self.slopes
    }

    pub fn contains(&self, s: &Slope) -> bool {
        self.slopes.contains(s)
    }

    /// Replaces `leave` by `enter`; `None` if the result is not a triple.
    pub fn replace(&self, leave: Slope, enter: Slope) -> Option<Self> {
        let i = self.slopes.iter().position(|s| *s == leave)?;
        let mut v = self.slopes;
        v[i] = enter;
        FareyTriple::new(v[0], v[1], v[2]).ok()
    }

    /// The triangle across the edge opposite `leave`, and the slope entering.
    pub fn flip(&self, leave: Slope) -> Option<(Self, Slope)> {
        let i = self.slopes.iter().position(|s| *s == leave)?;
        let x = self.slopes[(i + 1) % 3].vector();
        let y = self.slopes[(i + 2) % 3].vector();
        let (a, b) = decompose(x, y, leave.vector());
        let enter = Slope::new(a * x.0 - b * y.0, a * x.1 - b * y.1).ok()?;
        Some((self.replace(leave, enter)?, enter))
    }
}

impl fmt::Display for FareyTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.slopes;
        write!(f, "{{{a}, {b}, {c}}}")
    }
}

/// Shortest walk through the dual tree of the Farey tessellation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FareyPath {
    pub start: FareyTriple,
    /// `(leave, enter)` pivot for each step.
    pub steps: Vec<(Slope, Slope)>,
    pub end: FareyTriple,
}

impl FareyPath {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// All triples visited, `start` first.
    pub fn triples(&self) -> Vec<FareyTriple> {
        let mut out = vec![self.start];
        let mut cur = self.start;
        for &(leave, enter) in &self.steps {
            cur = cur.replace(leave, enter).expect("path steps are flips");
            out.push(cur);
        }
        out
    }
}

/// Coordinates of `t` in the basis `(x, y)`, which has determinant ±1.
fn decompose(x: (i64, i64), y: (i64, i64), t: (i64, i64)) -> (i64, i64) {
    let d = x.0 * y.1 - x.1 * y.0;
    let l = (t.0 * y.1 - t.1 * y.0) * d;
    let m = (x.0 * t.1 - x.1 * t.0) * d;
    (l, m)
}

/// Unique shortest path of flips from `start` to a triangle containing `target`.
///
/// At every triangle at most one edge separates it from `target`; the walk
/// crosses that edge until `target` is a vertex.
pub fn farey_path(start: FareyTriple, target: Slope) -> FareyPath {
    let t = target.vector();
    let mut cur = start;
    let mut steps = Vec::new();
    while !cur.contains(&target) {
        let s = cur.slopes;
        let mut crossed = false;
        for i in 0..3 {
            let z = s[i].vector();
            let x = s[(i + 1) % 3].vector();
            let y = s[(i + 2) % 3].vector();
            let (lz, mz) = decompose(x, y, z);
            let (l, m) = decompose(x, y, t);
            if (l as i128) * (m as i128) * (lz * mz) as i128 >= 0 {
                continue;
            }
            let (next, enter) = cur.flip(s[i]).expect("neighbouring triangle exists");
            steps.push((s[i], enter));
            cur = next;
            crossed = true;
            break;
        }
        assert!(crossed, "target {target} unreachable from {cur}");
    }
    FareyPath { start, steps, end: cur }
}
