use std::fmt;

use serde::{Deserialize, Serialize};

/// A permutation of `{0, 1, 2, 3}`, stored as its image list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Perm4([u8; 4]);

impl Perm4 {
    pub const IDENTITY: Perm4 = Perm4([0, 1, 2, 3]);

    /// `None` unless `images` is a bijection of `0..4`.
    pub fn new(images: [u8; 4]) -> Option<Self> {
        let mut seen = [false; 4];
        for &i in &images {
            if i > 3 || seen[i as usize] {
                return None;
            }
            seen[i as usize] = true;
        }
        Some(Perm4(images))
    }

    /// Sends `from[k]` to `to[k]` for each `k`; `from` and `to` list three
    /// distinct vertices, the remaining vertex goes to the remaining vertex.
    pub fn extend(from: [u8; 3], to: [u8; 3]) -> Option<Self> {
        let missing = |v: [u8; 3]| (0..4u8).find(|x| !v.contains(x));
        let mut images = [0u8; 4];
        for k in 0..3 {
            images[*from.get(k)? as usize] = to[k];
        }
        images[missing(from)? as usize] = missing(to)?;
        Perm4::new(images)
    }

    /// All 24 permutations in lexicographic order of image lists.
    pub fn all() -> impl Iterator<Item = Perm4> {
        (0..24).map(Perm4::from_index)
    }

    /// Position of this permutation in [`Perm4::all`].
    pub fn index(&self) -> usize {
        let mut rest: Vec<u8> = vec![0, 1, 2, 3];
        let mut idx = 0;
        for (k, &v) in self.0.iter().enumerate() {
            let pos = rest.iter().position(|&x| x == v).unwrap();
            idx += pos * [6, 2, 1, 1][k];
            rest.remove(pos);
        }
        idx
    }

    pub fn from_index(mut idx: usize) -> Perm4 {
        let mut rest: Vec<u8> = vec![0, 1, 2, 3];
        let mut images = [0u8; 4];
        for (k, f) in [6, 2, 1, 1].into_iter().enumerate() {
            images[k] = rest.remove(idx / f);
            idx %= f;
        }
        Perm4(images)
    }

    pub fn images(&self) -> [u8; 4] {
        self.0
    }

    pub fn apply(&self, i: u8) -> u8 {
        self.0[i as usize]
    }

    pub fn inverse(&self) -> Perm4 {
        let mut inv = [0u8; 4];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v as usize] = i as u8;
        }
        Perm4(inv)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Perm4) -> Perm4 {
        Perm4([0, 1, 2, 3].map(|i| self.0[other.0[i] as usize]))
    }

    /// +1 for even, -1 for odd.
    pub fn sign(&self) -> i32 {
        let mut inversions = 0;
        for i in 0..4 {
            for j in i + 1..4 {
                if self.0[i] > self.0[j] {
                    inversions += 1;
                }
            }
        }
        if inversions % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Sign of the bijection between the sorted complements of `v` and `self(v)`.
    pub fn restricted_sign(&self, v: u8) -> i32 {
        let src: Vec<u8> = (0..4).filter(|&x| x != v).collect();
        let img: Vec<u8> = src.iter().map(|&x| self.apply(x)).collect();
        let mut inversions = 0;
        for i in 0..3 {
            for j in i + 1..3 {
                if img[i] > img[j] {
                    inversions += 1;
                }
            }
        }
        if inversions % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

impl Default for Perm4 {
    fn default() -> Self {
        Perm4::IDENTITY
    }
}

impl fmt::Display for Perm4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.0;
        write!(f, "{a}{b}{c}{d}")
    }
}
