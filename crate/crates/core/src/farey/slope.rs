use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A slope `p/q` on a torus, stored in lowest terms with `q >= 0`.
///
/// The slope at infinity is stored as `1/0`. Since `(p, q)` and `(-p, -q)`
/// describe the same unoriented curve they normalise to the same value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Slope {
    p: i64,
    q: i64,
}

impl Slope {
    pub const INFINITY: Slope = Slope { p: 1, q: 0 };

    pub fn new(p: i64, q: i64) -> Result<Self> {
        if p == 0 && q == 0 {
            return Err(Error::ZeroSlopePair);
        }
        let g = p.gcd(&q);
        let (mut p, mut q) = (p / g, q / g);
        if q < 0 || (q == 0 && p < 0) {
            p = -p;
            q = -q;
        }
        Ok(Slope { p, q })
    }

    pub const fn integer(n: i64) -> Self {
        Slope { p: n, q: 1 }
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn is_infinite(&self) -> bool {
        self.q == 0
    }

    pub fn is_integer(&self) -> bool {
        self.q == 1
    }

    /// Primitive integer vector representing the slope (one of the two signs).
    pub fn vector(&self) -> (i64, i64) {
        (self.p, self.q)
    }

    /// Slope spanned by a nonzero integer vector.
    pub fn from_vector(v: (i64, i64)) -> Result<Self> {
        Slope::new(v.0, v.1)
    }

    /// `p_a q_b - p_b q_a`; its absolute value is the geometric intersection number.
    pub fn det(&self, other: &Slope) -> i64 {
        self.p * other.q - other.p * self.q
    }

    /// Exact comparison on the extended real line, with `1/0` largest.
    pub fn cmp_value(&self, other: &Slope) -> Ordering {
        match (self.is_infinite(), other.is_infinite()) {
            (true, true) => Ordering::Equal,
            (true, false) => Ordering::Greater,
            (false, true) => Ordering::Less,
            _ => (self.p as i128 * other.q as i128).cmp(&(other.p as i128 * self.q as i128)),
        }
    }

    pub fn as_f64(&self) -> f64 {
        if self.is_infinite() {
            f64::INFINITY
        } else {
            self.p as f64 / self.q as f64
        }
    }

    pub fn negate(&self) -> Slope {
        Slope::new(-self.p, self.q).expect("nonzero")
    }
}

/// Convenience constructor that panics on `(0, 0)`; meant for literals.
pub fn slope(p: i64, q: i64) -> Slope {
    Slope::new(p, q).expect("slope literal must not be 0/0")
}

pub fn make_slope(p: i64, q: i64) -> Result<Slope> {
    Slope::new(p, q)
}

/// True iff the two slopes are joined by an edge of the Farey triangulation.
pub fn is_farey_neighbor(a: &Slope, b: &Slope) -> bool {
    a.det(b).abs() == 1
}

impl PartialOrd for Slope {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Slope {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_value(other)
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

impl FromStr for Slope {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = |message: String| Error::Parse { line: 1, column: 1, message };
        if s.eq_ignore_ascii_case("inf") || s == "∞" {
            return Ok(Slope::INFINITY);
        }
        let (p, q) = match s.split_once('/') {
            Some((p, q)) => (p.trim(), q.trim()),
            None => (s, "1"),
        };
        let p: i64 = p.parse().map_err(|_| bad(format!("bad numerator in {s:?}")))?;
        let q: i64 = q.parse().map_err(|_| bad(format!("bad denominator in {s:?}")))?;
        Slope::new(p, q)
    }
}

impl TryFrom<String> for Slope {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<Slope> for String {
    fn from(s: Slope) -> String {
        s.to_string()
    }
}
