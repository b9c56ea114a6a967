use std::fmt;

use serde::{Deserialize, Serialize};

use super::Slope;
use crate::error::{Error, Result};

/// Positive continued fraction `[a0; a1, ..., am]` of a non-negative rational.
///
/// `a0 >= 0`, the middle terms are `>= 1`, and the last term is `>= 2` whenever
/// `m >= 1`. The integer 1 is written `[1]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PositiveCF {
    coefficients: Vec<u64>,
}

impl PositiveCF {
    pub fn coefficients(&self) -> &[u64] {
        &self.coefficients
    }

    /// Sum of the coefficients.
    pub fn norm(&self) -> u64 {
        self.coefficients.iter().sum()
    }

    /// Exact value as a reduced `(numerator, denominator)` pair.
    pub fn evaluate(&self) -> (u64, u64) {
        let mut it = self.coefficients.iter().rev();
        let last = *it.next().expect("continued fraction is never empty");
        let (mut num, mut den) = (last, 1u64);
        for &a in it {
            // a + 1/(num/den) = (a*num + den)/num
            let n = a * num + den;
            den = num;
            num = n;
        }
        (num, den)
    }

    /// Builds a CF from raw coefficients, checking the shape constraints.
    pub fn from_coefficients(coefficients: Vec<u64>) -> Option<Self> {
        let m = coefficients.len().checked_sub(1)?;
        if m >= 1 && (coefficients[1..m].contains(&0) || coefficients[m] < 2) {
            return None;
        }
        Some(PositiveCF { coefficients })
    }
}

impl fmt::Display for PositiveCF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}", self.coefficients[0])?;
        for (i, a) in self.coefficients[1..].iter().enumerate() {
            let sep = if i == 0 { ";" } else { "," };
            write!(f, "{sep}{a}")?;
        }
        write!(f, "]")
    }
}

/// Positive continued fraction of `|p/q|`.
pub fn positive_cf(s: &Slope) -> Result<PositiveCF> {
    if s.is_infinite() {
        return Err(Error::InfiniteSlope);
    }
    let (mut num, mut den) = (s.p().unsigned_abs(), s.q().unsigned_abs());
    let mut coefficients = Vec::new();
    loop {
        coefficients.push(num / den);
        let r = num % den;
        if r == 0 {
            break;
        }
        num = den;
        den = r;
    }
    Ok(PositiveCF { coefficients })
}

/// `||p/q||`, the coefficient sum of the positive continued fraction of `|p/q|`.
pub fn norm(s: &Slope) -> Result<u64> {
    positive_cf(s).map(|cf| cf.norm())
}

/// Regular continued fraction `[a0; a1, ..., am]` of a signed finite slope,
/// with `a0 = floor(p/q)`, later terms positive and `am > 1` when `m >= 1`.
pub fn regular_cf(s: &Slope) -> Result<Vec<i64>> {
    if s.is_infinite() {
        return Err(Error::InfiniteSlope);
    }
    let (mut num, mut den) = (s.p(), s.q());
    let mut out = Vec::new();
    loop {
        let a = num.div_euclid(den);
        out.push(a);
        let r = num.rem_euclid(den);
        if r == 0 {
            break;
        }
        num = den;
        den = r;
    }
    Ok(out)
}

/// Convergents `h_i/k_i` of a regular continued fraction, preceded by `1/0`.
pub fn convergents(cf: &[i64]) -> Vec<(i64, i64)> {
    let mut out = vec![(1, 0)];
    let (mut h_prev, mut k_prev) = (1i64, 0i64);
    let (mut h, mut k) = (cf[0], 1i64);
    out.push((h, k));
    for &a in &cf[1..] {
        let (hn, kn) = (a * h + h_prev, a * k + k_prev);
        h_prev = h;
        k_prev = k;
        h = hn;
        k = kn;
        out.push((h, k));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::farey::slope;
    use proptest::prelude::*;

    #[test]
    fn known_expansions() {
        assert_eq!(positive_cf(&slope(-5, 2)).unwrap().coefficients(), &[2, 2]);
        assert_eq!(positive_cf(&slope(-7, 4)).unwrap().coefficients(), &[1, 1, 3]);
        assert_eq!(positive_cf(&slope(17, 9)).unwrap().coefficients(), &[1, 1, 8]);
        assert_eq!(positive_cf(&slope(0, 1)).unwrap().coefficients(), &[0]);
        assert_eq!(positive_cf(&slope(1, 1)).unwrap().coefficients(), &[1]);
        assert_eq!(positive_cf(&slope(-1, 3)).unwrap().coefficients(), &[0, 3]);
        assert_eq!(positive_cf(&Slope::INFINITY), Err(Error::InfiniteSlope));
    }

    #[test]
    fn norms() {
        assert_eq!(norm(&slope(-5, 2)).unwrap(), 4);
        assert_eq!(norm(&slope(-1, 3)).unwrap(), 3);
        assert_eq!(norm(&slope(0, 1)).unwrap(), 0);
        assert_eq!(norm(&Slope::INFINITY), Err(Error::InfiniteSlope));
    }

    #[test]
    fn display() {
        assert_eq!(positive_cf(&slope(17, 9)).unwrap().to_string(), "[1;1,8]");
        assert_eq!(positive_cf(&slope(4, 1)).unwrap().to_string(), "[4]");
    }

    #[test]
    fn shape_constraints() {
        assert!(PositiveCF::from_coefficients(vec![0, 1]).is_none());
        assert!(PositiveCF::from_coefficients(vec![1, 0, 2]).is_none());
        assert!(PositiveCF::from_coefficients(vec![]).is_none());
        assert!(PositiveCF::from_coefficients(vec![1]).is_some());
        assert!(PositiveCF::from_coefficients(vec![0, 1, 2]).is_some());
    }

    #[test]
    fn regular_expansions() {
        assert_eq!(regular_cf(&slope(-1, 2)).unwrap(), vec![-1, 2]);
        assert_eq!(regular_cf(&slope(-4, 1)).unwrap(), vec![-4]);
        assert_eq!(regular_cf(&slope(7, 3)).unwrap(), vec![2, 3]);
        let c = convergents(&[-1, 2]);
        assert_eq!(c, vec![(1, 0), (-1, 1), (-1, 2)]);
    }

    proptest! {
        #[test]
        fn round_trip(p in -2000i64..2000, q in 1i64..2000) {
            let s = Slope::new(p, q).unwrap();
            let cf = positive_cf(&s).unwrap();
            prop_assert!(PositiveCF::from_coefficients(cf.coefficients().to_vec()).is_some());
            prop_assert_eq!(cf.evaluate(), (s.p().unsigned_abs(), s.q() as u64));
        }

        #[test]
        fn regular_cf_round_trip(p in -2000i64..2000, q in 1i64..2000) {
            let s = Slope::new(p, q).unwrap();
            let cf = regular_cf(&s).unwrap();
            let (h, k) = *convergents(&cf).last().unwrap();
            prop_assert_eq!(Slope::new(h, k).unwrap(), s);
            if cf.len() > 1 {
                prop_assert!(cf[1..].iter().all(|&a| a > 0));
                prop_assert!(*cf.last().unwrap() > 1);
            }
        }
    }
}
