//! Which slope pairs give knots, and the end-to-end construction of their
//! triangulations.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::farey::{chain_tet_count, convergents, lst_tet_count, regular_cf, BoundaryClass, Slope};
use crate::seeds::{build_seed, fill_boundary, SeedId};
use crate::triangulation::Triangulation;

/// The three ways a pair of fillings of the magic manifold can leave a
/// hyperbolic knot complement in the three-sphere.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum KnotType {
    /// `tr - us = ±1`.
    A,
    /// Primary slope `-2 + 1/k`.
    B(i64),
    /// Primary slope `-3 + 1/k`.
    C(i64),
}

impl KnotType {
    pub fn letter(&self) -> char {
        match self {
            KnotType::A => 'A',
            KnotType::B(_) => 'B',
            KnotType::C(_) => 'C',
        }
    }

    /// Left side of the defining identity, which is `±1` for a knot.
    pub fn identity(&self, primary: Slope, secondary: Slope) -> i64 {
        let (r, s) = primary.vector();
        let (t, u) = secondary.vector();
        match *self {
            KnotType::A => t * r - u * s,
            KnotType::B(k) => (3 * k - 2) * t + (6 * k - 1) * u,
            KnotType::C(k) => (2 * k - 1) * t + (6 * k - 1) * u,
        }
    }
}

impl fmt::Display for KnotType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KnotType::A => write!(f, "Type A"),
            KnotType::B(k) => write!(f, "Type B (k = {k})"),
            KnotType::C(k) => write!(f, "Type C (k = {k})"),
        }
    }
}

pub const EXCEPTIONAL: [Slope; 5] =
    [Slope::INFINITY, Slope::integer(-3), Slope::integer(-2), Slope::integer(-1), Slope::integer(0)];

/// Whether filling any cusp along `s` is non-hyperbolic.
pub fn exceptional(s: Slope) -> bool {
    EXCEPTIONAL.contains(&s)
}

/// The integer `k` with `s = -shift + 1/k`, if there is one.
pub fn type_parameter(s: Slope, shift: i64) -> Option<i64> {
    let (p, q) = s.vector();
    // p/q + shift = (p + shift q)/q must be 1/k.
    match p + shift * q {
        1 if q != 0 => Some(q),
        -1 if q != 0 => Some(-q),
        _ => None,
    }
}

/// Knot type of `M(primary, secondary)` with the slopes in that order.
pub fn classify_ordered(primary: Slope, secondary: Slope) -> Option<KnotType> {
    if exceptional(primary) || exceptional(secondary) {
        return None;
    }
    let candidates =
        [Some(KnotType::A), type_parameter(primary, 2).map(KnotType::B), type_parameter(primary, 3).map(KnotType::C)];
    candidates.into_iter().flatten().find(|ty| ty.identity(primary, secondary).abs() == 1)
}

/// Knot type of the filling, trying both orders of the slopes.
///
/// Some pairs are of type B or C in both orders with different parameters;
/// the smaller slope is tried as the primary first so the answer does not
/// depend on the argument order.
pub fn classify_pair(rs: Slope, tu: Slope) -> Option<KnotType> {
    let (a, b) = if rs.cmp_value(&tu).is_le() { (rs, tu) } else { (tu, rs) };
    classify_ordered(a, b).or_else(|| classify_ordered(b, a))
}

/// Secondary slope number `n` in the family with the given primary slope.
///
/// Type A uses the penultimate convergent `r'/s'` of the regular continued
/// fraction of `r/s` (`1/0` for an integer), giving `(s n + s')/(r n + r')`.
pub fn secondary_slope(ty: KnotType, primary: Slope, n: i64) -> Result<Slope> {
    if exceptional(primary) {
        return Err(Error::ExceptionalPrimary(primary));
    }
    let (t, u) = match ty {
        KnotType::A => {
            let (r, s) = primary.vector();
            let (r1, s1) = penultimate(primary)?;
            (s * n + s1, r * n + r1)
        }
        KnotType::B(k) => {
            check_parameter(primary, 2, k)?;
            ((2 * k - 1) - n * (6 * k - 1), (1 - k) + n * (3 * k - 2))
        }
        KnotType::C(k) => {
            check_parameter(primary, 3, k)?;
            ((3 * k - 2) - n * (6 * k - 1), (1 - k) + n * (2 * k - 1))
        }
    };
    Slope::new(t, u)
}

fn check_parameter(primary: Slope, shift: i64, k: i64) -> Result<()> {
    if type_parameter(primary, shift) == Some(k) {
        Ok(())
    } else {
        Err(Error::NotTypeParameter(primary, shift))
    }
}

fn penultimate(s: Slope) -> Result<(i64, i64)> {
    let c = convergents(&regular_cf(&s)?);
    Ok(c[c.len() - 2])
}

/// Tetrahedra needed to fill a boundary of class `b` along `s`, or `None`
/// when that boundary cannot realise `s`.
pub fn boundary_count(b: BoundaryClass, s: Slope) -> Option<u64> {
    match b.triple() {
        Some(tri) if !tri.contains(&s) => lst_tet_count(b, s).ok(),
        Some(_) => None,
        None => chain_tet_count(b, s).ok(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FillingPlan {
    pub seed: SeedId,
    pub slope_for_boundary1: Slope,
    pub slope_for_boundary2: Slope,
    /// Core, first filling, second filling.
    pub predicted_counts: (u64, u64, u64),
}

impl FillingPlan {
    pub fn total(&self) -> u64 {
        let (a, b, c) = self.predicted_counts;
        a + b + c
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FillingResult {
    pub plan: FillingPlan,
    pub triangulation: Triangulation,
    pub actual_counts: (u64, u64, u64),
}

/// Boundary classes and core size of each seed, without building it.
fn seed_shape(id: SeedId) -> (u64, BoundaryClass, BoundaryClass) {
    use BoundaryClass::*;
    match id {
        SeedId::T1 => (2, P, P),
        SeedId::T2 => (2, Q, P),
        SeedId::T2p => (2, P, Q),
        SeedId::T3 => (5, R, R),
        SeedId::T4hat => (2, Vhat, R),
        SeedId::T5hat => (2, Uhat, Rp),
    }
}

/// Plan for a fixed seed with `a` in the first boundary and `b` in the second.
pub fn plan_for_seed(seed: SeedId, a: Slope, b: Slope) -> Option<FillingPlan> {
    let (core, c1, c2) = seed_shape(seed);
    Some(FillingPlan {
        seed,
        slope_for_boundary1: a,
        slope_for_boundary2: b,
        predicted_counts: (core, boundary_count(c1, a)?, boundary_count(c2, b)?),
    })
}

/// Every admissible plan, in tie-breaking order: by seed, then with `rs`
/// in the first boundary before the swapped assignment.
///
/// The two versions of the second seed are each other's swap, so each is
/// only tried in its own orientation.
pub fn plan_candidates(rs: Slope, tu: Slope) -> Vec<FillingPlan> {
    let mut out = Vec::new();
    for seed in SeedId::ALL {
        let orders: &[(Slope, Slope)] = match seed {
            SeedId::T2 | SeedId::T2p => &[(rs, tu)],
            _ => &[(rs, tu), (tu, rs)],
        };
        for &(a, b) in orders {
            if let Some(p) = plan_for_seed(seed, a, b) {
                if !out.contains(&p) {
                    out.push(p);
                }
            }
        }
    }
    out
}

/// Seed suggested by where the primary slope lies: non-integers in
/// `(-2, 0)`, below `-2` and above `0` go to T1, T2 and T3; positive and
/// negative integers go to T4h and T5h.
pub fn partition_seed(primary: Slope) -> SeedId {
    let (p, q) = (primary.p(), primary.q());
    match (q == 1, p > 0) {
        (true, true) => SeedId::T4hat,
        (true, false) => SeedId::T5hat,
        (false, true) => SeedId::T3,
        (false, false) if p < -2 * q => SeedId::T2,
        (false, false) => SeedId::T1,
    }
}

/// The cheapest admissible plan for the knot `M(rs, tu)`. Equal totals
/// prefer the partition seed of `rs`; within T2 the orientation with `tu`
/// on the Q boundary; then seed order.
pub fn plan_filling(rs: Slope, tu: Slope) -> Result<FillingPlan> {
    if classify_pair(rs, tu).is_none() {
        return Err(Error::NotAKnotFilling(rs, tu));
    }
    let preferred = partition_seed(rs);
    plan_candidates(rs, tu)
        .into_iter()
        .enumerate()
        .min_by_key(|(i, p)| (p.total(), p.seed.family() != preferred, p.seed == SeedId::T2, *i))
        .map(|(_, p)| p)
        .ok_or(Error::NotAKnotFilling(rs, tu))
}

/// Builds the triangulation described by a plan.
pub fn execute(plan: &FillingPlan) -> Result<FillingResult> {
    let seed = build_seed(plan.seed);
    let mut t = seed.core.clone();
    let t0 = t.len() as u64;
    let t1 = fill_boundary(&mut t, &seed.boundary1, Some(plan.slope_for_boundary1))? as u64;
    let t2 = fill_boundary(&mut t, &seed.boundary2, Some(plan.slope_for_boundary2))? as u64;
    Ok(FillingResult { plan: *plan, triangulation: t, actual_counts: (t0, t1, t2) })
}

/// Plans and builds a triangulation of the knot complement `M(rs, tu)`.
pub fn fill(rs: Slope, tu: Slope) -> Result<FillingResult> {
    execute(&plan_filling(rs, tu)?)
}

/// Predicted size for member `index` of the tabulated family with the given
/// primary slope and type letter.
pub fn complexity_bound(primary: Slope, kind: char, index: i64) -> Result<u64> {
    let families = crate::census::load_families()?;
    let family = families
        .iter()
        .find(|f| f.primary == primary && f.kind == kind)
        .ok_or_else(|| Error::UnknownFamily(format!("{primary} {kind}")))?;
    let secondary = family.secondary(index)?;
    Ok(plan_filling(primary, secondary)?.total())
}
