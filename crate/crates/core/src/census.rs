//! The tabulated census knots and families, and checks of both against the
//! constructions.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
#[cfg(test)]
use crate::farey::PositiveCF;
use crate::farey::{norm, positive_cf, Slope};
use crate::filling::{classify_pair, exceptional, execute, plan_filling, type_parameter, KnotType};
use crate::triangulation::{
    first_homology, orientable, pachner_32, validate, vertex_links, HomologyGroup, Triangulation,
};

const CENSUS_CSV: &str = include_str!("../data/census.csv");
const FAMILIES_CSV: &str = include_str!("../data/families.csv");
const CENSUS_SHA256: &str = "177a4ca42e08f62f68920cbe5ab99c9fabf456c92007ea32364004e182efc374";
const FAMILIES_SHA256: &str = "bb2e526743d1cf189f559b89269b326157aa3bcee267b7f4b6e9a5b3257c0571";

fn sha256_hex(text: &str) -> String {
    Sha256::digest(text.as_bytes()).iter().map(|b| format!("{b:02x}")).collect()
}

fn check_digest(name: &str, text: &str, expected: &str) -> Result<()> {
    let got = sha256_hex(text);
    if got == expected {
        Ok(())
    } else {
        Err(Error::DatasetCorrupt(format!("{name}: sha256 {got}, expected {expected}")))
    }
}

fn corrupt(line: usize, what: impl fmt::Display) -> Error {
    Error::DatasetCorrupt(format!("line {line}: {what}"))
}

fn parse_list(line: usize, s: &str) -> Result<Vec<u64>> {
    let inner = s
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| corrupt(line, format!("bad list {s:?}")))?;
    inner.split(',').map(|x| x.trim().parse().map_err(|_| corrupt(line, format!("bad list {s:?}")))).collect()
}

/// Continued-fraction cells misprinted in the source table: knot, column,
/// printed value, value of the row's own slope. Each printed value
/// evaluates to a different rational, while the printed norm agrees with
/// the corrected one.
pub const CF_ERRATA: [(&str, &str, &[u64], &[u64]); 5] = [
    ("K5_13", "tu", &[0, 2, 2], &[0, 1, 2]),
    ("K7_26", "tu", &[0, 3, 2], &[0, 2, 2]),
    ("K8_44", "tu", &[0, 3, 3], &[0, 1, 3]),
    ("K8_51", "tu", &[1, 2, 2], &[1, 1, 2]),
    ("K9_50", "tu", &[0, 4, 2], &[0, 3, 2]),
];

/// Type letters misprinted in the source table: knot, printed, correct.
/// Neither order of these pairs satisfies the type A identity, and the
/// smaller slope is `-2 + 1/k` with the type B identity holding.
pub const TYPE_ERRATA: [(&str, char, char); 3] = [("K7_28", 'A', 'B'), ("K8_42", 'A', 'B'), ("K9_51", 'A', 'B')];

/// Whether a printed type letter equals `computed`, allowing the listed misprints.
pub fn type_cell_matches(knot: &str, printed: char, computed: char) -> bool {
    printed == computed || TYPE_ERRATA.contains(&(knot, printed, computed))
}

/// Whether a printed CF cell equals `computed`, allowing the listed misprints.
pub fn cf_cell_matches(knot: &str, column: &str, printed: &[u64], computed: &[u64]) -> bool {
    printed == computed
        || CF_ERRATA.iter().any(|&(k, c, p, fixed)| k == knot && c == column && p == printed && fixed == computed)
}

/// Complexity `C` of a census name `KC_v`.
pub fn complexity_of(name: &str) -> Option<u64> {
    let rest = name.strip_prefix('K')?;
    let (c, v) = rest.split_once('_')?;
    v.parse::<u64>().ok()?;
    c.parse().ok()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRow {
    pub knot: String,
    pub snappea: String,
    pub kind: char,
    pub rs: Slope,
    pub tu: Slope,
    pub cf_rs: Vec<u64>,
    pub cf_tu: Vec<u64>,
    pub norm_rs: u64,
    pub norm_tu: u64,
    /// The seed named in the table, kept verbatim.
    pub seed: String,
    pub counts: [u64; 3],
    pub sigma: u64,
}

impl CensusRow {
    pub fn complexity(&self) -> u64 {
        complexity_of(&self.knot).expect("validated on load")
    }

    /// Whether `{a, b}` is this row's slope pair in either order.
    pub fn has_pair(&self, a: Slope, b: Slope) -> bool {
        (self.rs, self.tu) == (a, b) || (self.rs, self.tu) == (b, a)
    }
}

#[derive(Debug, Deserialize)]
struct RawCensus {
    knot: String,
    snappea: String,
    #[serde(rename = "type")]
    kind: char,
    r: i64,
    s: i64,
    t: i64,
    u: i64,
    cf_rs: String,
    cf_tu: String,
    norm_rs: u64,
    norm_tu: u64,
    seed: String,
    c1: u64,
    c2: u64,
    c3: u64,
    sigma: u64,
}

fn parse_census(text: &str) -> Result<Vec<CensusRow>> {
    let mut out = Vec::new();
    for (i, rec) in csv::Reader::from_reader(text.as_bytes()).deserialize::<RawCensus>().enumerate() {
        let line = i + 2;
        let raw = rec.map_err(|e| corrupt(line, e))?;
        if complexity_of(&raw.knot).is_none() {
            return Err(corrupt(line, format!("bad knot name {:?}", raw.knot)));
        }
        out.push(CensusRow {
            rs: Slope::new(raw.r, raw.s).map_err(|e| corrupt(line, e))?,
            tu: Slope::new(raw.t, raw.u).map_err(|e| corrupt(line, e))?,
            cf_rs: parse_list(line, &raw.cf_rs)?,
            cf_tu: parse_list(line, &raw.cf_tu)?,
            knot: raw.knot,
            snappea: raw.snappea,
            kind: raw.kind,
            norm_rs: raw.norm_rs,
            norm_tu: raw.norm_tu,
            seed: raw.seed,
            counts: [raw.c1, raw.c2, raw.c3],
            sigma: raw.sigma,
        });
    }
    Ok(out)
}

/// The 229 knots of the census table.
pub fn load_census() -> Result<Vec<CensusRow>> {
    check_digest("census.csv", CENSUS_CSV, CENSUS_SHA256)?;
    parse_census(CENSUS_CSV)
}

/// A tabulated family member: a census knot or a label for a
/// non-hyperbolic knot (torus knot `T(p,q)`, satellite `S(-3,m)`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Member {
    Census(String),
    Other(String),
}

impl Member {
    fn parse(s: &str) -> Member {
        if complexity_of(s).is_some() {
            Member::Census(s.to_string())
        } else {
            Member::Other(s.to_string())
        }
    }

    pub fn label(&self) -> &str {
        match self {
            Member::Census(s) | Member::Other(s) => s,
        }
    }
}

/// A family of knots sharing a primary slope, with secondary slopes
/// `(t0 + t1 n) / (u0 + u1 n)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyRow {
    pub primary: Slope,
    /// `'A'`, `'B'` or `'C'`.
    pub kind: char,
    pub t: (i64, i64),
    pub u: (i64, i64),
    /// Indices of the two nine-tetrahedron members bounding the table.
    pub lo: i64,
    pub hi: i64,
    pub breadth: Option<i64>,
    pub members: BTreeMap<i64, Member>,
}

impl FamilyRow {
    pub fn secondary(&self, n: i64) -> Result<Slope> {
        Slope::new(self.t.0 + self.t.1 * n, self.u.0 + self.u.1 * n)
    }

    pub fn knot_type(&self) -> Option<KnotType> {
        match self.kind {
            'A' => Some(KnotType::A),
            'B' => type_parameter(self.primary, 2).map(KnotType::B),
            'C' => type_parameter(self.primary, 3).map(KnotType::C),
            _ => None,
        }
    }

    pub fn name(&self) -> String {
        let (r, s) = self.primary.vector();
        match self.kind {
            'A' => format!("({r},{s})"),
            k => format!("({r},{s})_{k}"),
        }
    }
}

#[derive(Debug, Deserialize)]
struct RawFamily {
    r: i64,
    s: i64,
    #[serde(rename = "type")]
    kind: char,
    t0: i64,
    t1: i64,
    u0: i64,
    u1: i64,
    lo: i64,
    hi: i64,
    breadth: Option<i64>,
    members: String,
}

fn parse_families(text: &str) -> Result<Vec<FamilyRow>> {
    let mut out = Vec::new();
    for (i, rec) in csv::Reader::from_reader(text.as_bytes()).deserialize::<RawFamily>().enumerate() {
        let line = i + 2;
        let raw = rec.map_err(|e| corrupt(line, e))?;
        let mut members = BTreeMap::new();
        for item in raw.members.split_whitespace() {
            let (n, label) = item.split_once('=').ok_or_else(|| corrupt(line, format!("bad member {item:?}")))?;
            let n: i64 = n.parse().map_err(|_| corrupt(line, format!("bad index {n:?}")))?;
            members.insert(n, Member::parse(label));
        }
        out.push(FamilyRow {
            primary: Slope::new(raw.r, raw.s).map_err(|e| corrupt(line, e))?,
            kind: raw.kind,
            t: (raw.t0, raw.t1),
            u: (raw.u0, raw.u1),
            lo: raw.lo,
            hi: raw.hi,
            breadth: raw.breadth,
            members,
        });
    }
    Ok(out)
}

/// The 42 families of breadth at least two.
pub fn load_families() -> Result<Vec<FamilyRow>> {
    check_digest("families.csv", FAMILIES_CSV, FAMILIES_SHA256)?;
    parse_families(FAMILIES_CSV)
}

/// Outcome of one named check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub ok: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub subject: String,
    pub checks: Vec<Check>,
}

impl Report {
    fn new(subject: String) -> Self {
        Report { subject, checks: Vec::new() }
    }

    fn check(&mut self, name: impl Into<String>, ok: bool, detail: impl Into<String>) {
        self.checks.push(Check { name: name.into(), ok, detail: detail.into() });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.ok)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return write!(f, "{} ok", self.subject);
        }
        write!(f, "{} FAIL", self.subject)?;
        for c in self.failures() {
            write!(f, "; {}: {}", c.name, c.detail)?;
        }
        Ok(())
    }
}

/// Checks that a triangulation is a valid one-cusped orientable manifold
/// with first homology `Z`.
pub fn check_knot_complement(report: &mut Report, t: &Triangulation) {
    let violations = validate(t);
    report.check("valid", violations.is_empty(), format!("{violations:?}"));
    let orient = orientable(t);
    report.check("orientable", orient == Ok(true), format!("{orient:?}"));
    match vertex_links(t) {
        Ok(links) => {
            let ok = links.len() == 1 && links[0].is_torus();
            report.check("one torus cusp", ok, format!("{links:?}"));
        }
        Err(e) => report.check("one torus cusp", false, e.to_string()),
    }
    let h = first_homology(t);
    report.check("H1 = Z", h.as_ref() == Ok(&HomologyGroup::free(1)), format!("{h:?}"));
}

/// Recomputes everything a census row claims.
///
/// The figure-eight knot is the one row whose table total exceeds its
/// complexity; its triangulation is reduced by a 3-2 move.
pub fn verify_row(row: &CensusRow) -> Report {
    let mut r = Report::new(row.knot.clone());
    for (col, s, cf, nm) in [("rs", row.rs, &row.cf_rs, row.norm_rs), ("tu", row.tu, &row.cf_tu, row.norm_tu)] {
        let got = positive_cf(&s).map(|c| c.coefficients().to_vec());
        let ok = got.as_ref().is_ok_and(|g| cf_cell_matches(&row.knot, col, cf, g));
        r.check(format!("cf_{col}"), ok, format!("computed {got:?}, table {cf:?}"));
        let got = norm(&s);
        r.check(format!("norm_{col}"), got == Ok(nm), format!("computed {got:?}, table {nm}"));
    }
    let sum: u64 = row.counts.iter().sum();
    r.check("sigma = sum of counts", sum == row.sigma, format!("{sum} vs {}", row.sigma));
    let ty = classify_pair(row.rs, row.tu);
    r.check(
        "type",
        ty.is_some_and(|t| type_cell_matches(&row.knot, row.kind, t.letter())),
        format!("computed {ty:?}, table {}", row.kind),
    );
    let plan = match plan_filling(row.rs, row.tu) {
        Ok(p) => p,
        Err(e) => {
            r.check("plan", false, e.to_string());
            return r;
        }
    };
    let seed = plan.seed.family().name();
    r.check("seed", seed == row.seed, format!("{seed} vs {}", row.seed));
    r.check("plan total = sigma", plan.total() == row.sigma, format!("{} vs {}", plan.total(), row.sigma));
    let (a, b, c) = plan.predicted_counts;
    let mut predicted = [a, b, c];
    let mut table = row.counts;
    predicted.sort_unstable();
    table.sort_unstable();
    r.check("count multiset", predicted == table, format!("{predicted:?} vs {table:?}"));
    let result = match execute(&plan) {
        Ok(res) => res,
        Err(e) => {
            r.check("fill", false, e.to_string());
            return r;
        }
    };
    let t = &result.triangulation;
    r.check(
        "built counts",
        result.actual_counts == plan.predicted_counts && t.len() as u64 == plan.total(),
        format!("{:?} vs {:?}", result.actual_counts, plan.predicted_counts),
    );
    check_knot_complement(&mut r, t);
    let mut size = t.len() as u64;
    if size > row.complexity() {
        match reduce_once(t) {
            Some(smaller) => {
                size = smaller.len() as u64;
                let h = first_homology(&smaller);
                r.check("3-2 move keeps H1", h == Ok(HomologyGroup::free(1)), format!("{h:?}"));
            }
            None => r.check("3-2 move", false, "no degree-three edge admits the move"),
        }
    }
    r.check("size = complexity", size == row.complexity(), format!("{size} vs {}", row.complexity()));
    r
}

/// The first successful 3-2 move, trying edges in order.
pub fn reduce_once(t: &Triangulation) -> Option<Triangulation> {
    let classes = t.edge_classes();
    (0..classes.count).find_map(|e| pachner_32(t, e).ok())
}

/// Checks a family against the census and the growth of its extension
/// `extra_range` steps beyond the nine-tetrahedron members.
pub fn verify_family(family: &FamilyRow, census: &[CensusRow], extra_range: i64) -> Report {
    let mut r = Report::new(family.name());
    let Some(ty) = family.knot_type() else {
        r.check("type", false, format!("no {} parameter for {}", family.kind, family.primary));
        return r;
    };
    for (&n, member) in &family.members {
        let s = match family.secondary(n) {
            Ok(s) => s,
            Err(e) => {
                r.check(format!("n={n}"), false, e.to_string());
                continue;
            }
        };
        let label = member.label();
        if exceptional(s) {
            r.check(format!("n={n} exceptional"), matches!(member, Member::Other(_)), format!("{s} labelled {label}"));
            continue;
        }
        let id = ty.identity(family.primary, s);
        r.check(format!("n={n} identity"), id.abs() == 1, format!("{ty:?} gives {id} at {s}"));
        let Member::Census(name) = member else {
            r.check(format!("n={n} hyperbolic"), false, format!("{s} labelled {label}"));
            continue;
        };
        let Some(row) = census.iter().find(|row| &row.knot == name) else {
            r.check(format!("n={n} in census"), false, format!("{name} missing"));
            continue;
        };
        // Knots with several realisations may be tabulated under another
        // pair, as long as no other census knot claims this one.
        let total = plan_filling(family.primary, s).map(|p| p.total());
        let claimed = census.iter().any(|other| other.knot != *name && other.has_pair(family.primary, s));
        let ok = row.has_pair(family.primary, s) || (!claimed && total == Ok(row.sigma));
        r.check(format!("n={n} {name}"), ok, format!("pair ({}, {s}) total {total:?}", family.primary));
    }
    for j in 1..=extra_range {
        for n in [family.hi + j, family.lo - j] {
            let total = family.secondary(n).and_then(|s| plan_filling(family.primary, s)).map(|p| p.total());
            r.check(format!("n={n} growth"), total == Ok(9 + j as u64), format!("{total:?}, expected {}", 9 + j));
        }
    }
    r
}
