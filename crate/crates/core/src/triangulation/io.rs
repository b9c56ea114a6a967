use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{FaceGluing, Perm4, Triangulation};
use crate::error::{Error, Result};

pub const HEADER: &str = "tet | 012 | 013 | 023 | 123";

/// Table columns in order, each as (face number, its three vertices).
const COLUMNS: [(u8, [u8; 3]); 4] = [(3, [0, 1, 2]), (2, [0, 1, 3]), (1, [0, 2, 3]), (0, [1, 2, 3])];

fn entry(g: Option<FaceGluing>, verts: [u8; 3]) -> String {
    match g {
        None => "--".to_string(),
        Some(g) => {
            let [a, b, c] = verts.map(|v| g.perm.apply(v));
            format!("{}({a}{b}{c})", g.tet)
        }
    }
}

/// Text form: a header line, then one `|`-separated row per tetrahedron.
pub fn export_gluing_table(t: &Triangulation) -> String {
    let mut out = String::from(HEADER);
    out.push('\n');
    for i in 0..t.len() {
        out.push_str(&i.to_string());
        for (face, verts) in COLUMNS {
            out.push_str(" | ");
            out.push_str(&entry(t.gluing(i, face), verts));
        }
        out.push('\n');
    }
    out
}

fn parse_entry(s: &str, verts: [u8; 3]) -> std::result::Result<Option<FaceGluing>, String> {
    if s == "--" {
        return Ok(None);
    }
    let open = s.find('(').ok_or("expected <tet>(<abc>) or --")?;
    if !s.ends_with(')') {
        return Err("missing ')'".into());
    }
    let tet: usize = s[..open].parse().map_err(|_| format!("bad tetrahedron index {:?}", &s[..open]))?;
    let digits = &s[open + 1..s.len() - 1];
    let img: Vec<u8> = digits
        .chars()
        .map(|c| c.to_digit(10).filter(|&d| d < 4).map(|d| d as u8))
        .collect::<Option<_>>()
        .ok_or(format!("bad vertex list {digits:?}"))?;
    let img: [u8; 3] = img.try_into().map_err(|_| format!("expected three vertices, got {digits:?}"))?;
    let perm = Perm4::extend(verts, img).ok_or(format!("repeated vertex in {digits:?}"))?;
    Ok(Some(FaceGluing { tet, perm }))
}

/// Parses the text form. Gluings are stored exactly as written, so a
/// one-sided table parses and is then reported by `validate`.
pub fn import_gluing_table(text: &str) -> Result<Triangulation> {
    let err = |line: usize, column: usize, message: String| Error::Parse { line, column, message };
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    match lines.next() {
        Some((_, l)) if l.trim() == HEADER => {}
        Some((i, _)) => return Err(err(i + 1, 1, format!("expected header {HEADER:?}"))),
        None => return Err(err(1, 1, "empty input".into())),
    }
    let mut rows = Vec::new();
    for (i, line) in lines {
        let mut col = 1;
        let mut cells = Vec::new();
        for cell in line.split('|') {
            let lead = cell.len() - cell.trim_start().len();
            cells.push((col + lead, cell.trim()));
            col += cell.len() + 1;
        }
        if cells.len() != 5 {
            return Err(err(i + 1, 1, format!("expected 5 columns, found {}", cells.len())));
        }
        let idx: usize = cells[0].1.parse().map_err(|_| err(i + 1, cells[0].0, "bad row index".into()))?;
        if idx != rows.len() {
            return Err(err(i + 1, cells[0].0, format!("expected row {}, found {idx}", rows.len())));
        }
        let mut faces = Vec::new();
        for (k, (face, verts)) in COLUMNS.iter().enumerate() {
            let (c, s) = cells[k + 1];
            let g = parse_entry(s, *verts).map_err(|m| err(i + 1, c, m))?;
            faces.push((*face, g, c));
        }
        rows.push((i + 1, faces));
    }
    let n = rows.len();
    let mut t = Triangulation::with_tets(n);
    for (r, (line, faces)) in rows.into_iter().enumerate() {
        for (face, g, c) in faces {
            if let Some(g) = g {
                if g.tet >= n {
                    return Err(err(line, c, format!("tetrahedron {} out of range", g.tet)));
                }
            }
            t.set_gluing(r, face, g);
        }
    }
    Ok(t)
}

#[derive(Debug, Serialize, Deserialize)]
struct JsonGluing {
    tet: usize,
    perm: [u8; 4],
}

#[derive(Debug, Serialize, Deserialize)]
struct JsonTet {
    index: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    label: Option<String>,
    faces: BTreeMap<String, Option<JsonGluing>>,
}

#[derive(Debug, Serialize, Deserialize)]
struct JsonTable {
    tetrahedra: Vec<JsonTet>,
}

fn face_key(verts: [u8; 3]) -> String {
    verts.iter().map(|v| v.to_string()).collect()
}

/// JSON form: same columns, keyed `"012"` .. `"123"`, with full permutations.
pub fn export_json(t: &Triangulation) -> String {
    let table = JsonTable {
        tetrahedra: (0..t.len())
            .map(|i| JsonTet {
                index: i,
                label: t.label(i).map(str::to_string),
                faces: COLUMNS
                    .iter()
                    .map(|&(f, verts)| {
                        let g = t.gluing(i, f).map(|g| JsonGluing { tet: g.tet, perm: g.perm.images() });
                        (face_key(verts), g)
                    })
                    .collect(),
            })
            .collect(),
    };
    serde_json::to_string_pretty(&table).expect("serialisable")
}

pub fn import_json(text: &str) -> Result<Triangulation> {
    let bad = |message: String| Error::Parse { line: 1, column: 1, message };
    let table: JsonTable = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let n = table.tetrahedra.len();
    let mut t = Triangulation::with_tets(n);
    for (i, tet) in table.tetrahedra.into_iter().enumerate() {
        if tet.index != i {
            return Err(bad(format!("tetrahedron {i} listed with index {}", tet.index)));
        }
        t.set_label(i, tet.label);
        for (f, verts) in COLUMNS {
            let g = tet
                .faces
                .get(&face_key(verts))
                .ok_or_else(|| bad(format!("tetrahedron {i} lacks face {}", face_key(verts))))?;
            if let Some(g) = g {
                let perm = Perm4::new(g.perm).ok_or_else(|| bad(format!("bad permutation {:?}", g.perm)))?;
                if g.tet >= n {
                    return Err(bad(format!("tetrahedron {} out of range", g.tet)));
                }
                t.set_gluing(i, f, Some(FaceGluing { tet: g.tet, perm }));
            }
        }
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    const TABLE: &str = "tet | 012 | 013 | 023 | 123
0 | 1(210) | 1(031) | 2(123) | 4(132)
1 | 0(210) | 0(031) | 3(123) | 5(132)
2 | 3(021) | 3(031) | 3(032) | 0(023)
3 | 2(021) | 2(031) | 2(032) | 1(023)
4 | 5(021) | 5(031) | 5(032) | 0(132)
5 | 4(021) | 4(031) | 4(032) | 1(132)
";

    #[test]
    fn text_round_trip() {
        let t = import_gluing_table(TABLE).unwrap();
        assert_eq!(t.len(), 6);
        assert_eq!(export_gluing_table(&t), TABLE);
        assert!(crate::triangulation::validate(&t).is_empty());
    }

    #[test]
    fn json_round_trip() {
        let t = import_gluing_table(TABLE).unwrap();
        assert_eq!(import_json(&export_json(&t)).unwrap(), t);
    }

    #[test]
    fn boundary_prints_dashes() {
        let t = Triangulation::with_tets(1);
        assert_eq!(export_gluing_table(&t), format!("{HEADER}\n0 | -- | -- | -- | --\n"));
    }

    #[test]
    fn parse_errors_have_positions() {
        let text = "tet | 012 | 013 | 023 | 123\n0 | 5(012) | -- | -- | --\n";
        match import_gluing_table(text) {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (2, 5)),
            other => panic!("{other:?}"),
        }
        let text = "tet | 012 | 013 | 023 | 123\n0 | -- | 0(11x) | -- | --\n";
        match import_gluing_table(text) {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (2, 10)),
            other => panic!("{other:?}"),
        }
        assert!(import_gluing_table("nonsense").is_err());
    }
}
