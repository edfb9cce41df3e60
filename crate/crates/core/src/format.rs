//! Text format for diagrams and quotient maps.
//!
//! Line oriented; `#` starts a comment. A document is either a PD list
//!
//! ```text
//! pd X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]
//! ```
//!
//! where each crossing lists edge labels counterclockwise starting at the
//! incoming under-strand, or a dart listing
//!
//! ```text
//! surface genus=1 orientable=true
//! crossing 1: a b c d over=a
//! edge a c
//! edge b d sign=-1
//! ```
//!
//! Map documents used as weave input may also use `vertex <id>: <darts...>`
//! lines of any degree. An optional `version 1` line and an optional `surface`
//! line may precede the body.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::diagram::LinkDiagram;
use crate::error::{Error, Result};
use crate::map::canon::canonical_labels;
use crate::map::{CombinatorialMap, Dart, Sign, SurfaceType};

pub const FORMAT_VERSION: &str = "1";

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, column, message: message.into() }
}

/// Whitespace-separated words of a line with their 1-based columns.
fn words(text: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in text.char_indices() {
        match (c.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push((s + 1, &text[s..i]));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &text[s..]));
    }
    out
}

fn is_label(s: &str) -> bool {
    !s.is_empty() && s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '-')
}

#[derive(Default)]
struct RawVertex {
    darts: Vec<String>,
    over: Option<String>,
    line: usize,
}

#[derive(Default)]
struct Document {
    surface: Option<SurfaceType>,
    pd: Vec<(Vec<String>, usize)>,
    vertices: Vec<RawVertex>,
    edges: Vec<(String, String, Sign, usize)>,
    saw_crossing: bool,
    saw_vertex: bool,
}

fn parse_document(text: &str) -> Result<Document> {
    let mut doc = Document::default();
    let mut ids = HashMap::new();
    for (li, raw) in text.lines().enumerate() {
        let line = li + 1;
        let body = raw.split('#').next().unwrap_or("");
        let ws = words(body);
        let Some(&(col, head)) = ws.first() else { continue };
        match head {
            "version" => {
                if ws.len() != 2 || ws[1].1 != FORMAT_VERSION {
                    return Err(parse_err(line, col, format!("expected `version {FORMAT_VERSION}`")));
                }
            }
            "surface" => {
                if doc.surface.is_some() {
                    return Err(parse_err(line, col, "surface declared twice"));
                }
                doc.surface = Some(parse_surface(line, &ws[1..])?);
            }
            "pd" => {
                let offset = body.find("pd").unwrap() + 2;
                parse_pd_entries(line, offset, &body[offset..], &mut doc.pd)?;
            }
            "crossing" | "vertex" => {
                if ws.len() < 2 {
                    return Err(parse_err(line, col, format!("`{head}` needs an identifier")));
                }
                let (icol, id) = ws[1];
                let Some(id) = id.strip_suffix(':') else {
                    return Err(parse_err(line, icol, "identifier must end with `:`"));
                };
                if !is_label(id) {
                    return Err(parse_err(line, icol, format!("bad identifier `{id}`")));
                }
                if ids.insert(format!("{head}:{id}"), line).is_some() {
                    return Err(Error::Semantic(format!("line {line}: {head} `{id}` defined twice")));
                }
                let mut v = RawVertex { line, ..Default::default() };
                for &(c, w) in &ws[2..] {
                    if let Some(o) = w.strip_prefix("over=") {
                        if head == "vertex" {
                            return Err(parse_err(line, c, "`over=` is only allowed on crossing lines"));
                        }
                        if v.over.is_some() || !is_label(o) {
                            return Err(parse_err(line, c, "bad `over=` field"));
                        }
                        v.over = Some(o.to_string());
                    } else if is_label(w) {
                        v.darts.push(w.to_string());
                    } else {
                        return Err(parse_err(line, c, format!("bad dart name `{w}`")));
                    }
                }
                if head == "crossing" {
                    doc.saw_crossing = true;
                    if v.darts.len() != 4 {
                        return Err(Error::Semantic(format!(
                            "line {line}: crossing `{id}` has degree {} (expected 4)",
                            v.darts.len()
                        )));
                    }
                    if v.over.is_none() {
                        return Err(parse_err(line, col, "crossing line needs `over=<dart>`"));
                    }
                } else {
                    doc.saw_vertex = true;
                    if v.darts.is_empty() {
                        return Err(Error::Semantic(format!("line {line}: vertex `{id}` has no darts")));
                    }
                }
                doc.vertices.push(v);
            }
            "edge" => {
                if ws.len() < 3 || ws.len() > 4 {
                    return Err(parse_err(line, col, "expected `edge <dart> <dart> [sign=-1]`"));
                }
                for &(c, w) in &ws[1..3] {
                    if !is_label(w) {
                        return Err(parse_err(line, c, format!("bad dart name `{w}`")));
                    }
                }
                let sign = match ws.get(3) {
                    None => Sign::Positive,
                    Some(&(_, "sign=-1")) => Sign::Negative,
                    Some(&(_, "sign=1")) | Some(&(_, "sign=+1")) => Sign::Positive,
                    Some(&(c, w)) => return Err(parse_err(line, c, format!("bad sign field `{w}`"))),
                };
                doc.edges.push((ws[1].1.to_string(), ws[2].1.to_string(), sign, line));
            }
            other => return Err(parse_err(line, col, format!("unknown directive `{other}`"))),
        }
    }
    if !doc.pd.is_empty() && (!doc.vertices.is_empty() || !doc.edges.is_empty()) {
        return Err(Error::Semantic("PD entries cannot be mixed with dart form".into()));
    }
    if doc.pd.is_empty() && doc.vertices.is_empty() {
        return Err(Error::Semantic("document has no crossings".into()));
    }
    Ok(doc)
}

fn parse_surface(line: usize, fields: &[(usize, &str)]) -> Result<SurfaceType> {
    let mut genus = None;
    let mut orientable = None;
    for &(c, w) in fields {
        if let Some(g) = w.strip_prefix("genus=") {
            genus = Some(g.parse::<u64>().map_err(|_| parse_err(line, c, format!("bad genus `{g}`")))?);
        } else if let Some(o) = w.strip_prefix("orientable=") {
            orientable = Some(match o {
                "true" => true,
                "false" => false,
                _ => return Err(parse_err(line, c, format!("bad orientability `{o}`"))),
            });
        } else {
            return Err(parse_err(line, c, format!("unknown surface field `{w}`")));
        }
    }
    match (genus, orientable) {
        (Some(genus), Some(orientable)) => {
            if !orientable && genus == 0 {
                return Err(Error::Semantic(format!(
                    "line {line}: non-orientable surfaces have at least one cross-cap"
                )));
            }
            Ok(SurfaceType { genus, orientable })
        }
        _ => Err(parse_err(line, 1, "surface line needs `genus=` and `orientable=`")),
    }
}

fn parse_pd_entries(line: usize, base: usize, text: &str, out: &mut Vec<(Vec<String>, usize)>) -> Result<()> {
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let col = |i: usize| base + chars.get(i).map_or(text.len(), |c| c.0) + 1;
    let mut i = 0;
    let skip_ws = |i: &mut usize| {
        while *i < chars.len() && chars[*i].1.is_whitespace() {
            *i += 1;
        }
    };
    loop {
        skip_ws(&mut i);
        if i >= chars.len() {
            return Ok(());
        }
        if chars[i].1 != 'X' {
            return Err(parse_err(line, col(i), "expected `X[`"));
        }
        i += 1;
        if i >= chars.len() || chars[i].1 != '[' {
            return Err(parse_err(line, col(i), "expected `[` after `X`"));
        }
        i += 1;
        let mut labels = Vec::new();
        loop {
            skip_ws(&mut i);
            let start = i;
            while i < chars.len() && (chars[i].1.is_ascii_alphanumeric() || chars[i].1 == '_') {
                i += 1;
            }
            if start == i {
                return Err(parse_err(line, col(i), "expected an edge label"));
            }
            labels.push(chars[start..i].iter().map(|c| c.1).collect::<String>());
            skip_ws(&mut i);
            match chars.get(i).map(|c| c.1) {
                Some(',') => i += 1,
                Some(']') => {
                    i += 1;
                    break;
                }
                _ => return Err(parse_err(line, col(i), "expected `,` or `]`")),
            }
        }
        if labels.len() != 4 {
            return Err(Error::Semantic(format!("line {line}: PD crossing with {} labels (expected 4)", labels.len())));
        }
        out.push((labels, line));
    }
}

struct Built {
    map: CombinatorialMap,
    over: Option<Vec<Dart>>,
}

fn build(doc: &Document) -> Result<Built> {
    if !doc.pd.is_empty() {
        return build_pd(&doc.pd);
    }
    let mut index: HashMap<&str, Dart> = HashMap::new();
    let mut rotations = Vec::new();
    for v in &doc.vertices {
        let mut rot = Vec::new();
        for d in &v.darts {
            let next = index.len();
            if index.insert(d.as_str(), next).is_some() {
                return Err(Error::Semantic(format!("line {}: dart `{d}` is repeated", v.line)));
            }
            rot.push(next);
        }
        rotations.push(rot);
    }
    let n = index.len();
    let mut pairing = vec![usize::MAX; n];
    let mut signs = vec![Sign::Positive; n];
    for (a, b, s, line) in &doc.edges {
        let look =
            |x: &str| index.get(x).copied().ok_or_else(|| Error::Semantic(format!("line {line}: unknown dart `{x}`")));
        let (da, db) = (look(a)?, look(b)?);
        if da == db {
            return Err(Error::Semantic(format!("line {line}: edge pairs dart `{a}` with itself")));
        }
        if pairing[da] != usize::MAX || pairing[db] != usize::MAX {
            return Err(Error::Semantic(format!("line {line}: dart paired by more than one edge")));
        }
        pairing[da] = db;
        pairing[db] = da;
        signs[da] = *s;
        signs[db] = *s;
    }
    if let Some((name, _)) = index.iter().filter(|(_, &d)| pairing[d] == usize::MAX).min_by_key(|(_, &d)| d) {
        return Err(Error::Semantic(format!("dart `{name}` is not paired by any edge")));
    }
    let map = CombinatorialMap::from_parts(rotations, pairing, signs).map_err(|e| Error::Semantic(e.to_string()))?;
    let over = if doc.saw_crossing && !doc.saw_vertex {
        let mut over = Vec::new();
        for v in &doc.vertices {
            let name = v.over.as_deref().unwrap();
            if !v.darts.iter().any(|d| d == name) {
                return Err(Error::Semantic(format!("line {}: over dart `{name}` is not at this crossing", v.line)));
            }
            over.push(index[name]);
        }
        Some(over)
    } else {
        None
    };
    Ok(Built { map, over })
}

fn build_pd(entries: &[(Vec<String>, usize)]) -> Result<Built> {
    let mut occurrences: HashMap<&str, Vec<(Dart, usize)>> = HashMap::new();
    let mut order: Vec<&str> = Vec::new();
    for (i, (labels, line)) in entries.iter().enumerate() {
        for (k, l) in labels.iter().enumerate() {
            let occ = occurrences.entry(l.as_str()).or_default();
            if occ.is_empty() {
                order.push(l.as_str());
            }
            if occ.iter().any(|&(d, _)| d / 4 == i) {
                return Err(Error::Semantic(format!(
                    "line {line}: label `{l}` occurs twice in one crossing (degenerate loop)"
                )));
            }
            occ.push((4 * i + k, *line));
        }
    }
    let n = 4 * entries.len();
    let mut pairing = vec![usize::MAX; n];
    for l in order {
        let occ = &occurrences[l];
        if occ.len() != 2 {
            return Err(Error::Semantic(format!(
                "line {}: label `{l}` occurs {} time(s) (expected exactly 2)",
                occ[0].1,
                occ.len()
            )));
        }
        pairing[occ[0].0] = occ[1].0;
        pairing[occ[1].0] = occ[0].0;
    }
    let rotations = (0..entries.len()).map(|i| (4 * i..4 * i + 4).collect()).collect();
    let map = CombinatorialMap::from_parts(rotations, pairing, vec![Sign::Positive; n])
        .map_err(|e| Error::Semantic(e.to_string()))?;
    // positions 0 and 2 are the under-strand
    let over = (0..entries.len()).map(|i| 4 * i + 1).collect();
    Ok(Built { map, over: Some(over) })
}

/// Parses a diagram document (PD or crossing form).
pub fn parse_diagram(text: &str) -> Result<(LinkDiagram, Option<SurfaceType>)> {
    let doc = parse_document(text)?;
    if doc.saw_vertex {
        return Err(Error::Semantic("`vertex` lines describe maps, not diagrams".into()));
    }
    let built = build(&doc)?;
    let diagram = LinkDiagram::new(built.map, built.over.unwrap()).map_err(|e| Error::Semantic(e.to_string()))?;
    Ok((diagram, doc.surface))
}

/// Parses any document as a bare map, ignoring over-strand data.
pub fn parse_map(text: &str) -> Result<(CombinatorialMap, Option<SurfaceType>)> {
    let doc = parse_document(text)?;
    Ok((build(&doc)?.map, doc.surface))
}

fn write_edges(out: &mut String, map: &CombinatorialMap, label: &[usize]) {
    let mut edges: Vec<(usize, usize, Sign)> = map
        .edges()
        .map(|(a, b, s)| {
            let (x, y) = (label[a], label[b]);
            (x.min(y), x.max(y), s)
        })
        .collect();
    edges.sort_unstable();
    for (a, b, s) in edges {
        let _ = match s {
            Sign::Positive => writeln!(out, "edge {a} {b}"),
            Sign::Negative => writeln!(out, "edge {a} {b} sign=-1"),
        };
    }
}

fn write_header(out: &mut String, declared: Option<SurfaceType>) {
    let _ = writeln!(out, "version {FORMAT_VERSION}");
    if let Some(s) = declared {
        let _ = writeln!(out, "surface genus={} orientable={}", s.genus, s.orientable);
    }
}

/// Canonical dart form: darts renumbered by the canonical breadth-first order,
/// so relabelled copies of one diagram serialize identically.
pub fn serialize_diagram(diagram: &LinkDiagram, declared: Option<SurfaceType>) -> String {
    let marks = diagram.over_marks();
    let map = diagram.map();
    let (rows, label) = canonical_labels(map, Some(&marks));
    let mut out = String::new();
    write_header(&mut out, declared);
    for (i, row) in rows.iter().enumerate() {
        let over = row.iter().find(|&&d| marks[d]).unwrap();
        let darts: Vec<String> = row.iter().map(|&d| label[d].to_string()).collect();
        let _ = writeln!(out, "crossing {}: {} over={}", i + 1, darts.join(" "), label[*over]);
    }
    write_edges(&mut out, map, &label);
    out
}

/// Canonical `vertex` form of a bare map.
pub fn serialize_map(map: &CombinatorialMap, declared: Option<SurfaceType>) -> String {
    let (rows, label) = canonical_labels(map, None);
    let mut out = String::new();
    write_header(&mut out, declared);
    for (i, row) in rows.iter().enumerate() {
        let darts: Vec<String> = row.iter().map(|&d| label[d].to_string()).collect();
        let _ = writeln!(out, "vertex {}: {}", i + 1, darts.join(" "));
    }
    write_edges(&mut out, map, &label);
    out
}
