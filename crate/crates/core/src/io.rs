//! Plain-text file formats for families, arrangements and drawings.
//!
//! Files are TOML documents whose first key is `format`, naming the kind of
//! file and its version. Writers emit a fixed layout so output is
//! byte-identical for identical input. Semantic errors (unknown elements,
//! duplicate states) carry the line and column of the offending value.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::ops::Range;

use serde::Deserialize;
use toml::Spanned;

use crate::arrangement::{Permutation, QuadrantArrangement};
use crate::drawing::GridDrawing;
use crate::error::{Error, Result};
use crate::family::{build_graph, LearningGraph, SetFamily, StateSet, Universe};

pub const FAMILY_FORMAT: &str = "uquad-family/1";
pub const ARRANGEMENT_FORMAT: &str = "uquad-arrangement/1";
pub const DRAWING_FORMAT: &str = "uquad-drawing/1";

fn line_col(text: &str, offset: usize) -> (usize, usize) {
    let before = &text[..offset.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let col = before
        .rfind('\n')
        .map_or(before.len(), |i| before.len() - i - 1)
        + 1;
    (line, col)
}

fn at(text: &str, span: Range<usize>, message: impl std::fmt::Display) -> Error {
    let (line, col) = line_col(text, span.start);
    Error::Parse(format!("line {line}, column {col}: {message}"))
}

fn parse_toml<'de, T: Deserialize<'de>>(text: &'de str) -> Result<T> {
    toml::from_str(text).map_err(|e| match e.span() {
        Some(span) => at(text, span, e.message()),
        None => Error::Parse(e.message().to_string()),
    })
}

fn check_format(text: &str, format: &Spanned<String>, expected: &str) -> Result<()> {
    if format.get_ref() != expected {
        return Err(at(
            text,
            format.span(),
            format!("expected format {expected:?}, found {:?}", format.get_ref()),
        ));
    }
    Ok(())
}

fn parse_universe(text: &str, names: &[Spanned<String>]) -> Result<Universe> {
    for (i, name) in names.iter().enumerate() {
        if name.get_ref().is_empty() {
            return Err(at(text, name.span(), "empty element name"));
        }
        if names[..i].iter().any(|n| n.get_ref() == name.get_ref()) {
            return Err(at(
                text,
                name.span(),
                format!("duplicate element {:?}", name.get_ref()),
            ));
        }
    }
    Universe::new(names.iter().map(|n| n.get_ref().clone()))
        .map_err(|e| Error::Parse(e.to_string()))
}

fn parse_state(text: &str, universe: &Universe, names: &[Spanned<String>]) -> Result<StateSet> {
    let mut state = StateSet::EMPTY;
    for name in names {
        let e = universe.position(name.get_ref()).ok_or_else(|| {
            at(
                text,
                name.span(),
                format!("unknown element {:?}", name.get_ref()),
            )
        })?;
        if state.contains(e) {
            return Err(at(
                text,
                name.span(),
                format!("element {:?} repeated", name.get_ref()),
            ));
        }
        state = state.with(e);
    }
    Ok(state)
}

/// TOML basic string.
fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\t' => out.push_str("\\t"),
            c if c.is_control() => write!(out, "\\u{:04X}", c as u32).unwrap(),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

fn name_list(universe: &Universe, elements: impl Iterator<Item = usize>) -> String {
    let items: Vec<String> = elements.map(|e| quote(universe.name(e))).collect();
    format!("[{}]", items.join(", "))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FamilyFile {
    format: Spanned<String>,
    universe: Vec<Spanned<String>>,
    states: Vec<Spanned<Vec<Spanned<String>>>>,
}

pub fn parse_family(text: &str) -> Result<SetFamily> {
    let file: FamilyFile = parse_toml(text)?;
    check_format(text, &file.format, FAMILY_FORMAT)?;
    let universe = parse_universe(text, &file.universe)?;
    let mut seen: HashMap<StateSet, usize> = HashMap::new();
    let mut states = Vec::with_capacity(file.states.len());
    for (i, entry) in file.states.iter().enumerate() {
        let s = parse_state(text, &universe, entry.get_ref())?;
        if let Some(first) = seen.insert(s, i) {
            return Err(at(
                text,
                entry.span(),
                format!(
                    "duplicate state {} (first given as state {first})",
                    universe.format_state(s)
                ),
            ));
        }
        states.push(s);
    }
    SetFamily::new(universe, states)
}

pub fn write_family(family: &SetFamily) -> String {
    let u = family.universe();
    let mut out = String::new();
    writeln!(out, "format = {}", quote(FAMILY_FORMAT)).unwrap();
    writeln!(out, "universe = {}", name_list(u, 0..u.len())).unwrap();
    writeln!(out, "states = [").unwrap();
    for &s in family.states() {
        writeln!(out, "  {},", name_list(u, s.elements())).unwrap();
    }
    writeln!(out, "]").unwrap();
    out
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CornerEntry {
    name: Spanned<String>,
    x: i64,
    y: i64,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ArrangementFile {
    format: Spanned<String>,
    names: Option<Vec<Spanned<String>>>,
    permutation: Option<Spanned<Vec<usize>>>,
    corners: Option<Spanned<Vec<CornerEntry>>>,
}

/// Reads either form and returns the canonical arrangement (universe in x
/// order, rank corners).
pub fn parse_arrangement(text: &str) -> Result<QuadrantArrangement> {
    let file: ArrangementFile = parse_toml(text)?;
    check_format(text, &file.format, ARRANGEMENT_FORMAT)?;
    match (file.names, file.permutation, file.corners) {
        (Some(names), Some(perm), None) => {
            let universe = parse_universe(text, &names)?;
            if perm.get_ref().len() != universe.len() {
                return Err(at(
                    text,
                    perm.span(),
                    format!(
                        "permutation has {} entries for {} names",
                        perm.get_ref().len(),
                        universe.len()
                    ),
                ));
            }
            let pi =
                Permutation::new(perm.get_ref().clone()).map_err(|e| at(text, perm.span(), e))?;
            QuadrantArrangement::from_permutation(universe, &pi)
        }
        (None, None, Some(corners)) => {
            let names: Vec<Spanned<String>> =
                corners.get_ref().iter().map(|c| c.name.clone()).collect();
            let universe = parse_universe(text, &names)?;
            let points = corners.get_ref().iter().map(|c| (c.x, c.y)).collect();
            let a = QuadrantArrangement::from_corners(universe, points)
                .map_err(|e| at(text, corners.span(), e))?;
            Ok(a.canonical())
        }
        _ => Err(Error::Parse(
            "arrangement needs either `names` with `permutation`, or `corners`".into(),
        )),
    }
}

/// Writes the compact `names` + `permutation` form of the canonical
/// arrangement.
pub fn write_arrangement(arrangement: &QuadrantArrangement) -> String {
    let canonical = arrangement.canonical();
    let u = canonical.universe();
    let mut out = String::new();
    writeln!(out, "format = {}", quote(ARRANGEMENT_FORMAT)).unwrap();
    writeln!(out, "names = {}", name_list(u, 0..u.len())).unwrap();
    let pi: Vec<String> = canonical
        .permutation()
        .as_slice()
        .iter()
        .map(|v| v.to_string())
        .collect();
    writeln!(out, "permutation = [{}]", pi.join(", ")).unwrap();
    out
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct VertexEntry {
    state: Vec<Spanned<String>>,
    x: i64,
    y: i64,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct EdgeEntry {
    from: usize,
    to: usize,
    label: Spanned<String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct DrawingFile {
    format: Spanned<String>,
    universe: Vec<Spanned<String>>,
    vertices: Vec<Spanned<VertexEntry>>,
    edges: Spanned<Vec<Spanned<EdgeEntry>>>,
}

/// Reads a drawing and rebuilds its learning graph from the vertex states.
/// The edge list must match that graph exactly; the returned drawing is
/// indexed in the graph's canonical vertex order.
pub fn parse_drawing(text: &str) -> Result<(LearningGraph, GridDrawing)> {
    let file: DrawingFile = parse_toml(text)?;
    check_format(text, &file.format, DRAWING_FORMAT)?;
    let universe = parse_universe(text, &file.universe)?;
    let mut states = Vec::with_capacity(file.vertices.len());
    let mut seen: HashMap<StateSet, usize> = HashMap::new();
    for (i, v) in file.vertices.iter().enumerate() {
        let s = parse_state(text, &universe, &v.get_ref().state)?;
        if let Some(first) = seen.insert(s, i) {
            return Err(at(
                text,
                v.span(),
                format!(
                    "duplicate state {} (first given as vertex {first})",
                    universe.format_state(s)
                ),
            ));
        }
        states.push(s);
    }
    let family = SetFamily::new(universe.clone(), states.clone())?;
    let graph = build_graph(&family)?;

    let mut coords = vec![(0, 0); states.len()];
    for (v, s) in file.vertices.iter().zip(&states) {
        let idx = graph.vertex_of(*s).expect("graph has a vertex per state");
        coords[idx] = (v.get_ref().x, v.get_ref().y);
    }

    let mut listed = Vec::with_capacity(file.edges.get_ref().len());
    for entry in file.edges.get_ref() {
        let e = entry.get_ref();
        if e.from >= states.len() || e.to >= states.len() {
            return Err(at(text, entry.span(), "edge endpoint out of range"));
        }
        let label = universe.position(e.label.get_ref()).ok_or_else(|| {
            at(
                text,
                e.label.span(),
                format!("unknown element {:?}", e.label.get_ref()),
            )
        })?;
        let (from, to) = (states[e.from], states[e.to]);
        if from.contains(label) || from.with(label) != to {
            return Err(at(
                text,
                entry.span(),
                format!(
                    "edge {} -> {} is not labelled by adding {:?}",
                    universe.format_state(from),
                    universe.format_state(to),
                    e.label.get_ref()
                ),
            ));
        }
        listed.push((
            graph.vertex_of(from).unwrap(),
            graph.vertex_of(to).unwrap(),
            label,
        ));
    }
    listed.sort_unstable();
    let mut expected: Vec<(usize, usize, usize)> = graph
        .edges()
        .iter()
        .map(|e| (e.from, e.to, e.label))
        .collect();
    expected.sort_unstable();
    if listed != expected {
        return Err(at(
            text,
            file.edges.span(),
            format!(
                "edge list has {} edges but the states determine {} (missing or duplicate edges)",
                listed.len(),
                expected.len()
            ),
        ));
    }
    Ok((graph, GridDrawing::new(coords)))
}

pub fn write_drawing(graph: &LearningGraph, drawing: &GridDrawing) -> String {
    let u = graph.universe();
    let mut out = String::new();
    writeln!(out, "format = {}", quote(DRAWING_FORMAT)).unwrap();
    writeln!(out, "universe = {}", name_list(u, 0..u.len())).unwrap();
    writeln!(out, "vertices = [").unwrap();
    for (v, &s) in graph.vertices().iter().enumerate() {
        let (x, y) = drawing.get(v);
        writeln!(
            out,
            "  {{ state = {}, x = {x}, y = {y} }},",
            name_list(u, s.elements())
        )
        .unwrap();
    }
    writeln!(out, "]").unwrap();
    writeln!(out, "edges = [").unwrap();
    for e in graph.edges() {
        writeln!(
            out,
            "  {{ from = {}, to = {}, label = {} }},",
            e.from,
            e.to,
            quote(u.name(e.label))
        )
        .unwrap();
    }
    writeln!(out, "]").unwrap();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_roundtrip() {
        let f = SetFamily::prefix_suffix(Universe::new(["a", "b \"q\"", "c"]).unwrap());
        let text = write_family(&f);
        assert!(text.starts_with("format = \"uquad-family/1\"\n"));
        assert_eq!(parse_family(&text).unwrap(), f);
    }

    #[test]
    fn unknown_element_is_located() {
        let text =
            "format = \"uquad-family/1\"\nuniverse = [\"a\"]\nstates = [[], [\"a\"],\n  [\"z\"]]\n";
        let err = parse_family(text).unwrap_err().to_string();
        assert_eq!(err, "line 4, column 4: unknown element \"z\"");
    }

    #[test]
    fn duplicate_state_is_located() {
        let text = "format = \"uquad-family/1\"\nuniverse = [\"a\", \"b\"]\nstates = [[], [\"a\", \"b\"], [\"b\", \"a\"]]\n";
        let err = parse_family(text).unwrap_err().to_string();
        assert!(
            err.starts_with("line 3, column 27: duplicate state {a,b}"),
            "{err}"
        );
    }

    #[test]
    fn wrong_format_and_syntax() {
        let err = parse_family("format = \"uquad-drawing/1\"\nuniverse = []\nstates = [[]]\n")
            .unwrap_err();
        assert!(err
            .to_string()
            .starts_with("line 1, column 10: expected format"));
        let err = parse_family("format = \"uquad-family/1\"\nuniverse = [\n").unwrap_err();
        assert!(err.to_string().starts_with("line "), "{err}");
    }

    #[test]
    fn arrangement_forms_agree() {
        let compact = "format = \"uquad-arrangement/1\"\nnames = [\"a\", \"b\", \"c\"]\npermutation = [2, 0, 1]\n";
        let corners = "format = \"uquad-arrangement/1\"\ncorners = [\n  { name = \"b\", x = 50, y = -1 },\n  { name = \"a\", x = 7, y = 9 },\n  { name = \"c\", x = 99, y = 3 },\n]\n";
        let a = parse_arrangement(compact).unwrap();
        let b = parse_arrangement(corners).unwrap();
        assert_eq!(a, b);
        assert_eq!(write_arrangement(&b), compact);
    }

    #[test]
    fn arrangement_errors() {
        let bad =
            "format = \"uquad-arrangement/1\"\nnames = [\"a\", \"b\"]\npermutation = [1, 1]\n";
        assert!(parse_arrangement(bad)
            .unwrap_err()
            .to_string()
            .starts_with("line 3, column 15"));
        let tie = "format = \"uquad-arrangement/1\"\ncorners = [{ name = \"a\", x = 1, y = 1 }, { name = \"b\", x = 1, y = 2 }]\n";
        assert!(parse_arrangement(tie)
            .unwrap_err()
            .to_string()
            .contains("x axis"));
        let neither = "format = \"uquad-arrangement/1\"\n";
        assert!(parse_arrangement(neither).is_err());
    }

    #[test]
    fn drawing_roundtrip_and_edge_check() {
        let f = SetFamily::power_set(Universe::letters(2).unwrap()).unwrap();
        let g = build_graph(&f).unwrap();
        let d = GridDrawing::new(vec![(0, 0), (1, 0), (0, 1), (2, 2)]);
        let text = write_drawing(&g, &d);
        let (g2, d2) = parse_drawing(&text).unwrap();
        assert_eq!((g2, d2), (g, d));

        let missing = text.replace("  { from = 0, to = 1, label = \"a\" },\n", "");
        assert!(parse_drawing(&missing)
            .unwrap_err()
            .to_string()
            .contains("edge list has 3 edges"));
        let mislabeled = text.replace(
            "{ from = 0, to = 1, label = \"a\" }",
            "{ from = 0, to = 1, label = \"b\" }",
        );
        assert!(parse_drawing(&mislabeled)
            .unwrap_err()
            .to_string()
            .contains("not labelled"));
    }
}
