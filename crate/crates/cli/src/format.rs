//! Plain-text file formats.
//!
//! Digraphs: a `vertices <l1> <l2> ...` line (declaration order is the
//! canonical order), then `arc <from> <to>` lines. Undirected graphs use
//! `edge` instead of `arc`. `#` starts a comment; blank lines are ignored.
//!
//! Costs are tab separated: a header row of colour labels, then one row per
//! input vertex holding its label followed by one integer per colour.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use semihom::{CostMatrix, Digraph, GraphError, InstanceError, UndirectedGraph};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    Graph { line: usize, source: GraphError },
    #[error(transparent)]
    Costs(#[from] InstanceError),
    #[error("missing `vertices` line")]
    NoVertices,
}

fn syntax(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax {
        line,
        message: message.into(),
    }
}

/// Non-blank lines with comments stripped, numbered from 1.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then_some((i + 1, l))
    })
}

type LinePair = (usize, String, String);

/// Shared reader for both graph formats: the vertex labels and the pairs
/// found on `keyword` lines, with their line numbers.
fn parse_pairs(text: &str, keyword: &str) -> Result<(Vec<String>, Vec<LinePair>), FormatError> {
    let mut vertices: Option<Vec<String>> = None;
    let mut pairs = Vec::new();
    for (no, line) in content_lines(text) {
        let mut words = line.split_whitespace();
        let head = words.next().expect("line is non-empty");
        let rest: Vec<&str> = words.collect();
        match head {
            "vertices" if vertices.is_some() => return Err(syntax(no, "second `vertices` line")),
            "vertices" => vertices = Some(rest.iter().map(|s| s.to_string()).collect()),
            h if h == keyword => {
                if vertices.is_none() {
                    return Err(syntax(no, format!("`{keyword}` before `vertices`")));
                }
                let [a, b] = rest[..] else {
                    return Err(syntax(no, format!("`{keyword}` takes two labels")));
                };
                pairs.push((no, a.to_string(), b.to_string()));
            }
            other => return Err(syntax(no, format!("unknown keyword `{other}`"))),
        }
    }
    Ok((vertices.ok_or(FormatError::NoVertices)?, pairs))
}

pub fn parse_digraph(text: &str) -> Result<Digraph, FormatError> {
    let (labels, arcs) = parse_pairs(text, "arc")?;
    let mut d = Digraph::new(labels).map_err(|source| FormatError::Graph { line: 1, source })?;
    for (line, a, b) in arcs {
        d.add_arc_by_label(&a, &b)
            .map_err(|source| FormatError::Graph { line, source })?;
    }
    Ok(d)
}

pub fn write_digraph(d: &Digraph) -> String {
    let mut out = format!("vertices {}\n", d.labels().join(" "));
    for (u, v) in d.arcs() {
        writeln!(out, "arc {} {}", d.label(u), d.label(v)).expect("writing to a string");
    }
    out
}

pub fn parse_graph(text: &str) -> Result<UndirectedGraph, FormatError> {
    let (labels, edges) = parse_pairs(text, "edge")?;
    let mut g =
        UndirectedGraph::new(labels).map_err(|source| FormatError::Graph { line: 1, source })?;
    for (line, a, b) in edges {
        g.add_edge_by_label(&a, &b)
            .map_err(|source| FormatError::Graph { line, source })?;
    }
    Ok(g)
}

pub fn write_graph(g: &UndirectedGraph) -> String {
    let mut out = format!("vertices {}\n", g.labels().join(" "));
    for (u, v) in g.edges() {
        writeln!(out, "edge {} {}", g.label(u), g.label(v)).expect("writing to a string");
    }
    out
}

/// Reads a cost table. A leading empty header cell (a corner above the row
/// labels) is accepted and ignored.
pub fn parse_costs(text: &str) -> Result<CostMatrix, FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'));
    let (_, header) = lines.next().ok_or_else(|| syntax(1, "empty cost table"))?;
    let mut cols: Vec<String> = header.split('\t').map(|c| c.trim().to_string()).collect();
    if cols.first().is_some_and(String::is_empty) {
        cols.remove(0);
    }
    let mut rows = Vec::new();
    let mut entries = Vec::new();
    for (i, line) in lines {
        let cells: Vec<&str> = line.split('\t').map(str::trim).collect();
        if cells.len() != cols.len() + 1 {
            return Err(syntax(
                i + 1,
                format!("expected {} cells, found {}", cols.len() + 1, cells.len()),
            ));
        }
        rows.push(cells[0].to_string());
        for c in &cells[1..] {
            let v: i64 = c
                .parse()
                .map_err(|_| syntax(i + 1, format!("`{c}` is not an integer")))?;
            entries.push(Some(v));
        }
    }
    Ok(CostMatrix::new(rows, cols, entries)?)
}

pub fn write_costs(c: &CostMatrix) -> String {
    let mut out = c.cols().join("\t");
    out.push('\n');
    for (r, label) in c.rows().iter().enumerate() {
        out.push_str(label);
        for i in 0..c.cols().len() {
            write!(out, "\t{}", c.get(r, i)).expect("writing to a string");
        }
        out.push('\n');
    }
    out
}

/// Colour domains: `allow <vertex> <colour> <colour> ...` lines. Vertices
/// not listed keep every colour.
pub fn parse_allowed(
    text: &str,
    d: &Digraph,
    h: &Digraph,
) -> Result<BTreeMap<usize, BTreeSet<usize>>, FormatError> {
    let mut out = BTreeMap::new();
    for (no, line) in content_lines(text) {
        let words: Vec<&str> = line.split_whitespace().collect();
        let ["allow", vertex, colours @ ..] = &words[..] else {
            return Err(syntax(no, "expected `allow <vertex> <colour>...`"));
        };
        let unknown = |l: &str| FormatError::Graph {
            line: no,
            source: GraphError::UnknownVertex(l.to_string()),
        };
        let u = d.index_of(vertex).ok_or_else(|| unknown(vertex))?;
        let set = colours
            .iter()
            .map(|c| h.index_of(c).ok_or_else(|| unknown(c)))
            .collect::<Result<BTreeSet<_>, _>>()?;
        if out.insert(u, set).is_some() {
            return Err(syntax(no, format!("vertex `{vertex}` listed twice")));
        }
    }
    Ok(out)
}
