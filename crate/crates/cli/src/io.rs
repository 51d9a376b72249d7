//! Text formats for graphs, bipartite graphs and triple systems.
//!
//! Graphs: a header line `n <count>`, then one `u v` edge per line, 0-indexed.
//! Bipartite graphs: a header line `bipartite <m> <n>`, then one `a j` edge
//! per line with `a < m` on the left and `j < n` on the right. Triple systems:
//! a JSON object `{"n": 4, "edges": [[0, 1, 2], ...]}`.
//!
//! Blank lines and lines starting with `#` are ignored in the text formats.
//! Writers emit edges in ascending order, so written files are canonical.

use std::fmt::{self, Write as _};
use std::fs;
use std::path::Path;

use berge_forge_core::search::Extremal;
use berge_forge_core::{BipartiteGraph, Graph, TripleSystem};
use serde::Deserialize;

use crate::{CliError, Result};

/// Malformed input, with a 1-based position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

fn err(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError { line, column, message: message.into() }
}

/// Whitespace-separated tokens of one line with their 1-based columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices().chain([(line.len(), ' ')]) {
        match (c.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push((line[..s].chars().count() + 1, &line[s..i]));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    out
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
}

fn number(line: usize, (col, tok): (usize, &str), what: &str) -> Result<usize, ParseError> {
    tok.parse().map_err(|_| err(line, col, format!("expected {what}, found {tok:?}")))
}

/// Parses `"<keyword> <a> [<b>]"` header fields.
fn header<'a>(lines: &mut impl Iterator<Item = (usize, &'a str)>, keyword: &str, fields: usize) -> Result<(usize, Vec<usize>), ParseError> {
    let Some((no, line)) = lines.next() else {
        return Err(err(1, 1, format!("missing header \"{keyword} ...\"")));
    };
    let toks = tokens(line);
    if toks.first().map(|t| t.1) != Some(keyword) {
        let col = toks.first().map_or(1, |t| t.0);
        return Err(err(no, col, format!("expected header \"{keyword} ...\"")));
    }
    if toks.len() != fields + 1 {
        let col = toks.get(fields + 1).map_or(line.chars().count() + 1, |t| t.0);
        return Err(err(no, col, format!("header \"{keyword}\" takes {fields} number(s)")));
    }
    let values = toks[1..].iter().map(|&t| number(no, t, "a vertex count")).collect::<Result<_, _>>()?;
    Ok((no, values))
}

fn edge_line(no: usize, line: &str, limits: (usize, usize)) -> Result<(usize, usize), ParseError> {
    let toks = tokens(line);
    if toks.len() != 2 {
        let col = toks.get(2).map_or(line.chars().count() + 1, |t| t.0);
        return Err(err(no, col, format!("expected two vertices, found {} token(s)", toks.len())));
    }
    let a = number(no, toks[0], "a vertex")?;
    let b = number(no, toks[1], "a vertex")?;
    if a >= limits.0 {
        return Err(err(no, toks[0].0, format!("vertex {a} out of range (bound {})", limits.0)));
    }
    if b >= limits.1 {
        return Err(err(no, toks[1].0, format!("vertex {b} out of range (bound {})", limits.1)));
    }
    Ok((a, b))
}

pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut lines = content_lines(text);
    let (_, h) = header(&mut lines, "n", 1)?;
    let n = h[0];
    let mut g = Graph::new(n);
    for (no, line) in lines {
        let (u, v) = edge_line(no, line, (n, n))?;
        if u == v {
            return Err(err(no, 1, format!("loop at vertex {u}")));
        }
        if !g.add_edge(u, v).map_err(|e| err(no, 1, e.to_string()))? {
            return Err(err(no, 1, format!("duplicate edge {} {}", u.min(v), u.max(v))));
        }
    }
    Ok(g)
}

pub fn parse_bipartite(text: &str) -> Result<BipartiteGraph, ParseError> {
    let mut lines = content_lines(text);
    let (_, h) = header(&mut lines, "bipartite", 2)?;
    let (m, n) = (h[0], h[1]);
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (no, line) in lines {
        let e = edge_line(no, line, (m, n))?;
        if edges.contains(&e) {
            return Err(err(no, 1, format!("duplicate edge {} {}", e.0, e.1)));
        }
        edges.push(e);
    }
    BipartiteGraph::from_edges(m, n, edges).map_err(|e| err(1, 1, e.to_string()))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TripleFile {
    n: usize,
    edges: Vec<[usize; 3]>,
}

pub fn parse_triples(text: &str) -> Result<TripleSystem, ParseError> {
    let file: TripleFile = serde_json::from_str(text).map_err(|e| err(e.line(), e.column(), e.to_string()))?;
    let mut seen = std::collections::BTreeSet::new();
    for (i, t) in file.edges.iter().enumerate() {
        let mut s = *t;
        s.sort_unstable();
        let bad = |msg: String| {
            let (line, column) = locate_edge(text, i);
            err(line, column, format!("edges[{i}]: {msg}"))
        };
        if let Some(&v) = s.iter().find(|&&v| v >= file.n) {
            return Err(bad(format!("vertex {v} out of range for n = {}", file.n)));
        }
        if s[0] == s[1] || s[1] == s[2] {
            return Err(bad("triple repeats a vertex".into()));
        }
        if !seen.insert(s) {
            return Err(bad("duplicate triple".into()));
        }
    }
    TripleSystem::from_edges(file.n, file.edges).map_err(|e| err(1, 1, e.to_string()))
}

/// Position of the `i`-th inner `[` after the `"edges"` key.
fn locate_edge(text: &str, i: usize) -> (usize, usize) {
    let start = text.find("\"edges\"").unwrap_or(0);
    let Some(outer) = text[start..].find('[').map(|p| start + p) else {
        return (1, 1);
    };
    let offset = text[outer + 1..]
        .match_indices('[')
        .nth(i)
        .map_or(outer, |(p, _)| outer + 1 + p);
    let before = &text[..offset];
    let line = before.matches('\n').count() + 1;
    let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    (line, column)
}

pub fn write_graph(g: &Graph) -> String {
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    edges.sort_unstable();
    let mut out = format!("n {}\n", g.n());
    for (u, v) in edges {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn write_bipartite(b: &BipartiteGraph) -> String {
    let mut edges = b.edges().to_vec();
    edges.sort_unstable();
    let mut out = format!("bipartite {} {}\n", b.left(), b.right());
    for (a, j) in edges {
        writeln!(out, "{a} {j}").unwrap();
    }
    out
}

pub fn write_triples(h: &TripleSystem) -> String {
    let mut edges: Vec<[usize; 3]> = h.edges().to_vec();
    edges.iter_mut().for_each(|t| t.sort_unstable());
    edges.sort_unstable();
    let mut out = format!("{{\n  \"n\": {},\n  \"edges\": [", h.n());
    for (i, [a, b, c]) in edges.iter().enumerate() {
        let sep = if i + 1 == edges.len() { "" } else { "," };
        write!(out, "\n    [{a}, {b}, {c}]{sep}").unwrap();
    }
    out.push_str(if edges.is_empty() { "]\n}\n" } else { "\n  ]\n}\n" });
    out
}

/// Parses any of the three formats, picked by the first meaningful token.
pub fn parse_object(text: &str) -> Result<Extremal, ParseError> {
    let first = content_lines(text).next().map(|(_, l)| l.trim_start());
    match first {
        Some(l) if l.starts_with('{') => parse_triples(text).map(Extremal::Triples),
        Some(l) if l.starts_with("bipartite") => parse_bipartite(text).map(Extremal::Bipartite),
        _ => parse_graph(text).map(Extremal::Graph),
    }
}

pub fn write_object(x: &Extremal) -> String {
    match x {
        Extremal::Graph(g) => write_graph(g),
        Extremal::Bipartite(b) => write_bipartite(b),
        Extremal::Triples(h) => write_triples(h),
    }
}

/// File extension matching [`write_object`].
pub fn extension(x: &Extremal) -> &'static str {
    match x {
        Extremal::Triples(_) => "json",
        _ => "txt",
    }
}

pub fn read_object(path: &Path) -> Result<Extremal> {
    let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    parse_object(&text).map_err(|e| CliError::Parse { path: path.display().to_string(), source: e })
}

pub fn write_object_to(path: &Path, x: &Extremal) -> Result<()> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
    }
    fs::write(path, write_object(x)).map_err(|e| CliError::io(path, e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_round_trip() {
        let g = Graph::from_edges(4, [(2, 3), (0, 1), (1, 2)]).unwrap();
        let text = write_graph(&g);
        assert_eq!(text, "n 4\n0 1\n1 2\n2 3\n");
        assert_eq!(parse_graph(&text).unwrap(), g);
    }

    #[test]
    fn graph_errors_carry_positions() {
        let e = parse_graph("n 3\n0 1\n1 x\n").unwrap_err();
        assert_eq!((e.line, e.column), (3, 3));
        let e = parse_graph("# c\nn 3\n\n0 3\n").unwrap_err();
        assert_eq!((e.line, e.column), (4, 3));
        let e = parse_graph("n 3\n0 1 2\n").unwrap_err();
        assert_eq!((e.line, e.column), (2, 5));
        let e = parse_graph("m 3\n").unwrap_err();
        assert_eq!((e.line, e.column), (1, 1));
        assert!(parse_graph("n 3\n1 0\n0 1\n").unwrap_err().message.contains("duplicate"));
        assert!(parse_graph("n 3\n1 1\n").unwrap_err().message.contains("loop"));
        assert!(parse_graph("").is_err());
    }

    #[test]
    fn bipartite_round_trip() {
        let b = BipartiteGraph::from_edges(2, 3, [(1, 2), (0, 0)]).unwrap();
        let text = write_bipartite(&b);
        assert_eq!(text, "bipartite 2 3\n0 0\n1 2\n");
        assert_eq!(parse_bipartite(&text).unwrap(), b);
        let e = parse_bipartite("bipartite 2 3\n2 0\n").unwrap_err();
        assert_eq!((e.line, e.column), (2, 1));
    }

    #[test]
    fn triples_round_trip() {
        let h = TripleSystem::from_edges(5, [[0, 1, 2], [1, 3, 4]]).unwrap();
        let text = write_triples(&h);
        assert_eq!(parse_triples(&text).unwrap(), h);
        let empty = TripleSystem::empty(3);
        assert_eq!(parse_triples(&write_triples(&empty)).unwrap(), empty);
    }

    #[test]
    fn triple_errors_carry_positions() {
        let e = parse_triples("{\"n\": 4,\n \"edges\": [[0,1,2],\n  [0,1,4]]}").unwrap_err();
        assert_eq!((e.line, e.column), (3, 3));
        assert!(e.message.contains("edges[1]"));
        let e = parse_triples("{\"n\": 4, \"edges\": [[0,1,1]]}").unwrap_err();
        assert!(e.message.contains("repeats"));
        let e = parse_triples("{\"n\": 4, \"edges\": [[0,1,2],[2,1,0]]}").unwrap_err();
        assert!(e.message.contains("duplicate"));
        let e = parse_triples("{\"n\": 4,\n \"edges\": [[0,1]]}").unwrap_err();
        assert_eq!(e.line, 2);
        assert!(parse_triples("{\"n\": 4, \"edges\": [], \"x\": 1}").is_err());
    }

    #[test]
    fn objects_are_sniffed() {
        assert!(matches!(parse_object("n 2\n0 1\n"), Ok(Extremal::Graph(_))));
        assert!(matches!(parse_object("bipartite 1 1\n0 0\n"), Ok(Extremal::Bipartite(_))));
        assert!(matches!(parse_object("  {\"n\": 3, \"edges\": [[0,1,2]]}"), Ok(Extremal::Triples(_))));
    }
}
