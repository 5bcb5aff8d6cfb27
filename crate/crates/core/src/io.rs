//! Text formats.
//!
//! Adjacency format: a header line `n m`, then `m` lines `u v` with `u < v`,
//! 0-based and sorted lexicographically. A pole file appends one line
//! `STUBS s1 s2 [s3]` listing stub attachment vertices in order. DOT output
//! draws stubs as dashed half-edges to phantom nodes `stub0`, `stub1`, ...

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Graph, Pole};

pub fn write_adjacency(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn write_pole(p: &Pole) -> String {
    let mut out = write_adjacency(p.inner());
    out.push_str("STUBS");
    for s in p.stubs() {
        write!(out, " {s}").unwrap();
    }
    out.push('\n');
    out
}

fn parse_err<T>(line: usize, message: impl Into<String>) -> Result<T> {
    Err(Error::Parse {
        line,
        message: message.into(),
    })
}

fn parse_numbers(line_no: usize, line: &str, expected: usize) -> Result<Vec<usize>> {
    let fields: Vec<&str> = line.split_whitespace().collect();
    if fields.len() != expected {
        return parse_err(
            line_no,
            format!("expected {expected} fields, found {}", fields.len()),
        );
    }
    fields
        .iter()
        .map(|f| {
            f.parse::<usize>()
                .or_else(|_| parse_err(line_no, format!("not a nonnegative integer: {f:?}")))
        })
        .collect()
}

/// Parses the edge section, returning the graph and the remaining lines
/// (with their 1-based numbers).
fn parse_graph_lines<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
) -> Result<Graph> {
    let Some((line_no, header)) = lines.next() else {
        return parse_err(1, "missing header line \"n m\"");
    };
    let nm = parse_numbers(line_no, header, 2)?;
    let (n, m) = (nm[0], nm[1]);
    let mut edges = Vec::with_capacity(m);
    let mut last = None;
    for i in 0..m {
        let Some((line_no, line)) = lines.next() else {
            return parse_err(line_no + i + 1, format!("expected {m} edge lines, found {i}"));
        };
        let uv = parse_numbers(line_no, line, 2)?;
        let (u, v) = (uv[0], uv[1]);
        if u >= v {
            return parse_err(line_no, format!("edge {u} {v} must satisfy u < v"));
        }
        if v >= n {
            return parse_err(line_no, format!("vertex {v} out of range for n = {n}"));
        }
        if last.is_some_and(|prev| prev >= (u, v)) {
            return parse_err(line_no, format!("edge {u} {v} is not in sorted order"));
        }
        last = Some((u, v));
        edges.push((u, v));
    }
    Graph::new(n, edges).or_else(|e| parse_err(line_no, e.to_string()))
}

fn numbered(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().map(|(i, l)| (i + 1, l))
}

pub fn parse_adjacency(text: &str) -> Result<Graph> {
    let mut lines = numbered(text);
    let g = parse_graph_lines(&mut lines)?;
    if let Some((line_no, line)) = lines.find(|(_, l)| !l.trim().is_empty()) {
        return parse_err(line_no, format!("unexpected trailing content {line:?}"));
    }
    Ok(g)
}

pub fn parse_pole(text: &str) -> Result<Pole> {
    let mut lines = numbered(text);
    let inner = parse_graph_lines(&mut lines)?;
    let Some((line_no, line)) = lines.find(|(_, l)| !l.trim().is_empty()) else {
        return parse_err(text.lines().count() + 1, "missing STUBS line");
    };
    let mut fields = line.split_whitespace();
    if fields.next() != Some("STUBS") {
        return parse_err(line_no, "expected a line starting with STUBS");
    }
    let stubs = fields
        .map(|f| {
            f.parse::<usize>()
                .or_else(|_| parse_err(line_no, format!("not a vertex: {f:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    if let Some((extra, _)) = lines.find(|(_, l)| !l.trim().is_empty()) {
        return parse_err(extra, "unexpected content after STUBS line");
    }
    Pole::new(inner, stubs).or_else(|e| parse_err(line_no, e.to_string()))
}

pub fn write_dot(g: &Graph) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.order() {
        writeln!(out, "  {v};").unwrap();
    }
    for &(u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}

pub fn write_pole_dot(p: &Pole) -> String {
    let mut out = write_dot(p.inner());
    out.truncate(out.len() - 2);
    for (i, s) in p.stubs().iter().enumerate() {
        writeln!(out, "  stub{i} [label=\"stub{i}\", shape=plaintext];").unwrap();
        writeln!(out, "  {s} -- stub{i} [style=dashed];").unwrap();
    }
    out.push_str("}\n");
    out
}
