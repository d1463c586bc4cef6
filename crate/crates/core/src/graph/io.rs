//! Edge-list text format: a header line `n m`, then `m` lines `u v` with
//! 0-based ids. Writers emit `u < v`, sorted lexicographically.

use std::fmt::Write as _;

use thiserror::Error;

use super::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: malformed header, expected `n m`")]
    MalformedHeader { line: usize },
    #[error("line {line}: malformed edge, expected `u v`")]
    MalformedLine { line: usize },
    #[error("line {line}: endpoint {vertex} out of range for n = {n}")]
    EndpointOutOfRange { line: usize, vertex: usize, n: usize },
    #[error("line {line}: duplicate edge ({u},{v})")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("line {line}: self-loop at {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("expected {expected} edges, found {found}")]
    EdgeCountMismatch { expected: usize, found: usize },
    #[error("empty input")]
    Empty,
}

fn two_numbers(line: &str) -> Option<(usize, usize)> {
    let mut it = line.split_whitespace();
    let a = it.next()?.parse().ok()?;
    let b = it.next()?.parse().ok()?;
    if it.next().is_some() {
        return None;
    }
    Some((a, b))
}

/// Parses the edge-list format. Blank lines are ignored; line numbers in
/// errors are 1-based.
pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines.next().ok_or(ParseError::Empty)?;
    let (n, m) = two_numbers(header).ok_or(ParseError::MalformedHeader { line: hline })?;
    let mut g = Graph::new(n);
    let mut found = 0;
    for (line, l) in lines {
        let (u, v) = two_numbers(l).ok_or(ParseError::MalformedLine { line })?;
        for vertex in [u, v] {
            if vertex >= n {
                return Err(ParseError::EndpointOutOfRange { line, vertex, n });
            }
        }
        if u == v {
            return Err(ParseError::SelfLoop { line, vertex: u });
        }
        if g.has_edge(u, v) {
            return Err(ParseError::DuplicateEdge { line, u, v });
        }
        g.add_edge(u, v);
        found += 1;
    }
    if found != m {
        return Err(ParseError::EdgeCountMismatch { expected: m, found });
    }
    Ok(g)
}

pub fn write_graph(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}
