//! Plain-text edge-list format.
//!
//! Line 1 is `n m`; the next `m` significant lines are `u v` with
//! `1 <= u < v <= n`, whitespace-separated. Everything from `#` to the end of
//! a line is a comment; blank lines are skipped. Writing always emits the
//! canonical form — header plus edges in ascending order, no comments — so
//! `write(read(text))` reproduces the canonical bytes of any valid input.

use crate::graph::{GraphError, SimpleGraph};

use thiserror::Error;

/// Rejection reasons for edge-list text, each naming the offending line.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("missing header line `n m`")]
    MissingHeader,
    #[error("line {line}: expected header `n m`")]
    BadHeader { line: usize },
    #[error("line {line}: vertex count must be at least 1")]
    BadVertexCount { line: usize },
    #[error("line {line}: expected edge line `u v`")]
    BadEdgeLine { line: usize },
    #[error("line {line}: edge endpoints must satisfy u < v")]
    NotAscending { line: usize },
    #[error("line {line}: {source}")]
    Graph { line: usize, source: GraphError },
    #[error("expected {expected} edges, found only {found}")]
    MissingEdges { expected: usize, found: usize },
    #[error("line {line}: unexpected data after the declared edges")]
    TrailingData { line: usize },
}

fn significant_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            None
        } else {
            Some((i + 1, line))
        }
    })
}

/// Parses edge-list text into a graph.
pub fn parse_edge_list(text: &str) -> Result<SimpleGraph, ParseError> {
    let mut lines = significant_lines(text);

    let (header_no, header) = lines.next().ok_or(ParseError::MissingHeader)?;
    let mut fields = header.split_whitespace();
    let n: u32 = fields
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or(ParseError::BadHeader { line: header_no })?;
    let m: usize = fields
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or(ParseError::BadHeader { line: header_no })?;
    if fields.next().is_some() {
        return Err(ParseError::BadHeader { line: header_no });
    }
    if n < 1 {
        return Err(ParseError::BadVertexCount { line: header_no });
    }

    let mut edges = Vec::with_capacity(m);
    let mut edge_lines = Vec::with_capacity(m);
    for (line_no, line) in lines {
        if edges.len() == m {
            return Err(ParseError::TrailingData { line: line_no });
        }
        let mut fields = line.split_whitespace();
        let u: u32 = fields
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or(ParseError::BadEdgeLine { line: line_no })?;
        let v: u32 = fields
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or(ParseError::BadEdgeLine { line: line_no })?;
        if fields.next().is_some() {
            return Err(ParseError::BadEdgeLine { line: line_no });
        }
        for w in [u, v] {
            if w < 1 || w > n {
                return Err(ParseError::Graph {
                    line: line_no,
                    source: GraphError::OutOfRange { vertex: w, n },
                });
            }
        }
        if u == v {
            return Err(ParseError::Graph {
                line: line_no,
                source: GraphError::SelfLoop(u),
            });
        }
        if u > v {
            return Err(ParseError::NotAscending { line: line_no });
        }
        if edges.contains(&(u, v)) {
            return Err(ParseError::Graph {
                line: line_no,
                source: GraphError::DuplicateEdge { u, v },
            });
        }
        edges.push((u, v));
        edge_lines.push(line_no);
    }
    if edges.len() < m {
        return Err(ParseError::MissingEdges {
            expected: m,
            found: edges.len(),
        });
    }

    SimpleGraph::build(n, edges).map_err(|source| ParseError::Graph { line: 0, source })
}

/// Renders the canonical edge-list form of `g`.
pub fn write_edge_list(g: &SimpleGraph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{} {}\n", u.index(), v.index()));
    }
    out
}
