//! Plain-text graph and clutter files.
//!
//! ```text
//! graph 3        clutter 4
//! 1 2            1 2 3
//! 2 3  # tail    3 4
//! ```

use std::fmt::Write as _;

use thiserror::Error;

use crate::clutter::{Clutter, ClutterError};
use crate::graph::{Edge, Graph, GraphError, Labeling, VertexSet};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("missing `{0} <n>` header")]
    MissingHeader(&'static str),
    #[error("line {line}: expected `{kind} <n>`, found `{text}`")]
    BadHeader {
        line: usize,
        kind: &'static str,
        text: String,
    },
    #[error("line {line}: `{token}` is not a vertex label")]
    BadToken { line: usize, token: String },
    #[error("line {line}: expected exactly two vertices, found `{text}`")]
    BadEdgeLine { line: usize, text: String },
    #[error("line {line}: vertex {vertex} is out of range 1..={n}")]
    OutOfRange { line: usize, vertex: usize, n: usize },
    #[error("line {line}: loop at vertex {vertex}")]
    Loop { line: usize, vertex: usize },
    #[error("line {line}: {source}")]
    ClutterLine { line: usize, source: ClutterError },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Clutter(#[from] ClutterError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParsedGraph {
    pub graph: Graph,
    /// Always the identity: file labels are already `1..n`.
    pub labeling: Labeling,
    pub warnings: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParsedClutter {
    pub clutter: Clutter,
    pub warnings: Vec<String>,
}

/// Non-empty lines with comments stripped, numbered from 1.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn header<'a>(lines: &mut impl Iterator<Item = (usize, &'a str)>, kind: &'static str) -> Result<usize, ParseError> {
    let (line, text) = lines.next().ok_or(ParseError::MissingHeader(kind))?;
    let bad = || ParseError::BadHeader {
        line,
        kind,
        text: text.to_string(),
    };
    let mut tokens = text.split_whitespace();
    if tokens.next() != Some(kind) {
        return Err(bad());
    }
    let n = tokens.next().and_then(|t| t.parse::<usize>().ok()).ok_or_else(bad)?;
    if tokens.next().is_some() {
        return Err(bad());
    }
    Ok(n)
}

fn vertex(line: usize, token: &str, n: usize) -> Result<usize, ParseError> {
    let v: usize = token.parse().map_err(|_| ParseError::BadToken {
        line,
        token: token.to_string(),
    })?;
    if v == 0 || v > n {
        return Err(ParseError::OutOfRange { line, vertex: v, n });
    }
    Ok(v)
}

pub fn parse_graph(text: &str) -> Result<ParsedGraph, ParseError> {
    let mut lines = content_lines(text);
    let n = header(&mut lines, "graph")?;
    let mut graph = Graph::new(n)?;
    let mut warnings = Vec::new();
    for (line, body) in lines {
        let tokens: Vec<&str> = body.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(ParseError::BadEdgeLine {
                line,
                text: body.to_string(),
            });
        }
        let u = vertex(line, tokens[0], n)?;
        let v = vertex(line, tokens[1], n)?;
        if u == v {
            return Err(ParseError::Loop { line, vertex: u });
        }
        let e = Edge::new(u, v);
        if !graph.insert_edge(e) {
            warnings.push(format!("line {line}: duplicate edge {e} ignored"));
        }
    }
    Ok(ParsedGraph {
        graph,
        labeling: Labeling::identity(n),
        warnings,
    })
}

pub fn parse_clutter(text: &str) -> Result<ParsedClutter, ParseError> {
    let mut lines = content_lines(text);
    let n = header(&mut lines, "clutter")?;
    if n == 0 || n > crate::graph::MAX_VERTICES {
        return Err(ClutterError::BadVertexCount(n).into());
    }
    let mut edges: Vec<VertexSet> = Vec::new();
    let mut warnings = Vec::new();
    for (line, body) in lines {
        let mut set = VertexSet::EMPTY;
        let mut listed = Vec::new();
        for token in body.split_whitespace() {
            let v = vertex(line, token, n)?;
            if set.contains(v) {
                return Err(ParseError::ClutterLine {
                    line,
                    source: ClutterError::RepeatedVertex(v),
                });
            }
            set.insert(v);
            listed.push(v);
        }
        if listed.len() < 2 {
            return Err(ParseError::ClutterLine {
                line,
                source: ClutterError::EdgeTooSmall(listed),
            });
        }
        if edges.contains(&set) {
            warnings.push(format!("line {line}: duplicate edge {set} ignored"));
            continue;
        }
        edges.push(set);
    }
    Ok(ParsedClutter {
        clutter: Clutter::from_sets(n, edges)?,
        warnings,
    })
}

pub fn serialize_graph(g: &Graph) -> String {
    let mut out = format!("graph {}\n", g.n());
    for e in g.edges() {
        let _ = writeln!(out, "{} {}", e.lo(), e.hi());
    }
    out
}

pub fn serialize_clutter(c: &Clutter) -> String {
    let mut out = format!("clutter {}\n", c.n());
    for e in c.edges() {
        let vs: Vec<String> = e.iter().map(|v| v.to_string()).collect();
        let _ = writeln!(out, "{}", vs.join(" "));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_and_comments() {
        let p = parse_graph("# a path\ngraph 3\n1 2\n\n2 3 # tail\n").unwrap();
        assert_eq!(p.graph, Graph::path(3).unwrap());
        assert!(p.labeling.is_identity());
        assert!(p.warnings.is_empty());
    }

    #[test]
    fn example_file() {
        let text = "graph 7\n1 2\n2 4\n3 4\n1 3\n4 5\n5 6\n6 7\n4 6\n";
        let g = parse_graph(text).unwrap().graph;
        assert_eq!(g.n(), 7);
        assert_eq!(g.edge_count(), 8);
        assert_eq!(parse_graph(&serialize_graph(&g)).unwrap().graph, g);
    }

    #[test]
    fn graph_errors() {
        assert_eq!(
            parse_graph("graph 2\n1 1\n"),
            Err(ParseError::Loop { line: 2, vertex: 1 })
        );
        assert_eq!(
            parse_graph("graph 2\n1 3\n"),
            Err(ParseError::OutOfRange {
                line: 2,
                vertex: 3,
                n: 2
            })
        );
        assert!(matches!(parse_graph(""), Err(ParseError::MissingHeader("graph"))));
        assert!(matches!(
            parse_graph("graf 2\n"),
            Err(ParseError::BadHeader { line: 1, .. })
        ));
        assert!(matches!(parse_graph("graph 2 3\n"), Err(ParseError::BadHeader { .. })));
        assert!(matches!(parse_graph("graph x\n"), Err(ParseError::BadHeader { .. })));
        assert!(matches!(
            parse_graph("graph 0\n"),
            Err(ParseError::Graph(GraphError::BadVertexCount(0)))
        ));
        assert!(matches!(
            parse_graph("graph 3\n1 2 3\n"),
            Err(ParseError::BadEdgeLine { line: 2, .. })
        ));
        assert!(matches!(
            parse_graph("graph 3\n1 -2\n"),
            Err(ParseError::BadToken { line: 2, .. })
        ));
    }

    #[test]
    fn duplicate_edge_warns() {
        let p = parse_graph("graph 3\n1 2\n2 1\n").unwrap();
        assert_eq!(p.graph.edge_count(), 1);
        assert_eq!(p.warnings, vec!["line 3: duplicate edge {1,2} ignored".to_string()]);
    }

    #[test]
    fn clutter_round_trip() {
        let p = parse_clutter("clutter 5\n1 2 3\n3 4 # hinge\n4 5\n5 4\n").unwrap();
        assert_eq!(p.warnings.len(), 1);
        assert_eq!(p.clutter.edges().len(), 3);
        assert_eq!(serialize_clutter(&p.clutter), "clutter 5\n1 2 3\n3 4\n4 5\n");
        assert_eq!(
            parse_clutter(&serialize_clutter(&p.clutter)).unwrap().clutter,
            p.clutter
        );
    }

    #[test]
    fn clutter_errors() {
        assert!(matches!(
            parse_clutter("clutter 3\n1\n"),
            Err(ParseError::ClutterLine { line: 2, .. })
        ));
        assert!(matches!(
            parse_clutter("clutter 3\n1 1 2\n"),
            Err(ParseError::ClutterLine {
                source: ClutterError::RepeatedVertex(1),
                ..
            })
        ));
        assert!(matches!(
            parse_clutter("clutter 3\n1 2\n1 2 3\n"),
            Err(ParseError::Clutter(ClutterError::NotAntichain(..)))
        ));
        assert!(matches!(parse_clutter("graph 3\n"), Err(ParseError::BadHeader { .. })));
    }
}
