//! Plain-text edge lists.
//!
//! ```text
//! # comment lines start with '#'
//! n 5          <- optional, must be the first non-comment line
//! 0 1
//! 1 2
//! ```
//!
//! Ids are 0-based. Fields are separated by any whitespace and blank lines are
//! ignored. Without an `n` line the vertex count is the largest id plus one.
//! [`to_edge_list`] always writes the `n` line so isolated vertices survive.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::ParseError;
use crate::graph::{Graph, GraphData};

fn parse_id(token: &str, line: usize) -> Result<usize, ParseError> {
    token.parse().map_err(|_| ParseError::Syntax {
        line,
        message: format!("expected a non-negative integer, got {token:?}"),
    })
}

pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut declared = None;
    let mut edges = Vec::new();
    let mut seen_data = false;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = trimmed.split_whitespace().collect();
        if fields[0] == "n" {
            if seen_data {
                return Err(ParseError::Syntax {
                    line,
                    message: "the vertex-count line must come before any edge".into(),
                });
            }
            if fields.len() != 2 {
                return Err(ParseError::Syntax {
                    line,
                    message: "expected `n <vertex_count>`".into(),
                });
            }
            declared = Some(parse_id(fields[1], line)?);
            seen_data = true;
            continue;
        }
        seen_data = true;
        if fields.len() != 2 {
            return Err(ParseError::Syntax {
                line,
                message: format!("expected `u v`, got {} fields", fields.len()),
            });
        }
        edges.push((parse_id(fields[0], line)?, parse_id(fields[1], line)?));
    }
    let vertex_count = declared.unwrap_or_else(|| edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0));
    Ok(Graph::new(vertex_count, edges)?)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = String::with_capacity(8 * g.edge_count() + 16);
    writeln!(out, "n {}", g.vertex_count()).unwrap();
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn to_json(g: &Graph) -> String {
    serde_json::to_string(&GraphData::from(g.clone())).expect("graph data serializes")
}

/// Reads an edge list, or the JSON form when the first non-blank character is `{`.
pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    if text.trim_start().starts_with('{') {
        Ok(serde_json::from_str(text)?)
    } else {
        parse_edge_list(text)
    }
}

pub fn read_graph(path: &Path) -> Result<Graph, ParseError> {
    let text = std::fs::read_to_string(path).map_err(|e| ParseError::Syntax {
        line: 0,
        message: format!("{}: {e}", path.display()),
    })?;
    parse_graph(&text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::GraphError;

    #[test]
    fn parses_comments_and_count_line() {
        let g = parse_edge_list("# triangle plus a loner\n\nn 4\n0 1\n 1\t2 \n2 0\n").unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn infers_vertex_count() {
        let g = parse_edge_list("0 1\n1 5\n").unwrap();
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(parse_edge_list("# nothing\n").unwrap().vertex_count(), 0);
    }

    #[test]
    fn reports_line_numbers() {
        let err = parse_edge_list("0 1\n1 x\n").unwrap_err();
        assert!(matches!(err, ParseError::Syntax { line: 2, .. }));
        let err = parse_edge_list("0 1\nn 3\n").unwrap_err();
        assert!(matches!(err, ParseError::Syntax { line: 2, .. }));
        let err = parse_edge_list("0 1 2\n").unwrap_err();
        assert!(matches!(err, ParseError::Syntax { line: 1, .. }));
    }

    #[test]
    fn graph_errors_propagate() {
        assert!(matches!(
            parse_edge_list("1 1\n"),
            Err(ParseError::Graph(GraphError::SelfLoop(1)))
        ));
        assert!(matches!(
            parse_edge_list("n 2\n0 2\n"),
            Err(ParseError::Graph(GraphError::VertexOutOfRange { .. }))
        ));
    }

    #[test]
    fn json_and_text_agree() {
        let g = parse_edge_list("n 5\n0 1\n3 4\n").unwrap();
        assert_eq!(parse_graph(&to_json(&g)).unwrap(), g);
        assert_eq!(parse_graph(&to_edge_list(&g)).unwrap(), g);
    }
}
