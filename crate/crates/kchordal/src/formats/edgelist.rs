//! Plain-text edge lists: a vertex count on the first line, then one
//! `u v` pair per line. Blank lines and `#` comments are ignored.

use kchordal_core::{Graph, GraphError};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EdgeListError {
    #[error("missing vertex count")]
    MissingHeader,
    #[error("line {line}: expected a vertex count, found {token:?}")]
    BadHeader { line: usize, token: String },
    #[error("line {line}: {token:?} is not a vertex index")]
    BadToken { line: usize, token: String },
    #[error("line {line}: expected two vertices, found {found} fields")]
    FieldCount { line: usize, found: usize },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: vertex {vertex} out of range for {n} vertices")]
    OutOfRange { line: usize, vertex: usize, n: usize },
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

/// True if the first meaningful line is a bare vertex count.
pub fn looks_like_edge_list(text: &str) -> bool {
    content_lines(text)
        .next()
        .is_some_and(|(_, l)| l.bytes().all(|b| b.is_ascii_digit()))
}

pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut lines = content_lines(text);
    let (header_line, header) = lines.next().ok_or(EdgeListError::MissingHeader)?;
    let n: usize = header.parse().map_err(|_| EdgeListError::BadHeader {
        line: header_line,
        token: header.to_string(),
    })?;
    let mut edges = Vec::new();
    for (line, content) in lines {
        let fields: Vec<&str> = content.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(EdgeListError::FieldCount {
                line,
                found: fields.len(),
            });
        }
        let vertex = |tok: &str| {
            tok.parse::<usize>().map_err(|_| EdgeListError::BadToken {
                line,
                token: tok.to_string(),
            })
        };
        let (u, v) = (vertex(fields[0])?, vertex(fields[1])?);
        Graph::from_edges(n, [(u, v)]).map_err(|e| match e {
            GraphError::SelfLoop { vertex } => EdgeListError::SelfLoop { line, vertex },
            GraphError::OutOfRange { vertex, n } => EdgeListError::OutOfRange { line, vertex, n },
        })?;
        edges.push((u, v));
    }
    Ok(Graph::from_edges(n, edges).expect("edges validated line by line"))
}

pub fn encode_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(parse_edge_list("3\n0 1\n1 2").unwrap(), Graph::path(3));
        assert_eq!(
            parse_edge_list("2\n0 0").unwrap_err(),
            EdgeListError::SelfLoop { line: 2, vertex: 0 }
        );
        let g = parse_edge_list("4\n0 1\n0 1\n2 3").unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), [(0, 1), (2, 3)]);
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert_eq!(parse_edge_list("").unwrap_err(), EdgeListError::MissingHeader);
        assert_eq!(
            parse_edge_list("three").unwrap_err(),
            EdgeListError::BadHeader {
                line: 1,
                token: "three".into()
            }
        );
        assert_eq!(
            parse_edge_list("3\n\n0 x").unwrap_err(),
            EdgeListError::BadToken {
                line: 3,
                token: "x".into()
            }
        );
        assert_eq!(
            parse_edge_list("3\n0 1 2").unwrap_err(),
            EdgeListError::FieldCount { line: 2, found: 3 }
        );
        assert_eq!(
            parse_edge_list("3\n# comment\n0 3").unwrap_err(),
            EdgeListError::OutOfRange {
                line: 3,
                vertex: 3,
                n: 3
            }
        );
    }

    #[test]
    fn round_trip() {
        let g = Graph::cycle(7);
        assert_eq!(parse_edge_list(&encode_edge_list(&g)).unwrap(), g);
        assert_eq!(parse_edge_list("0").unwrap(), Graph::empty(0));
    }
}
