//! Text formats for graphs.

pub mod edgelist;
pub mod graph6;

use std::str::FromStr;

use kchordal_core::Graph;
use thiserror::Error;

pub use edgelist::{encode_edge_list, parse_edge_list, EdgeListError};
pub use graph6::{encode_graph6, parse_graph6, Graph6Error};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    Graph6,
    EdgeList,
    #[default]
    Auto,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "graph6" => Ok(Format::Graph6),
            "edgelist" => Ok(Format::EdgeList),
            "auto" => Ok(Format::Auto),
            other => Err(format!("unknown format {other:?} (graph6, edgelist, auto)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InputError {
    #[error("graph6 line {line}: {source}")]
    Graph6 { line: usize, source: Graph6Error },
    #[error("edge list: {0}")]
    EdgeList(#[from] EdgeListError),
    #[error("no graphs in input")]
    NoGraphs,
}

/// Reads every graph in `text`: one per non-empty line for graph6, a single
/// graph for an edge list.
pub fn read_graphs(text: &str, format: Format) -> Result<Vec<Graph>, InputError> {
    let format = match format {
        Format::Auto if edgelist::looks_like_edge_list(text) => Format::EdgeList,
        Format::Auto => Format::Graph6,
        f => f,
    };
    let graphs = match format {
        Format::EdgeList => vec![parse_edge_list(text)?],
        _ => text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty())
            .map(|(i, l)| parse_graph6(l.trim_end()).map_err(|source| InputError::Graph6 { line: i + 1, source }))
            .collect::<Result<Vec<_>, _>>()?,
    };
    if graphs.is_empty() {
        return Err(InputError::NoGraphs);
    }
    Ok(graphs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn auto_detection() {
        assert_eq!(read_graphs("3\n0 1\n1 2\n", Format::Auto).unwrap(), [Graph::path(3)]);
        assert_eq!(
            read_graphs("Dhc\n\nA_\n", Format::Auto).unwrap(),
            [Graph::cycle(5), Graph::complete(2)]
        );
        assert_eq!(read_graphs("", Format::Auto).unwrap_err(), InputError::NoGraphs);
        assert!(matches!(
            read_graphs("3\n0 1\n", Format::Graph6),
            Err(InputError::Graph6 { line: 1, .. })
        ));
    }
}
