//! Graph input formats.

mod edges;
mod matrix;
mod social;

use std::fmt;
use std::str::FromStr;

pub use edges::{parse_edge_list, write_edge_list};
pub use matrix::{parse_adjacency_csv, write_adjacency_csv};
pub use social::{parse_social_graph_json, NodeMeta, SocialGraph, SocialGraphDocument};

use linkrank_core::DirectedGraph;

use crate::ParseError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputFormat {
    /// `SRC DST` per line.
    Edges,
    /// CSV 0/1 adjacency matrix, row = source.
    Matrix,
    /// JSON array of social-graph documents.
    FbJson,
}

impl InputFormat {
    pub fn as_str(self) -> &'static str {
        match self {
            InputFormat::Edges => "edges",
            InputFormat::Matrix => "matrix",
            InputFormat::FbJson => "fbjson",
        }
    }
}

impl fmt::Display for InputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for InputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "edges" => Ok(InputFormat::Edges),
            "matrix" => Ok(InputFormat::Matrix),
            "fbjson" => Ok(InputFormat::FbJson),
            other => Err(format!("unknown format {other:?} (expected edges, matrix or fbjson)")),
        }
    }
}

/// Parses `text` in the given format, dropping social-graph metadata.
pub fn parse_graph(text: &str, format: InputFormat) -> Result<DirectedGraph, ParseError> {
    match format {
        InputFormat::Edges => parse_edge_list(text),
        InputFormat::Matrix => parse_adjacency_csv(text),
        InputFormat::FbJson => parse_social_graph_json(text).map(|s| s.graph),
    }
}
