use std::fmt::Write;

use linkrank_core::{DirectedGraph, GraphBuilder};

use crate::ParseError;

/// One `SRC<whitespace>DST` pair per line. Blank lines and lines starting
/// with `#` are skipped. Any other line with a token count other than two
/// aborts the parse.
pub fn parse_edge_list(text: &str) -> Result<DirectedGraph, ParseError> {
    let mut b = GraphBuilder::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut tokens = line.split_whitespace();
        match (tokens.next(), tokens.next(), tokens.next()) {
            (Some(src), Some(dst), None) => b.add_edge(src, dst),
            _ => {
                return Err(ParseError::MalformedLine {
                    line: i + 1,
                    reason: format!("expected `SRC DST`, got {line:?}"),
                })
            }
        }
    }
    Ok(b.build())
}

/// Writes every edge as `SRC DST`, in ascending source then target index.
/// Isolated nodes cannot be represented and are omitted.
pub fn write_edge_list(g: &DirectedGraph) -> String {
    let mut out = String::new();
    for (s, d) in g.edges() {
        let _ = writeln!(out, "{} {}", g.label(s), g.label(d));
    }
    out
}
