use linkrank_core::DirectedGraph;

use crate::ParseError;

/// Comma-separated 0/1 rows, row = source. Blank lines and `#` comments are
/// skipped. Node `i` is labelled `i`.
pub fn parse_adjacency_csv(text: &str) -> Result<DirectedGraph, ParseError> {
    let mut rows: Vec<Vec<u8>> = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let row = line
            .split(',')
            .map(|cell| cell.trim().parse::<u8>())
            .collect::<Result<Vec<u8>, _>>()
            .map_err(|e| ParseError::MalformedLine { line: i + 1, reason: format!("{e}") })?;
        rows.push(row);
    }
    Ok(DirectedGraph::from_adjacency_matrix(&rows)?)
}

pub fn write_adjacency_csv(g: &DirectedGraph) -> String {
    let mut out = String::new();
    for row in g.to_matrix() {
        let cells: Vec<&str> = row.iter().map(|&x| if x == 1 { "1" } else { "0" }).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}
