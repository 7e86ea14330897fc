//! DOT and GraphML writers with optional community colouring.
//!
//! Node ids in both formats are `n<index>`; the original label is carried as
//! an attribute. Community `k` is the `k`-th entry of the slice passed in.

use std::fmt::Write;

use linkrank_core::{Community, DirectedGraph};

const PALETTE: [&str; 10] = [
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
    "#bcbd22", "#17becf",
];

/// Per node: indices of the communities it belongs to, and whether it is a page.
fn roles(g: &DirectedGraph, communities: &[Community]) -> (Vec<Vec<usize>>, Vec<bool>) {
    let mut member_of = vec![Vec::new(); g.n()];
    let mut page = vec![false; g.n()];
    for (k, c) in communities.iter().enumerate() {
        if c.page < g.n() {
            page[c.page] = true;
            member_of[c.page].push(k);
        }
        for &m in &c.members {
            if m < g.n() {
                member_of[m].push(k);
            }
        }
    }
    (member_of, page)
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

pub fn export_dot(g: &DirectedGraph, communities: Option<&[Community]>) -> String {
    let (member_of, page) = roles(g, communities.unwrap_or(&[]));
    let mut out = String::from("digraph linkrank {\n");
    for i in 0..g.n() {
        let _ = write!(out, "  n{i} [label=\"{}\"", dot_escape(g.label(i)));
        let colors: Vec<&str> = member_of[i].iter().map(|&k| PALETTE[k % PALETTE.len()]).collect();
        match colors.len() {
            0 => {}
            1 => {
                let _ = write!(out, ", style=filled, fillcolor=\"{}\"", colors[0]);
            }
            _ => {
                let _ = write!(out, ", style=wedged, fillcolor=\"{}\"", colors.join(":"));
            }
        }
        if page[i] {
            out.push_str(", peripheries=2");
        }
        out.push_str("];\n");
    }
    for (s, d) in g.edges() {
        let _ = writeln!(out, "  n{s} -> n{d};");
    }
    out.push_str("}\n");
    out
}

fn xml_escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for ch in s.chars() {
        match ch {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&apos;"),
            c => out.push(c),
        }
    }
    out
}

/// GraphML with `label`, `community` (comma-separated community indices) and
/// `role` (`page` or `member`) node attributes.
pub fn export_graphml(g: &DirectedGraph, communities: Option<&[Community]>) -> String {
    let (member_of, page) = roles(g, communities.unwrap_or(&[]));
    let mut out = String::from(concat!(
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n",
        "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n",
        "  <key id=\"label\" for=\"node\" attr.name=\"label\" attr.type=\"string\"/>\n",
        "  <key id=\"community\" for=\"node\" attr.name=\"community\" attr.type=\"string\"/>\n",
        "  <key id=\"role\" for=\"node\" attr.name=\"role\" attr.type=\"string\"/>\n",
        "  <graph id=\"G\" edgedefault=\"directed\">\n",
    ));
    for i in 0..g.n() {
        let _ = write!(
            out,
            "    <node id=\"n{i}\"><data key=\"label\">{}</data>",
            xml_escape(g.label(i))
        );
        if !member_of[i].is_empty() {
            let ks: Vec<String> = member_of[i].iter().map(usize::to_string).collect();
            let role = if page[i] { "page" } else { "member" };
            let _ = write!(
                out,
                "<data key=\"community\">{}</data><data key=\"role\">{role}</data>",
                ks.join(",")
            );
        }
        out.push_str("</node>\n");
    }
    for (e, (s, d)) in g.edges().enumerate() {
        let _ = writeln!(out, "    <edge id=\"e{e}\" source=\"n{s}\" target=\"n{d}\"/>");
    }
    out.push_str("  </graph>\n</graphml>\n");
    out
}
