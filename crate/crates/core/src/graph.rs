//! Immutable simple directed graph with forward and reverse adjacency.
//!
//! Nodes are dense indices `0..n` assigned in first-appearance order; each
//! index carries the external string label it was built from. Adjacency lists
//! are sorted ascending, so iteration order is deterministic and membership is
//! a binary search.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::{Error, Result};

/// What the builder discarded while enforcing the simple-graph rules.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct BuildStats {
    pub self_loops_dropped: usize,
    pub duplicates_dropped: usize,
}

#[derive(Debug, Clone)]
pub struct DirectedGraph {
    out_adj: Vec<Vec<usize>>,
    in_adj: Vec<Vec<usize>>,
    labels: Vec<String>,
    index: BTreeMap<String, usize>,
    m: usize,
    stats: BuildStats,
}

/// Structural equality: same labels in the same order and the same edges.
/// Build statistics are not compared.
impl PartialEq for DirectedGraph {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.out_adj == other.out_adj
    }
}

impl Eq for DirectedGraph {}

/// Incremental construction. Labels get indices in the order they are first
/// seen, either through [`GraphBuilder::add_node`] or as an edge endpoint.
#[derive(Debug, Default, Clone)]
pub struct GraphBuilder {
    labels: Vec<String>,
    index: BTreeMap<String, usize>,
    edges: Vec<(usize, usize)>,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    /// Returns the index of `label`, creating the node if needed.
    pub fn add_node(&mut self, label: &str) -> usize {
        if let Some(&i) = self.index.get(label) {
            return i;
        }
        let i = self.labels.len();
        self.labels.push(label.to_string());
        self.index.insert(label.to_string(), i);
        i
    }

    pub fn add_edge(&mut self, src: &str, dst: &str) {
        let s = self.add_node(src);
        let d = self.add_node(dst);
        self.edges.push((s, d));
    }

    pub fn node_count(&self) -> usize {
        self.labels.len()
    }

    pub fn build(self) -> DirectedGraph {
        let n = self.labels.len();
        let mut stats = BuildStats::default();
        let mut out_adj: Vec<Vec<usize>> = alloc::vec![Vec::new(); n];
        for (s, d) in self.edges {
            if s == d {
                stats.self_loops_dropped += 1;
            } else {
                out_adj[s].push(d);
            }
        }
        let mut m = 0;
        for list in &mut out_adj {
            let before = list.len();
            list.sort_unstable();
            list.dedup();
            stats.duplicates_dropped += before - list.len();
            m += list.len();
        }
        let mut in_adj: Vec<Vec<usize>> = alloc::vec![Vec::new(); n];
        // Sources visited in ascending order keep every in-list sorted.
        for (s, list) in out_adj.iter().enumerate() {
            for &d in list {
                in_adj[d].push(s);
            }
        }
        DirectedGraph {
            out_adj,
            in_adj,
            labels: self.labels,
            index: self.index,
            m,
            stats,
        }
    }
}

impl DirectedGraph {
    /// Builds a graph from labelled edges. Self-loops and repeated edges are
    /// dropped and counted in [`DirectedGraph::build_stats`].
    pub fn from_edge_list<'a, I>(edges: I) -> Self
    where
        I: IntoIterator<Item = (&'a str, &'a str)>,
    {
        let mut b = GraphBuilder::new();
        for (s, d) in edges {
            b.add_edge(s, d);
        }
        b.build()
    }

    /// Builds a graph on nodes `0..n` labelled by their decimal index.
    /// Out-of-range endpoints are rejected.
    pub fn from_index_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut b = GraphBuilder::new();
        for i in 0..n {
            b.add_node(&i.to_string());
        }
        for &(s, d) in edges {
            let bad = if s >= n { s } else { d };
            if s >= n || d >= n {
                return Err(Error::IndexOutOfRange { index: bad, n });
            }
            b.edges.push((s, d));
        }
        Ok(b.build())
    }

    /// Builds a graph from a 0/1 matrix with row = source and column = target.
    /// Node `i` is labelled with its decimal index. Diagonal entries are
    /// ignored.
    pub fn from_adjacency_matrix<R: AsRef<[u8]>>(w: &[R]) -> Result<Self> {
        let n = w.len();
        let mut b = GraphBuilder::new();
        for i in 0..n {
            b.add_node(&i.to_string());
        }
        for (i, row) in w.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != n {
                return Err(Error::NonSquareMatrix { row: i, len: row.len(), expected: n });
            }
            for (j, &value) in row.iter().enumerate() {
                match value {
                    0 => {}
                    1 => b.edges.push((i, j)),
                    _ => return Err(Error::NonBinaryEntry { row: i, col: j, value }),
                }
            }
        }
        Ok(b.build())
    }

    pub fn to_matrix(&self) -> Vec<Vec<u8>> {
        let n = self.n();
        let mut w = alloc::vec![alloc::vec![0u8; n]; n];
        for (i, list) in self.out_adj.iter().enumerate() {
            for &j in list {
                w[i][j] = 1;
            }
        }
        w
    }

    /// Node count.
    pub fn n(&self) -> usize {
        self.labels.len()
    }

    /// Edge count.
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn build_stats(&self) -> BuildStats {
        self.stats
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    fn check(&self, i: usize) -> Result<()> {
        if i < self.n() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange { index: i, n: self.n() })
        }
    }

    /// `B(i)`: nodes with an edge into `i`, ascending.
    pub fn in_neighbors(&self, i: usize) -> Result<&[usize]> {
        self.check(i)?;
        Ok(&self.in_adj[i])
    }

    /// `F(i)`: nodes `i` links to, ascending.
    pub fn out_neighbors(&self, i: usize) -> Result<&[usize]> {
        self.check(i)?;
        Ok(&self.out_adj[i])
    }

    pub fn in_degree(&self, i: usize) -> Result<usize> {
        self.in_neighbors(i).map(<[usize]>::len)
    }

    pub fn out_degree(&self, i: usize) -> Result<usize> {
        self.out_neighbors(i).map(<[usize]>::len)
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        i < self.n() && self.out_adj[i].binary_search(&j).is_ok()
    }

    /// Unchecked in-list, for hot loops over `0..n`.
    pub(crate) fn preds(&self, i: usize) -> &[usize] {
        &self.in_adj[i]
    }

    /// Unchecked out-list, for hot loops over `0..n`.
    pub(crate) fn succs(&self, i: usize) -> &[usize] {
        &self.out_adj[i]
    }

    /// All edges `(src, dst)` in ascending source then target order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out_adj
            .iter()
            .enumerate()
            .flat_map(|(s, list)| list.iter().map(move |&d| (s, d)))
    }
}
