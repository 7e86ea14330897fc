//! Seeded synthetic graphs used as fixtures.
//!
//! Every generator is a pure function of its parameters (and seed, for
//! `random`). Node indices follow the layout documented on each [`Model`]
//! variant; labels are descriptive strings.

use alloc::format;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{DirectedGraph, GraphBuilder};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Model {
    /// `v0 → v1 → … → v{n-1} → v0`.
    Cycle { n: usize },
    /// Sink `sink` at index 0, spokes `spoke1..=spokek` at 1..=k all pointing to it.
    Star { k: usize },
    /// Complete bipartite: hubs `0..hubs` each point to every authority
    /// `hubs..hubs+authorities`.
    Bipartite { hubs: usize, authorities: usize },
    /// Tightly-knit community: a complete bipartite dense block plus
    /// `sparse_hubs` hubs that all point to one shared authority. Layout:
    /// dense hubs, dense authorities, sparse hubs, then the shared authority
    /// last.
    Tkc { dense_hubs: usize, dense_authorities: usize, sparse_hubs: usize },
    /// See [`planted`].
    Planted { pages: usize, members_per_page: usize, decoys: usize },
    /// Erdős–Rényi digraph: each ordered pair `i ≠ j` is an edge with
    /// probability `p`.
    Random { n: usize, p: f64 },
}

pub fn generate(model: &Model, seed: u64) -> Result<DirectedGraph> {
    match *model {
        Model::Cycle { n } => cycle(n),
        Model::Star { k } => star(k),
        Model::Bipartite { hubs, authorities } => bipartite(hubs, authorities),
        Model::Tkc { dense_hubs, dense_authorities, sparse_hubs } => {
            tkc(dense_hubs, dense_authorities, sparse_hubs)
        }
        Model::Planted { pages, members_per_page, decoys } => {
            planted(pages, members_per_page, decoys).map(|p| p.graph)
        }
        Model::Random { n, p } => random(n, p, seed),
    }
}

fn positive(x: usize, what: &'static str) -> Result<()> {
    if x == 0 {
        Err(Error::InvalidParams(what))
    } else {
        Ok(())
    }
}

pub fn cycle(n: usize) -> Result<DirectedGraph> {
    positive(n, "cycle length must be at least 1")?;
    let mut b = GraphBuilder::new();
    for i in 0..n {
        b.add_node(&format!("v{i}"));
    }
    for i in 0..n {
        b.add_edge(&format!("v{i}"), &format!("v{}", (i + 1) % n));
    }
    Ok(b.build())
}

pub fn star(k: usize) -> Result<DirectedGraph> {
    positive(k, "star needs at least one spoke")?;
    let mut b = GraphBuilder::new();
    b.add_node("sink");
    for i in 1..=k {
        b.add_edge(&format!("spoke{i}"), "sink");
    }
    Ok(b.build())
}

pub fn bipartite(hubs: usize, authorities: usize) -> Result<DirectedGraph> {
    positive(hubs, "bipartite needs at least one hub")?;
    positive(authorities, "bipartite needs at least one authority")?;
    let mut b = GraphBuilder::new();
    for h in 0..hubs {
        b.add_node(&format!("hub{h}"));
    }
    for a in 0..authorities {
        b.add_node(&format!("auth{a}"));
    }
    for h in 0..hubs {
        for a in 0..authorities {
            b.add_edge(&format!("hub{h}"), &format!("auth{a}"));
        }
    }
    Ok(b.build())
}

pub fn tkc(dense_hubs: usize, dense_authorities: usize, sparse_hubs: usize) -> Result<DirectedGraph> {
    positive(dense_hubs, "tkc needs at least one dense hub")?;
    positive(dense_authorities, "tkc needs at least one dense authority")?;
    positive(sparse_hubs, "tkc needs at least one sparse hub")?;
    let mut b = GraphBuilder::new();
    for h in 0..dense_hubs {
        b.add_node(&format!("dense_hub{h}"));
    }
    for a in 0..dense_authorities {
        b.add_node(&format!("dense_auth{a}"));
    }
    for s in 0..sparse_hubs {
        b.add_node(&format!("sparse_hub{s}"));
    }
    b.add_node("shared_auth");
    for h in 0..dense_hubs {
        for a in 0..dense_authorities {
            b.add_edge(&format!("dense_hub{h}"), &format!("dense_auth{a}"));
        }
    }
    for s in 0..sparse_hubs {
        b.add_edge(&format!("sparse_hub{s}"), "shared_auth");
    }
    Ok(b.build())
}

/// A planted-community fixture together with its ground truth.
#[derive(Debug, Clone, PartialEq)]
pub struct PlantedGraph {
    pub graph: DirectedGraph,
    pub pages: Vec<usize>,
    /// `members[p]` is the exact in-neighbour set of `pages[p]`, ascending.
    pub members: Vec<Vec<usize>>,
    pub decoys: Vec<usize>,
}

/// `pages` community pages (indices `0..pages`), each liked by
/// `members_per_page` dedicated members. Each decoy is liked by
/// `members_per_page` fans of its own, so it scores like a page, but links out
/// to page `d % pages`; that decoy is therefore also a member of the page.
pub fn planted(pages: usize, members_per_page: usize, decoys: usize) -> Result<PlantedGraph> {
    positive(pages, "planted needs at least one page")?;
    positive(members_per_page, "planted needs at least one member per page")?;
    let mut b = GraphBuilder::new();
    let page_ids: Vec<usize> = (0..pages).map(|p| b.add_node(&format!("page{p}"))).collect();
    let mut members: Vec<Vec<usize>> = alloc::vec![Vec::new(); pages];
    for (p, list) in members.iter_mut().enumerate() {
        for j in 0..members_per_page {
            let label = format!("member{p}_{j}");
            list.push(b.add_node(&label));
            b.add_edge(&label, &format!("page{p}"));
        }
    }
    let mut decoy_ids = Vec::with_capacity(decoys);
    for d in 0..decoys {
        let label = format!("decoy{d}");
        let id = b.add_node(&label);
        decoy_ids.push(id);
        for j in 0..members_per_page {
            b.add_edge(&format!("fan{d}_{j}"), &label);
        }
        b.add_edge(&label, &format!("page{}", d % pages));
        members[d % pages].push(id);
    }
    members.iter_mut().for_each(|m| m.sort_unstable());
    Ok(PlantedGraph { graph: b.build(), pages: page_ids, members, decoys: decoy_ids })
}

pub fn random(n: usize, p: f64, seed: u64) -> Result<DirectedGraph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParams("edge probability must lie in [0, 1]"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut b = GraphBuilder::new();
    let labels: Vec<alloc::string::String> = (0..n).map(|i| format!("{i}")).collect();
    for l in &labels {
        b.add_node(l);
    }
    for i in 0..n {
        for j in 0..n {
            // Draw for every ordered pair so the stream does not depend on p.
            let draw: f64 = rng.random();
            if i != j && draw < p {
                b.add_edge(&labels[i], &labels[j]);
            }
        }
    }
    Ok(b.build())
}
