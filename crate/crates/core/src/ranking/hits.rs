use super::{reinforce, Algorithm, HubAuthScores, RankingConfig};
use crate::graph::DirectedGraph;
use crate::Result;

/// Kleinberg's hubs and authorities from all-ones weights.
///
/// Each sweep sets `a_i = Σ_{j∈B(i)} h_j`, then `h_i = Σ_{j∈F(i)} a_j`, and
/// normalizes both. The limit is the principal eigenvector pair of `WᵀW`
/// (authorities) and `WWᵀ` (hubs).
pub fn hits(g: &DirectedGraph, cfg: &RankingConfig) -> Result<HubAuthScores> {
    hits_with_initial(g, cfg, &alloc::vec![1.0; g.n()])
}

/// HITS starting from the given hub weights.
pub fn hits_with_initial(
    g: &DirectedGraph,
    cfg: &RankingConfig,
    initial_hubs: &[f64],
) -> Result<HubAuthScores> {
    reinforce(g, cfg, Algorithm::Hits, initial_hubs, |_| 1.0)
}
