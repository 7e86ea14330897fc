use super::{reinforce, Algorithm, HubAuthScores, RankingConfig};
use crate::graph::DirectedGraph;
use crate::Result;

/// Hub-averaging: authorities as in HITS, `a_i = Σ_{j∈B(i)} h_j`, but a hub
/// scores the mean of the authorities it points to,
/// `h_i = (1/|F(i)|) Σ_{j∈F(i)} a_j`. Nodes without out-links get `h_i = 0`.
pub fn hubavg(g: &DirectedGraph, cfg: &RankingConfig) -> Result<HubAuthScores> {
    hubavg_with_initial(g, cfg, &alloc::vec![1.0; g.n()])
}

pub fn hubavg_with_initial(
    g: &DirectedGraph,
    cfg: &RankingConfig,
    initial_hubs: &[f64],
) -> Result<HubAuthScores> {
    reinforce(g, cfg, Algorithm::HubAvg, initial_hubs, |i| match g.succs(i).len() {
        0 => 0.0,
        l => 1.0 / l as f64,
    })
}
