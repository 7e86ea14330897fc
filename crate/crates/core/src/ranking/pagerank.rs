use alloc::vec::Vec;

use super::{l1_distance, Algorithm, Norm, PageRankMode, RankingConfig, ScoreVector};
use crate::graph::DirectedGraph;
use crate::{Error, Result};

/// PageRank from the uniform start `R_i = 1`.
///
/// In [`PageRankMode::PaperFaithful`] each sweep is `R_i = Σ_{j∈B(i)} R_j / L_j`
/// followed by L1 renormalization. A page with `L_i = 0` keeps its own rank
/// through the sweep, so mass that reaches a sink stays there instead of
/// leaving the graph. In [`PageRankMode::Damped`] the sweep is
/// `R = d·M·R + ((1 − d) + d·dangling) / n`.
///
/// Iteration is done on the probability simplex; the returned vector is then
/// rescaled to the configured norm. Hitting `max_iters` is reported through
/// `converged = false`, not as an error.
pub fn pagerank(g: &DirectedGraph, cfg: &RankingConfig) -> Result<ScoreVector> {
    pagerank_with_initial(g, cfg, &alloc::vec![1.0; g.n()])
}

pub fn pagerank_with_initial(
    g: &DirectedGraph,
    cfg: &RankingConfig,
    initial: &[f64],
) -> Result<ScoreVector> {
    cfg.validate()?;
    let n = g.n();
    if n == 0 {
        return Err(Error::NoNodes);
    }
    if initial.len() != n {
        return Err(Error::InvalidConfig("initial vector length must equal node count"));
    }
    if initial.iter().any(|&x| !(x >= 0.0) || !x.is_finite()) || !initial.iter().any(|&x| x > 0.0) {
        return Err(Error::InvalidConfig("initial vector must be non-negative with positive mass"));
    }
    let inv_out: Vec<f64> = (0..n)
        .map(|i| match g.succs(i).len() {
            0 => 0.0,
            l => 1.0 / l as f64,
        })
        .collect();
    let mut rank = initial.to_vec();
    Norm::L1.normalize(&mut rank);
    let mut next = alloc::vec![0.0; n];
    let mut iterations = 0;
    let mut converged = false;
    while iterations < cfg.max_iters {
        iterations += 1;
        match cfg.pagerank_mode {
            PageRankMode::PaperFaithful => {
                for i in 0..n {
                    let own = if g.succs(i).is_empty() { rank[i] } else { 0.0 };
                    next[i] = own + g.preds(i).iter().map(|&j| rank[j] * inv_out[j]).sum::<f64>();
                }
                Norm::L1.normalize(&mut next);
            }
            PageRankMode::Damped => {
                let d = cfg.damping;
                let dangling: f64 =
                    (0..n).filter(|&i| g.succs(i).is_empty()).map(|i| rank[i]).sum();
                let base = ((1.0 - d) + d * dangling) / n as f64;
                for i in 0..n {
                    let inflow: f64 = g.preds(i).iter().map(|&j| rank[j] * inv_out[j]).sum();
                    next[i] = base + d * inflow;
                }
            }
        }
        let delta = l1_distance(&next, &rank);
        core::mem::swap(&mut rank, &mut next);
        if delta < cfg.tol {
            converged = true;
            break;
        }
    }
    cfg.norm_for(Algorithm::PageRank).normalize(&mut rank);
    Ok(ScoreVector { scores: rank, raw: None, iterations, converged, algorithm: Algorithm::PageRank })
}
