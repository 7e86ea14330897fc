use alloc::vec::Vec;

use super::{Algorithm, RankingConfig, ScoreVector};
use crate::graph::DirectedGraph;

/// `A_i = |B(i)|`, normalized per config. Raw counts are kept in
/// [`ScoreVector::raw`].
pub fn indegree_scores(g: &DirectedGraph, cfg: &RankingConfig) -> ScoreVector {
    let raw: Vec<f64> = (0..g.n()).map(|i| g.preds(i).len() as f64).collect();
    let mut scores = raw.clone();
    cfg.norm_for(Algorithm::InDegree).normalize(&mut scores);
    ScoreVector {
        scores,
        raw: Some(raw),
        iterations: 1,
        converged: true,
        algorithm: Algorithm::InDegree,
    }
}
