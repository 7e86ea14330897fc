//! Iterative fixed-point rankings over a [`DirectedGraph`].
//!
//! All sweeps run over nodes in ascending index and sum neighbours in
//! ascending index, so results are bit-identical for identical inputs.
//! Convergence is the L1 distance between successive normalized iterates.

mod hits;
mod hubavg;
mod indegree;
mod pagerank;
mod salsa;

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

pub use hits::{hits, hits_with_initial};
pub use hubavg::{hubavg, hubavg_with_initial};
pub use indegree::indegree_scores;
pub use pagerank::{pagerank, pagerank_with_initial};
pub use salsa::{build_salsa_matrices, salsa, SalsaMatrices};

use crate::graph::DirectedGraph;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algorithm {
    InDegree,
    PageRank,
    Hits,
    Salsa,
    Phits,
    HubAvg,
}

impl Algorithm {
    pub const ALL: [Algorithm; 6] = [
        Algorithm::InDegree,
        Algorithm::PageRank,
        Algorithm::Hits,
        Algorithm::Salsa,
        Algorithm::Phits,
        Algorithm::HubAvg,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Algorithm::InDegree => "indegree",
            Algorithm::PageRank => "pagerank",
            Algorithm::Hits => "hits",
            Algorithm::Salsa => "salsa",
            Algorithm::Phits => "phits",
            Algorithm::HubAvg => "hubavg",
        }
    }

    /// The norm used when [`RankingConfig::norm`] is left unset.
    pub fn default_norm(self) -> Norm {
        match self {
            Algorithm::Hits | Algorithm::HubAvg => Norm::L2,
            _ => Norm::L1,
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.as_str().eq_ignore_ascii_case(s))
            .ok_or(Error::InvalidConfig("unknown algorithm"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Norm {
    L1,
    L2,
}

impl Norm {
    pub fn of(self, v: &[f64]) -> f64 {
        match self {
            Norm::L1 => v.iter().map(|x| x.abs()).sum(),
            Norm::L2 => libm::sqrt(v.iter().map(|x| x * x).sum()),
        }
    }

    /// Scales `v` to unit norm. A zero vector is left untouched.
    pub fn normalize(self, v: &mut [f64]) {
        let s = self.of(v);
        if s > 0.0 {
            v.iter_mut().for_each(|x| *x /= s);
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PageRankMode {
    /// Undamped `R_i = Σ_{j→i} R_j / L_j` with L1 renormalization per sweep.
    PaperFaithful,
    /// Damped with uniform teleport and uniform redistribution of dangling mass.
    Damped,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SalsaMethod {
    ClosedForm,
    PowerIteration,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RankingConfig {
    pub max_iters: usize,
    pub tol: f64,
    /// `None` picks [`Algorithm::default_norm`].
    pub norm: Option<Norm>,
    pub pagerank_mode: PageRankMode,
    pub damping: f64,
    pub salsa_method: SalsaMethod,
}

impl Default for RankingConfig {
    fn default() -> Self {
        Self {
            max_iters: 1000,
            tol: 1e-8,
            norm: None,
            pagerank_mode: PageRankMode::Damped,
            damping: 0.85,
            salsa_method: SalsaMethod::ClosedForm,
        }
    }
}

impl RankingConfig {
    pub fn validate(&self) -> Result<()> {
        if self.max_iters == 0 {
            return Err(Error::InvalidConfig("max_iters must be at least 1"));
        }
        if !(self.tol > 0.0) {
            return Err(Error::InvalidConfig("tol must be positive"));
        }
        if !(self.damping > 0.0 && self.damping < 1.0) {
            return Err(Error::InvalidConfig("damping must lie in (0, 1)"));
        }
        Ok(())
    }

    pub fn norm_for(&self, algorithm: Algorithm) -> Norm {
        self.norm.unwrap_or(algorithm.default_norm())
    }
}

/// Single score per node.
#[derive(Debug, Clone, PartialEq)]
pub struct ScoreVector {
    pub scores: Vec<f64>,
    /// Unnormalized values when the algorithm has a natural raw scale
    /// (in-degree counts).
    pub raw: Option<Vec<f64>>,
    pub iterations: usize,
    pub converged: bool,
    pub algorithm: Algorithm,
}

#[derive(Debug, Clone, PartialEq)]
pub struct HubAuthScores {
    pub hubs: Vec<f64>,
    pub authorities: Vec<f64>,
    pub iterations: usize,
    pub converged: bool,
    pub algorithm: Algorithm,
}

pub(crate) fn l1_distance(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).sum()
}

pub(crate) fn require_edges(g: &DirectedGraph) -> Result<()> {
    if g.m() == 0 {
        Err(Error::EmptyGraph)
    } else {
        Ok(())
    }
}

/// Indices sorted by descending score, ties by ascending index.
pub fn order_by_score(scores: &[f64]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..scores.len()).collect();
    idx.sort_by(|&a, &b| scores[b].total_cmp(&scores[a]).then(a.cmp(&b)));
    idx
}

/// First index holding the maximum score.
pub fn argmax(scores: &[f64]) -> Option<usize> {
    order_by_score(scores).first().copied()
}

/// Mutual-reinforcement iteration shared by HITS and HubAvg.
///
/// Each sweep computes `a_i = Σ_{j∈B(i)} h_j`, normalizes, then
/// `h_i = weight(i) · Σ_{j∈F(i)} a_j`, normalizes.
pub(crate) fn reinforce(
    g: &DirectedGraph,
    cfg: &RankingConfig,
    algorithm: Algorithm,
    initial_hubs: &[f64],
    hub_weight: impl Fn(usize) -> f64,
) -> Result<HubAuthScores> {
    cfg.validate()?;
    require_edges(g)?;
    let n = g.n();
    if initial_hubs.len() != n {
        return Err(Error::InvalidConfig("initial vector length must equal node count"));
    }
    if initial_hubs.iter().any(|&x| !(x >= 0.0) || !x.is_finite()) {
        return Err(Error::InvalidConfig("initial vector must be finite and non-negative"));
    }
    let norm = cfg.norm_for(algorithm);
    let mut hubs = initial_hubs.to_vec();
    norm.normalize(&mut hubs);
    let mut auths = alloc::vec![0.0; n];
    let mut next_a = alloc::vec![0.0; n];
    let mut next_h = alloc::vec![0.0; n];
    let mut iterations = 0;
    let mut converged = false;
    while iterations < cfg.max_iters {
        iterations += 1;
        for i in 0..n {
            next_a[i] = g.preds(i).iter().map(|&j| hubs[j]).sum();
        }
        norm.normalize(&mut next_a);
        for i in 0..n {
            let s: f64 = g.succs(i).iter().map(|&j| next_a[j]).sum();
            next_h[i] = hub_weight(i) * s;
        }
        norm.normalize(&mut next_h);
        let delta = l1_distance(&next_a, &auths).max(l1_distance(&next_h, &hubs));
        core::mem::swap(&mut auths, &mut next_a);
        core::mem::swap(&mut hubs, &mut next_h);
        if delta < cfg.tol {
            converged = true;
            break;
        }
    }
    Ok(HubAuthScores { hubs, authorities: auths, iterations, converged, algorithm })
}
