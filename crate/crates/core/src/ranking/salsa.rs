use alloc::vec::Vec;

use super::{l1_distance, require_edges, Algorithm, HubAuthScores, RankingConfig, SalsaMethod};
use crate::graph::DirectedGraph;
use crate::Result;

/// The two SALSA Markov chains, stored densely over their support.
///
/// `hub[r][c]` is the transition probability from hub `hub_support[r]` to hub
/// `hub_support[c]`:
/// `h_{i,j} = Σ_{k∈F(i)∩F(j)} 1/|F(i)| · 1/|B(k)|`.
/// `auth[r][c]` is the analogue over `auth_support`:
/// `a_{i,j} = Σ_{k∈B(i)∩B(j)} 1/|B(i)| · 1/|F(k)|`.
///
/// Memory is quadratic in the support sizes; [`salsa`] never builds these.
#[derive(Debug, Clone, PartialEq)]
pub struct SalsaMatrices {
    /// Nodes with out-degree > 0, ascending.
    pub hub_support: Vec<usize>,
    /// Nodes with in-degree > 0, ascending.
    pub auth_support: Vec<usize>,
    pub hub: Vec<Vec<f64>>,
    pub auth: Vec<Vec<f64>>,
}

impl SalsaMatrices {
    pub fn hub_entry(&self, i: usize, j: usize) -> Option<f64> {
        let r = self.hub_support.binary_search(&i).ok()?;
        let c = self.hub_support.binary_search(&j).ok()?;
        Some(self.hub[r][c])
    }

    pub fn auth_entry(&self, i: usize, j: usize) -> Option<f64> {
        let r = self.auth_support.binary_search(&i).ok()?;
        let c = self.auth_support.binary_search(&j).ok()?;
        Some(self.auth[r][c])
    }
}

pub fn build_salsa_matrices(g: &DirectedGraph) -> Result<SalsaMatrices> {
    require_edges(g)?;
    let n = g.n();
    let hub_support: Vec<usize> = (0..n).filter(|&i| !g.succs(i).is_empty()).collect();
    let auth_support: Vec<usize> = (0..n).filter(|&i| !g.preds(i).is_empty()).collect();
    let position = |support: &[usize]| {
        let mut pos = alloc::vec![usize::MAX; n];
        for (p, &i) in support.iter().enumerate() {
            pos[i] = p;
        }
        pos
    };
    let hub_pos = position(&hub_support);
    let auth_pos = position(&auth_support);

    // Walk i -> k -> j forward then backward for hubs.
    let mut hub = alloc::vec![alloc::vec![0.0; hub_support.len()]; hub_support.len()];
    for (r, &i) in hub_support.iter().enumerate() {
        let fi = g.succs(i).len() as f64;
        for &k in g.succs(i) {
            let bk = g.preds(k).len() as f64;
            for &j in g.preds(k) {
                hub[r][hub_pos[j]] += 1.0 / fi / bk;
            }
        }
    }
    // Walk i <- k -> j backward then forward for authorities.
    let mut auth = alloc::vec![alloc::vec![0.0; auth_support.len()]; auth_support.len()];
    for (r, &i) in auth_support.iter().enumerate() {
        let bi = g.preds(i).len() as f64;
        for &k in g.preds(i) {
            let fk = g.succs(k).len() as f64;
            for &j in g.succs(k) {
                auth[r][auth_pos[j]] += 1.0 / bi / fk;
            }
        }
    }
    Ok(SalsaMatrices { hub_support, auth_support, hub, auth })
}

/// SALSA hub and authority weights.
///
/// [`SalsaMethod::ClosedForm`] returns `a_i = |B(i)|/m` and `h_i = |F(i)|/m`.
/// On a connected co-citation component this is the stationary distribution
/// of the chain; across components it weights each component by its share of
/// the edges.
///
/// [`SalsaMethod::PowerIteration`] iterates `π ← πA` and `ρ ← ρH` directly.
/// Each bipartite component starts uniform over its nodes with total mass
/// equal to its edge share, which the chains conserve, so both methods
/// target the same limit.
pub fn salsa(g: &DirectedGraph, cfg: &RankingConfig) -> Result<HubAuthScores> {
    cfg.validate()?;
    require_edges(g)?;
    let mut out = match cfg.salsa_method {
        SalsaMethod::ClosedForm => {
            let m = g.m() as f64;
            HubAuthScores {
                hubs: (0..g.n()).map(|i| g.succs(i).len() as f64 / m).collect(),
                authorities: (0..g.n()).map(|i| g.preds(i).len() as f64 / m).collect(),
                iterations: 1,
                converged: true,
                algorithm: Algorithm::Salsa,
            }
        }
        SalsaMethod::PowerIteration => power_iteration(g, cfg),
    };
    let norm = cfg.norm_for(Algorithm::Salsa);
    norm.normalize(&mut out.hubs);
    norm.normalize(&mut out.authorities);
    Ok(out)
}

fn power_iteration(g: &DirectedGraph, cfg: &RankingConfig) -> HubAuthScores {
    let n = g.n();
    let (mut auths, mut hubs) = component_start(g);
    let mut next_a = alloc::vec![0.0; n];
    let mut next_h = alloc::vec![0.0; n];
    let mut scratch = alloc::vec![0.0; n];
    let mut iterations = 0;
    let mut converged = false;
    while iterations < cfg.max_iters {
        iterations += 1;
        // (πA)_j = Σ_{k∈B(j)} 1/|F(k)| Σ_{i∈F(k)} π_i/|B(i)|
        for k in 0..n {
            let f = g.succs(k);
            scratch[k] = if f.is_empty() {
                0.0
            } else {
                f.iter().map(|&i| auths[i] / g.preds(i).len() as f64).sum::<f64>() / f.len() as f64
            };
        }
        for j in 0..n {
            next_a[j] = g.preds(j).iter().map(|&k| scratch[k]).sum();
        }
        // (ρH)_j = Σ_{k∈F(j)} 1/|B(k)| Σ_{i∈B(k)} ρ_i/|F(i)|
        for k in 0..n {
            let b = g.preds(k);
            scratch[k] = if b.is_empty() {
                0.0
            } else {
                b.iter().map(|&i| hubs[i] / g.succs(i).len() as f64).sum::<f64>() / b.len() as f64
            };
        }
        for j in 0..n {
            next_h[j] = g.succs(j).iter().map(|&k| scratch[k]).sum();
        }
        let delta = l1_distance(&next_a, &auths).max(l1_distance(&next_h, &hubs));
        core::mem::swap(&mut auths, &mut next_a);
        core::mem::swap(&mut hubs, &mut next_h);
        if delta < cfg.tol {
            converged = true;
            break;
        }
    }
    HubAuthScores { hubs, authorities: auths, iterations, converged, algorithm: Algorithm::Salsa }
}

/// Starting vectors for the power method: within each connected component of
/// the hub/authority bipartite graph, uniform over the component's
/// authorities (resp. hubs), scaled to the component's edge share.
fn component_start(g: &DirectedGraph) -> (Vec<f64>, Vec<f64>) {
    let n = g.n();
    // Hub copy of node i is i, authority copy is n + i.
    let mut parent: Vec<usize> = (0..2 * n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for (s, d) in g.edges() {
        let a = find(&mut parent, s);
        let b = find(&mut parent, n + d);
        if a != b {
            parent[a.max(b)] = a.min(b);
        }
    }
    let mut edges = alloc::vec![0usize; 2 * n];
    let mut hub_count = alloc::vec![0usize; 2 * n];
    let mut auth_count = alloc::vec![0usize; 2 * n];
    for (s, _) in g.edges() {
        let r = find(&mut parent, s);
        edges[r] += 1;
    }
    for i in 0..n {
        if !g.succs(i).is_empty() {
            let r = find(&mut parent, i);
            hub_count[r] += 1;
        }
        if !g.preds(i).is_empty() {
            let r = find(&mut parent, n + i);
            auth_count[r] += 1;
        }
    }
    let m = g.m() as f64;
    let mut auths = alloc::vec![0.0; n];
    let mut hubs = alloc::vec![0.0; n];
    for i in 0..n {
        if !g.preds(i).is_empty() {
            let r = find(&mut parent, n + i);
            auths[i] = edges[r] as f64 / m / auth_count[r] as f64;
        }
        if !g.succs(i).is_empty() {
            let r = find(&mut parent, i);
            hubs[i] = edges[r] as f64 / m / hub_count[r] as f64;
        }
    }
    (auths, hubs)
}
