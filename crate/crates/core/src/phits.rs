//! PHITS: a probabilistic aspect model of citations fitted by EM.
//!
//! A citing document `d` is drawn with probability `P(d)`, a factor `z` with
//! `P(z|d)`, and a cited document `c` with `P(c|z)`, so
//! `P(d, c) = P(d) Σ_z P(c|z) P(z|d)`. Every edge `d → c` is one observation;
//! the fit maximizes `log L(A) = Σ_{(d,c)∈A} log P(d, c)`.
//!
//! EM updates:
//!
//! ```text
//! E:  P(z|d,c) ∝ P(c|z) P(z|d)
//! M:  P(c|z) ∝ Σ_d n(d,c) P(z|d,c)
//!     P(z|d) ∝ Σ_c n(d,c) P(z|d,c)
//!     P(d)   ∝ Σ_c n(d,c)
//! ```
//!
//! with `n(d,c) ∈ {0,1}`. EM only finds a local maximum, so the fit runs
//! several seeded restarts and keeps the one with the highest likelihood.

use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::DirectedGraph;
use crate::ranking::{Algorithm, ScoreVector};
use crate::{Error, Result};

/// Added to E-step denominators so a factor that loses all mass yields 0, not NaN.
const EPSILON: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhitsConfig {
    pub factors: usize,
    pub max_em_iters: usize,
    /// Stop once `(ll_new - ll_old) <= ll_tol · |ll_old|`.
    pub ll_tol: f64,
    pub restarts: usize,
    pub seed: u64,
}

impl PhitsConfig {
    pub fn new(factors: usize) -> Self {
        Self { factors, max_em_iters: 500, ll_tol: 1e-7, restarts: 8, seed: 0 }
    }

    pub fn validate(&self) -> Result<()> {
        if self.factors == 0 {
            return Err(Error::InvalidConfig("factors must be at least 1"));
        }
        if self.restarts == 0 {
            return Err(Error::InvalidConfig("restarts must be at least 1"));
        }
        if self.max_em_iters == 0 {
            return Err(Error::InvalidConfig("max_em_iters must be at least 1"));
        }
        if !(self.ll_tol >= 0.0) {
            return Err(Error::InvalidConfig("ll_tol must be non-negative"));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PhitsModel {
    /// `P(d)`, length n.
    pub p_d: Vec<f64>,
    /// `P(z|d)`, n rows of length `factors`.
    pub p_z_given_d: Vec<Vec<f64>>,
    /// `P(c|z)`, `factors` rows of length n.
    pub p_c_given_z: Vec<Vec<f64>>,
    pub log_likelihood: f64,
    pub iterations: usize,
    pub converged: bool,
    pub restart_index: usize,
    in_degree: Vec<usize>,
    edges: Vec<(usize, usize)>,
}

/// One EM iteration, reported to the observer of [`phits_fit_with_trace`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EmStep {
    pub restart: usize,
    /// 0 is the random initialization; iteration `t` follows the `t`-th M-step.
    pub iteration: usize,
    pub log_likelihood: f64,
}

impl PhitsModel {
    pub fn factors(&self) -> usize {
        self.p_c_given_z.len()
    }

    pub fn n(&self) -> usize {
        self.p_d.len()
    }

    /// `log L(A)` recomputed from the current parameters.
    pub fn recompute_log_likelihood(&self) -> f64 {
        log_likelihood(&self.edges, &self.p_d, &self.p_z_given_d, &self.p_c_given_z)
    }

    /// `P(z) = Σ_d P(z|d) P(d)`.
    pub fn factor_prior(&self) -> Vec<f64> {
        let mut pz = alloc::vec![0.0; self.factors()];
        for (row, &pd) in self.p_z_given_d.iter().zip(&self.p_d) {
            for (acc, &p) in pz.iter_mut().zip(row) {
                *acc += p * pd;
            }
        }
        pz
    }

    pub fn is_cited(&self, c: usize) -> bool {
        self.in_degree.get(c).is_some_and(|&k| k > 0)
    }
}

pub fn phits_fit(g: &DirectedGraph, cfg: &PhitsConfig) -> Result<PhitsModel> {
    phits_fit_with_trace(g, cfg, |_| {})
}

/// [`phits_fit`] reporting the log-likelihood after every EM step of every
/// restart.
pub fn phits_fit_with_trace(
    g: &DirectedGraph,
    cfg: &PhitsConfig,
    mut observe: impl FnMut(EmStep),
) -> Result<PhitsModel> {
    cfg.validate()?;
    if g.m() == 0 {
        return Err(Error::EmptyGraph);
    }
    if cfg.factors > g.n() {
        return Err(Error::FactorsExceedNodes { factors: cfg.factors, n: g.n() });
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let in_degree: Vec<usize> = (0..g.n()).map(|i| g.preds(i).len()).collect();
    let m = g.m() as f64;
    let p_d: Vec<f64> = (0..g.n()).map(|i| g.succs(i).len() as f64 / m).collect();

    let mut best: Option<PhitsModel> = None;
    for restart in 0..cfg.restarts {
        let model = run_restart(g, cfg, restart, &edges, &p_d, &mut observe);
        let better = match &best {
            None => true,
            Some(b) => model.log_likelihood > b.log_likelihood,
        };
        if better {
            best = Some(model);
        }
    }
    let mut best = best.expect("restarts >= 1");
    best.in_degree = in_degree;
    best.edges = edges;
    Ok(best)
}

fn run_restart(
    g: &DirectedGraph,
    cfg: &PhitsConfig,
    restart: usize,
    edges: &[(usize, usize)],
    p_d: &[f64],
    observe: &mut impl FnMut(EmStep),
) -> PhitsModel {
    let n = g.n();
    let k = cfg.factors;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(restart as u64);

    let mut p_z_given_d: Vec<Vec<f64>> = (0..n)
        .map(|d| {
            if g.succs(d).is_empty() {
                alloc::vec![1.0 / k as f64; k]
            } else {
                random_simplex(&mut rng, k)
            }
        })
        .collect();
    let mut p_c_given_z: Vec<Vec<f64>> = (0..k).map(|_| random_simplex(&mut rng, n)).collect();

    let mut ll = log_likelihood(edges, p_d, &p_z_given_d, &p_c_given_z);
    observe(EmStep { restart, iteration: 0, log_likelihood: ll });

    let mut posterior = alloc::vec![0.0; k];
    let mut cz_acc = alloc::vec![alloc::vec![0.0; n]; k];
    let mut zd_acc = alloc::vec![alloc::vec![0.0; k]; n];
    let mut iterations = 0;
    let mut converged = false;
    while iterations < cfg.max_em_iters {
        iterations += 1;
        cz_acc.iter_mut().for_each(|r| r.fill(0.0));
        zd_acc.iter_mut().for_each(|r| r.fill(0.0));
        for &(d, c) in edges {
            let mut total = 0.0;
            for z in 0..k {
                posterior[z] = p_c_given_z[z][c] * p_z_given_d[d][z];
                total += posterior[z];
            }
            let denom = total + EPSILON;
            for z in 0..k {
                let q = posterior[z] / denom;
                cz_acc[z][c] += q;
                zd_acc[d][z] += q;
            }
        }
        for (row, acc) in p_c_given_z.iter_mut().zip(&cz_acc) {
            assign_normalized(row, acc);
        }
        for (row, acc) in p_z_given_d.iter_mut().zip(&zd_acc) {
            assign_normalized(row, acc);
        }
        let next = log_likelihood(edges, p_d, &p_z_given_d, &p_c_given_z);
        observe(EmStep { restart, iteration: iterations, log_likelihood: next });
        let gain = next - ll;
        ll = next;
        if gain <= cfg.ll_tol * libm::fabs(ll - gain) {
            converged = true;
            break;
        }
    }
    PhitsModel {
        p_d: p_d.to_vec(),
        p_z_given_d,
        p_c_given_z,
        log_likelihood: ll,
        iterations,
        converged,
        restart_index: restart,
        in_degree: Vec::new(),
        edges: Vec::new(),
    }
}

fn random_simplex(rng: &mut ChaCha8Rng, len: usize) -> Vec<f64> {
    // 1 - U lies in (0, 1], so every entry starts strictly positive.
    let mut v: Vec<f64> = (0..len).map(|_| 1.0 - rng.random::<f64>()).collect();
    let s: f64 = v.iter().sum();
    v.iter_mut().for_each(|x| *x /= s);
    v
}

/// Overwrites `row` with `acc` scaled to sum 1. A zero accumulator leaves the
/// previous distribution in place.
fn assign_normalized(row: &mut [f64], acc: &[f64]) {
    let s: f64 = acc.iter().sum();
    if s > 0.0 {
        for (r, &a) in row.iter_mut().zip(acc) {
            *r = a / s;
        }
    }
}

fn log_likelihood(
    edges: &[(usize, usize)],
    p_d: &[f64],
    p_z_given_d: &[Vec<f64>],
    p_c_given_z: &[Vec<f64>],
) -> f64 {
    edges
        .iter()
        .map(|&(d, c)| {
            let p_c_given_d: f64 =
                p_c_given_z.iter().zip(&p_z_given_d[d]).map(|(cz, &zd)| cz[c] * zd).sum();
            libm::log(p_d[d]) + libm::log(p_c_given_d)
        })
        .sum()
}

/// Factor `z`'s authority vector is `P(·|z)`.
pub fn phits_authority_scores(model: &PhitsModel) -> Vec<ScoreVector> {
    model.p_c_given_z.iter().map(|row| score_vector(model, row.clone())).collect()
}

/// Per-node maximum of `P(c|z)` over factors, with the first factor reaching
/// it.
pub fn phits_aggregate_authority(model: &PhitsModel) -> (ScoreVector, Vec<usize>) {
    let n = model.n();
    let mut best = alloc::vec![0.0; n];
    let mut factor = alloc::vec![0usize; n];
    for (z, row) in model.p_c_given_z.iter().enumerate() {
        for c in 0..n {
            if row[c] > best[c] {
                best[c] = row[c];
                factor[c] = z;
            }
        }
    }
    (score_vector(model, best), factor)
}

/// `P(z|c) ∝ P(c|z) P(z)`.
pub fn phits_membership(model: &PhitsModel, c: usize) -> Result<Vec<f64>> {
    if c >= model.n() {
        return Err(Error::IndexOutOfRange { index: c, n: model.n() });
    }
    if !model.is_cited(c) {
        return Err(Error::NeverCited(c));
    }
    let pz = model.factor_prior();
    let mut w: Vec<f64> = model.p_c_given_z.iter().zip(&pz).map(|(row, &p)| row[c] * p).collect();
    let s: f64 = w.iter().sum();
    if s > 0.0 {
        w.iter_mut().for_each(|x| *x /= s);
    } else {
        let k = w.len() as f64;
        w.iter_mut().for_each(|x| *x = 1.0 / k);
    }
    Ok(w)
}

/// `score(c, z) = P(z|c) · P(c|z)`; documents never cited score 0.
pub fn phits_characteristic(model: &PhitsModel) -> Vec<ScoreVector> {
    let n = model.n();
    let mut rows = alloc::vec![alloc::vec![0.0; n]; model.factors()];
    for c in 0..n {
        if let Ok(member) = phits_membership(model, c) {
            for (z, row) in rows.iter_mut().enumerate() {
                row[c] = member[z] * model.p_c_given_z[z][c];
            }
        }
    }
    rows.into_iter().map(|r| score_vector(model, r)).collect()
}

fn score_vector(model: &PhitsModel, scores: Vec<f64>) -> ScoreVector {
    ScoreVector {
        scores,
        raw: None,
        iterations: model.iterations,
        converged: model.converged,
        algorithm: Algorithm::Phits,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn two_blocks() -> DirectedGraph {
        DirectedGraph::from_index_edges(
            8,
            &[(0, 2), (0, 3), (1, 2), (1, 3), (4, 6), (4, 7), (5, 6), (5, 7)],
        )
        .unwrap()
    }

    fn assert_simplex(v: &[f64]) {
        assert!(v.iter().all(|&x| x >= 0.0));
        assert_abs_diff_eq!(v.iter().sum::<f64>(), 1.0, epsilon = 1e-9);
    }

    #[test]
    fn single_edge_one_factor() {
        let g = DirectedGraph::from_index_edges(2, &[(0, 1)]).unwrap();
        let model = phits_fit(&g, &PhitsConfig::new(1)).unwrap();
        assert_eq!(model.p_d, [1.0, 0.0]);
        assert_abs_diff_eq!(model.p_c_given_z[0][1], 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(model.log_likelihood, 0.0, epsilon = 1e-12);
    }

    #[test]
    fn star_one_factor() {
        let g = DirectedGraph::from_index_edges(4, &[(1, 0), (2, 0), (3, 0)]).unwrap();
        let model = phits_fit(&g, &PhitsConfig::new(1)).unwrap();
        let auth = phits_authority_scores(&model);
        assert_abs_diff_eq!(auth[0].scores[0], 1.0, epsilon = 1e-12);
        let ch = phits_characteristic(&model);
        assert_abs_diff_eq!(ch[0].scores[0], 1.0, epsilon = 1e-12);
        assert!(ch[0].scores[1..].iter().all(|&x| x == 0.0));
        assert_eq!(phits_membership(&model, 0).unwrap(), [1.0]);
        assert_eq!(phits_membership(&model, 1), Err(Error::NeverCited(1)));
        assert!(phits_membership(&model, 9).is_err());
    }

    #[test]
    fn complete_bipartite_one_factor() {
        let g = DirectedGraph::from_index_edges(4, &[(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        let model = phits_fit(&g, &PhitsConfig::new(1)).unwrap();
        for (got, want) in model.p_c_given_z[0].iter().zip([0.0, 0.0, 0.5, 0.5]) {
            assert_abs_diff_eq!(*got, want, epsilon = 1e-12);
        }
        let ch = phits_characteristic(&model);
        assert_abs_diff_eq!(ch[0].scores[2], 0.5, epsilon = 1e-12);
        assert_abs_diff_eq!(ch[0].scores[3], 0.5, epsilon = 1e-12);
        assert_eq!(phits_membership(&model, 2), phits_membership(&model, 3));
    }

    #[test]
    fn two_blocks_separate() {
        let g = two_blocks();
        let model = phits_fit(&g, &PhitsConfig::new(2)).unwrap();
        let blocks = [[2usize, 3], [6, 7]];
        let auth = phits_authority_scores(&model);
        let ch = phits_characteristic(&model);
        for z in 0..2 {
            let row = &model.p_c_given_z[z];
            let block = blocks
                .iter()
                .find(|b| b.iter().map(|&c| row[c]).sum::<f64>() >= 0.95)
                .expect("factor concentrated on one block");
            let top = crate::ranking::argmax(&auth[z].scores).unwrap();
            assert!(block.contains(&top));
            let top_ch = crate::ranking::argmax(&ch[z].scores).unwrap();
            assert!(block.contains(&top_ch));
            let member = phits_membership(&model, block[0]).unwrap();
            assert!(member[z] >= 0.95);
        }
    }

    #[test]
    fn parameters_stay_on_simplex_and_likelihood_consistent() {
        let g = DirectedGraph::from_index_edges(
            6,
            &[(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (4, 0), (5, 0), (5, 3)],
        )
        .unwrap();
        for k in 1..=3 {
            let model = phits_fit(&g, &PhitsConfig { seed: 11, ..PhitsConfig::new(k) }).unwrap();
            assert_simplex(&model.p_d);
            model.p_z_given_d.iter().for_each(|r| assert_simplex(r));
            model.p_c_given_z.iter().for_each(|r| assert_simplex(r));
            assert_abs_diff_eq!(
                model.recompute_log_likelihood(),
                model.log_likelihood,
                epsilon = 1e-9
            );
            assert_simplex(&model.factor_prior());
        }
    }

    #[test]
    fn trace_is_monotone() {
        let g = two_blocks();
        let mut last: Option<EmStep> = None;
        phits_fit_with_trace(&g, &PhitsConfig::new(2), |step| {
            if let Some(prev) = last.filter(|p| p.restart == step.restart) {
                assert_eq!(step.iteration, prev.iteration + 1);
                assert!(step.log_likelihood >= prev.log_likelihood - 1e-10);
            }
            last = Some(step);
        })
        .unwrap();
    }

    #[test]
    fn seed_determinism() {
        let g = two_blocks();
        let cfg = PhitsConfig { seed: 42, restarts: 3, ..PhitsConfig::new(2) };
        assert_eq!(phits_fit(&g, &cfg).unwrap(), phits_fit(&g, &cfg).unwrap());
    }

    #[test]
    fn errors() {
        let mut b = crate::graph::GraphBuilder::new();
        b.add_node("a");
        assert_eq!(phits_fit(&b.build(), &PhitsConfig::new(1)), Err(Error::EmptyGraph));
        let g = DirectedGraph::from_index_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(
            phits_fit(&g, &PhitsConfig::new(3)),
            Err(Error::FactorsExceedNodes { factors: 3, n: 2 })
        );
        assert!(phits_fit(&g, &PhitsConfig::new(0)).is_err());
        assert!(phits_fit(&g, &PhitsConfig { restarts: 0, ..PhitsConfig::new(1) }).is_err());
    }
}
