//! Dense reference implementations, written straight from the formulas with
//! explicit matrices. They share nothing with the sparse code paths under
//! test beyond the graph's adjacency.
#![allow(dead_code)]

use std::collections::VecDeque;

use linkrank::core::DirectedGraph;
use nalgebra::{DMatrix, DVector};

pub const ORACLE_TOL: f64 = 1e-12;
pub const ORACLE_MAX_ITERS: usize = 200_000;

/// `W[i][j] = 1` iff `i → j`.
pub fn adjacency(g: &DirectedGraph) -> DMatrix<f64> {
    let w = g.to_matrix();
    DMatrix::from_fn(g.n(), g.n(), |i, j| w[i][j] as f64)
}

pub fn l1(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).sum()
}

fn normalize_l1(v: &mut DVector<f64>) {
    let s = v.iter().map(|x| x.abs()).sum::<f64>();
    if s > 0.0 {
        *v /= s;
    }
}

fn normalize_l2(v: &mut DVector<f64>) {
    let s = v.norm();
    if s > 0.0 {
        *v /= s;
    }
}

/// Iterates `v ← normalize(step(v))` until successive iterates are within
/// `ORACLE_TOL` in L1.
pub fn fixed_point(
    mut v: DVector<f64>,
    step: impl Fn(&DVector<f64>) -> DVector<f64>,
    normalize: fn(&mut DVector<f64>),
) -> (Vec<f64>, bool) {
    normalize(&mut v);
    for _ in 0..ORACLE_MAX_ITERS {
        let mut next = step(&v);
        normalize(&mut next);
        let d = (&next - &v).abs().sum();
        v = next;
        if d < ORACLE_TOL {
            return (v.iter().copied().collect(), true);
        }
    }
    (v.iter().copied().collect(), false)
}

pub fn indegree(g: &DirectedGraph) -> Vec<f64> {
    let w = adjacency(g);
    (0..g.n()).map(|j| w.column(j).sum()).collect()
}

fn out_degrees(w: &DMatrix<f64>) -> Vec<f64> {
    (0..w.nrows()).map(|i| w.row(i).sum()).collect()
}

/// Column-stochastic transition `T[i][j] = W[j][i] / L_j`, with a sink
/// keeping its own mass (`T[j][j] = 1` when `L_j = 0`).
fn faithful_transition(g: &DirectedGraph) -> DMatrix<f64> {
    let n = g.n();
    let w = adjacency(g);
    let outd = out_degrees(&w);
    DMatrix::from_fn(n, n, |i, j| {
        if outd[j] == 0.0 {
            if i == j { 1.0 } else { 0.0 }
        } else {
            w[(j, i)] / outd[j]
        }
    })
}

pub fn pagerank_faithful(g: &DirectedGraph) -> (Vec<f64>, bool) {
    let t = faithful_transition(g);
    fixed_point(DVector::from_element(g.n(), 1.0), |v| &t * v, normalize_l1)
}

/// Exactly `sweeps` applications of the undamped transition from uniform.
/// Used where the iteration has no limit (a closed periodic class).
pub fn pagerank_faithful_sweeps(g: &DirectedGraph, sweeps: usize) -> Vec<f64> {
    let t = faithful_transition(g);
    let mut v = DVector::from_element(g.n(), 1.0);
    normalize_l1(&mut v);
    for _ in 0..sweeps {
        v = &t * &v;
        normalize_l1(&mut v);
    }
    v.iter().copied().collect()
}

/// Google matrix `G = d·(M + dangling·1ᵀ/n) + (1−d)/n`.
pub fn pagerank_damped(g: &DirectedGraph, d: f64) -> (Vec<f64>, bool) {
    let n = g.n();
    let w = adjacency(g);
    let outd = out_degrees(&w);
    let nf = n as f64;
    let google = DMatrix::from_fn(n, n, |i, j| {
        let m = if outd[j] == 0.0 { 1.0 / nf } else { w[(j, i)] / outd[j] };
        d * m + (1.0 - d) / nf
    });
    fixed_point(DVector::from_element(n, 1.0), |v| &google * v, normalize_l1)
}

/// Principal eigenvector of `WᵀW` from the start `Wᵀ·1`, hubs `∝ W·a`.
pub fn hits(g: &DirectedGraph) -> (Vec<f64>, Vec<f64>, bool) {
    let w = adjacency(g);
    let wt = w.transpose();
    let ata = &wt * &w;
    let start = &wt * DVector::from_element(g.n(), 1.0);
    let (a, ok) = fixed_point(start, |v| &ata * v, normalize_l2);
    let mut h = &w * DVector::from_vec(a.clone());
    normalize_l2(&mut h);
    (h.iter().copied().collect(), a, ok)
}

/// Principal eigenvector of `Wᵀ D⁻¹ W` (D = out-degrees), hubs `∝ D⁻¹ W a`.
pub fn hubavg(g: &DirectedGraph) -> (Vec<f64>, Vec<f64>, bool) {
    let n = g.n();
    let w = adjacency(g);
    let outd = out_degrees(&w);
    let dinv = DMatrix::from_fn(n, n, |i, j| if i == j && outd[i] > 0.0 { 1.0 / outd[i] } else { 0.0 });
    let wt = w.transpose();
    let op = &wt * &dinv * &w;
    let start = &wt * DVector::from_element(n, 1.0);
    let (a, ok) = fixed_point(start, |v| &op * v, normalize_l2);
    let mut h = &dinv * &w * DVector::from_vec(a.clone());
    normalize_l2(&mut h);
    (h.iter().copied().collect(), a, ok)
}

/// SALSA authority chain by direct evaluation of
/// `a_{i,j} = Σ_{k∈B(i)∩B(j)} 1/|B(i)| · 1/|F(k)|`, over all node pairs.
pub fn salsa_authority_matrix(g: &DirectedGraph) -> DMatrix<f64> {
    let n = g.n();
    let w = adjacency(g);
    let outd = out_degrees(&w);
    let ind: Vec<f64> = (0..n).map(|j| w.column(j).sum()).collect();
    DMatrix::from_fn(n, n, |i, j| {
        if ind[i] == 0.0 {
            return 0.0;
        }
        (0..n)
            .filter(|&k| w[(k, i)] == 1.0 && w[(k, j)] == 1.0)
            .map(|k| 1.0 / ind[i] / outd[k])
            .sum()
    })
}

/// SALSA hub chain: `h_{i,j} = Σ_{k∈F(i)∩F(j)} 1/|F(i)| · 1/|B(k)|`.
pub fn salsa_hub_matrix(g: &DirectedGraph) -> DMatrix<f64> {
    let n = g.n();
    let w = adjacency(g);
    let outd = out_degrees(&w);
    let ind: Vec<f64> = (0..n).map(|j| w.column(j).sum()).collect();
    DMatrix::from_fn(n, n, |i, j| {
        if outd[i] == 0.0 {
            return 0.0;
        }
        (0..n)
            .filter(|&k| w[(i, k)] == 1.0 && w[(j, k)] == 1.0)
            .map(|k| 1.0 / outd[i] / ind[k])
            .sum()
    })
}

/// Stationary distribution of a row-stochastic chain restricted to `support`:
/// power iteration `π ← πP` from uniform inside every communicating class,
/// each class then weighted by `weight(class)`.
fn stationary(p: &DMatrix<f64>, support: &[usize], weight: impl Fn(&[usize]) -> f64) -> (Vec<f64>, bool) {
    let n = p.nrows();
    let mut comp = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for &s in support {
        if comp[s] != usize::MAX {
            continue;
        }
        let id = classes.len();
        let mut members = vec![s];
        comp[s] = id;
        let mut queue = VecDeque::from([s]);
        while let Some(i) = queue.pop_front() {
            for j in 0..n {
                if (p[(i, j)] > 0.0 || p[(j, i)] > 0.0) && comp[j] == usize::MAX {
                    comp[j] = id;
                    members.push(j);
                    queue.push_back(j);
                }
            }
        }
        members.sort_unstable();
        classes.push(members);
    }
    let mut out = vec![0.0; n];
    let mut all_ok = true;
    for class in &classes {
        let k = class.len();
        let sub = DMatrix::from_fn(k, k, |r, c| p[(class[r], class[c])]);
        let subt = sub.transpose();
        let (pi, ok) = fixed_point(DVector::from_element(k, 1.0), |v| &subt * v, normalize_l1);
        all_ok &= ok;
        let wgt = weight(class);
        for (r, &i) in class.iter().enumerate() {
            out[i] = pi[r] * wgt;
        }
    }
    (out, all_ok)
}

/// SALSA (hubs, authorities) as stationary distributions of the two chains,
/// each component weighted by its share of the edges.
pub fn salsa(g: &DirectedGraph) -> (Vec<f64>, Vec<f64>, bool) {
    let n = g.n();
    let w = adjacency(g);
    let m = g.m() as f64;
    let outd = out_degrees(&w);
    let ind: Vec<f64> = (0..n).map(|j| w.column(j).sum()).collect();
    let auth_support: Vec<usize> = (0..n).filter(|&i| ind[i] > 0.0).collect();
    let hub_support: Vec<usize> = (0..n).filter(|&i| outd[i] > 0.0).collect();
    let (a, ok_a) = stationary(&salsa_authority_matrix(g), &auth_support, |c| {
        c.iter().map(|&i| ind[i]).sum::<f64>() / m
    });
    let (h, ok_h) = stationary(&salsa_hub_matrix(g), &hub_support, |c| {
        c.iter().map(|&i| outd[i]).sum::<f64>() / m
    });
    (h, a, ok_a && ok_h)
}

/// The 50 seeded random digraphs used for oracle comparisons.
pub fn random_suite() -> Vec<(u64, DirectedGraph)> {
    (0..50u64)
        .map(|seed| {
            let n = 10 + (seed as usize * 7) % 41;
            let p = 0.1 + 0.05 * (seed % 5) as f64;
            (seed, linkrank::generate::random(n, p, 1000 + seed).unwrap())
        })
        .collect()
}
