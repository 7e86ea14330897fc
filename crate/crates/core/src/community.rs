//! Community pages: highly ranked nodes with no outgoing links.
//!
//! The pipeline ranks every node, keeps a candidate pool (top-k or a score
//! threshold), drops candidates that link anywhere or that nobody links to,
//! and reports each survivor with its in-neighbours as members. For the
//! hub/authority algorithms the authority vector is the score.

use alloc::vec::Vec;

use crate::graph::DirectedGraph;
use crate::phits::{self, PhitsConfig, PhitsModel};
use crate::ranking::{self, order_by_score, Algorithm, RankingConfig};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Selection {
    /// The `k` best-scored nodes, ties by ascending index.
    TopK(usize),
    /// Every node scoring at least this value.
    Threshold(f64),
}

#[derive(Debug, Clone, PartialEq)]
pub struct DetectionConfig {
    pub algorithm: Algorithm,
    pub selection: Selection,
    pub ranking: RankingConfig,
    /// Required when `algorithm` is [`Algorithm::Phits`].
    pub phits: Option<PhitsConfig>,
}

impl DetectionConfig {
    pub fn new(algorithm: Algorithm, selection: Selection) -> Self {
        Self { algorithm, selection, ranking: RankingConfig::default(), phits: None }
    }
}

/// Scores from any of the six algorithms in one shape.
#[derive(Debug, Clone, PartialEq)]
pub struct RankedNodes {
    pub algorithm: Algorithm,
    /// The score used for detection: PageRank/InDegree score, authority weight,
    /// or the max-over-factors `P(c|z)` for PHITS.
    pub scores: Vec<f64>,
    pub hubs: Option<Vec<f64>>,
    /// In-degree counts for InDegree.
    pub raw: Option<Vec<f64>>,
    /// PHITS: factor reaching the maximum for each node.
    pub factor: Option<Vec<usize>>,
    pub phits: Option<PhitsModel>,
    pub iterations: usize,
    pub converged: bool,
}

pub fn rank_nodes(
    g: &DirectedGraph,
    algorithm: Algorithm,
    cfg: &RankingConfig,
    phits_cfg: Option<&PhitsConfig>,
) -> Result<RankedNodes> {
    let single = |s: ranking::ScoreVector| RankedNodes {
        algorithm,
        scores: s.scores,
        hubs: None,
        raw: s.raw,
        factor: None,
        phits: None,
        iterations: s.iterations,
        converged: s.converged,
    };
    let dual = |s: ranking::HubAuthScores| RankedNodes {
        algorithm,
        scores: s.authorities,
        hubs: Some(s.hubs),
        raw: None,
        factor: None,
        phits: None,
        iterations: s.iterations,
        converged: s.converged,
    };
    Ok(match algorithm {
        Algorithm::InDegree => {
            cfg.validate()?;
            single(ranking::indegree_scores(g, cfg))
        }
        Algorithm::PageRank => single(ranking::pagerank(g, cfg)?),
        Algorithm::Hits => dual(ranking::hits(g, cfg)?),
        Algorithm::Salsa => dual(ranking::salsa(g, cfg)?),
        Algorithm::HubAvg => dual(ranking::hubavg(g, cfg)?),
        Algorithm::Phits => {
            let pc = phits_cfg.ok_or(Error::InvalidConfig("phits needs a factor count"))?;
            let model = phits::phits_fit(g, pc)?;
            let (agg, factor) = phits::phits_aggregate_authority(&model);
            RankedNodes {
                algorithm,
                scores: agg.scores,
                hubs: None,
                raw: None,
                factor: Some(factor),
                iterations: model.iterations,
                converged: model.converged,
                phits: Some(model),
            }
        }
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct Community {
    pub page: usize,
    pub score: f64,
    /// `B(page)`, ascending.
    pub members: Vec<usize>,
    pub algorithm: Algorithm,
    /// PHITS factor that produced the page's score.
    pub factor: Option<usize>,
}

/// Applies the candidate pool and the sink rule to precomputed scores.
pub fn select_communities(
    g: &DirectedGraph,
    ranked: &RankedNodes,
    selection: Selection,
) -> Result<Vec<Community>> {
    let n = g.n();
    if ranked.scores.len() != n {
        return Err(Error::InvalidConfig("score vector length must equal node count"));
    }
    let order = order_by_score(&ranked.scores);
    let candidates: &[usize] = match selection {
        Selection::TopK(k) => {
            if k == 0 || k > n {
                return Err(Error::InvalidConfig("top_k must lie in 1..=n"));
            }
            &order[..k]
        }
        Selection::Threshold(t) => {
            if t.is_nan() {
                return Err(Error::InvalidConfig("threshold must be a number"));
            }
            let cut = order.iter().take_while(|&&i| ranked.scores[i] >= t).count();
            &order[..cut]
        }
    };
    Ok(candidates
        .iter()
        .filter(|&&i| g.succs(i).is_empty() && !g.preds(i).is_empty())
        .map(|&i| Community {
            page: i,
            score: ranked.scores[i],
            members: g.preds(i).to_vec(),
            algorithm: ranked.algorithm,
            factor: ranked.factor.as_ref().map(|f| f[i]),
        })
        .collect())
}

/// Ranks with the configured algorithm and returns community pages sorted by
/// descending score. A graph without edges has no communities.
pub fn detect_communities(g: &DirectedGraph, cfg: &DetectionConfig) -> Result<Vec<Community>> {
    if g.m() == 0 {
        return Ok(Vec::new());
    }
    let ranked = rank_nodes(g, cfg.algorithm, &cfg.ranking, cfg.phits.as_ref())?;
    select_communities(g, &ranked, cfg.selection)
}

#[derive(Debug, Clone, PartialEq)]
pub struct OverlapPair {
    pub page_a: usize,
    pub page_b: usize,
    pub shared: Vec<usize>,
    pub jaccard: f64,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct OverlapReport {
    pub pairs: Vec<OverlapPair>,
    /// Nodes belonging to two or more communities, ascending.
    pub multi_members: Vec<usize>,
}

/// Pairwise shared members and Jaccard index `|A∩B| / |A∪B|`; only pairs
/// that share someone are listed.
pub fn overlap(communities: &[Community]) -> OverlapReport {
    let mut report = OverlapReport::default();
    for (i, a) in communities.iter().enumerate() {
        for b in &communities[i + 1..] {
            let shared = intersect(&a.members, &b.members);
            if shared.is_empty() {
                continue;
            }
            let union = a.members.len() + b.members.len() - shared.len();
            report.pairs.push(OverlapPair {
                page_a: a.page,
                page_b: b.page,
                jaccard: shared.len() as f64 / union as f64,
                shared,
            });
        }
    }
    let mut all: Vec<usize> = communities.iter().flat_map(|c| c.members.iter().copied()).collect();
    all.sort_unstable();
    report.multi_members = all.windows(2).filter(|w| w[0] == w[1]).map(|w| w[0]).collect();
    report.multi_members.dedup();
    report
}

fn intersect(a: &[usize], b: &[usize]) -> Vec<usize> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            core::cmp::Ordering::Less => i += 1,
            core::cmp::Ordering::Greater => j += 1,
            core::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn config(algorithm: Algorithm, selection: Selection) -> DetectionConfig {
        DetectionConfig {
            phits: Some(PhitsConfig::new(1)),
            ..DetectionConfig::new(algorithm, selection)
        }
    }

    fn fan_in() -> DirectedGraph {
        DirectedGraph::from_index_edges(6, &[(1, 0), (2, 0), (3, 0), (4, 0), (5, 0)]).unwrap()
    }

    #[test]
    fn single_planted_page_any_algorithm() {
        let g = fan_in();
        for a in Algorithm::ALL {
            let found = detect_communities(&g, &config(a, Selection::TopK(1))).unwrap();
            assert_eq!(found.len(), 1, "{a}");
            assert_eq!(found[0].page, 0);
            assert_eq!(found[0].members, [1, 2, 3, 4, 5]);
        }
    }

    #[test]
    fn decoy_with_out_link_is_dropped() {
        let mut edges: Vec<(usize, usize)> = (1..=5).map(|i| (i, 0)).collect();
        edges.extend((7..=11).map(|i| (i, 6)));
        edges.push((6, 0));
        let g = DirectedGraph::from_index_edges(12, &edges).unwrap();
        for a in Algorithm::ALL {
            let found = detect_communities(&g, &config(a, Selection::TopK(2))).unwrap();
            let pages: Vec<usize> = found.iter().map(|c| c.page).collect();
            assert_eq!(pages, [0], "{a}");
            assert_eq!(found[0].members, [1, 2, 3, 4, 5, 6]);
        }
    }

    #[test]
    fn empty_graph_has_no_communities() {
        let g = DirectedGraph::from_edge_list(core::iter::empty());
        for a in Algorithm::ALL {
            assert!(detect_communities(&g, &config(a, Selection::TopK(1))).unwrap().is_empty());
        }
    }

    #[test]
    fn threshold_selection() {
        let g = fan_in();
        let cfg = config(Algorithm::InDegree, Selection::Threshold(0.5));
        assert_eq!(detect_communities(&g, &cfg).unwrap().len(), 1);
        let cfg = config(Algorithm::InDegree, Selection::Threshold(2.0));
        assert!(detect_communities(&g, &cfg).unwrap().is_empty());
    }

    #[test]
    fn invalid_top_k() {
        let g = fan_in();
        assert!(detect_communities(&g, &config(Algorithm::PageRank, Selection::TopK(0))).is_err());
        assert!(detect_communities(&g, &config(Algorithm::PageRank, Selection::TopK(7))).is_err());
        let no_phits = DetectionConfig::new(Algorithm::Phits, Selection::TopK(1));
        assert!(detect_communities(&g, &no_phits).is_err());
    }

    fn community(page: usize, members: &[usize]) -> Community {
        Community {
            page,
            score: 1.0,
            members: members.to_vec(),
            algorithm: Algorithm::InDegree,
            factor: None,
        }
    }

    #[test]
    fn overlap_arithmetic() {
        let r = overlap(&[community(0, &[1, 2, 3]), community(9, &[3, 4])]);
        assert_eq!(r.pairs.len(), 1);
        assert_eq!(r.pairs[0].shared, [3]);
        // |{1,2,3} ∪ {3,4}| = 4
        assert_eq!(r.pairs[0].jaccard, 0.25);
        assert_eq!(r.multi_members, [3]);

        let r = overlap(&[community(0, &[1, 2]), community(9, &[3, 4])]);
        assert_eq!(r, OverlapReport::default());

        let r = overlap(&[community(0, &[1, 2]), community(9, &[1, 2])]);
        assert_eq!(r.pairs[0].jaccard, 1.0);
        assert_eq!(r.multi_members, [1, 2]);
    }

    fn arb_graph() -> impl Strategy<Value = DirectedGraph> {
        (2usize..25).prop_flat_map(|n| {
            proptest::collection::vec((0..n, 0..n), 0..n * 3)
                .prop_map(move |e| DirectedGraph::from_index_edges(n, &e).unwrap())
        })
    }

    const NON_PHITS: [Algorithm; 5] = [
        Algorithm::InDegree,
        Algorithm::PageRank,
        Algorithm::Hits,
        Algorithm::Salsa,
        Algorithm::HubAvg,
    ];

    proptest! {
        #[test]
        fn pages_are_sinks_with_members(g in arb_graph(), k in 1usize..25) {
            let k = k.min(g.n());
            for a in NON_PHITS {
                for c in detect_communities(&g, &config(a, Selection::TopK(k))).unwrap() {
                    prop_assert_eq!(g.out_degree(c.page).unwrap(), 0);
                    prop_assert!(!c.members.is_empty());
                    prop_assert_eq!(&c.members[..], g.in_neighbors(c.page).unwrap());
                }
            }
        }

        #[test]
        fn growing_top_k_only_adds(g in arb_graph(), k in 1usize..24) {
            prop_assume!(k < g.n());
            for a in NON_PHITS {
                let small = detect_communities(&g, &config(a, Selection::TopK(k))).unwrap();
                let big = detect_communities(&g, &config(a, Selection::TopK(k + 1))).unwrap();
                for c in &small {
                    prop_assert!(big.iter().any(|b| b.page == c.page));
                }
            }
        }

        #[test]
        fn member_rule_is_algorithm_agnostic(g in arb_graph()) {
            let n = g.n();
            let runs: Vec<Vec<Community>> = NON_PHITS
                .iter()
                .map(|&a| detect_communities(&g, &config(a, Selection::TopK(n))).unwrap())
                .collect();
            for run in &runs {
                for other in &runs {
                    for c in run {
                        if let Some(d) = other.iter().find(|d| d.page == c.page) {
                            prop_assert_eq!(&c.members, &d.members);
                        }
                    }
                }
            }
        }

        #[test]
        fn detection_is_deterministic(g in arb_graph()) {
            for a in NON_PHITS {
                let cfg = config(a, Selection::TopK(g.n()));
                prop_assert_eq!(detect_communities(&g, &cfg).unwrap(), detect_communities(&g, &cfg).unwrap());
            }
        }
    }
}
