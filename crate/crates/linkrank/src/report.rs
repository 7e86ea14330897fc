//! Run report JSON.
//!
//! Schema `linkrank-report/1`:
//!
//! ```text
//! {
//!   "schema": "linkrank-report/1",
//!   "command": "rank" | "detect",
//!   "algorithm": "indegree" | "pagerank" | "hits" | "salsa" | "phits" | "hubavg",
//!   "config": { every flag that influences the result },
//!   "graph": { "nodes", "edges", "self_loops_dropped", "duplicates_dropped" },
//!   "iterations": int, "converged": bool,
//!   "wall_time_ms": real            (only with --timing),
//!   "nodes": [ { "index", "label", "score", "hub"?, "raw"?, "factor"? } ],
//!   "phits": { "factors", "log_likelihood", "restart_index", "em_iterations",
//!              "authority": [[real; n]; factors] }          (phits only),
//!   "communities": [ { "page", "page_index", "score", "factor"?,
//!                      "members": [label], "member_indices": [int] } ]  (detect),
//!   "overlap": { "pairs": [ { "page_a", "page_b", "shared": [label], "jaccard" } ],
//!                "multi_members": [label] }                              (detect)
//! }
//! ```
//!
//! Reals are written with 17 significant digits in exponent form
//! (`3.3333333333333331e-1`), which round-trips every `f64` exactly.
//! Non-finite values are written as `null`.

use linkrank_core::community::RankedNodes;
use linkrank_core::{Community, DirectedGraph, OverlapReport};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub const SCHEMA: &str = "linkrank-report/1";

/// An `f64` serialized with 17 significant digits.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Real(pub f64);

impl Serialize for Real {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if !self.0.is_finite() {
            return s.serialize_none();
        }
        let raw = serde_json::value::RawValue::from_string(format!("{:.16e}", self.0))
            .map_err(serde::ser::Error::custom)?;
        raw.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Real {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        Ok(Real(Option::<f64>::deserialize(d)?.unwrap_or(f64::NAN)))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConfigEcho {
    pub input: String,
    pub format: String,
    pub algorithm: String,
    pub pagerank_mode: String,
    pub damping: Real,
    pub norm: String,
    pub tol: Real,
    pub max_iters: usize,
    pub salsa_method: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub factors: Option<usize>,
    pub restarts: usize,
    pub seed: u64,
    pub max_em_iters: usize,
    pub ll_tol: Real,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub top_k: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub threshold: Option<Real>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphSummary {
    pub nodes: usize,
    pub edges: usize,
    pub self_loops_dropped: usize,
    pub duplicates_dropped: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NodeScore {
    pub index: usize,
    pub label: String,
    pub score: Real,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hub: Option<Real>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub raw: Option<Real>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub factor: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PhitsSummary {
    pub factors: usize,
    pub log_likelihood: Real,
    pub restart_index: usize,
    pub em_iterations: usize,
    pub authority: Vec<Vec<Real>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CommunityRecord {
    pub page: String,
    pub page_index: usize,
    pub score: Real,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub factor: Option<usize>,
    pub members: Vec<String>,
    pub member_indices: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OverlapPairRecord {
    pub page_a: String,
    pub page_b: String,
    pub shared: Vec<String>,
    pub jaccard: Real,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OverlapRecord {
    pub pairs: Vec<OverlapPairRecord>,
    pub multi_members: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub schema: String,
    pub command: String,
    pub algorithm: String,
    pub config: ConfigEcho,
    pub graph: GraphSummary,
    pub iterations: usize,
    pub converged: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<Real>,
    pub nodes: Vec<NodeScore>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub phits: Option<PhitsSummary>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub communities: Option<Vec<CommunityRecord>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub overlap: Option<OverlapRecord>,
}

impl RunReport {
    pub fn new(command: &str, g: &DirectedGraph, ranked: &RankedNodes, config: ConfigEcho) -> Self {
        let stats = g.build_stats();
        let nodes = (0..g.n())
            .map(|i| NodeScore {
                index: i,
                label: g.label(i).to_string(),
                score: Real(ranked.scores[i]),
                hub: ranked.hubs.as_ref().map(|h| Real(h[i])),
                raw: ranked.raw.as_ref().map(|r| Real(r[i])),
                factor: ranked.factor.as_ref().map(|f| f[i]),
            })
            .collect();
        let phits = ranked.phits.as_ref().map(|m| PhitsSummary {
            factors: m.factors(),
            log_likelihood: Real(m.log_likelihood),
            restart_index: m.restart_index,
            em_iterations: m.iterations,
            authority: m.p_c_given_z.iter().map(|row| row.iter().copied().map(Real).collect()).collect(),
        });
        RunReport {
            schema: SCHEMA.to_string(),
            command: command.to_string(),
            algorithm: ranked.algorithm.to_string(),
            config,
            graph: GraphSummary {
                nodes: g.n(),
                edges: g.m(),
                self_loops_dropped: stats.self_loops_dropped,
                duplicates_dropped: stats.duplicates_dropped,
            },
            iterations: ranked.iterations,
            converged: ranked.converged,
            wall_time_ms: None,
            nodes,
            phits,
            communities: None,
            overlap: None,
        }
    }

    pub fn with_communities(
        mut self,
        g: &DirectedGraph,
        communities: &[Community],
        overlap: &OverlapReport,
    ) -> Self {
        let labels = |ids: &[usize]| ids.iter().map(|&i| g.label(i).to_string()).collect();
        self.communities = Some(
            communities
                .iter()
                .map(|c| CommunityRecord {
                    page: g.label(c.page).to_string(),
                    page_index: c.page,
                    score: Real(c.score),
                    factor: c.factor,
                    members: labels(&c.members),
                    member_indices: c.members.clone(),
                })
                .collect(),
        );
        self.overlap = Some(OverlapRecord {
            pairs: overlap
                .pairs
                .iter()
                .map(|p| OverlapPairRecord {
                    page_a: g.label(p.page_a).to_string(),
                    page_b: g.label(p.page_b).to_string(),
                    shared: labels(&p.shared),
                    jaccard: Real(p.jaccard),
                })
                .collect(),
            multi_members: labels(&overlap.multi_members),
        });
        self
    }
}

pub fn write_report(report: &RunReport) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("report serializes");
    s.push('\n');
    s
}

pub fn read_report(text: &str) -> Result<RunReport, serde_json::Error> {
    serde_json::from_str(text)
}
