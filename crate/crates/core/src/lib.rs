//! Link analysis over simple directed graphs.
//!
//! The crate ranks nodes with InDegree, PageRank, HITS, SALSA, HubAvg and the
//! PHITS aspect model, then reads communities off the ranking: a highly ranked
//! node with no outgoing links is a community page and the nodes linking to it
//! are its members.
//!
//! Everything here is a pure function of its inputs and only needs `alloc`.
//! Parsers, exporters and the command line live in the `linkrank` crate.
#![cfg_attr(not(test), no_std)]
#![deny(unsafe_code)]
// Index loops mirror the formulas; `!(x > 0.0)` is meant to reject NaN.
#![allow(clippy::needless_range_loop, clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;

pub mod community;
mod error;
pub mod generate;
pub mod graph;
pub mod phits;
pub mod ranking;

pub use community::{
    detect_communities, overlap, Community, DetectionConfig, OverlapPair, OverlapReport, Selection,
};
pub use error::{Error, Result};
pub use graph::{BuildStats, DirectedGraph, GraphBuilder};
pub use phits::{PhitsConfig, PhitsModel};
pub use ranking::{
    Algorithm, HubAuthScores, Norm, PageRankMode, RankingConfig, SalsaMatrices, SalsaMethod,
    ScoreVector,
};
