//! Offline social-graph fixtures shaped like Graph API objects.
//!
//! ```json
//! [
//!   {"id": "u1", "name": "Ann", "friends": ["u2"], "likes": ["page1"]},
//!   {"id": "page1", "category": "Community"}
//! ]
//! ```
//!
//! A like is one directed edge `id → liked`; a friendship is mutual and emits
//! both directions. Unknown fields are ignored, as is a scalar `likes` count.

use std::collections::{BTreeMap, BTreeSet};

use linkrank_core::{DirectedGraph, GraphBuilder};
use serde::{Deserialize, Serialize};

use crate::ParseError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SocialGraphDocument {
    pub id: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub category: Option<String>,
    #[serde(default, deserialize_with = "links")]
    pub friends: Vec<String>,
    #[serde(default, deserialize_with = "links")]
    pub likes: Vec<String>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Links {
    List(Vec<String>),
    Count(#[allow(dead_code)] serde_json::Number),
}

fn links<'de, D: serde::Deserializer<'de>>(d: D) -> Result<Vec<String>, D::Error> {
    Ok(match Links::deserialize(d)? {
        Links::List(v) => v,
        Links::Count(_) => Vec::new(),
    })
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeMeta {
    pub name: Option<String>,
    pub category: Option<String>,
}

#[derive(Debug, Clone)]
pub struct SocialGraph {
    pub graph: DirectedGraph,
    /// Keyed by node label; only documents defined in the file appear.
    pub metadata: BTreeMap<String, NodeMeta>,
}

pub fn parse_social_graph_json(text: &str) -> Result<SocialGraph, ParseError> {
    let values: Vec<serde_json::Value> = serde_json::from_str(text)?;
    let mut docs = Vec::with_capacity(values.len());
    for (index, v) in values.into_iter().enumerate() {
        let doc: SocialGraphDocument = serde_json::from_value(v)
            .map_err(|e| ParseError::MalformedDocument { index, reason: e.to_string() })?;
        if doc.id.is_empty() {
            return Err(ParseError::MalformedDocument { index, reason: "empty id".into() });
        }
        docs.push(doc);
    }
    let mut seen = BTreeSet::new();
    let mut b = GraphBuilder::new();
    let mut metadata = BTreeMap::new();
    for doc in &docs {
        if !seen.insert(doc.id.as_str()) {
            return Err(ParseError::DuplicateId(doc.id.clone()));
        }
        b.add_node(&doc.id);
        metadata.insert(
            doc.id.clone(),
            NodeMeta { name: doc.name.clone(), category: doc.category.clone() },
        );
    }
    for doc in &docs {
        for liked in &doc.likes {
            b.add_edge(&doc.id, liked);
        }
        for friend in &doc.friends {
            b.add_edge(&doc.id, friend);
            b.add_edge(friend, &doc.id);
        }
    }
    Ok(SocialGraph { graph: b.build(), metadata })
}
