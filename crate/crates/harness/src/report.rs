//! JSON-lines report records.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

/// Version of the record layout described by `schema/report.schema.json`.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphRecord {
    #[serde(rename = "type")]
    pub kind: String,
    pub order: usize,
    pub edges: usize,
    pub sparse6: String,
    pub cubic: bool,
    pub matching_covered: bool,
    pub brick: bool,
    /// Only defined for cubic graphs.
    pub essentially_4ec: Option<bool>,
    /// Only defined for non-bipartite matching covered graphs.
    pub near_bipartite: Option<bool>,
    pub brick_number: Option<usize>,
    pub doubletons: Option<usize>,
    pub e1: Option<usize>,
    pub e2: Option<usize>,
    pub e3: Option<usize>,
    /// `|E2| >= n/2`; only for essentially 4-edge-connected cubic
    /// near-bipartite bricks.
    pub bound_satisfied: Option<bool>,
    pub equality: Option<bool>,
    /// `prism`, `moebius` or `other`, for the same graphs as the bound.
    pub family: Option<String>,
    /// K4 is outside the scope of the lower bound.
    pub exempt: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    #[serde(rename = "type")]
    pub kind: String,
    pub check: String,
    pub order: usize,
    pub sparse6: String,
    pub edge_list: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderSummary {
    pub order: usize,
    pub graphs: usize,
    pub matching_covered: usize,
    pub bricks: usize,
    pub targets: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremalGraph {
    pub order: usize,
    pub family: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    #[serde(rename = "type")]
    pub kind: String,
    pub schema_version: u32,
    pub max_n: usize,
    pub seed: u64,
    pub graphs: usize,
    pub per_order: Vec<OrderSummary>,
    pub targets: usize,
    pub equality: Vec<ExtremalGraph>,
    pub expected_equality: Vec<ExtremalGraph>,
    /// How many instances each suite examined.
    pub checks: BTreeMap<String, usize>,
    /// Decompositions with equal brick counts but different pieces.
    pub findings: usize,
    pub violations: usize,
    pub verified: bool,
}

pub fn to_line<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("records serialize")
}
