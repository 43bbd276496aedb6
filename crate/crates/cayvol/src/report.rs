//! Machine-readable reports for the CLI: stable, schema-versioned JSON.

use crate::autgrp::{AutGroup, MonomialMap};
use crate::evoalg::EvolutionAlgebra;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

pub const SCHEMA: &str = "cayvol-report/1";

#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct Report {
    pub schema: String,
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub group: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub group_order: Option<usize>,
    pub field: String,
    pub support: Vec<String>,
    pub weights: BTreeMap<String, String>,
    pub matrix: Vec<Vec<String>>,
    pub flags: Flags,
    pub determinant: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub aut: Option<AutReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings_ms: Option<BTreeMap<String, u128>>,
}

#[derive(Serialize, Deserialize, Debug, Clone, Default)]
pub struct Flags {
    pub regular: bool,
    pub degenerate: bool,
    pub simple: bool,
    pub absolutely_simple_checked: bool,
}

#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct AutReport {
    pub order: usize,
    pub generators: Vec<MapJson>,
    /// A recognized group spec, or "unrecognized".
    pub recognized: String,
}

#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct MapJson {
    pub sigma: Vec<usize>,
    pub scalars: Vec<String>,
}

impl MapJson {
    pub fn from_map(m: &MonomialMap) -> Self {
        MapJson {
            sigma: m.sigma.clone(),
            scalars: m.scalars.iter().map(|c| c.to_string()).collect(),
        }
    }
}

impl AutReport {
    pub fn from_group(a: &AutGroup, recognized: Option<String>) -> Self {
        AutReport {
            order: a.order(),
            generators: a.generators().iter().map(|m| MapJson::from_map(m)).collect(),
            recognized: recognized.unwrap_or_else(|| "unrecognized".to_string()),
        }
    }
}

/// Structure-matrix rows as canonical scalar strings.
pub fn matrix_strings(x: &EvolutionAlgebra) -> Vec<Vec<String>> {
    let n = x.dim();
    (0..n)
        .map(|k| (0..n).map(|i| x.matrix.get(k, i).to_string()).collect())
        .collect()
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
