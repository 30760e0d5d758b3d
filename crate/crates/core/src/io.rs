//! File formats: graph6, edge lists, territory JSON and assembly manifests.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::assemble::{Assembly, AuditReport, EdgeProbeReport, FreenessProbe, PairProbeReport};
use crate::graph::{parse_edge_list, CyclicSeq, Edge, EdgeListError, Graph, GraphError, Vertex};
use crate::graph6::{self, Graph6Error};
use crate::territory::{Territory, TerritoryError};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("{path}: {source}")]
    Read {
        path: String,
        source: std::io::Error,
    },
    #[error(transparent)]
    Graph6(#[from] Graph6Error),
    #[error(transparent)]
    EdgeList(#[from] EdgeListError),
    #[error("bad JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("bad label key `{0}`")]
    LabelKey(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Territory(#[from] TerritoryError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TerritoryFile {
    pub t: usize,
    pub edges: Vec<Edge>,
    pub boundary: Vec<Vertex>,
    #[serde(default)]
    pub labels: BTreeMap<String, String>,
}

impl TerritoryFile {
    pub fn from_territory(terr: &Territory) -> Self {
        let g = terr.graph();
        let labels = g
            .labels()
            .map(|ls| {
                ls.iter()
                    .enumerate()
                    .map(|(i, l)| (i.to_string(), l.clone()))
                    .collect()
            })
            .unwrap_or_default();
        TerritoryFile {
            t: terr.t(),
            edges: g.edges().collect(),
            boundary: terr.boundary().verts().to_vec(),
            labels,
        }
    }

    pub fn graph(&self) -> Result<Graph, IoError> {
        let n = self
            .edges
            .iter()
            .flat_map(|&(u, v)| [u, v])
            .chain(self.boundary.iter().copied())
            .max()
            .map_or(0, |m| m + 1);
        let mut g = Graph::from_edges(n, self.edges.iter().copied())?;
        if !self.labels.is_empty() {
            let mut labels = vec![String::new(); n];
            for (k, v) in &self.labels {
                let id: usize = k.parse().map_err(|_| IoError::LabelKey(k.clone()))?;
                if id >= n {
                    return Err(IoError::LabelKey(k.clone()));
                }
                labels[id] = v.clone();
            }
            g.set_labels(labels)?;
        }
        Ok(g)
    }

    pub fn into_territory(self) -> Result<Territory, IoError> {
        let g = self.graph()?;
        let boundary = CyclicSeq::new(self.boundary)?;
        Ok(Territory::new(g, boundary, self.t)?)
    }
}

pub fn territory_to_json(terr: &Territory) -> String {
    serde_json::to_string_pretty(&TerritoryFile::from_territory(terr))
        .expect("territory serializes")
}

pub fn territory_from_json(text: &str) -> Result<Territory, IoError> {
    serde_json::from_str::<TerritoryFile>(text)?.into_territory()
}

/// Parses graph text: graph6 for `.g6`, the graph of a territory file for
/// `.json`, an edge list otherwise.
pub fn parse_graph(text: &str, extension: Option<&str>) -> Result<Graph, IoError> {
    match extension {
        Some("g6") | Some("graph6") => Ok(graph6::decode(text)?),
        Some("json") => serde_json::from_str::<TerritoryFile>(text)?.graph(),
        _ => Ok(parse_edge_list(text)?),
    }
}

pub fn read_graph(path: &Path) -> Result<Graph, IoError> {
    let text = read_text(path)?;
    parse_graph(&text, path.extension().and_then(|e| e.to_str()))
}

pub fn read_text(path: &Path) -> Result<String, IoError> {
    fs::read_to_string(path).map_err(|source| IoError::Read {
        path: path.display().to_string(),
        source,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleEntry {
    pub class: u8,
    pub length: usize,
    pub territory_vertices: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub level: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s1: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s2: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GirthInfo {
    pub configured_min: usize,
    pub base: usize,
    /// The girth the freeness argument needs, `t^(5t)`, written as a power.
    pub required: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Manifest {
    pub base: String,
    pub t: usize,
    pub provider: String,
    pub order: usize,
    pub size: usize,
    pub girth: GirthInfo,
    pub cycles: Vec<CycleEntry>,
    pub audit: AuditReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub freeness: Option<FreenessProbe>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m3_probe: Option<EdgeProbeReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pair_probe: Option<PairProbeReport>,
    pub graph6: String,
}

impl Manifest {
    pub fn new(a: &Assembly, base_girth: usize, g_min: usize) -> Result<Self, IoError> {
        Ok(Manifest {
            base: a.base_name.clone(),
            t: a.t,
            provider: a.provider.to_string(),
            order: a.graph.order(),
            size: a.graph.size(),
            girth: GirthInfo {
                configured_min: g_min,
                base: base_girth,
                required: format!("{}^{}", a.t, 5 * a.t),
            },
            cycles: a
                .records
                .iter()
                .map(|r| CycleEntry {
                    class: r.class,
                    length: r.cycle.len(),
                    territory_vertices: r.territory.graph().order(),
                    level: r.solution.map(|s| s.m),
                    s1: r.solution.map(|s| s.s1),
                    s2: r.solution.map(|s| s.s2),
                })
                .collect(),
            audit: a.audit.clone(),
            freeness: None,
            m3_probe: None,
            pair_probe: None,
            graph6: graph6::encode(&a.graph)?,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("manifest serializes")
    }
}
