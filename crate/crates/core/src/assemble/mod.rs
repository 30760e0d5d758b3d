//! Building `G_t` from a cubic Hamiltonian base: matchings, the cycle
//! family, territory gluing, and audits.

mod base;
mod build;
mod family;
mod probes;

use serde::Serialize;
use thiserror::Error;

pub use base::{find_hamiltonian_cycle, is_perfect_matching, validate_base, CubicBase};
pub use build::{
    assemble_gt, structural_audit, Assembly, AttachedTerritory, AuditReport, Provider,
};
pub use family::{cycle_family, CycleFamily, FamilyCycle};
pub use probes::{
    classify_pair, freeness_probe, m3_edge_probe, short_path_probe, EdgeProbeReport, FreenessProbe,
    PairProbeReport, PairShape,
};

use crate::catalog::CatalogError;
use crate::graph::{GraphError, Vertex};
use crate::territory::TerritoryError;

/// A family cycle whose length no territory provider can match.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Infeasible {
    pub class: u8,
    pub cycle: Vec<Vertex>,
    pub length: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AssembleError {
    #[error("vertex {vertex} has degree {degree}, base must be cubic")]
    NotCubic { vertex: Vertex, degree: usize },
    #[error("not a Hamiltonian cycle: {0}")]
    NotHamiltonian(String),
    #[error("girth {girth} is below the required {required}")]
    GirthTooSmall { girth: usize, required: usize },
    #[error("Hamiltonian cycle of odd length {0} cannot alternate two matchings")]
    OddCycleAlternation(usize),
    #[error("no territory for cycle lengths {}", lengths(.0))]
    TerritoryUnavailable(Vec<Infeasible>),
    #[error("probe path length {len_cap} too large for girth {girth}")]
    ProbeCapTooLarge { len_cap: usize, girth: usize },
    #[error("internal consistency failure: {0}")]
    Internal(String),
    #[error(transparent)]
    Territory(#[from] TerritoryError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
}

fn lengths(items: &[Infeasible]) -> String {
    let mut ls: Vec<usize> = items.iter().map(|i| i.length).collect();
    ls.sort_unstable();
    ls.dedup();
    ls.iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}
