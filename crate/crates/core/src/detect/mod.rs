//! Induced path / cycle detection and the saturation verifier built on it.

mod brute;
mod search;
mod verify;

use std::fmt;
use std::time::Duration;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use brute::{
    brute_force_find, cross_check, BruteForceError, Disagreement, BRUTE_FORCE_MAX_ORDER,
};
pub use search::{find_induced, find_induced_cycle, find_induced_path, Found};
pub use verify::{CriticalityReport, Mode, SearchStats, VerificationReport, Verifier};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TargetKind {
    Path,
    Cycle,
}

/// The forbidden induced subgraph: `P_k` (k vertices) or `C_k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Target {
    pub kind: TargetKind,
    pub size: usize,
}

impl Target {
    pub fn path(size: usize) -> Result<Self, SearchError> {
        Target {
            kind: TargetKind::Path,
            size,
        }
        .checked()
    }

    pub fn cycle(size: usize) -> Result<Self, SearchError> {
        Target {
            kind: TargetKind::Cycle,
            size,
        }
        .checked()
    }

    pub fn checked(self) -> Result<Self, SearchError> {
        let min = match self.kind {
            TargetKind::Path => 1,
            TargetKind::Cycle => 3,
        };
        if self.size < min {
            return Err(SearchError::InvalidTarget(self));
        }
        Ok(self)
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            TargetKind::Path => write!(f, "P{}", self.size),
            TargetKind::Cycle => write!(f, "C{}", self.size),
        }
    }
}

/// Caps on a single search query.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: u64,
    pub max_time: Option<Duration>,
}

impl Budget {
    pub const DEFAULT_NODES: u64 = 100_000_000;
    pub const DEFAULT_TIME: Duration = Duration::from_secs(300);

    pub fn nodes(max_nodes: u64) -> Self {
        Budget {
            max_nodes,
            max_time: None,
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_nodes: Self::DEFAULT_NODES,
            max_time: Some(Self::DEFAULT_TIME),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("search budget exceeded after {nodes} node expansions")]
    BudgetExceeded { nodes: u64 },
    #[error("search time limit exceeded after {nodes} node expansions")]
    TimeExceeded { nodes: u64 },
    #[error("invalid target {0}")]
    InvalidTarget(Target),
    #[error("vertex {0} out of range")]
    BadAnchor(usize),
}

impl SearchError {
    pub fn is_budget(&self) -> bool {
        matches!(
            self,
            SearchError::BudgetExceeded { .. } | SearchError::TimeExceeded { .. }
        )
    }
}
