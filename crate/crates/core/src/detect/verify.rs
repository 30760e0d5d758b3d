use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::search::find_induced;
use super::{Budget, SearchError, Target};
use crate::graph::{Edge, Graph, Vertex};

/// Which properties a verification run decides.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Free,
    DeletionCritical,
    AdditionCritical,
    Saturated,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriticalityReport {
    pub checked: bool,
    pub critical: bool,
    /// Pairs whose toggle did not create an induced copy.
    pub failing_edges: Vec<Edge>,
    /// Pairs whose query ran out of budget; they also make `critical` false.
    pub budget_exceeded: Vec<Edge>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    pub nodes: u64,
    pub millis: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub target: Target,
    pub free: bool,
    pub witness: Option<Vec<Vertex>>,
    pub deletion: CriticalityReport,
    pub addition: CriticalityReport,
    pub induced_saturated: bool,
    pub stats: SearchStats,
}

impl VerificationReport {
    /// Whether the property requested by `mode` holds.
    pub fn holds(&self, mode: Mode) -> bool {
        match mode {
            Mode::Free => self.free,
            Mode::DeletionCritical => self.free && self.deletion.critical,
            Mode::AdditionCritical => self.free && self.addition.critical,
            Mode::Saturated => self.induced_saturated,
        }
    }

    pub fn any_budget_exceeded(&self) -> bool {
        !self.deletion.budget_exceeded.is_empty() || !self.addition.budget_exceeded.is_empty()
    }

    /// JSON with the `stats` object removed, for byte-level comparisons.
    pub fn to_json_without_stats(&self) -> String {
        let mut v = serde_json::to_value(self).expect("report serializes");
        v.as_object_mut().unwrap().remove("stats");
        serde_json::to_string(&v).unwrap()
    }
}

/// Runs freeness and edge-criticality checks under a per-query budget.
///
/// When the graph is free of the target, every induced copy that appears in
/// `G - e` or `G + e` must contain both ends of `e`, so those queries are
/// anchored at `e`. On a graph that already contains the target the queries
/// fall back to unanchored search.
#[derive(Debug, Clone)]
pub struct Verifier {
    pub budget: Budget,
    pub workers: usize,
}

impl Default for Verifier {
    fn default() -> Self {
        Verifier {
            budget: Budget::default(),
            workers: 1,
        }
    }
}

struct Freeness {
    free: bool,
    witness: Option<Vec<Vertex>>,
    nodes: u64,
}

enum PairOutcome {
    Created,
    Missing,
    OverBudget,
}

impl Verifier {
    pub fn new(budget: Budget, workers: usize) -> Self {
        Verifier {
            budget,
            workers: workers.max(1),
        }
    }

    /// `Ok((free, witness))`.
    pub fn is_free(
        &self,
        g: &Graph,
        target: Target,
    ) -> Result<(bool, Option<Vec<Vertex>>), SearchError> {
        let f = self.freeness(g, target)?;
        Ok((f.free, f.witness))
    }

    fn freeness(&self, g: &Graph, target: Target) -> Result<Freeness, SearchError> {
        let target = target.checked()?;
        let found = find_induced(g, target, None, &self.budget)?;
        Ok(Freeness {
            free: found.witness.is_none(),
            witness: found.witness,
            nodes: found.nodes,
        })
    }

    pub fn deletion_critical(
        &self,
        g: &Graph,
        target: Target,
    ) -> Result<CriticalityReport, SearchError> {
        let f = self.freeness(g, target)?;
        Ok(self.toggle_pairs(g, target, g.edges().collect(), f.free).0)
    }

    pub fn addition_critical(
        &self,
        g: &Graph,
        target: Target,
    ) -> Result<CriticalityReport, SearchError> {
        let f = self.freeness(g, target)?;
        Ok(self
            .toggle_pairs(g, target, g.non_edges().collect(), f.free)
            .0)
    }

    /// Toggles only the given pairs. Returns whether `g` was free, and the
    /// report over `pairs`.
    pub fn toggle_check(
        &self,
        g: &Graph,
        target: Target,
        pairs: Vec<Edge>,
    ) -> Result<(bool, CriticalityReport), SearchError> {
        let f = self.freeness(g, target)?;
        Ok((f.free, self.toggle_pairs(g, target, pairs, f.free).0))
    }

    pub fn induced_saturated(
        &self,
        g: &Graph,
        target: Target,
    ) -> Result<VerificationReport, SearchError> {
        self.run(g, target, Mode::Saturated)
    }

    pub fn run(
        &self,
        g: &Graph,
        target: Target,
        mode: Mode,
    ) -> Result<VerificationReport, SearchError> {
        let started = Instant::now();
        let f = self.freeness(g, target)?;
        let mut nodes = f.nodes;
        let mut deletion = CriticalityReport::default();
        let mut addition = CriticalityReport::default();
        if matches!(mode, Mode::DeletionCritical | Mode::Saturated) {
            let (report, spent) = self.toggle_pairs(g, target, g.edges().collect(), f.free);
            deletion = report;
            nodes += spent;
        }
        if matches!(mode, Mode::AdditionCritical | Mode::Saturated) {
            let (report, spent) = self.toggle_pairs(g, target, g.non_edges().collect(), f.free);
            addition = report;
            nodes += spent;
        }
        let induced_saturated = f.free
            && deletion.checked
            && deletion.critical
            && addition.checked
            && addition.critical;
        Ok(VerificationReport {
            target,
            free: f.free,
            witness: f.witness,
            deletion,
            addition,
            induced_saturated,
            stats: SearchStats {
                nodes,
                millis: started.elapsed().as_millis() as u64,
            },
        })
    }

    fn toggle_pairs(
        &self,
        g: &Graph,
        target: Target,
        pairs: Vec<Edge>,
        anchored: bool,
    ) -> (CriticalityReport, u64) {
        let query = |&(u, v): &Edge| -> (PairOutcome, u64) {
            let h = g.with_toggled(u, v);
            let anchor = anchored.then_some((u, v));
            match find_induced(&h, target, anchor, &self.budget) {
                Ok(found) if found.witness.is_some() => (PairOutcome::Created, found.nodes),
                Ok(found) => (PairOutcome::Missing, found.nodes),
                Err(
                    SearchError::BudgetExceeded { nodes } | SearchError::TimeExceeded { nodes },
                ) => (PairOutcome::OverBudget, nodes),
                Err(e) => panic!("toggle query on a validated target failed: {e}"),
            }
        };
        let outcomes: Vec<(PairOutcome, u64)> = if self.workers > 1 {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(self.workers)
                .build()
                .expect("thread pool");
            pool.install(|| pairs.par_iter().map(query).collect())
        } else {
            pairs.iter().map(query).collect()
        };

        let mut report = CriticalityReport {
            checked: true,
            ..Default::default()
        };
        let mut nodes = 0;
        for (pair, (outcome, spent)) in pairs.into_iter().zip(outcomes) {
            nodes += spent;
            match outcome {
                PairOutcome::Created => {}
                PairOutcome::Missing => report.failing_edges.push(pair),
                PairOutcome::OverBudget => report.budget_exceeded.push(pair),
            }
        }
        report.critical = report.failing_edges.is_empty() && report.budget_exceeded.is_empty();
        (report, nodes)
    }
}
