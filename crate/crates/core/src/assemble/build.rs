use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{AssembleError, CubicBase, CycleFamily, FamilyCycle, Infeasible};
use crate::graph::{CyclicSeq, Graph, Vertex};
use crate::territory::{canonical_with_perimeter, PerimeterSolution, Territory, TerritoryError};

/// Where the territory glued onto each family cycle comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Provider {
    /// Canonical territories of exactly the cycle's length.
    Canonical,
    /// The cycle itself; the result is just Γ.
    Trivial,
}

impl fmt::Display for Provider {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provider::Canonical => "canonical",
            Provider::Trivial => "trivial",
        })
    }
}

impl FromStr for Provider {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "canonical" => Ok(Provider::Canonical),
            "trivial" => Ok(Provider::Trivial),
            other => Err(format!(
                "unknown provider `{other}` (expected canonical or trivial)"
            )),
        }
    }
}

/// One territory as placed inside `G_t`.
#[derive(Debug, Clone)]
pub struct AttachedTerritory {
    pub class: u8,
    pub cycle: CyclicSeq,
    pub territory: Territory,
    /// `embedding[v]` is the `G_t` vertex of territory vertex `v`.
    pub embedding: Vec<Vertex>,
    pub solution: Option<PerimeterSolution>,
}

impl AttachedTerritory {
    pub fn interior(&self) -> impl Iterator<Item = Vertex> + '_ {
        let b = self.territory.boundary();
        (0..self.embedding.len())
            .filter(move |&v| !b.contains(v))
            .map(move |v| self.embedding[v])
    }
}

#[derive(Debug, Clone)]
pub struct Assembly {
    pub base_name: String,
    pub t: usize,
    pub provider: Provider,
    pub gamma: Graph,
    pub graph: Graph,
    pub records: Vec<AttachedTerritory>,
    pub audit: AuditReport,
}

impl Assembly {
    /// `|V(Γ)| + Σ (|V(T_K)| - λ_K)`.
    pub fn expected_order(&self) -> usize {
        self.gamma.order()
            + self
                .records
                .iter()
                .map(|r| r.territory.graph().order() - r.cycle.len())
                .sum::<usize>()
    }
}

/// Glues a territory onto every family cycle. Fails without building
/// anything if some cycle length has no territory.
pub fn assemble_gt(
    base: &CubicBase,
    family: &CycleFamily,
    t: usize,
    provider: Provider,
) -> Result<Assembly, AssembleError> {
    if t < 5 {
        return Err(TerritoryError::TooSmallT(t).into());
    }
    let built: Vec<Result<(Territory, Option<PerimeterSolution>), TerritoryError>> = family
        .cycles
        .par_iter()
        .map(|c| territory_for(c, t, provider))
        .collect();

    let mut infeasible = Vec::new();
    let mut parts = Vec::new();
    for (c, res) in family.cycles.iter().zip(built) {
        match res {
            Ok(part) => parts.push(part),
            Err(TerritoryError::InfeasiblePerimeter { .. }) => infeasible.push(Infeasible {
                class: c.class,
                cycle: c.cycle.verts().to_vec(),
                length: c.len(),
            }),
            Err(e) => return Err(e.into()),
        }
    }
    if !infeasible.is_empty() {
        return Err(AssembleError::TerritoryUnavailable(infeasible));
    }

    let gamma = base.graph.without_labels();
    let mut graph = gamma.clone();
    let mut records = Vec::with_capacity(parts.len());
    for (c, (territory, solution)) in family.cycles.iter().zip(parts) {
        let tg = territory.graph();
        let mut embedding = vec![usize::MAX; tg.order()];
        for (i, &v) in territory.boundary().verts().iter().enumerate() {
            embedding[v] = c.cycle.verts()[i];
        }
        for slot in embedding.iter_mut().filter(|s| **s == usize::MAX) {
            *slot = graph.add_vertex();
        }
        for (u, v) in tg.edges() {
            let (a, b) = (embedding[u], embedding[v]);
            if !graph.has_edge(a, b) {
                graph.add_edge(a, b)?;
            }
        }
        records.push(AttachedTerritory {
            class: c.class,
            cycle: c.cycle.clone(),
            territory,
            embedding,
            solution,
        });
    }
    let audit = structural_audit(&gamma, &graph, &records);
    Ok(Assembly {
        base_name: base.name.clone(),
        t,
        provider,
        gamma,
        graph,
        records,
        audit,
    })
}

fn territory_for(
    c: &FamilyCycle,
    t: usize,
    provider: Provider,
) -> Result<(Territory, Option<PerimeterSolution>), TerritoryError> {
    match provider {
        Provider::Trivial => Ok((Territory::boundary_only(c.len(), t)?, None)),
        Provider::Canonical => {
            let (terr, sol) = canonical_with_perimeter(t, c.len() as u64)?;
            Ok((terr, Some(sol)))
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    pub base_induced: bool,
    pub boundaries_match: bool,
    pub territories_embedded: bool,
    pub interiors_anticomplete: bool,
    pub interiors_avoid_base: bool,
    pub order_matches: bool,
    pub violations: Vec<String>,
}

impl AuditReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

const MAX_LISTED: usize = 20;

/// Re-derives the structural facts `G_t` must satisfy from the finished
/// graph and the per-cycle records.
pub fn structural_audit(
    gamma: &Graph,
    graph: &Graph,
    records: &[AttachedTerritory],
) -> AuditReport {
    let mut violations = Vec::new();
    let note = |msg: String, v: &mut Vec<String>| {
        if v.len() < MAX_LISTED {
            v.push(msg);
        }
    };
    let n0 = gamma.order();

    let base_induced = n0 <= graph.order()
        && graph
            .induced_subgraph(&(0..n0).collect::<Vec<_>>())
            .without_labels()
            == gamma.without_labels();
    if !base_induced {
        note(
            "Γ is not induced on its original vertices".into(),
            &mut violations,
        );
    }

    let mut boundaries_match = true;
    let mut territories_embedded = true;
    let mut owner = vec![usize::MAX; graph.order()];
    let mut interiors_anticomplete = true;
    for (idx, r) in records.iter().enumerate() {
        let mapped: Vec<Vertex> = r
            .territory
            .boundary()
            .verts()
            .iter()
            .map(|&v| r.embedding[v])
            .collect();
        if mapped != r.cycle.verts() || r.cycle.edges().any(|(u, v)| !graph.has_edge(u, v)) {
            boundaries_match = false;
            note(
                format!("territory {idx}: boundary does not match its cycle"),
                &mut violations,
            );
        }
        // Edges of Γ between cycle vertices may add chords; nothing else may.
        let tg = r.territory.graph();
        let missing = tg
            .edges()
            .any(|(u, v)| !graph.has_edge(r.embedding[u], r.embedding[v]));
        let induced = graph.induced_subgraph(&r.embedding);
        let stray = induced
            .edges()
            .any(|(a, b)| !tg.has_edge(a, b) && (r.embedding[a] >= n0 || r.embedding[b] >= n0));
        if missing || stray {
            territories_embedded = false;
            note(
                format!("territory {idx}: image does not match the territory"),
                &mut violations,
            );
        }
        for v in r.interior() {
            if v < n0 || owner[v] != usize::MAX {
                interiors_anticomplete = false;
                note(format!("interior vertex {v} is shared"), &mut violations);
            }
            owner[v] = idx;
        }
    }

    let mut interiors_avoid_base = true;
    for (u, v) in graph.edges() {
        let (ou, ov) = (owner[u], owner[v]);
        match (ou != usize::MAX, ov != usize::MAX) {
            (true, true) if ou != ov => {
                interiors_anticomplete = false;
                note(
                    format!("edge {u}-{v} joins interiors of territories {ou} and {ov}"),
                    &mut violations,
                );
            }
            (true, false) | (false, true) => {
                let (inner, other, k) = if ou != usize::MAX {
                    (u, v, ou)
                } else {
                    (v, u, ov)
                };
                if other >= n0 || !records[k].cycle.contains(other) {
                    interiors_avoid_base = false;
                    note(
                        format!("edge {inner}-{other} leaves territory {k} outside its cycle"),
                        &mut violations,
                    );
                }
            }
            _ => {}
        }
    }

    let expected = n0
        + records
            .iter()
            .map(|r| r.territory.graph().order() - r.cycle.len())
            .sum::<usize>();
    let order_matches = expected == graph.order();
    if !order_matches {
        note(
            format!("order {} != expected {expected}", graph.order()),
            &mut violations,
        );
    }

    AuditReport {
        base_induced,
        boundaries_match,
        territories_embedded,
        interiors_anticomplete,
        interiors_avoid_base,
        order_matches,
        violations,
    }
}
