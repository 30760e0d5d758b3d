//! Checkable structural properties of territories.

use super::Territory;
use crate::detect::{find_induced_cycle, Budget, CriticalityReport, SearchError, Target, Verifier};
use crate::graph::{cyclic_distance, Edge, Vertex};

/// A boundary pair whose boundary distance exceeds the allowed bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceViolation {
    pub x: Vertex,
    pub y: Vertex,
    pub graph_distance: usize,
    pub boundary_distance: usize,
}

/// Checks `dist_B(x, y) <= bound(dist_T(x, y))` over every boundary pair.
pub fn boundary_distance_violations(
    terr: &Territory,
    bound: impl Fn(usize) -> u64,
) -> Vec<DistanceViolation> {
    let b = terr.boundary().verts();
    let mut out = Vec::new();
    for (i, &x) in b.iter().enumerate() {
        let dist = terr.graph().bfs_distances(x);
        for (j, &y) in b.iter().enumerate().skip(i + 1) {
            let dg = dist[y].expect("territories are connected");
            let db = cyclic_distance(i, j, b.len());
            if db as u64 > bound(dg) {
                out.push(DistanceViolation {
                    x,
                    y,
                    graph_distance: dg,
                    boundary_distance: db,
                });
            }
        }
    }
    out
}

/// The canonical-level bound `(t-2)^d`.
pub fn ring_distance_violations(terr: &Territory) -> Vec<DistanceViolation> {
    let base = terr.t() as u64 - 2;
    boundary_distance_violations(terr, |d| base.saturating_pow(d as u32))
}

/// The bound `t^(d+3t)` that holds for every canonical territory.
pub fn canonical_distance_violations(terr: &Territory) -> Vec<DistanceViolation> {
    let t = terr.t() as u64;
    boundary_distance_violations(terr, |d| t.saturating_pow((d + 3 * terr.t()) as u32))
}

/// Edges of `T` not on its boundary.
pub fn interior_edges(terr: &Territory) -> Vec<Edge> {
    let mut boundary: Vec<Edge> = terr.boundary().edges().collect();
    boundary.sort_unstable();
    terr.graph()
        .edges()
        .filter(|e| boundary.binary_search(e).is_err())
        .collect()
}

/// Whether deleting each interior edge creates an induced `C_{2t-2}`.
/// Returns `(free, report)` where `free` says `T` itself has none.
pub fn interior_deletion_check(
    terr: &Territory,
    verifier: &Verifier,
) -> Result<(bool, CriticalityReport), SearchError> {
    let target = Target::cycle(2 * terr.t() - 2)?;
    verifier.toggle_check(terr.graph(), target, interior_edges(terr))
}

/// Boundary edges that lie on no induced `t`-cycle of `T`.
pub fn boundary_edges_off_t_cycles(
    terr: &Territory,
    budget: &Budget,
) -> Result<Vec<Edge>, SearchError> {
    let mut missing = Vec::new();
    for (u, v) in terr.boundary().edges() {
        if find_induced_cycle(terr.graph(), terr.t(), Some((u, v)), budget)?
            .witness
            .is_none()
        {
            missing.push((u, v));
        }
    }
    Ok(missing)
}
