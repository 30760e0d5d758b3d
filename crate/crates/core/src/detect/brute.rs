//! Subset-enumeration oracle for cross-checking the backtracking search.

use thiserror::Error;

use super::search::find_induced;
use super::{Budget, SearchError, Target, TargetKind};
use crate::graph::{Graph, Vertex};

pub const BRUTE_FORCE_MAX_ORDER: usize = 14;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BruteForceError {
    #[error("brute force is capped at {BRUTE_FORCE_MAX_ORDER} vertices, graph has {0}")]
    TooLarge(usize),
}

/// Tries every `k`-subset and checks whether it induces the target.
/// The witness is returned in path / cyclic order.
pub fn brute_force_find(g: &Graph, target: Target) -> Result<Option<Vec<Vertex>>, BruteForceError> {
    let n = g.order();
    if n > BRUTE_FORCE_MAX_ORDER {
        return Err(BruteForceError::TooLarge(n));
    }
    let k = target.size;
    if k > n || k == 0 {
        return Ok(None);
    }
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | (1 << w)))
        .collect();
    for set in 0u32..(1 << n) {
        if set.count_ones() as usize != k {
            continue;
        }
        let degs: Vec<(Vertex, u32)> = (0..n)
            .filter(|&v| set >> v & 1 == 1)
            .map(|v| (v, (adj[v] & set).count_ones()))
            .collect();
        let edges: u32 = degs.iter().map(|&(_, d)| d).sum::<u32>() / 2;
        let ok = match target.kind {
            TargetKind::Cycle => degs.iter().all(|&(_, d)| d == 2),
            TargetKind::Path => degs.iter().all(|&(_, d)| d <= 2) && edges as usize + 1 == k,
        };
        if ok && connected(&adj, set) {
            return Ok(Some(order_walk(&adj, set, &degs)));
        }
    }
    Ok(None)
}

/// A target on which the backtracking finder and the brute-force oracle
/// disagree, or where a returned witness is not an induced copy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Disagreement {
    pub target: Target,
    pub search: Option<Vec<Vertex>>,
    pub oracle: Option<Vec<Vertex>>,
}

/// Compares both finders on every path and cycle target up to `g.order()`.
pub fn cross_check(g: &Graph, budget: &Budget) -> Result<Vec<Disagreement>, SearchError> {
    let n = g.order();
    let mut out = Vec::new();
    let targets = (1..=n)
        .map(|k| Target {
            kind: TargetKind::Path,
            size: k,
        })
        .chain((3..=n).map(|k| Target {
            kind: TargetKind::Cycle,
            size: k,
        }));
    for target in targets {
        let search = find_induced(g, target, None, budget)?.witness;
        let oracle = brute_force_find(g, target).expect("caller keeps graphs small");
        let valid = |w: &Option<Vec<Vertex>>| match (w, target.kind) {
            (None, _) => true,
            (Some(w), TargetKind::Path) => w.len() == target.size && g.is_induced_path(w),
            (Some(w), TargetKind::Cycle) => w.len() == target.size && g.is_induced_cycle(w),
        };
        if search.is_some() != oracle.is_some() || !valid(&search) || !valid(&oracle) {
            out.push(Disagreement {
                target,
                search,
                oracle,
            });
        }
    }
    Ok(out)
}

fn connected(adj: &[u32], set: u32) -> bool {
    let start = set.trailing_zeros();
    let mut seen = 1u32 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let v = frontier.trailing_zeros();
        frontier &= frontier - 1;
        let fresh = adj[v as usize] & set & !seen;
        seen |= fresh;
        frontier |= fresh;
    }
    seen == set
}

/// Lists a connected max-degree-2 vertex set in walk order, starting from
/// an end if it is a path.
fn order_walk(adj: &[u32], set: u32, degs: &[(Vertex, u32)]) -> Vec<Vertex> {
    let start = degs.iter().find(|&&(_, d)| d < 2).unwrap_or(&degs[0]).0;
    let mut out = vec![start];
    let mut seen = 1u32 << start;
    let mut cur = start;
    loop {
        let next = adj[cur] & set & !seen;
        if next == 0 {
            break;
        }
        cur = next.trailing_zeros() as usize;
        seen |= 1 << cur;
        out.push(cur);
    }
    out
}
