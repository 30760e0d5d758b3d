//! Depth-first growth of chordless paths.
//!
//! A partial path is only extended by a vertex whose sole neighbour on the
//! path is the current end, so every partial path is induced. `cover[v]`
//! counts path vertices adjacent to `v`, which turns the chord test into a
//! single lookup.

use std::collections::VecDeque;
use std::time::Instant;

use super::{Budget, SearchError, Target, TargetKind};
use crate::graph::{Graph, Vertex};

const UNREACHABLE: usize = usize::MAX / 4;

/// Result of one search query.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Found {
    pub witness: Option<Vec<Vertex>>,
    /// Node expansions spent.
    pub nodes: u64,
}

struct Meter {
    nodes: u64,
    max_nodes: u64,
    deadline: Option<Instant>,
}

impl Meter {
    fn new(budget: &Budget) -> Self {
        Meter {
            nodes: 0,
            max_nodes: budget.max_nodes,
            deadline: budget.max_time.map(|d| Instant::now() + d),
        }
    }

    #[inline]
    fn tick(&mut self) -> Result<(), SearchError> {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return Err(SearchError::BudgetExceeded { nodes: self.nodes });
        }
        if self.nodes.is_multiple_of(4096) {
            if let Some(deadline) = self.deadline {
                if Instant::now() > deadline {
                    return Err(SearchError::TimeExceeded { nodes: self.nodes });
                }
            }
        }
        Ok(())
    }
}

/// BFS distances restricted to vertices accepted by `allowed`.
fn distances_within(g: &Graph, source: Vertex, allowed: impl Fn(Vertex) -> bool) -> Vec<usize> {
    let mut dist = vec![UNREACHABLE; g.order()];
    dist[source] = 0;
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if dist[w] == UNREACHABLE && allowed(w) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

struct Walk<'g> {
    g: &'g Graph,
    k: usize,
    path: Vec<Vertex>,
    in_path: Vec<bool>,
    cover: Vec<u32>,
}

impl<'g> Walk<'g> {
    fn new(g: &'g Graph, k: usize) -> Self {
        Walk {
            g,
            k,
            path: Vec::with_capacity(k),
            in_path: vec![false; g.order()],
            cover: vec![0; g.order()],
        }
    }

    fn push(&mut self, v: Vertex) {
        self.path.push(v);
        self.in_path[v] = true;
        for &w in self.g.neighbors(v) {
            self.cover[w] += 1;
        }
    }

    fn pop(&mut self) {
        let v = self.path.pop().expect("non-empty path");
        self.in_path[v] = false;
        for &w in self.g.neighbors(v) {
            self.cover[w] -= 1;
        }
    }
}

/// Induced `k`-cycle search.
///
/// Unanchored: the cycle is rooted at its smallest vertex and its direction
/// fixed by requiring the second vertex to be smaller than the last, so each
/// induced cycle is produced once. Anchored at `(u, v)`: the cycle is rooted
/// at `u` and must contain `v`; if `uv` is an edge, `v` is forced to be the
/// second vertex.
pub fn find_induced_cycle(
    g: &Graph,
    k: usize,
    anchor: Option<(Vertex, Vertex)>,
    budget: &Budget,
) -> Result<Found, SearchError> {
    Target::cycle(k)?;
    check_anchor(g, anchor)?;
    let mut meter = Meter::new(budget);
    let mut walk = Walk::new(g, k);
    let witness = match anchor {
        None => {
            let mut found = None;
            for root in 0..g.order() {
                if g.degree(root) < 2 {
                    continue;
                }
                let dist = distances_within(g, root, |w| w > root);
                let mut ctx = CycleCtx {
                    root,
                    min_vertex: root + 1,
                    must_visit: None,
                    dist_root: &dist,
                    dist_must: &[],
                    must_to_root: 0,
                    symmetric: true,
                };
                walk.push(root);
                if cycle_dfs(&mut walk, &mut ctx, &mut meter)? {
                    found = Some(walk.path.clone());
                    break;
                }
                walk.pop();
            }
            found
        }
        Some((u, v)) => {
            if u == v {
                return Err(SearchError::BadAnchor(v));
            }
            let dist = distances_within(g, u, |_| true);
            let dist_v = distances_within(g, v, |_| true);
            let mut ctx = CycleCtx {
                root: u,
                min_vertex: 0,
                must_visit: Some(v),
                dist_root: &dist,
                dist_must: &dist_v,
                must_to_root: dist[v],
                symmetric: false,
            };
            walk.push(u);
            let hit = if g.has_edge(u, v) {
                meter.tick()?;
                walk.push(v);
                cycle_dfs(&mut walk, &mut ctx, &mut meter)?
            } else {
                cycle_dfs(&mut walk, &mut ctx, &mut meter)?
            };
            hit.then(|| walk.path.clone())
        }
    };
    Ok(Found {
        witness,
        nodes: meter.nodes,
    })
}

struct CycleCtx<'a> {
    root: Vertex,
    min_vertex: Vertex,
    must_visit: Option<Vertex>,
    dist_root: &'a [usize],
    dist_must: &'a [usize],
    must_to_root: usize,
    symmetric: bool,
}

/// On success the full cycle is left in `walk.path`.
fn cycle_dfs(walk: &mut Walk, ctx: &mut CycleCtx, meter: &mut Meter) -> Result<bool, SearchError> {
    let j = walk.path.len();
    let k = walk.k;
    let last = *walk.path.last().unwrap();
    let g = walk.g;
    let must_pending = ctx.must_visit.filter(|&m| !walk.in_path[m]);
    for &x in g.neighbors(last) {
        if x < ctx.min_vertex || walk.in_path[x] {
            continue;
        }
        if j == k - 1 {
            if !g.has_edge(x, ctx.root) || walk.cover[x] != 2 {
                continue;
            }
            if ctx.symmetric && walk.path[1] > x {
                continue;
            }
            if must_pending.is_some_and(|m| m != x) {
                continue;
            }
            meter.tick()?;
            walk.push(x);
            return Ok(true);
        }
        if walk.cover[x] != 1 {
            continue;
        }
        let remaining = k - j;
        if ctx.dist_root[x] > remaining {
            continue;
        }
        if let Some(m) = must_pending {
            if m != x && ctx.dist_must[x] + ctx.must_to_root > remaining {
                continue;
            }
        }
        meter.tick()?;
        walk.push(x);
        if cycle_dfs(walk, ctx, meter)? {
            return Ok(true);
        }
        walk.pop();
    }
    Ok(false)
}

/// Induced path on `k` vertices, optionally required to contain both
/// anchor vertices.
pub fn find_induced_path(
    g: &Graph,
    k: usize,
    anchor: Option<(Vertex, Vertex)>,
    budget: &Budget,
) -> Result<Found, SearchError> {
    Target::path(k)?;
    check_anchor(g, anchor)?;
    let mut meter = Meter::new(budget);
    if k > g.order() {
        return Ok(Found {
            witness: None,
            nodes: 0,
        });
    }
    let required: Vec<Vertex> = match anchor {
        Some((u, v)) if u == v => vec![u],
        Some((u, v)) => vec![u, v],
        None => Vec::new(),
    };
    if required.len() > k {
        return Ok(Found {
            witness: None,
            nodes: 0,
        });
    }
    let dists: Vec<Vec<usize>> = required
        .iter()
        .map(|&r| distances_within(g, r, |_| true))
        .collect();
    let mut walk = Walk::new(g, k);
    let ctx = PathCtx {
        required: &required,
        dists: &dists,
    };
    for start in 0..g.order() {
        if !ctx.reachable(&walk, start, k - 1) {
            continue;
        }
        meter.tick()?;
        walk.push(start);
        let hit = if k == 1 {
            true
        } else {
            path_dfs(&mut walk, &ctx, &mut meter)?
        };
        if hit {
            return Ok(Found {
                witness: Some(walk.path.clone()),
                nodes: meter.nodes,
            });
        }
        walk.pop();
    }
    Ok(Found {
        witness: None,
        nodes: meter.nodes,
    })
}

struct PathCtx<'a> {
    required: &'a [Vertex],
    dists: &'a [Vec<usize>],
}

impl PathCtx<'_> {
    /// Can every still-missing required vertex be reached if `x` is placed
    /// next with `remaining` positions after it?
    fn reachable(&self, walk: &Walk, x: Vertex, remaining: usize) -> bool {
        self.required
            .iter()
            .zip(self.dists)
            .all(|(&r, d)| walk.in_path[r] || r == x || d[x] <= remaining)
    }
}

fn path_dfs(walk: &mut Walk, ctx: &PathCtx, meter: &mut Meter) -> Result<bool, SearchError> {
    let j = walk.path.len();
    let k = walk.k;
    let last = *walk.path.last().unwrap();
    let g = walk.g;
    for &x in g.neighbors(last) {
        if walk.in_path[x] || walk.cover[x] != 1 {
            continue;
        }
        if j == k - 1 && walk.path[0] > x {
            continue;
        }
        if !ctx.reachable(walk, x, k - 1 - j) {
            continue;
        }
        meter.tick()?;
        walk.push(x);
        if j == k - 1 || path_dfs(walk, ctx, meter)? {
            return Ok(true);
        }
        walk.pop();
    }
    Ok(false)
}

/// Dispatches on the target kind.
pub fn find_induced(
    g: &Graph,
    target: Target,
    anchor: Option<(Vertex, Vertex)>,
    budget: &Budget,
) -> Result<Found, SearchError> {
    match target.kind {
        TargetKind::Cycle => find_induced_cycle(g, target.size, anchor, budget),
        TargetKind::Path => find_induced_path(g, target.size, anchor, budget),
    }
}

fn check_anchor(g: &Graph, anchor: Option<(Vertex, Vertex)>) -> Result<(), SearchError> {
    if let Some((u, v)) = anchor {
        for w in [u, v] {
            if w >= g.order() {
                return Err(SearchError::BadAnchor(w));
            }
        }
    }
    Ok(())
}
