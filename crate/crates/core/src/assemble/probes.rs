use serde::Serialize;

use super::{AssembleError, Assembly, CubicBase, CycleFamily};
use crate::detect::{find_induced_cycle, Budget, SearchError, Target, Verifier};
use crate::graph::{Graph, Vertex};

/// Which alternative a pair of intersecting short paths falls under.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PairShape {
    /// One shared vertex, an end of at least one path, rest anticomplete.
    SharedEnd,
    /// One shared edge, consecutive on both paths, rest anticomplete.
    SharedEdge,
}

/// Classifies two intersecting paths of Γ; `None` means neither shape holds.
pub fn classify_pair(g: &Graph, l1: &[Vertex], l2: &[Vertex]) -> Option<PairShape> {
    let common: Vec<Vertex> = l1.iter().copied().filter(|v| l2.contains(v)).collect();
    let anticomplete = |skip: &[Vertex]| {
        l1.iter().filter(|v| !skip.contains(v)).all(|&a| {
            l2.iter()
                .filter(|v| !skip.contains(v))
                .all(|&b| a != b && !g.has_edge(a, b))
        })
    };
    let is_end = |l: &[Vertex], u: Vertex| l.first() == Some(&u) || l.last() == Some(&u);
    let consecutive = |l: &[Vertex], u: Vertex, v: Vertex| {
        l.windows(2)
            .any(|w| (w[0] == u && w[1] == v) || (w[0] == v && w[1] == u))
    };
    match common[..] {
        [u] if (is_end(l1, u) || is_end(l2, u)) && anticomplete(&common) => {
            Some(PairShape::SharedEnd)
        }
        [u, v] if consecutive(l1, u, v) && consecutive(l2, u, v) && anticomplete(&common) => {
            Some(PairShape::SharedEdge)
        }
        _ => None,
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct PairProbeReport {
    pub len_cap: usize,
    pub pairs_checked: u64,
    pub shared_end: u64,
    pub shared_edge: u64,
    /// `(path, path)` pairs matching neither shape.
    pub violations: Vec<(Vec<Vertex>, Vec<Vertex>)>,
}

/// Checks every pair of intersecting subpaths (at most `len_cap` edges) of
/// two distinct family cycles. Needs `2 * len_cap + 1 < girth` so the union
/// of two such paths cannot close a cycle.
pub fn short_path_probe(
    base: &CubicBase,
    family: &CycleFamily,
    len_cap: usize,
) -> Result<PairProbeReport, AssembleError> {
    if 2 * len_cap + 1 >= base.girth {
        return Err(AssembleError::ProbeCapTooLarge {
            len_cap,
            girth: base.girth,
        });
    }
    let paths: Vec<Vec<Vec<Vertex>>> = family
        .cycles
        .iter()
        .map(|c| {
            let v = c.cycle.verts();
            let k = v.len();
            (0..k)
                .flat_map(|start| (0..=len_cap.min(k - 1)).map(move |len| (start, len)))
                .map(|(start, len)| (0..=len).map(|j| v[(start + j) % k]).collect())
                .collect()
        })
        .collect();
    let mut report = PairProbeReport {
        len_cap,
        ..Default::default()
    };
    for i in 0..paths.len() {
        for j in i + 1..paths.len() {
            for l1 in &paths[i] {
                for l2 in &paths[j] {
                    if !l1.iter().any(|v| l2.contains(v)) {
                        continue;
                    }
                    report.pairs_checked += 1;
                    match classify_pair(&base.graph, l1, l2) {
                        Some(PairShape::SharedEnd) => report.shared_end += 1,
                        Some(PairShape::SharedEdge) => report.shared_edge += 1,
                        None => report.violations.push((l1.clone(), l2.clone())),
                    }
                }
            }
        }
    }
    Ok(report)
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct EdgeProbeReport {
    pub edges_checked: usize,
    /// M3 edges where the two short cycles did not combine into an induced
    /// `(2t-2)`-cycle of `G_t - e`.
    pub failing_edges: Vec<(Vertex, Vertex)>,
}

/// For each chord `e` of the Hamiltonian cycle, takes an induced `t`-cycle
/// through `e` in each of the two territories whose boundary contains `e`
/// and checks that their union minus `e` is an induced cycle of `G_t - e`.
pub fn m3_edge_probe(
    assembly: &Assembly,
    base: &CubicBase,
    budget: &Budget,
) -> Result<EdgeProbeReport, SearchError> {
    let t = assembly.t;
    let mut report = EdgeProbeReport::default();
    for &(u, v) in base.matching(3) {
        report.edges_checked += 1;
        let mut halves = Vec::new();
        for r in assembly
            .records
            .iter()
            .filter(|r| r.cycle.contains(u) && r.cycle.contains(v))
        {
            let local = |x: Vertex| r.embedding.iter().position(|&y| y == x).unwrap();
            let (lu, lv) = (local(u), local(v));
            if let Some(w) =
                find_induced_cycle(r.territory.graph(), t, Some((lu, lv)), budget)?.witness
            {
                halves.push(w.into_iter().map(|x| r.embedding[x]).collect::<Vec<_>>());
            }
        }
        let ok = halves.len() == 2 && {
            let joined = join_at_edge(&halves[0], &halves[1], u, v);
            let h = assembly.graph.with_toggled(u, v);
            joined.is_some_and(|c| c.len() == 2 * t - 2 && h.is_induced_cycle(&c))
        };
        if !ok {
            report.failing_edges.push((u, v));
        }
    }
    Ok(report)
}

/// Concatenates the `u..v` path of `c1` avoiding `uv` with the `v..u` path
/// of `c2` avoiding `uv`.
fn join_at_edge(c1: &[Vertex], c2: &[Vertex], u: Vertex, v: Vertex) -> Option<Vec<Vertex>> {
    let arc = |c: &[Vertex], from: Vertex, to: Vertex| -> Option<Vec<Vertex>> {
        let k = c.len();
        let i = c.iter().position(|&x| x == from)?;
        // Walk away from `to` so the edge `from-to` is not used.
        let step = if c[(i + 1) % k] == to { k - 1 } else { 1 };
        let mut out = vec![from];
        let mut j = i;
        loop {
            j = (j + step) % k;
            out.push(c[j]);
            if c[j] == to {
                return Some(out);
            }
        }
    };
    let mut a = arc(c1, u, v)?;
    let b = arc(c2, v, u)?;
    a.extend(&b[1..b.len() - 1]);
    Some(a)
}

/// Outcome of the freeness check on an assembled graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FreenessProbe {
    pub target: Target,
    /// `Some(true)` free, `Some(false)` contains the target, `None` budget ran out.
    pub free: Option<bool>,
    pub witness: Option<Vec<Vertex>>,
    /// Girth of Γ compared to the `t^(5t)` the construction assumes.
    pub base_girth: usize,
    pub guarantee_applies: bool,
}

impl FreenessProbe {
    /// A witness found when the girth assumption fails is outside the
    /// guarantee rather than a defect.
    pub fn verdict(&self) -> &'static str {
        match (self.free, self.guarantee_applies) {
            (Some(true), _) => "free",
            (Some(false), false) => "contains target (outside guarantee)",
            (Some(false), true) => "contains target",
            (None, _) => "budget exceeded",
        }
    }
}

pub fn freeness_probe(
    assembly: &Assembly,
    base: &CubicBase,
    verifier: &Verifier,
) -> Result<FreenessProbe, SearchError> {
    let t = assembly.t;
    let target = Target::cycle(2 * t - 2)?;
    let required = (t as u64).checked_pow(5 * t as u32);
    let guarantee_applies = required.is_some_and(|g| base.girth as u64 >= g);
    let (free, witness) = match verifier.is_free(&assembly.graph, target) {
        Ok((free, w)) => (Some(free), w),
        Err(e) if e.is_budget() => (None, None),
        Err(e) => return Err(e),
    };
    Ok(FreenessProbe {
        target,
        free,
        witness,
        base_girth: base.girth,
        guarantee_applies,
    })
}
