use super::AssembleError;
use crate::catalog::Family;
use crate::graph::{CyclicSeq, Edge, Graph, Vertex};

/// A cubic graph with a Hamiltonian cycle and the three perfect matchings
/// derived from it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CubicBase {
    pub name: String,
    pub graph: Graph,
    pub ham_cycle: CyclicSeq,
    /// `[M1, M2, M3]`, each sorted.
    pub matchings: [Vec<Edge>; 3],
    pub girth: usize,
}

impl CubicBase {
    /// Validates a catalog base using its stored Hamiltonian cycle.
    pub fn from_catalog(family: &Family, g_min: usize) -> Result<Self, AssembleError> {
        let graph = family.build()?;
        let cycle = family.hamiltonian_cycle().ok_or_else(|| {
            AssembleError::NotHamiltonian(format!("{family} has no stored cycle"))
        })?;
        validate_base(&family.to_string(), graph.without_labels(), cycle, g_min)
    }

    pub fn matching(&self, i: usize) -> &[Edge] {
        &self.matchings[i - 1]
    }
}

/// Checks Γ is cubic, `cycle` is a Hamiltonian cycle, and the girth is at
/// least `g_min`; then splits the edges into three perfect matchings
/// (alternate cycle edges from index 0, then the chords).
pub fn validate_base(
    name: &str,
    graph: Graph,
    cycle: Vec<Vertex>,
    g_min: usize,
) -> Result<CubicBase, AssembleError> {
    let n = graph.order();
    if let Some(v) = (0..n).find(|&v| graph.degree(v) != 3) {
        return Err(AssembleError::NotCubic {
            vertex: v,
            degree: graph.degree(v),
        });
    }
    if cycle.len() != n {
        return Err(AssembleError::NotHamiltonian(format!(
            "cycle has {} vertices, graph has {n}",
            cycle.len()
        )));
    }
    let ham = CyclicSeq::new(cycle).map_err(|e| AssembleError::NotHamiltonian(e.to_string()))?;
    if let Some(&v) = ham.verts().iter().find(|&&v| v >= n) {
        return Err(AssembleError::NotHamiltonian(format!(
            "vertex {v} out of range"
        )));
    }
    if let Some((u, v)) = ham.edges().find(|&(u, v)| !graph.has_edge(u, v)) {
        return Err(AssembleError::NotHamiltonian(format!(
            "{u}-{v} is not an edge"
        )));
    }
    if n % 2 == 1 {
        return Err(AssembleError::OddCycleAlternation(n));
    }
    let girth = graph.girth().unwrap_or(usize::MAX);
    if girth < g_min {
        return Err(AssembleError::GirthTooSmall {
            girth,
            required: g_min,
        });
    }

    let mut m1 = Vec::new();
    let mut m2 = Vec::new();
    for (i, e) in ham.edges().enumerate() {
        if i % 2 == 0 {
            m1.push(e);
        } else {
            m2.push(e);
        }
    }
    let mut on_cycle: Vec<Edge> = ham.edges().collect();
    on_cycle.sort_unstable();
    let mut m3: Vec<Edge> = graph
        .edges()
        .filter(|e| on_cycle.binary_search(e).is_err())
        .collect();
    m1.sort_unstable();
    m2.sort_unstable();
    m3.sort_unstable();
    let base = CubicBase {
        name: name.to_string(),
        graph,
        ham_cycle: ham,
        matchings: [m1, m2, m3],
        girth,
    };
    for (i, m) in base.matchings.iter().enumerate() {
        if !is_perfect_matching(&base.graph, m) {
            return Err(AssembleError::Internal(format!(
                "M{} is not a perfect matching",
                i + 1
            )));
        }
    }
    Ok(base)
}

pub fn is_perfect_matching(g: &Graph, edges: &[Edge]) -> bool {
    let mut hit = vec![false; g.order()];
    for &(u, v) in edges {
        if !g.has_edge(u, v) || hit[u] || hit[v] {
            return false;
        }
        hit[u] = true;
        hit[v] = true;
    }
    hit.into_iter().all(|h| h)
}

/// Exhaustive Hamiltonian cycle search, starting at vertex 0.
pub fn find_hamiltonian_cycle(g: &Graph) -> Option<Vec<Vertex>> {
    let n = g.order();
    if n < 3 {
        return None;
    }
    let mut path = vec![0];
    let mut used = vec![false; n];
    used[0] = true;
    fn extend(g: &Graph, path: &mut Vec<Vertex>, used: &mut [bool]) -> bool {
        let last = *path.last().unwrap();
        if path.len() == used.len() {
            return g.has_edge(last, path[0]);
        }
        for &w in g.neighbors(last) {
            if !used[w] {
                used[w] = true;
                path.push(w);
                if extend(g, path, used) {
                    return true;
                }
                path.pop();
                used[w] = false;
            }
        }
        false
    }
    extend(g, &mut path, &mut used).then_some(path)
}
