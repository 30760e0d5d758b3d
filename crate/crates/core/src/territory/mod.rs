//! Territories: a graph with a distinguished induced cycle (its boundary),
//! the expansion surgery on boundaries, and the canonical ring-built family.

mod expansion;
mod perimeter;
pub mod properties;

use thiserror::Error;

use crate::graph::{CyclicSeq, Graph, GraphError, Vertex};

pub use expansion::ExpansionSpec;
pub use perimeter::{
    canonical_perimeter, canonical_with_perimeter, expansion_params, solve_perimeter, FormulaTrace,
    PerimeterSolution,
};

/// Refuse to build territories beyond this many vertices.
pub const MAX_TERRITORY_ORDER: usize = 20_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TerritoryError {
    #[error("territories need t >= 5, got {0}")]
    TooSmallT(usize),
    #[error("territory is not an unexpanded canonical level")]
    NotCanonicalLevel,
    #[error("boundary positions {0:?} are not a stable set of the boundary")]
    NotStable(Vec<usize>),
    #[error("boundary position {position} out of range for perimeter {perimeter}")]
    PositionOutOfRange { position: usize, perimeter: usize },
    #[error("{k} chosen positions exceed half the perimeter {perimeter}")]
    TooManyPositions { k: usize, perimeter: usize },
    #[error("gadget index {index} out of range for {k} chosen positions")]
    GadgetOutOfRange { index: usize, k: usize },
    #[error("no canonical territory with t = {t} has perimeter {perimeter}")]
    InfeasiblePerimeter { t: usize, perimeter: u64 },
    #[error("territory would have more than {MAX_TERRITORY_ORDER} vertices")]
    TooLarge,
    #[error("boundary is not an induced cycle: {0}")]
    BadBoundary(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A graph together with an induced cycle marked as its boundary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Territory {
    graph: Graph,
    boundary: CyclicSeq,
    t: usize,
    /// `Some(m)` for the unexpanded canonical territory `T_m`.
    level: Option<usize>,
}

impl Territory {
    /// Wraps an arbitrary graph and boundary, checking the boundary is an
    /// induced cycle.
    pub fn new(graph: Graph, boundary: CyclicSeq, t: usize) -> Result<Self, TerritoryError> {
        check_t(t)?;
        if !graph.is_induced_cycle(boundary.verts()) {
            return Err(TerritoryError::BadBoundary(
                "boundary vertices do not induce a cycle".into(),
            ));
        }
        Ok(Territory {
            graph,
            boundary,
            t,
            level: None,
        })
    }

    /// The `t`-cycle whose boundary is itself.
    pub fn base(t: usize) -> Result<Self, TerritoryError> {
        check_t(t)?;
        let mut graph = crate::catalog::cycle(t);
        graph.set_labels((0..t).map(|i| format!("r0:{i}")).collect())?;
        Ok(Territory {
            graph,
            boundary: CyclicSeq::new((0..t).collect())?,
            t,
            level: Some(0),
        })
    }

    /// A territory that is nothing but its boundary cycle of length `len`.
    pub fn boundary_only(len: usize, t: usize) -> Result<Self, TerritoryError> {
        check_t(t)?;
        if len < 3 {
            return Err(TerritoryError::BadBoundary(format!("cycle length {len}")));
        }
        Ok(Territory {
            graph: crate::catalog::cycle(len),
            boundary: CyclicSeq::new((0..len).collect())?,
            t,
            level: None,
        })
    }

    /// `T_m` from `T_{m-1}`: ring the boundary with the `(t-4)`-subdivision
    /// of a cycle of the same length and join matching branch vertices.
    pub fn grow_canonical(&self) -> Result<Territory, TerritoryError> {
        let m = self.level.ok_or(TerritoryError::NotCanonicalLevel)? + 1;
        let old = self.boundary.verts();
        let len = old.len();
        let stride = self.t - 3;
        let n0 = self.graph.order();
        let n1 = n0 + len * stride;
        if n1 > MAX_TERRITORY_ORDER {
            return Err(TerritoryError::TooLarge);
        }

        let mut graph = self.graph.clone();
        let ring: Vec<Vertex> = (n0..n1).collect();
        for (idx, &v) in ring.iter().enumerate() {
            let fresh = graph.add_vertex();
            debug_assert_eq!(fresh, v);
            graph.set_label(v, format!("r{m}:{idx}"));
        }
        for i in 0..ring.len() {
            graph.add_edge(ring[i], ring[(i + 1) % ring.len()])?;
        }
        for (i, &x) in old.iter().enumerate() {
            graph.add_edge(x, ring[i * stride])?;
        }
        Ok(Territory {
            graph,
            boundary: CyclicSeq::new(ring)?,
            t: self.t,
            level: Some(m),
        })
    }

    /// `T_m`.
    pub fn canonical(t: usize, m: usize) -> Result<Territory, TerritoryError> {
        check_t(t)?;
        let mut total = 0u64;
        for j in 0..=m {
            total += canonical_perimeter(t, j).ok_or(TerritoryError::TooLarge)?;
            if total > MAX_TERRITORY_ORDER as u64 {
                return Err(TerritoryError::TooLarge);
            }
        }
        let mut terr = Territory::base(t)?;
        for _ in 0..m {
            terr = terr.grow_canonical()?;
        }
        Ok(terr)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn boundary(&self) -> &CyclicSeq {
        &self.boundary
    }

    pub fn perimeter(&self) -> usize {
        self.boundary.len()
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn level(&self) -> Option<usize> {
        self.level
    }

    pub fn into_parts(self) -> (Graph, CyclicSeq) {
        (self.graph, self.boundary)
    }

    /// Structural checks; an empty issue list means valid.
    pub fn validate(&self) -> Diagnostics {
        let mut issues = Vec::new();
        if self.t < 5 {
            issues.push(format!("t = {} is below 5", self.t));
        }
        if let Err(e) = self.graph.validate() {
            issues.push(format!("graph: {e}"));
        }
        let b = self.boundary.verts();
        if b.iter().any(|&v| v >= self.graph.order()) {
            issues.push("boundary vertex out of range".into());
        } else {
            let k = b.len();
            for i in 0..k {
                if !self.graph.has_edge(b[i], b[(i + 1) % k]) {
                    issues.push(format!("boundary edge {}-{} missing", b[i], b[(i + 1) % k]));
                }
            }
            let mut pos = vec![usize::MAX; self.graph.order()];
            for (i, &v) in b.iter().enumerate() {
                pos[v] = i;
            }
            for (i, &v) in b.iter().enumerate() {
                for &w in self.graph.neighbors(v) {
                    let j = pos[w];
                    if j != usize::MAX && j > i && j != i + 1 && !(i == 0 && j == k - 1) {
                        issues.push(format!("chord {v}-{w} across the boundary"));
                    }
                }
            }
        }
        if let Some(m) = self.level {
            let expect_perimeter = canonical_perimeter(self.t, m);
            if expect_perimeter != Some(self.perimeter() as u64) {
                issues.push(format!(
                    "level {m} perimeter should be {expect_perimeter:?}, is {}",
                    self.perimeter()
                ));
            }
            let expect_order: u64 = (0..=m).filter_map(|j| canonical_perimeter(self.t, j)).sum();
            if expect_order != self.graph.order() as u64 {
                issues.push(format!(
                    "level {m} order should be {expect_order}, is {}",
                    self.graph.order()
                ));
            }
        }
        Diagnostics { issues }
    }
}

fn check_t(t: usize) -> Result<(), TerritoryError> {
    if t < 5 {
        return Err(TerritoryError::TooSmallT(t));
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Diagnostics {
    pub issues: Vec<String>,
}

impl Diagnostics {
    pub fn is_valid(&self) -> bool {
        self.issues.is_empty()
    }
}
