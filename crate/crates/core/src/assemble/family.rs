use serde::Serialize;

use super::{AssembleError, CubicBase};
use crate::graph::{CyclicSeq, Edge, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyCycle {
    /// 1, 2 or 3: the matching removed to obtain this cycle.
    pub class: u8,
    /// Starts at its smallest vertex, heading to the smaller neighbour.
    pub cycle: CyclicSeq,
}

impl FamilyCycle {
    pub fn len(&self) -> usize {
        self.cycle.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycle.is_empty()
    }
}

/// The components of `Γ - M_i` for `i = 1, 2, 3`, all even cycles.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleFamily {
    pub cycles: Vec<FamilyCycle>,
}

impl CycleFamily {
    pub fn class(&self, i: u8) -> impl Iterator<Item = &FamilyCycle> {
        self.cycles.iter().filter(move |c| c.class == i)
    }

    pub fn lengths(&self) -> Vec<usize> {
        self.cycles.iter().map(FamilyCycle::len).collect()
    }

    /// How many family cycles contain each edge of `g`.
    pub fn edge_multiplicity(&self, g: &Graph) -> Vec<(Edge, usize)> {
        let mut all: Vec<Edge> = self.cycles.iter().flat_map(|c| c.cycle.edges()).collect();
        all.sort_unstable();
        g.edges()
            .map(|e| {
                let lo = all.partition_point(|x| *x < e);
                let hi = all.partition_point(|x| *x <= e);
                (e, hi - lo)
            })
            .collect()
    }
}

pub fn cycle_family(base: &CubicBase) -> Result<CycleFamily, AssembleError> {
    let n = base.graph.order();
    let mut cycles = Vec::new();
    for class in 1..=3u8 {
        let mut h = base.graph.clone();
        for &(u, v) in base.matching(class as usize) {
            h.remove_edge(u, v);
        }
        let mut covered = 0;
        for comp in h.components() {
            let start = *comp.iter().min().unwrap();
            let walk = walk_cycle(&h, start).ok_or_else(|| {
                AssembleError::Internal(format!(
                    "component of Γ-M{class} at {start} is not a cycle"
                ))
            })?;
            if walk.len() != comp.len() || walk.len() % 2 == 1 {
                return Err(AssembleError::Internal(format!(
                    "Γ-M{class} has a component of length {} that is not an even cycle",
                    walk.len()
                )));
            }
            covered += walk.len();
            cycles.push(FamilyCycle {
                class,
                cycle: CyclicSeq::new(walk)?.normalized(),
            });
        }
        if covered != n {
            return Err(AssembleError::Internal(format!(
                "class {class} does not partition V(Γ)"
            )));
        }
    }
    let family = CycleFamily { cycles };
    if let Some((e, k)) = family
        .edge_multiplicity(&base.graph)
        .into_iter()
        .find(|&(_, k)| k != 2)
    {
        return Err(AssembleError::Internal(format!(
            "edge {e:?} lies on {k} family cycles"
        )));
    }
    Ok(family)
}

/// Follows a 2-regular component from `start`.
fn walk_cycle(h: &Graph, start: usize) -> Option<Vec<usize>> {
    let mut walk = vec![start];
    let mut prev = start;
    let mut cur = *h.neighbors(start).first()?;
    while cur != start {
        if h.degree(cur) != 2 || walk.len() > h.order() {
            return None;
        }
        walk.push(cur);
        let next = h.neighbors(cur).iter().copied().find(|&w| w != prev)?;
        prev = cur;
        cur = next;
    }
    (h.degree(start) == 2).then_some(walk)
}
