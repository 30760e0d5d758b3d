use super::{Territory, TerritoryError, MAX_TERRITORY_ORDER};
use crate::graph::{CyclicSeq, Vertex};

/// Which boundary vertices to expand and which of them get the extra gadget.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ExpansionSpec {
    /// Boundary indices, pairwise non-adjacent on the boundary cycle.
    pub positions: Vec<usize>,
    /// Indices into `positions` (0-based) whose detour runs through a gadget.
    pub gadgets: Vec<usize>,
}

impl ExpansionSpec {
    pub fn identity() -> Self {
        Self::default()
    }

    /// `plain + gadgeted` positions spaced `perimeter / k` apart from index 0,
    /// with the gadget on the first `gadgeted` of them.
    pub fn evenly_spaced(perimeter: usize, plain: usize, gadgeted: usize) -> Self {
        let k = plain + gadgeted;
        if k == 0 {
            return Self::identity();
        }
        let step = perimeter / k;
        ExpansionSpec {
            positions: (0..k).map(|i| i * step).collect(),
            gadgets: (0..gadgeted).collect(),
        }
    }

    pub fn k(&self) -> usize {
        self.positions.len()
    }

    pub fn check(&self, perimeter: usize) -> Result<(), TerritoryError> {
        let k = self.k();
        if 2 * k > perimeter {
            return Err(TerritoryError::TooManyPositions { k, perimeter });
        }
        let mut sorted = self.positions.clone();
        sorted.sort_unstable();
        for &p in &sorted {
            if p >= perimeter {
                return Err(TerritoryError::PositionOutOfRange {
                    position: p,
                    perimeter,
                });
            }
        }
        for w in sorted.windows(2) {
            if w[1] - w[0] <= 1 {
                return Err(TerritoryError::NotStable(vec![w[0], w[1]]));
            }
        }
        if let (Some(&first), Some(&last)) = (sorted.first(), sorted.last()) {
            if k > 1 && first == 0 && last == perimeter - 1 {
                return Err(TerritoryError::NotStable(vec![first, last]));
            }
        }
        let mut seen = vec![false; k];
        for &g in &self.gadgets {
            if g >= k || seen[g] {
                return Err(TerritoryError::GadgetOutOfRange { index: g, k });
            }
            seen[g] = true;
        }
        Ok(())
    }
}

impl Territory {
    /// Replaces each chosen boundary vertex `x` by a detour path through a
    /// fresh path `P` of length `2t-6` (and, for gadget positions, a second
    /// path `Q` of length `t-4` hung off the neighbours of `P`'s middle).
    pub fn expand(&self, spec: &ExpansionSpec) -> Result<Territory, TerritoryError> {
        let len = self.perimeter();
        spec.check(len)?;
        let t = self.t;
        let p_len = 2 * t - 5;
        let q_len = t - 3;
        let added = spec.k() * p_len + spec.gadgets.len() * q_len;
        if self.graph.order() + added > MAX_TERRITORY_ORDER {
            return Err(TerritoryError::TooLarge);
        }

        let mut gadget_at = vec![false; spec.k()];
        for &g in &spec.gadgets {
            gadget_at[g] = true;
        }
        let b = self.boundary.verts();
        let mut graph = self.graph.clone();
        let mut detours: Vec<Option<Vec<Vertex>>> = vec![None; len];
        for (i, &pos) in spec.positions.iter().enumerate() {
            let x = b[pos];
            let x_minus = b[(pos + len - 1) % len];
            let x_plus = b[(pos + 1) % len];

            let p: Vec<Vertex> = (0..p_len)
                .map(|j| {
                    let v = graph.add_vertex();
                    graph.set_label(v, format!("e{i}:p{j}"));
                    v
                })
                .collect();
            for w in p.windows(2) {
                graph.add_edge(w[0], w[1])?;
            }
            let mid = t - 3;
            graph.add_edge(x_minus, p[0])?;
            graph.add_edge(x, p[mid])?;
            graph.add_edge(x_plus, p[p_len - 1])?;

            let route = if gadget_at[i] {
                let q: Vec<Vertex> = (0..q_len)
                    .map(|j| {
                        let v = graph.add_vertex();
                        graph.set_label(v, format!("e{i}:q{j}"));
                        v
                    })
                    .collect();
                for w in q.windows(2) {
                    graph.add_edge(w[0], w[1])?;
                }
                graph.add_edge(p[mid - 1], q[0])?;
                graph.add_edge(p[mid + 1], q[q_len - 1])?;
                p[..mid]
                    .iter()
                    .chain(&q)
                    .chain(&p[mid + 1..])
                    .copied()
                    .collect()
            } else {
                p
            };
            detours[pos] = Some(route);
        }

        let mut boundary = Vec::with_capacity(len + added);
        for (idx, &v) in b.iter().enumerate() {
            match detours[idx].take() {
                Some(route) => boundary.extend(route),
                None => boundary.push(v),
            }
        }
        Ok(Territory {
            graph,
            boundary: CyclicSeq::new(boundary)?,
            t,
            level: None,
        })
    }
}
