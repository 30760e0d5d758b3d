//! Named graph families.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use thiserror::Error;

use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("unknown graph family {0:?}")]
    UnknownFamily(String),
    #[error("{family}: {reason}")]
    BadParameters { family: String, reason: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Icosahedron,
    Dodecahedron,
    Petersen,
    Cube,
    Heawood,
    MobiusKantor,
    Pappus,
    Desargues,
    Cycle(usize),
    Path(usize),
    Complete(usize),
    Empty(usize),
    CompleteBipartite(usize, usize),
    /// The 2t-vertex graph VD_t: a t-cycle on `u_i`, its complement on `v_i`,
    /// and the matching `u_i v_i`.
    Vd(usize),
    HexTorus {
        rows: usize,
        cols: usize,
    },
    C5xC5,
    /// Line graph of `K_{t,t}`.
    LineKtt(usize),
}

/// Cubic Hamiltonian bases available by name, each built from an LCF code
/// so that `0, 1, .., n-1` is a Hamiltonian cycle.
pub const CUBIC_BASES: &[&str] = &[
    "k4",
    "k33",
    "cube",
    "heawood",
    "mobius-kantor",
    "pappus",
    "desargues",
];

fn bad(family: &str, reason: impl Into<String>) -> CatalogError {
    CatalogError::BadParameters {
        family: family.to_string(),
        reason: reason.into(),
    }
}

impl Family {
    pub fn build(&self) -> Result<Graph, CatalogError> {
        use Family::*;
        let g = match *self {
            Icosahedron => icosahedron(),
            Dodecahedron => lcf(20, &[10, 7, 4, -4, -7, 10, -4, 7, -7, 4]),
            Petersen => petersen(),
            Cube => lcf(8, &[3, -3]),
            Heawood => lcf(14, &[5, -5]),
            MobiusKantor => lcf(16, &[5, -5]),
            Pappus => lcf(18, &[5, 7, -7, 7, -7, -5]),
            Desargues => lcf(20, &[5, -5, 9, -9]),
            Cycle(n) => {
                if n < 3 {
                    return Err(bad("cycle", "needs n >= 3"));
                }
                cycle(n)
            }
            Path(n) => {
                if n < 1 {
                    return Err(bad("path", "needs n >= 1"));
                }
                Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
            }
            Complete(n) => {
                if n < 1 {
                    return Err(bad("complete", "needs n >= 1"));
                }
                complete(n)
            }
            Empty(n) => Graph::empty(n),
            CompleteBipartite(a, b) => {
                if a < 1 || b < 1 {
                    return Err(bad("complete-bipartite", "needs both sides >= 1"));
                }
                complete_bipartite(a, b)
            }
            Vd(t) => {
                if t < 3 {
                    return Err(bad("vd", "needs t >= 3"));
                }
                vd(t)
            }
            HexTorus { rows, cols } => {
                if rows < 4 || cols < 4 || rows % 2 == 1 || cols % 2 == 1 {
                    return Err(bad("hex-torus", "rows and cols must be even and >= 4"));
                }
                hex_torus(rows, cols)
            }
            C5xC5 => cycle(5).cartesian_product(&cycle(5)),
            LineKtt(t) => {
                if t < 2 {
                    return Err(bad("line-ktt", "needs t >= 2"));
                }
                complete_bipartite(t, t).line_graph()
            }
        };
        debug_assert!(g.validate().is_ok());
        Ok(g)
    }

    /// Hamiltonian cycle for the cubic catalog members, `None` otherwise.
    pub fn hamiltonian_cycle(&self) -> Option<Vec<Vertex>> {
        use Family::*;
        let n = match *self {
            Cube => 8,
            Heawood => 14,
            MobiusKantor => 16,
            Pappus => 18,
            Desargues => 20,
            Dodecahedron => 20,
            Complete(4) => 4,
            CompleteBipartite(3, 3) => return Some(vec![0, 3, 1, 4, 2, 5]),
            _ => return None,
        };
        Some((0..n).collect())
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Family::*;
        match *self {
            Icosahedron => write!(f, "icosahedron"),
            Dodecahedron => write!(f, "dodecahedron"),
            Petersen => write!(f, "petersen"),
            Cube => write!(f, "cube"),
            Heawood => write!(f, "heawood"),
            MobiusKantor => write!(f, "mobius-kantor"),
            Pappus => write!(f, "pappus"),
            Desargues => write!(f, "desargues"),
            Cycle(n) => write!(f, "cycle:{n}"),
            Path(n) => write!(f, "path:{n}"),
            Complete(4) => write!(f, "k4"),
            Complete(n) => write!(f, "complete:{n}"),
            Empty(n) => write!(f, "empty:{n}"),
            CompleteBipartite(3, 3) => write!(f, "k33"),
            CompleteBipartite(a, b) => write!(f, "complete-bipartite:{a},{b}"),
            Vd(t) => write!(f, "vd:{t}"),
            HexTorus { rows, cols } => write!(f, "hex-torus:{rows},{cols}"),
            C5xC5 => write!(f, "c5xc5"),
            LineKtt(t) => write!(f, "line-ktt:{t}"),
        }
    }
}

/// Parses `name` or `name:p1[,p2]`, e.g. `hex-torus:6,8` or `vd:5`.
impl FromStr for Family {
    type Err = CatalogError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim().to_ascii_lowercase().replace('_', "-");
        let (name, params) = match s.split_once(':') {
            Some((name, p)) => (name.to_string(), p.to_string()),
            None => (s.clone(), String::new()),
        };
        let nums: Vec<usize> = if params.is_empty() {
            Vec::new()
        } else {
            params
                .split(',')
                .map(|p| p.trim().parse())
                .collect::<Result<_, _>>()
                .map_err(|_| bad(&name, format!("bad parameters {params:?}")))?
        };
        let arity = |k: usize| {
            if nums.len() == k {
                Ok(())
            } else {
                Err(bad(&name, format!("expected {k} parameter(s)")))
            }
        };
        use Family::*;
        let fam = match name.as_str() {
            "icosahedron" => Icosahedron,
            "dodecahedron" => Dodecahedron,
            "petersen" => Petersen,
            "cube" => Cube,
            "heawood" => Heawood,
            "mobius-kantor" => MobiusKantor,
            "pappus" => Pappus,
            "desargues" => Desargues,
            "k4" => Complete(4),
            "k33" => CompleteBipartite(3, 3),
            "c5xc5" => C5xC5,
            "cycle" => {
                arity(1)?;
                Cycle(nums[0])
            }
            "path" => {
                arity(1)?;
                Path(nums[0])
            }
            "complete" => {
                arity(1)?;
                Complete(nums[0])
            }
            "empty" | "edgeless" => {
                arity(1)?;
                Empty(nums[0])
            }
            "complete-bipartite" => {
                arity(2)?;
                CompleteBipartite(nums[0], nums[1])
            }
            "vd" => {
                arity(1)?;
                Vd(nums[0])
            }
            "hex-torus" => {
                arity(2)?;
                HexTorus {
                    rows: nums[0],
                    cols: nums[1],
                }
            }
            "line-ktt" => {
                arity(1)?;
                LineKtt(nums[0])
            }
            _ => return Err(CatalogError::UnknownFamily(name)),
        };
        if !matches!(
            fam,
            Cycle(_)
                | Path(_)
                | Complete(_)
                | Empty(_)
                | CompleteBipartite(..)
                | Vd(_)
                | HexTorus { .. }
                | LineKtt(_)
        ) && !nums.is_empty()
        {
            return Err(bad(&name, "takes no parameters"));
        }
        Ok(fam)
    }
}

/// Erdős–Rényi `G(n, p)`: each pair is an edge independently with
/// probability `p`, drawn in lexicographic pair order.
pub fn random_gnp<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).expect("fresh pair");
            }
        }
    }
    g
}

pub fn cycle(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("n >= 3")
}

pub fn complete(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    Graph::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)))).unwrap()
}

/// Cubic graph from LCF notation: a Hamiltonian `n`-cycle plus chords
/// `i -> i + jumps[i mod len]`. Each chord is listed from both ends, so
/// repeats are skipped.
pub fn lcf(n: usize, jumps: &[i64]) -> Graph {
    let mut g = cycle(n);
    for i in 0..n {
        let j = (i as i64 + jumps[i % jumps.len()]).rem_euclid(n as i64) as usize;
        if !g.has_edge(i, j) {
            g.add_edge(i, j).expect("LCF chord");
        }
    }
    g
}

fn icosahedron() -> Graph {
    // apex 0, upper ring 1..=5, lower ring 6..=10, apex 11
    let mut edges = Vec::new();
    for i in 0..5 {
        let (up, up_next) = (1 + i, 1 + (i + 1) % 5);
        let (lo, lo_next) = (6 + i, 6 + (i + 1) % 5);
        edges.extend([(0, up), (up, up_next), (lo, lo_next), (11, lo)]);
        edges.extend([(up, lo), (up, lo_next)]);
    }
    Graph::from_edges(12, edges).unwrap()
}

fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.extend([(i, (i + 1) % 5), (i, i + 5), (i + 5, (i + 2) % 5 + 5)]);
    }
    Graph::from_edges(10, edges).unwrap()
}

fn vd(t: usize) -> Graph {
    let mut g = Graph::empty(2 * t);
    let ring = |i: usize, j: usize| {
        let d = i.abs_diff(j);
        d == 1 || d == t - 1
    };
    for i in 0..t {
        g.add_edge(i, t + i).unwrap();
        for j in i + 1..t {
            if ring(i, j) {
                g.add_edge(i, j).unwrap();
            } else {
                g.add_edge(t + i, t + j).unwrap();
            }
        }
    }
    let labels = (0..t)
        .map(|i| format!("u{}", i + 1))
        .chain((0..t).map(|i| format!("v{}", i + 1)))
        .collect();
    g.set_labels(labels).unwrap();
    g
}

/// Brick-wall honeycomb on the torus `Z_rows x Z_cols`: `(i,j) ~ (i,j+1)`
/// always, and `(i,j) ~ (i+1,j)` when `i + j` is even. Vertex `(i,j)` is
/// `i * cols + j`.
fn hex_torus(rows: usize, cols: usize) -> Graph {
    let id = |i: usize, j: usize| (i % rows) * cols + (j % cols);
    let mut g = Graph::empty(rows * cols);
    for i in 0..rows {
        for j in 0..cols {
            g.add_edge(id(i, j), id(i, j + 1)).unwrap();
            if (i + j) % 2 == 0 {
                g.add_edge(id(i, j), id(i + 1, j)).unwrap();
            }
        }
    }
    let labels = (0..rows)
        .flat_map(|i| (0..cols).map(move |j| format!("({i},{j})")))
        .collect();
    g.set_labels(labels).unwrap();
    g
}
