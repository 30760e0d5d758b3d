//! Undirected simple graphs with dense vertex IDs, plus the elementary
//! algorithms the rest of the crate leans on (BFS distances, girth,
//! components, induced-cycle/path predicates) and the graph operators.

use std::collections::VecDeque;
use std::fmt::Write as _;

use thiserror::Error;

/// Vertex identifier. Vertices of a graph on `n` vertices are `0..n`.
pub type Vertex = usize;

/// An unordered edge stored with `u < v`.
pub type Edge = (Vertex, Vertex);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("loop at vertex {0}")]
    Loop(Vertex),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(Vertex, Vertex),
    #[error("adjacency is not symmetric at {0}-{1}")]
    Asymmetric(Vertex, Vertex),
    #[error("label count {labels} does not match vertex count {n}")]
    LabelCount { labels: usize, n: usize },
    #[error("cyclic sequence needs at least 3 distinct vertices, got {0:?}")]
    BadCyclicSeq(Vec<Vertex>),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EdgeListError {
    #[error("line {line}: expected two vertex IDs, got {text:?}")]
    Malformed { line: usize, text: String },
    #[error("line {line}: loop at vertex {vertex}")]
    Loop { line: usize, vertex: Vertex },
    #[error("line {line}: duplicate edge {u}-{v}")]
    Duplicate { line: usize, u: Vertex, v: Vertex },
}

/// Undirected simple graph.
///
/// Adjacency lists are kept sorted, so two graphs with the same edge set
/// compare equal regardless of the order edges were inserted in.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            labels: None,
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.adj.len() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Appends a fresh isolated vertex and returns its ID.
    pub fn add_vertex(&mut self) -> Vertex {
        self.adj.push(Vec::new());
        if let Some(labels) = &mut self.labels {
            labels.push(String::new());
        }
        self.adj.len() - 1
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<(), GraphError> {
        let n = self.order();
        for w in [u, v] {
            if w >= n {
                return Err(GraphError::VertexOutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return Err(GraphError::Loop(u));
        }
        match self.adj[u].binary_search(&v) {
            Ok(_) => Err(GraphError::DuplicateEdge(u.min(v), u.max(v))),
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                Ok(())
            }
        }
    }

    /// Removes `uv`; returns whether it was present.
    pub fn remove_edge(&mut self, u: Vertex, v: Vertex) -> bool {
        if u >= self.order() || v >= self.order() {
            return false;
        }
        match self.adj[u].binary_search(&v) {
            Ok(pos) => {
                self.adj[u].remove(pos);
                let pos = self.adj[v].binary_search(&u).expect("asymmetric adjacency");
                self.adj[v].remove(pos);
                true
            }
            Err(_) => false,
        }
    }

    /// Copy of the graph with the pair `uv` flipped between edge and non-edge.
    pub fn with_toggled(&self, u: Vertex, v: Vertex) -> Graph {
        let mut g = self.clone();
        if !g.remove_edge(u, v) {
            g.add_edge(u, v)
                .expect("toggled pair must be a valid non-edge");
        }
        g
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Non-adjacent pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn non_edges(&self) -> impl Iterator<Item = Edge> + '_ {
        let n = self.order();
        (0..n).flat_map(move |u| {
            (u + 1..n)
                .filter(move |&v| !self.has_edge(u, v))
                .map(move |v| (u, v))
        })
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: Vertex) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    pub fn set_labels(&mut self, labels: Vec<String>) -> Result<(), GraphError> {
        if labels.len() != self.order() {
            return Err(GraphError::LabelCount {
                labels: labels.len(),
                n: self.order(),
            });
        }
        self.labels = Some(labels);
        Ok(())
    }

    pub fn set_label(&mut self, v: Vertex, label: impl Into<String>) {
        let n = self.order();
        let labels = self.labels.get_or_insert_with(|| vec![String::new(); n]);
        labels[v] = label.into();
    }

    pub fn without_labels(&self) -> Graph {
        Graph {
            adj: self.adj.clone(),
            labels: None,
        }
    }

    /// Checks symmetry, loop-freeness, sortedness and range of adjacency.
    pub fn validate(&self) -> Result<(), GraphError> {
        let n = self.order();
        for (u, nbrs) in self.adj.iter().enumerate() {
            for (i, &v) in nbrs.iter().enumerate() {
                if v >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: v, n });
                }
                if v == u {
                    return Err(GraphError::Loop(u));
                }
                if i > 0 && nbrs[i - 1] >= v {
                    return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
                }
                if self.adj[v].binary_search(&u).is_err() {
                    return Err(GraphError::Asymmetric(u, v));
                }
            }
        }
        if let Some(labels) = &self.labels {
            if labels.len() != n {
                return Err(GraphError::LabelCount {
                    labels: labels.len(),
                    n,
                });
            }
        }
        Ok(())
    }

    pub fn is_regular(&self, d: usize) -> bool {
        self.adj.iter().all(|nbrs| nbrs.len() == d)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Induced subgraph on `verts`; vertex `verts[i]` becomes `i`.
    pub fn induced_subgraph(&self, verts: &[Vertex]) -> Graph {
        let mut index = vec![usize::MAX; self.order()];
        for (i, &v) in verts.iter().enumerate() {
            index[v] = i;
        }
        let mut h = Graph::empty(verts.len());
        for (i, &v) in verts.iter().enumerate() {
            h.adj[i] = self.adj[v]
                .iter()
                .filter_map(|&w| (index[w] != usize::MAX).then_some(index[w]))
                .collect();
            h.adj[i].sort_unstable();
        }
        if let Some(labels) = &self.labels {
            h.labels = Some(verts.iter().map(|&v| labels[v].clone()).collect());
        }
        h
    }

    /// BFS distances from `source`; `None` marks unreachable vertices.
    pub fn bfs_distances(&self, source: Vertex) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.order()];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Shortest-path edge count; `None` when `u` and `v` are disconnected.
    pub fn distance(&self, u: Vertex, v: Vertex) -> Option<usize> {
        if u == v {
            return Some(0);
        }
        self.bfs_distances(u)[v]
    }

    /// Length of a shortest cycle, `None` for forests.
    ///
    /// BFS from every vertex; each non-tree edge `xy` met during the search
    /// closes a closed walk of length `d(x) + d(y) + 1` through the root. The
    /// minimum over all roots is exact because a root on a shortest cycle
    /// sees that cycle as such a walk.
    pub fn girth(&self) -> Option<usize> {
        let n = self.order();
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for root in 0..n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[root] = 0;
            parent[root] = usize::MAX;
            queue.clear();
            queue.push_back(root);
            'bfs: while let Some(u) = queue.pop_front() {
                if let Some(b) = best {
                    if 2 * dist[u] >= b {
                        break 'bfs;
                    }
                }
                for &w in &self.adj[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// True iff `seq`, read cyclically, is an induced cycle of length >= 3.
    pub fn is_induced_cycle(&self, seq: &[Vertex]) -> bool {
        let k = seq.len();
        if k < 3 || !self.distinct_in_range(seq) {
            return false;
        }
        let in_seq = self.membership(seq);
        (0..k).all(|i| {
            let v = seq[i];
            self.has_edge(v, seq[(i + 1) % k])
                && self.adj[v].iter().filter(|&&w| in_seq[w]).count() == 2
        })
    }

    /// True iff `seq` is an induced path on `seq.len()` vertices.
    pub fn is_induced_path(&self, seq: &[Vertex]) -> bool {
        let k = seq.len();
        if k == 0 || !self.distinct_in_range(seq) {
            return false;
        }
        let in_seq = self.membership(seq);
        (0..k).all(|i| {
            let v = seq[i];
            let expected = usize::from(i > 0) + usize::from(i + 1 < k);
            (i + 1 == k || self.has_edge(v, seq[i + 1]))
                && self.adj[v].iter().filter(|&&w| in_seq[w]).count() == expected
        })
    }

    fn distinct_in_range(&self, seq: &[Vertex]) -> bool {
        let n = self.order();
        let mut seen = vec![false; n];
        seq.iter()
            .all(|&v| v < n && !std::mem::replace(&mut seen[v], true))
    }

    fn membership(&self, seq: &[Vertex]) -> Vec<bool> {
        let mut m = vec![false; self.order()];
        for &v in seq {
            m[v] = true;
        }
        m
    }

    pub fn complement(&self) -> Graph {
        let n = self.order();
        let mut g = Graph::empty(n);
        for u in 0..n {
            let mut it = self.adj[u].iter().peekable();
            for v in 0..n {
                if it.peek() == Some(&&v) {
                    it.next();
                } else if v != u {
                    g.adj[u].push(v);
                }
            }
        }
        g
    }

    /// Cartesian product; vertex `(a, x)` is `a * |H| + x`.
    pub fn cartesian_product(&self, other: &Graph) -> Graph {
        let (n, m) = (self.order(), other.order());
        let mut g = Graph::empty(n * m);
        for a in 0..n {
            for x in 0..m {
                let nbrs = &mut g.adj[a * m + x];
                nbrs.extend(self.adj[a].iter().map(|&b| b * m + x));
                nbrs.extend(other.adj[x].iter().map(|&y| a * m + y));
                nbrs.sort_unstable();
            }
        }
        g
    }

    /// Line graph; vertex `i` is the `i`-th edge of [`Graph::edges`].
    pub fn line_graph(&self) -> Graph {
        let edges: Vec<Edge> = self.edges().collect();
        let mut incident: Vec<Vec<usize>> = vec![Vec::new(); self.order()];
        for (i, &(u, v)) in edges.iter().enumerate() {
            incident[u].push(i);
            incident[v].push(i);
        }
        let mut g = Graph::empty(edges.len());
        for (i, &(u, v)) in edges.iter().enumerate() {
            let nbrs = &mut g.adj[i];
            nbrs.extend(incident[u].iter().chain(&incident[v]).filter(|&&j| j != i));
            nbrs.sort_unstable();
            nbrs.dedup();
        }
        g
    }

    /// Disjoint union; `other`'s vertices are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.order();
        let mut g = self.without_labels();
        g.adj.extend(
            other
                .adj
                .iter()
                .map(|nbrs| nbrs.iter().map(|&v| v + shift).collect()),
        );
        g
    }

    /// Edge-list text: one `u v` pair per line.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for (u, v) in self.edges() {
            writeln!(out, "{u} {v}").unwrap();
        }
        out
    }

    pub fn to_dot(&self, name: &str) -> String {
        let mut out = format!("graph {name} {{\n");
        for v in 0..self.order() {
            match self.label(v) {
                Some(l) if !l.is_empty() => {
                    writeln!(out, "  {v} [label=\"{}\"];", l.replace('"', "\\\"")).unwrap()
                }
                _ => writeln!(out, "  {v};").unwrap(),
            }
        }
        for (u, v) in self.edges() {
            writeln!(out, "  {u} -- {v};").unwrap();
        }
        out.push_str("}\n");
        out
    }
}

/// Distinct vertices read cyclically; at least three of them.
#[derive(Debug, Clone, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(transparent)]
pub struct CyclicSeq(Vec<Vertex>);

impl CyclicSeq {
    pub fn new(verts: Vec<Vertex>) -> Result<Self, GraphError> {
        let mut sorted = verts.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if verts.len() < 3 || sorted.len() != verts.len() {
            return Err(GraphError::BadCyclicSeq(verts));
        }
        Ok(CyclicSeq(verts))
    }

    pub fn verts(&self) -> &[Vertex] {
        &self.0
    }

    pub fn into_verts(self) -> Vec<Vertex> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.contains(&v)
    }

    /// Consecutive pairs, including the closing one, each as `(min, max)`.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        let k = self.0.len();
        (0..k).map(move |i| {
            let (a, b) = (self.0[i], self.0[(i + 1) % k]);
            (a.min(b), a.max(b))
        })
    }

    /// Rotated and possibly reversed so it starts at its smallest vertex and
    /// continues toward the smaller of that vertex's two sequence neighbours.
    pub fn normalized(&self) -> CyclicSeq {
        let k = self.0.len();
        let start = (0..k).min_by_key(|&i| self.0[i]).unwrap();
        let (next, prev) = (self.0[(start + 1) % k], self.0[(start + k - 1) % k]);
        let verts = if next <= prev {
            (0..k).map(|i| self.0[(start + i) % k]).collect()
        } else {
            (0..k).map(|i| self.0[(start + k - i) % k]).collect()
        };
        CyclicSeq(verts)
    }
}

/// Parses `u v` lines. Blank lines and `#` comments are skipped; the
/// vertex count is one more than the largest ID seen.
pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut pairs = Vec::new();
    let mut max_id: Option<Vertex> = None;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap().trim();
        if body.is_empty() {
            continue;
        }
        let malformed = || EdgeListError::Malformed {
            line,
            text: raw.to_string(),
        };
        let mut toks = body.split_whitespace();
        let (Some(a), Some(b), None) = (toks.next(), toks.next(), toks.next()) else {
            return Err(malformed());
        };
        let u: Vertex = a.parse().map_err(|_| malformed())?;
        let v: Vertex = b.parse().map_err(|_| malformed())?;
        if u == v {
            return Err(EdgeListError::Loop { line, vertex: u });
        }
        max_id = Some(max_id.map_or(u.max(v), |m| m.max(u).max(v)));
        pairs.push((line, u, v));
    }
    let mut g = Graph::empty(max_id.map_or(0, |m| m + 1));
    for (line, u, v) in pairs {
        if g.add_edge(u, v).is_err() {
            return Err(EdgeListError::Duplicate {
                line,
                u: u.min(v),
                v: u.max(v),
            });
        }
    }
    Ok(g)
}

/// Distance between positions `i` and `j` on a cycle of length `len`.
pub fn cyclic_distance(i: usize, j: usize, len: usize) -> usize {
    let d = i.abs_diff(j) % len;
    d.min(len - d)
}
