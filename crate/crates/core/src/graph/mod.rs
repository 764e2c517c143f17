//! Simple undirected graphs with dense vertex ids and the classical
//! subroutines the rainbow colorings are built from.

mod bridges;
mod cover;
mod paths;
mod spanning;

pub use bridges::{bridges, bridges_naive};
pub use cover::{is_vertex_cover, min_vertex_cover, neighborhood_types, TypeClass};
pub use paths::{bfs_distances, diameter, distance_matrix, eccentricity, INF};
pub use spanning::{
    leaf_count, max_leaf_spanning_tree, max_leaf_spanning_tree_exact, spanning_tree_min_diameter,
    tree_diameter,
};

use std::collections::VecDeque;
use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A simple undirected graph on vertices `0..n`.
///
/// Edges are stored as `(u, v)` with `u < v`, sorted lexicographically; an
/// edge's id is its position in that order. Graphs are immutable once built.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawGraph", into = "RawGraph")]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<(usize, usize)>>,
}

#[derive(Serialize, Deserialize)]
struct RawGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl TryFrom<RawGraph> for Graph {
    type Error = Error;

    fn try_from(raw: RawGraph) -> Result<Self> {
        Graph::new(raw.n, raw.edges)
    }
}

impl From<Graph> for RawGraph {
    fn from(g: Graph) -> Self {
        RawGraph { n: g.n, edges: g.edges }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

impl Graph {
    /// Builds a graph, rejecting self-loops, parallel edges and out-of-range ids.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut list = Vec::new();
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge {a}-{b} out of range for {n} vertices"
                )));
            }
            if a == b {
                return Err(Error::InvalidGraph(format!("self-loop at {a}")));
            }
            list.push((a.min(b), a.max(b)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidGraph(format!(
                "parallel edge {}-{}",
                w[0].0, w[0].1
            )));
        }
        let mut adj = vec![Vec::new(); n];
        for (id, &(u, v)) in list.iter().enumerate() {
            adj[u].push((v, id));
            adj[v].push((u, id));
        }
        for row in &mut adj {
            row.sort_unstable();
        }
        Ok(Graph { n, edges: list, adj })
    }

    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> (usize, usize) {
        self.edges[id]
    }

    /// `(neighbor, edge id)` pairs, sorted by neighbor.
    pub fn incident(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().map(|&(w, _)| w)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_id(u, v).is_some()
    }

    pub fn is_pendant(&self, v: usize) -> bool {
        self.degree(v) == 1
    }

    /// Graphs on at most one vertex count as connected.
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for w in self.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == self.n
    }

    pub(crate) fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.m() + 1 == self.n && self.is_connected()
    }

    /// Subgraph on the same vertex set keeping only the listed edge ids.
    pub fn spanning_subgraph(&self, edge_ids: impl IntoIterator<Item = usize>) -> Graph {
        Graph::new(self.n, edge_ids.into_iter().map(|id| self.edges[id]))
            .expect("subgraph of a simple graph is simple")
    }

    /// Graphviz rendering, optionally with per-vertex labels.
    pub fn to_dot(&self, labels: Option<&[String]>) -> String {
        let mut out = String::from("graph G {\n");
        for v in 0..self.n {
            match labels {
                Some(l) => out.push_str(&format!("  {v} [label=\"{}\"];\n", l[v])),
                None => out.push_str(&format!("  {v};\n")),
            }
        }
        for &(u, v) in &self.edges {
            out.push_str(&format!("  {u} -- {v};\n"));
        }
        out.push_str("}\n");
        out
    }
}

/// Membership bitmask over the vertex ids of one graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet(FixedBitSet);

impl VertexSet {
    pub fn new(n: usize) -> Self {
        VertexSet(FixedBitSet::with_capacity(n))
    }

    pub fn from_iter(n: usize, members: impl IntoIterator<Item = usize>) -> Self {
        let mut set = Self::new(n);
        for v in members {
            set.insert(v);
        }
        set
    }

    /// Capacity, i.e. the vertex count of the owning graph.
    pub fn universe(&self) -> usize {
        self.0.len()
    }

    pub fn insert(&mut self, v: usize) {
        self.0.insert(v);
    }

    pub fn remove(&mut self, v: usize) {
        self.0.set(v, false);
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.contains(v)
    }

    pub fn len(&self) -> usize {
        self.0.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.ones()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Membership bitmask over edge ids.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EdgeSet(FixedBitSet);

impl EdgeSet {
    pub fn new(m: usize) -> Self {
        EdgeSet(FixedBitSet::with_capacity(m))
    }

    pub fn insert(&mut self, e: usize) {
        self.0.insert(e);
    }

    pub fn contains(&self, e: usize) -> bool {
        self.0.contains(e)
    }

    pub fn len(&self) -> usize {
        self.0.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.ones()
    }
}

impl fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Corona `g ∘ h`: `g`'s vertices keep ids `0..n`, then copy `i` of `h`
/// occupies `n + i*n' .. n + (i+1)*n'`, and vertex `i` is joined to all of copy `i`.
pub fn corona(g: &Graph, h: &Graph) -> Graph {
    let n = g.n();
    let nh = h.n();
    let mut edges = g.edges().to_vec();
    for i in 0..n {
        let base = n + i * nh;
        edges.extend(h.edges().iter().map(|&(a, b)| (base + a, base + b)));
        edges.extend((0..nh).map(|j| (i, base + j)));
    }
    Graph::new(n * (1 + nh), edges).expect("corona of simple graphs is simple")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;

    #[test]
    fn rejects_loops_and_parallel_edges() {
        assert!(matches!(Graph::new(3, [(1, 1)]), Err(Error::InvalidGraph(_))));
        assert!(matches!(
            Graph::new(3, [(0, 1), (1, 0)]),
            Err(Error::InvalidGraph(_))
        ));
        assert!(matches!(Graph::new(2, [(0, 2)]), Err(Error::InvalidGraph(_))));
    }

    #[test]
    fn adjacency_is_symmetric() {
        let g = generate::petersen();
        for (id, &(u, v)) in g.edges().iter().enumerate() {
            assert!(g.incident(u).contains(&(v, id)));
            assert!(g.incident(v).contains(&(u, id)));
        }
        let total: usize = (0..g.n()).map(|v| g.degree(v)).sum();
        assert_eq!(total, 2 * g.m());
    }

    #[test]
    fn corona_of_triangle_with_k1() {
        let g = corona(&generate::complete(3), &Graph::empty(1));
        assert_eq!(g.n(), 6);
        assert_eq!(g.m(), 6);
        for v in 0..3 {
            assert!(g.has_edge(v, 3 + v));
            assert!(g.is_pendant(3 + v));
        }
    }

    #[test]
    fn corona_with_empty_graph_is_identity() {
        let c4 = generate::cycle(4);
        assert_eq!(corona(&c4, &Graph::empty(0)), c4);
    }

    #[test]
    fn corona_of_c4_with_k1() {
        let g = corona(&generate::cycle(4), &Graph::empty(1));
        assert_eq!((g.n(), g.m()), (8, 8));
        assert_eq!((0..8).filter(|&v| g.is_pendant(v)).count(), 4);
    }

    #[test]
    fn corona_vertex_count() {
        let g = corona(&generate::path(3), &generate::complete(3));
        assert_eq!(g.n(), 3 * (1 + 3));
        assert_eq!(g.m(), 2 + 3 * 3 + 3 * 3);
    }
}
