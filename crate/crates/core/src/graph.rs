//! Simple undirected graphs with cached degrees.
//!
//! Vertices are dense ids `0..vertex_count`. Edges are stored normalized
//! (`u < v`) and sorted, so two graphs with the same edge set compare equal
//! regardless of the order in which edges were supplied.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::GraphError;

pub type Vertex = usize;

/// An immutable simple undirected graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "GraphData", into = "GraphData")]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(Vertex, Vertex)>,
    degrees: Vec<usize>,
}

/// Wire form of a [`Graph`]: `{"vertex_count": n, "edges": [[u, v], ...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphData {
    pub vertex_count: usize,
    pub edges: Vec<(Vertex, Vertex)>,
}

impl TryFrom<GraphData> for Graph {
    type Error = GraphError;

    fn try_from(data: GraphData) -> Result<Self, Self::Error> {
        Graph::new(data.vertex_count, data.edges)
    }
}

impl From<Graph> for GraphData {
    fn from(g: Graph) -> Self {
        GraphData {
            vertex_count: g.vertex_count,
            edges: g.edges,
        }
    }
}

impl Graph {
    /// Builds a graph, rejecting out-of-range ids, self-loops and duplicate edges.
    pub fn new<I>(vertex_count: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut seen = BTreeSet::new();
        let mut degrees = vec![0; vertex_count];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= vertex_count {
                    return Err(GraphError::VertexOutOfRange {
                        vertex: w,
                        vertex_count,
                    });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                return Err(GraphError::DuplicateEdge(key.0, key.1));
            }
            degrees[u] += 1;
            degrees[v] += 1;
        }
        Ok(Graph {
            vertex_count,
            edges: seen.into_iter().collect(),
            degrees,
        })
    }

    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            vertex_count: n,
            edges: Vec::new(),
            degrees: vec![0; n],
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as sorted `(u, v)` pairs with `u < v`.
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.degrees[v]
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.edges.binary_search(&(u.min(v), u.max(v))).is_ok()
    }

    pub fn first_isolated(&self) -> Option<Vertex> {
        self.degrees.iter().position(|&d| d == 0)
    }

    pub fn neighbors(&self) -> Vec<Vec<Vertex>> {
        let mut adj = vec![Vec::new(); self.vertex_count];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    /// Minimum and maximum degree. Fails on graphs with an isolated vertex
    /// (or no vertices at all).
    pub fn degree_extremes(&self) -> Result<DegreeExtremes, GraphError> {
        if let Some(v) = self.first_isolated() {
            return Err(GraphError::IsolatedVertex(v));
        }
        let min = self.degrees.iter().copied().min().ok_or(GraphError::EmptyGraph)?;
        let max = self.degrees.iter().copied().max().ok_or(GraphError::EmptyGraph)?;
        Ok(DegreeExtremes { min, max })
    }

    /// True iff every vertex has the same degree. The empty graph counts as regular.
    pub fn is_regular(&self) -> bool {
        self.degrees.windows(2).all(|w| w[0] == w[1])
    }

    pub fn is_connected(&self) -> bool {
        if self.vertex_count == 0 {
            return true;
        }
        let adj = self.neighbors();
        let mut seen = vec![false; self.vertex_count];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    queue.push_back(w);
                }
            }
        }
        reached == self.vertex_count
    }

    /// Multiset of sorted endpoint-degree pairs over all edges.
    pub fn degree_pair_profile(&self) -> Result<DegreePairProfile, GraphError> {
        if self.edges.is_empty() {
            return Err(GraphError::NoEdges);
        }
        let mut counts = BTreeMap::new();
        for &(u, v) in &self.edges {
            let (a, b) = (self.degrees[u], self.degrees[v]);
            *counts.entry((a.min(b), a.max(b))).or_insert(0) += 1;
        }
        Ok(DegreePairProfile { counts })
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={})", self.vertex_count, self.edge_count())
    }
}

/// Minimum degree `min` (δ) and maximum degree `max` (Δ).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeExtremes {
    pub min: usize,
    pub max: usize,
}

/// Counts of edges per unordered endpoint-degree pair `(a, b)` with `a <= b`.
///
/// Every vertex-degree-based invariant is a function of this profile alone.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct DegreePairProfile {
    counts: BTreeMap<(usize, usize), usize>,
}

impl DegreePairProfile {
    /// Builds a profile from `(a, b, count)` triples; pairs are normalized and
    /// repeated pairs accumulate. Zero counts are dropped.
    pub fn from_counts<I>(classes: I) -> Self
    where
        I: IntoIterator<Item = ((usize, usize), usize)>,
    {
        let mut counts = BTreeMap::new();
        for ((a, b), c) in classes {
            if c > 0 {
                *counts.entry((a.min(b), a.max(b))).or_insert(0) += c;
            }
        }
        DegreePairProfile { counts }
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn get(&self, a: usize, b: usize) -> usize {
        self.counts.get(&(a.min(b), a.max(b))).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), usize)> + '_ {
        self.counts.iter().map(|(&k, &c)| (k, c))
    }

    pub fn edge_count(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn as_map(&self) -> &BTreeMap<(usize, usize), usize> {
        &self.counts
    }
}

impl fmt::Display for DegreePairProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, ((a, b), c)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "({a},{b}):{c}")?;
        }
        f.write_str("}")
    }
}
