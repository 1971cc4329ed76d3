//! Immutable simple undirected graphs on dense vertex ids `0..n`.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matching;

/// An undirected edge, always stored with the smaller endpoint first.
pub type Edge = (usize, usize);

/// Normalizes an unordered pair so the smaller endpoint comes first.
#[inline]
pub fn edge(u: usize, v: usize) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// A simple undirected graph.
///
/// Equality is structural: two graphs are equal when they have the same
/// vertex count and the same edge set. Use
/// [`are_isomorphic`](crate::enumeration::are_isomorphic) for isomorphism.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<usize>>,
}

/// An induced subgraph together with the map back to the host's vertex ids.
///
/// `vertices[i]` is the host id of subgraph vertex `i`; the map is strictly
/// increasing, so relative vertex order is preserved.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgraph {
    pub graph: Graph,
    pub vertices: Vec<usize>,
}

impl Subgraph {
    /// Translates an edge of the subgraph into host ids.
    pub fn lift_edge(&self, (u, v): Edge) -> Edge {
        edge(self.vertices[u], self.vertices[v])
    }
}

/// Basic statistics of a graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphStats {
    pub delta: usize,
    pub nu: usize,
    pub m: usize,
    pub isolated: Vec<usize>,
}

impl GraphStats {
    pub fn of(g: &Graph) -> GraphStats {
        GraphStats {
            delta: g.max_degree(),
            nu: matching::nu(g),
            m: g.edge_count(),
            isolated: g.isolated_vertices(),
        }
    }
}

impl Graph {
    /// Builds a graph from an edge iterator. Duplicate edges collapse (set
    /// semantics); loops and out-of-range endpoints are rejected.
    pub fn new<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = Edge>,
    {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            set.insert(edge(u, v));
        }
        Ok(Graph::from_sorted(n, set.into_iter().collect()))
    }

    /// `edges` must be normalized, sorted, deduplicated and in range.
    pub(crate) fn from_sorted(n: usize, edges: Vec<Edge>) -> Graph {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    pub fn empty(n: usize) -> Graph {
        Graph::from_sorted(n, Vec::new())
    }

    pub fn complete(n: usize) -> Graph {
        let edges = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Graph::from_sorted(n, edges)
    }

    /// The cycle `0-1-...-(n-1)-0`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    /// The path `0-1-...-(n-1)`.
    pub fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    /// The star `K_{1,k}` with center `0`.
    pub fn star(k: usize) -> Graph {
        Graph::new(k + 1, (1..=k).map(|i| (0, i))).unwrap()
    }

    pub fn petersen() -> Graph {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        Graph::new(10, outer.chain(spokes).chain(inner)).unwrap()
    }

    /// Disjoint union; vertices of later graphs are shifted past earlier ones.
    pub fn disjoint_union<'a, I>(parts: I) -> Graph
    where
        I: IntoIterator<Item = &'a Graph>,
    {
        let mut n = 0;
        let mut edges = Vec::new();
        for g in parts {
            edges.extend(g.edges.iter().map(|&(u, v)| (u + n, v + n)));
            n += g.n;
        }
        Graph::from_sorted(n, edges)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges sorted by (min endpoint, max endpoint).
    #[inline]
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Neighbors of `v` in ascending order. Panics if `v` is out of range.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.adj[v].len())
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.adj[v].is_empty()).collect()
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    /// Induced subgraph on `vertices`, which must be strictly increasing and
    /// in range.
    pub fn induced(&self, vertices: &[usize]) -> Subgraph {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|&(u, v)| (index[u], index[v]))
            .collect();
        Subgraph {
            graph: Graph::from_sorted(vertices.len(), edges),
            vertices: vertices.to_vec(),
        }
    }

    /// `G \ v`: the induced subgraph on all other vertices. Remaining ids
    /// are shifted down by one above `v`.
    pub fn delete_vertex(&self, v: usize) -> Result<Subgraph> {
        self.check_vertex(v)?;
        let keep: Vec<usize> = (0..self.n).filter(|&w| w != v).collect();
        Ok(self.induced(&keep))
    }

    /// Same vertex set with all edges at `v` removed.
    pub fn without_edges_at(&self, v: usize) -> Graph {
        let edges = self
            .edges
            .iter()
            .copied()
            .filter(|&(a, b)| a != v && b != v)
            .collect();
        Graph::from_sorted(self.n, edges)
    }

    /// Drops isolated vertices.
    pub fn strip_isolated(&self) -> Subgraph {
        let keep: Vec<usize> = (0..self.n).filter(|&v| !self.adj[v].is_empty()).collect();
        self.induced(&keep)
    }

    /// Connected components ordered by smallest vertex id.
    pub fn components(&self) -> Vec<Subgraph> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut stack = vec![start];
            let mut members = vec![start];
            while let Some(v) = stack.pop() {
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                        members.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(self.induced(&members));
        }
        out
    }

    pub fn component_count(&self) -> usize {
        self.components().len()
    }

    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.component_count() == 1
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}
