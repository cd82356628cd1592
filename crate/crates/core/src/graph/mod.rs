//! Dense undirected simple graphs over `0..n`, partitions, and generators.

mod generators;
mod io;
mod partition;

pub use generators::*;
pub use io::{from_adjacency_dump, from_graph6, to_adjacency_dump, to_graph6};
pub use partition::Partition;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};

/// Immutable simple graph with one neighbour bitset per vertex.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
    edge_count: usize,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, e={}, g6={})", self.n(), self.edge_count, to_graph6(self))
    }
}

/// Mutable edge accumulator; the only way to assemble a [`Graph`].
#[derive(Clone, Debug)]
pub struct GraphBuilder {
    adj: Vec<VertexSet>,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Self {
        Self {
            adj: (0..n).map(|_| VertexSet::new(n)).collect(),
        }
    }

    /// Starts from a copy of `g` padded with isolated vertices up to `n`.
    pub fn from_graph(g: &Graph, n: usize) -> Self {
        assert!(n >= g.n());
        let mut b = Self::new(n);
        for (u, v) in g.edges() {
            b.add_edge(u, v);
        }
        b
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    /// Adds `uv`. Self-loops are rejected; repeated edges are idempotent.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "self-loop at {u}");
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    /// Complete bipartite join between two vertex lists.
    pub fn join(&mut self, a: &[usize], b: &[usize]) {
        for &u in a {
            for &v in b {
                self.add_edge(u, v);
            }
        }
    }

    /// Copies `g` onto the vertices `map[0..g.n()]`.
    pub fn embed(&mut self, g: &Graph, map: &[usize]) {
        assert_eq!(map.len(), g.n());
        for (u, v) in g.edges() {
            self.add_edge(map[u], map[v]);
        }
    }

    pub fn build(self) -> Graph {
        let twice: usize = self.adj.iter().map(VertexSet::len).sum();
        Graph {
            adj: self.adj,
            edge_count: twice / 2,
        }
    }
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        GraphBuilder::new(n).build()
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut b = GraphBuilder::new(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidParameter(format!("edge {u}-{v} outside 0..{n}")));
            }
            if u == v {
                return Err(Error::InvalidParameter(format!("self-loop at {u}")));
            }
            b.add_edge(u, v);
        }
        Ok(b.build())
    }

    /// Builds from raw rows, validating symmetry and loop-freeness.
    pub fn from_rows(rows: Vec<VertexSet>) -> Result<Self> {
        let n = rows.len();
        for (u, row) in rows.iter().enumerate() {
            if row.universe() != n {
                return Err(Error::InvalidParameter(format!("row {u} has universe {}", row.universe())));
            }
            if row.contains(u) {
                return Err(Error::InvalidParameter(format!("self-loop at {u}")));
            }
            for v in row.iter() {
                if !rows[v].contains(u) {
                    return Err(Error::InvalidParameter(format!("asymmetric adjacency {u}->{v}")));
                }
            }
        }
        let twice: usize = rows.iter().map(VertexSet::len).sum();
        Ok(Graph {
            adj: rows,
            edge_count: twice / 2,
        })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn rows(&self) -> &[VertexSet] {
        &self.adj
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// `d(v, B)`.
    #[inline]
    pub fn degree_in(&self, v: usize, set: &VertexSet) -> usize {
        self.adj[v].intersection_len(set)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// `Some(d)` when every vertex has degree `d`.
    pub fn regular_degree(&self) -> Option<usize> {
        if self.n() == 0 {
            return Some(0);
        }
        let d = self.degree(0);
        (1..self.n()).all(|v| self.degree(v) == d).then_some(d)
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn set_of(&self, vertices: &[usize]) -> VertexSet {
        VertexSet::from_iter(self.n(), vertices.iter().copied())
    }

    /// Edges `(u, v)` with `u < v`, ordered lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let rows = (0..n)
            .map(|v| {
                let mut r = self.adj[v].complement();
                r.remove(v);
                r
            })
            .collect::<Vec<_>>();
        let twice: usize = rows.iter().map(VertexSet::len).sum();
        Graph {
            adj: rows,
            edge_count: twice / 2,
        }
    }

    /// `G[S]` relabelled so that `vertices[i]` becomes `i`.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut b = GraphBuilder::new(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    b.add_edge(i, j);
                }
            }
        }
        b.build()
    }

    /// Spanning subgraph keeping only edges inside `set` (other vertices become isolated).
    pub fn restrict(&self, set: &VertexSet) -> Graph {
        let rows = (0..self.n())
            .map(|v| {
                if set.contains(v) {
                    self.adj[v].intersection(set)
                } else {
                    VertexSet::new(self.n())
                }
            })
            .collect::<Vec<_>>();
        let twice: usize = rows.iter().map(VertexSet::len).sum();
        Graph {
            adj: rows,
            edge_count: twice / 2,
        }
    }

    /// `e(G[A])`.
    pub fn edges_inside(&self, set: &VertexSet) -> usize {
        set.iter().map(|v| self.adj[v].intersection_len(set)).sum::<usize>() / 2
    }

    /// `e(G[A, B])` for disjoint `A`, `B`.
    pub fn edges_between(&self, a: &VertexSet, b: &VertexSet) -> usize {
        a.iter().map(|v| self.adj[v].intersection_len(b)).sum()
    }

    pub fn is_independent(&self, set: &VertexSet) -> bool {
        set.iter().all(|v| !self.adj[v].intersects(set))
    }

    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    /// Lexicographically least triangle, if any.
    pub fn find_triangle(&self) -> Option<[usize; 3]> {
        for (u, v) in self.edges() {
            let common = self.adj[u].intersection(&self.adj[v]);
            if let Some(w) = common.iter().find(|&w| w > v) {
                return Some([u, v, w]);
            }
        }
        None
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges().all(|(u, v)| !self.adj[u].intersects(&self.adj[v]))
    }

    /// All triangles `(a, b, c)` with `a < b < c`, lexicographic.
    pub fn triangles(&self) -> Vec<[usize; 3]> {
        let mut out = Vec::new();
        for (u, v) in self.edges() {
            for w in self.adj[u].intersection(&self.adj[v]).iter().filter(|&w| w > v) {
                out.push([u, v, w]);
            }
        }
        out
    }

    pub fn triangle_count(&self) -> usize {
        self.edges()
            .map(|(u, v)| {
                self.adj[u]
                    .intersection(&self.adj[v])
                    .iter()
                    .filter(|&w| w > v)
                    .count()
            })
            .sum()
    }

    /// Checks symmetry, loop-freeness and the cached edge count.
    pub fn check_invariants(&self) -> bool {
        let n = self.n();
        let mut twice = 0;
        for u in 0..n {
            if self.adj[u].contains(u) || self.adj[u].universe() != n {
                return false;
            }
            for v in self.adj[u].iter() {
                if !self.adj[v].contains(u) {
                    return false;
                }
            }
            twice += self.degree(u);
        }
        twice == 2 * self.edge_count
    }
}
