//! Compact undirected simple graphs on at most 62 vertices.
//!
//! Every row of the adjacency matrix is a single `u64`, so neighbourhood
//! algebra is a handful of word operations. Graphs are immutable once built;
//! every constructor checks symmetry and irreflexivity.

mod canon;
mod graph6;
mod vertex_set;

pub use canon::{canonical_code, canonical_form, enumerate_graphs, is_isomorphic, CANON_MAX_VERTICES};
pub use graph6::{parse_graph6, write_graph6, Graph6Error, Graph6Reader};
pub use vertex_set::VertexSet;

use thiserror::Error;

/// Largest supported vertex count. One row fits in a machine word and the
/// short graph6 header always suffices.
pub const MAX_VERTICES: usize = 62;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex count {0} outside 1..={MAX_VERTICES}")]
    VertexCount(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("adjacency is not symmetric between {0} and {1}")]
    Asymmetric(usize, usize),
    #[error("vertex set is empty")]
    EmptyVertexSet,
    #[error("common neighbours requested for a vertex and itself ({0})")]
    SameVertex(usize),
    #[error("built-in enumeration supports 1 <= n <= 7, got {0}")]
    EnumerationRange(usize),
    #[error("canonical form supports at most {max} vertices, got {n}")]
    CanonRange { n: usize, max: usize },
}

/// An immutable simple undirected graph stored as per-vertex adjacency bitsets.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n == 0 || n > MAX_VERTICES {
            return Err(GraphError::VertexCount(n));
        }
        Ok(Graph { adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adj = Self::empty(n)?.adj;
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(Graph { adj })
    }

    /// Builds a graph from raw rows, validating every invariant.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self, GraphError> {
        let n = rows.len();
        if n == 0 || n > MAX_VERTICES {
            return Err(GraphError::VertexCount(n));
        }
        let in_range = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        for (u, &row) in rows.iter().enumerate() {
            if row & !in_range != 0 {
                let vertex = (row & !in_range).trailing_zeros() as usize;
                return Err(GraphError::VertexOutOfRange { vertex, n });
            }
            if row >> u & 1 == 1 {
                return Err(GraphError::SelfLoop(u));
            }
            for v in VertexSet::from_bits(row) {
                if rows[v] >> u & 1 == 0 {
                    return Err(GraphError::Asymmetric(u, v));
                }
            }
        }
        Ok(Graph { adj: rows })
    }

    /// Rows already known to be valid (internal constructors only).
    pub(crate) fn from_rows_unchecked(rows: Vec<u64>) -> Self {
        debug_assert!(Self::from_rows(rows.clone()).is_ok());
        Graph { adj: rows }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn all_vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    /// Open neighbourhood N(u).
    #[inline]
    pub fn neighbors(&self, u: usize) -> VertexSet {
        VertexSet::from_bits(self.adj[u])
    }

    /// Closed neighbourhood N[u].
    #[inline]
    pub fn closed_neighbors(&self, u: usize) -> VertexSet {
        VertexSet::from_bits(self.adj[u] | 1 << u)
    }

    #[inline]
    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].count_ones() as usize
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| self.neighbors(u).into_iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n()).map(|u| self.degree(u)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|u| self.degree(u)).max().unwrap_or(0)
    }

    pub fn complement(&self) -> Graph {
        let full = VertexSet::full(self.n()).bits();
        let rows = self.adj.iter().enumerate().map(|(u, &row)| !row & full & !(1 << u)).collect();
        Graph { adj: rows }
    }

    /// Subgraph induced by `s`, relabelled `0..|s|` in ascending original order.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<Graph, GraphError> {
        if s.is_empty() {
            return Err(GraphError::EmptyVertexSet);
        }
        if let Some(v) = s.max() {
            if v >= self.n() {
                return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n() });
            }
        }
        let order: Vec<usize> = s.iter().collect();
        let rows = order
            .iter()
            .map(|&u| {
                order.iter().enumerate().filter(|&(_, &v)| self.has_edge(u, v)).fold(0u64, |acc, (j, _)| acc | 1 << j)
            })
            .collect();
        Ok(Graph { adj: rows })
    }

    /// The graph with vertex `u` deleted (remaining vertices keep relative order).
    pub fn remove_vertex(&self, u: usize) -> Result<Graph, GraphError> {
        self.induced_subgraph(self.all_vertices().without(u))
    }

    /// Relabels so that new vertex `i` is old vertex `order[i]`.
    pub fn permuted(&self, order: &[usize]) -> Graph {
        debug_assert_eq!(order.len(), self.n());
        let rows = order
            .iter()
            .map(|&u| {
                order.iter().enumerate().filter(|&(_, &v)| self.has_edge(u, v)).fold(0u64, |acc, (j, _)| acc | 1 << j)
            })
            .collect();
        Graph { adj: rows }
    }

    pub fn common_neighbors(&self, u: usize, v: usize) -> Result<VertexSet, GraphError> {
        for w in [u, v] {
            if w >= self.n() {
                return Err(GraphError::VertexOutOfRange { vertex: w, n: self.n() });
            }
        }
        if u == v {
            return Err(GraphError::SameVertex(u));
        }
        Ok(self.neighbors(u) & self.neighbors(v))
    }

    /// Vertices reachable from `start` inside `within`.
    pub fn component_of(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::new();
            for u in frontier {
                next |= self.neighbors(u);
            }
            frontier = next & within & !seen;
            seen |= frontier;
        }
        seen
    }

    /// Whether the subgraph induced by `within` is connected (the empty set counts as connected).
    pub fn is_connected_within(&self, within: VertexSet) -> bool {
        match within.min() {
            None => true,
            Some(s) => self.component_of(s, within) == within,
        }
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_within(self.all_vertices())
    }

    /// Vertices whose removal disconnects the graph.
    ///
    /// For a disconnected input, a vertex counts when its removal increases
    /// the number of components.
    pub fn cut_vertices(&self) -> VertexSet {
        let n = self.n();
        // iterative Hopcroft-Tarjan over low-points
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut cut = VertexSet::new();
        let mut timer = 0;
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            let mut root_children = 0;
            // (vertex, parent, remaining neighbours)
            let mut stack = vec![(root, usize::MAX, self.neighbors(root))];
            while let Some(top) = stack.last_mut() {
                let (u, parent) = (top.0, top.1);
                if let Some(v) = top.2.pop_min() {
                    if disc[v] == usize::MAX {
                        disc[v] = timer;
                        low[v] = timer;
                        timer += 1;
                        if u == root {
                            root_children += 1;
                        }
                        stack.push((v, u, self.neighbors(v)));
                    } else if v != parent {
                        low[u] = low[u].min(disc[v]);
                    }
                } else {
                    stack.pop();
                    if parent != usize::MAX {
                        low[parent] = low[parent].min(low[u]);
                        if parent != root && low[u] >= disc[parent] {
                            cut.insert(parent);
                        }
                    }
                }
            }
            if root_children > 1 {
                cut.insert(root);
            }
        }
        cut
    }

    /// Disjoint union with `other` appended after this graph's vertices.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n() + other.n();
        if n > MAX_VERTICES {
            return Err(GraphError::VertexCount(n));
        }
        let shift = self.n();
        let rows = self.adj.iter().copied().chain(other.adj.iter().map(|&r| r << shift)).collect();
        Ok(Graph { adj: rows })
    }

    /// Shortest-path distances from `source` (`None` when unreachable).
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        dist[source] = Some(0);
        let mut seen = VertexSet::singleton(source);
        let mut frontier = seen;
        let mut d = 0;
        while !frontier.is_empty() {
            d += 1;
            let mut next = VertexSet::new();
            for u in frontier {
                next |= self.neighbors(u);
            }
            frontier = next & !seen;
            seen |= frontier;
            for v in frontier {
                dist[v] = Some(d);
            }
        }
        dist
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph({})", write_graph6(self))
    }
}

impl std::fmt::Display for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&write_graph6(self))
    }
}
