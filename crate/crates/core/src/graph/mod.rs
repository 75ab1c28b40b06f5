//! Simple undirected graphs, two-colourings of their edges, the seeded
//! `G(N, p)` sampler, and the plain-text file formats.

mod colouring;
mod io;
mod sample;

pub use colouring::{Colour, TwoColouring};
pub use io::{
    format_colouring, format_graph, parse_colouring, parse_graph, read_colouring, read_graph, write_colouring,
    write_graph,
};
pub use sample::{pair_index, pair_uniform, sample_gnp, sample_gnp_coupled, PairUniforms, Seed};

use std::path::PathBuf;

use thiserror::Error;

use crate::bitset::VertexSet;

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(usize, usize),
    #[error("{message}, line {line}")]
    Parse { line: usize, message: String },
    #[error("edge {0} {1} uncoloured")]
    Uncoloured(usize, usize),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl GraphError {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        GraphError::Parse {
            line,
            message: message.into(),
        }
    }
}

/// A simple undirected graph on vertices `0..n`.
///
/// Adjacency is a bitset per vertex, which keeps `|N(v) ∩ S|` cheap and the
/// symmetric-adjacency invariant easy to maintain. There is no separate edge
/// list; [`Graph::edges`] walks the upper triangle in lexicographic order.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<VertexSet>,
    edge_count: usize,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.num_vertices())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Self {
            adj: vec![VertexSet::new(n); n],
            edge_count: 0,
        }
    }

    pub fn complete(n: usize) -> Self {
        let adj = (0..n)
            .map(|v| {
                let mut s = VertexSet::full(n);
                s.remove(v);
                s
            })
            .collect();
        Self {
            adj,
            edge_count: n * n.saturating_sub(1) / 2,
        }
    }

    /// The cycle `0 - 1 - ... - (n-1) - 0`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        Self::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle edges are valid")
    }

    /// The path with `edges` edges on vertices `0..=edges`.
    pub fn path(edges: usize) -> Self {
        Self::from_edges(edges + 1, (0..edges).map(|i| (i, i + 1))).expect("path edges are valid")
    }

    /// Build from an edge list, rejecting loops, out-of-range labels and repeats.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(n);
        for (u, v) in edges {
            if !g.add_edge(u, v)? {
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
        }
        Ok(g)
    }

    /// Adds `{u, v}`. Returns `Ok(false)` when the edge was already present.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool, GraphError> {
        let n = self.num_vertices();
        for x in [u, v] {
            if x >= n {
                return Err(GraphError::VertexOutOfRange { vertex: x, n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if self.adj[u].contains(v) {
            return Ok(false);
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        self.edge_count += 1;
        Ok(true)
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        if u >= self.num_vertices() || !self.adj[u].contains(v) {
            return false;
        }
        self.adj[u].remove(v);
        self.adj[v].remove(u);
        self.edge_count -= 1;
        true
    }

    #[inline]
    pub fn num_vertices(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn num_edges(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.adj.len() && self.adj[u].contains(v)
    }

    #[inline]
    pub fn neighbours(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// `|N(v) ∩ set|`.
    #[inline]
    pub fn degree_into(&self, v: usize, set: &VertexSet) -> usize {
        self.adj[v].intersection_count(set)
    }

    /// All edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.num_vertices())
    }

    /// Same vertex labels, keeping only edges with both ends in `keep`.
    pub fn restricted_to(&self, keep: &VertexSet) -> Graph {
        let mut edge_count = 0;
        let adj = self
            .adj
            .iter()
            .enumerate()
            .map(|(v, nb)| {
                if keep.contains(v) {
                    let s = nb.intersection(keep);
                    edge_count += s.len();
                    s
                } else {
                    VertexSet::new(self.num_vertices())
                }
            })
            .collect();
        Graph {
            adj,
            edge_count: edge_count / 2,
        }
    }

    /// Vertex sets of the connected components, each sorted, ordered by
    /// smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.num_vertices();
        let mut seen = VertexSet::new(n);
        let mut out = Vec::new();
        for root in 0..n {
            if seen.contains(root) {
                continue;
            }
            seen.insert(root);
            let mut comp = vec![root];
            let mut stack = vec![root];
            while let Some(u) = stack.pop() {
                for w in self.adj[u].iter() {
                    if seen.insert(w) {
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

    /// `N(X) \ X`, the outer neighbourhood of `set`.
    pub fn outer_neighbourhood(&self, set: &VertexSet) -> VertexSet {
        let mut out = VertexSet::new(self.num_vertices());
        for v in set.iter() {
            out.union_with(&self.adj[v]);
        }
        out.difference_with(set);
        out
    }

    /// Union of the neighbourhoods of the vertices in `set` (members of `set`
    /// adjacent to another member are included).
    pub fn neighbourhood_union(&self, set: &VertexSet) -> VertexSet {
        let mut out = VertexSet::new(self.num_vertices());
        for v in set.iter() {
            out.union_with(&self.adj[v]);
        }
        out
    }

    /// Number of edges between two vertex sets (assumed disjoint).
    pub fn edges_between(&self, a: &VertexSet, b: &VertexSet) -> usize {
        a.iter().map(|v| self.adj[v].intersection_count(b)).sum()
    }

    /// True when `vertices` are distinct and pairwise adjacent.
    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        all_distinct(vertices, self.num_vertices())
            && vertices
                .iter()
                .enumerate()
                .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    /// True when `vertices` are distinct and consecutive ones adjacent.
    pub fn is_path(&self, vertices: &[usize]) -> bool {
        !vertices.is_empty()
            && all_distinct(vertices, self.num_vertices())
            && vertices.windows(2).all(|w| self.has_edge(w[0], w[1]))
    }

    /// True when `vertices` form a cycle (closing edge last → first).
    pub fn is_cycle(&self, vertices: &[usize]) -> bool {
        vertices.len() >= 3 && self.is_path(vertices) && self.has_edge(vertices[vertices.len() - 1], vertices[0])
    }
}

fn all_distinct(vertices: &[usize], n: usize) -> bool {
    let mut seen = VertexSet::new(n);
    vertices.iter().all(|&v| v < n && seen.insert(v))
}
