//! Immutable simple undirected graphs on at most 64 vertices.
//!
//! Vertices are the dense integers `0..n`. Each adjacency row is a `u64`
//! bitmask, so vertex subsets are also passed around as `u64` masks.

use std::fmt;

use thiserror::Error;

/// Largest order a [`Graph`] can hold.
pub const MAX_ORDER: usize = 64;

/// A set of vertices, one bit per vertex.
pub type VertexMask = u64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph order {0} exceeds the supported maximum of {MAX_ORDER}")]
    TooLarge(usize),
    #[error("vertex {vertex} out of range for a graph on {order} vertices")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {0} listed twice")]
    DuplicateVertex(usize),
    #[error("invalid catalog parameters: {0}")]
    InvalidParameters(String),
}

/// Mask with the low `n` bits set.
#[inline]
pub fn full_mask(n: usize) -> VertexMask {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterate the set bits of a mask in increasing order.
#[inline]
pub fn bits(mut mask: VertexMask) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

/// Build a mask from a vertex list.
pub fn mask_of(vertices: &[usize]) -> VertexMask {
    vertices.iter().fold(0, |m, &v| m | (1u64 << v))
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexMask>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_ORDER {
            return Err(GraphError::TooLarge(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Build a graph from an edge list. Repeated edges collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange {
                        vertex: w,
                        order: n,
                    });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.adj[u] |= 1 << v;
            g.adj[v] |= 1 << u;
        }
        Ok(g)
    }

    /// Build a graph from raw adjacency rows. Rows must be symmetric and
    /// irreflexive; this is only checked in debug builds.
    pub(crate) fn from_rows(adj: Vec<VertexMask>) -> Self {
        debug_assert!(adj.len() <= MAX_ORDER);
        debug_assert!((0..adj.len()).all(|u| {
            adj[u] & (1 << u) == 0 && bits(adj[u]).all(|v| v < adj.len() && adj[v] & (1 << u) != 0)
        }));
        Graph { n: adj.len(), adj }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn vertex_mask(&self) -> VertexMask {
        full_mask(self.n)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & (1 << v) != 0
    }

    /// Neighborhood of `v` as a mask.
    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexMask {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Degree of `v` inside the subgraph induced by `within`.
    #[inline]
    pub fn degree_in(&self, v: usize, within: VertexMask) -> usize {
        (self.adj[v] & within).count_ones() as usize
    }

    /// Degrees in vertex order.
    pub fn degrees(&self) -> Vec<usize> {
        self.vertices().map(|v| self.degree(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for u in self.vertices() {
            for v in bits(self.adj[u] >> u >> 1) {
                out.push((u, u + 1 + v));
            }
        }
        out
    }

    pub fn is_edgeless(&self) -> bool {
        self.adj.iter().all(|&r| r == 0)
    }

    /// True if no two vertices of `set` are adjacent.
    pub fn is_independent(&self, set: VertexMask) -> bool {
        bits(set).all(|v| self.adj[v] & set == 0)
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertex_mask();
        let adj = (0..self.n)
            .map(|v| !self.adj[v] & all & !(1 << v))
            .collect();
        Graph::from_rows(adj)
    }

    /// `self + other`: the vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        if n > MAX_ORDER {
            return Err(GraphError::TooLarge(n));
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|&r| r << self.n));
        Ok(Graph::from_rows(adj))
    }

    /// Disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &Graph) -> Result<Graph, GraphError> {
        let mut g = self.disjoint_union(other)?;
        let left = full_mask(self.n);
        let right = g.vertex_mask() & !left;
        for v in 0..self.n {
            g.adj[v] |= right;
        }
        for v in self.n..g.n {
            g.adj[v] |= left;
        }
        Ok(g)
    }

    /// Subgraph induced on `vertices`; vertex `vertices[i]` becomes `i`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph, GraphError> {
        let mut seen = 0u64;
        for &v in vertices {
            if v >= self.n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: v,
                    order: self.n,
                });
            }
            if seen & (1 << v) != 0 {
                return Err(GraphError::DuplicateVertex(v));
            }
            seen |= 1 << v;
        }
        Ok(self.induced_unchecked(vertices))
    }

    pub(crate) fn induced_unchecked(&self, vertices: &[usize]) -> Graph {
        let adj = vertices
            .iter()
            .map(|&u| {
                vertices
                    .iter()
                    .enumerate()
                    .filter(|&(_, &v)| self.adj[u] & (1 << v) != 0)
                    .fold(0u64, |m, (i, _)| m | (1 << i))
            })
            .collect();
        Graph::from_rows(adj)
    }

    /// Subgraph induced on a vertex mask, relabeled in increasing order.
    pub fn induced_by_mask(&self, set: VertexMask) -> Graph {
        let verts: Vec<usize> = bits(set & self.vertex_mask()).collect();
        self.induced_unchecked(&verts)
    }

    /// `self - v`.
    pub fn remove_vertex(&self, v: usize) -> Result<Graph, GraphError> {
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange {
                vertex: v,
                order: self.n,
            });
        }
        Ok(self.induced_by_mask(self.vertex_mask() & !(1 << v)))
    }

    /// Relabel so that old vertex `v` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Graph, GraphError> {
        if perm.len() != self.n {
            return Err(GraphError::InvalidParameters(format!(
                "permutation of length {} for a graph on {} vertices",
                perm.len(),
                self.n
            )));
        }
        let mut seen = 0u64;
        for &p in perm {
            if p >= self.n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: p,
                    order: self.n,
                });
            }
            if seen & (1 << p) != 0 {
                return Err(GraphError::DuplicateVertex(p));
            }
            seen |= 1 << p;
        }
        let mut adj = vec![0u64; self.n];
        for u in self.vertices() {
            adj[perm[u]] = bits(self.adj[u]).fold(0, |m, v| m | (1 << perm[v]));
        }
        Ok(Graph::from_rows(adj))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}
