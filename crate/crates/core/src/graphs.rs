//! Simple graphs, edge ideals and dependent-set counts.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;

use crate::complexes::{stanley_reisner_complex, SimplicialComplex, VertexSet};
use crate::monomials::{Monomial, MonomialIdeal};

pub const MAX_VERTICES: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphError {
    /// Vertex counts must lie in `1..=64`.
    VertexCount(usize),
    VertexOutOfRange {
        vertex: usize,
        vertex_count: usize,
    },
    Loop {
        vertex: usize,
    },
    DuplicateEdge {
        u: usize,
        v: usize,
    },
    /// The dense edge encoding only covers graphs with `C(n, 2) <= 64`.
    MaskTooWide {
        vertex_count: usize,
    },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::VertexCount(n) => write!(f, "vertex count {n} outside 1..={MAX_VERTICES}"),
            GraphError::VertexOutOfRange {
                vertex,
                vertex_count,
            } => write!(f, "vertex {} outside 1..={vertex_count}", vertex + 1),
            GraphError::Loop { vertex } => write!(f, "loop at vertex {}", vertex + 1),
            GraphError::DuplicateEdge { u, v } => {
                write!(f, "edge {} {} listed twice", u + 1, v + 1)
            }
            GraphError::MaskTooWide { vertex_count } => write!(
                f,
                "dense edge mask cannot encode graphs on {vertex_count} vertices"
            ),
        }
    }
}

impl core::error::Error for GraphError {}

/// A simple undirected graph on vertices `0..n` (printed as `x1..xn`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<u64>,
}

impl Graph {
    pub fn new(
        vertex_count: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let mut g = Self::edgeless(vertex_count)?;
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
                return Err(GraphError::Loop { vertex: u });
            }
            if g.has_edge(u, v) {
                return Err(GraphError::DuplicateEdge {
                    u: u.min(v),
                    v: u.max(v),
                });
            }
            g.adjacency[u] |= 1 << v;
            g.adjacency[v] |= 1 << u;
        }
        Ok(g)
    }

    pub fn edgeless(vertex_count: usize) -> Result<Self, GraphError> {
        if vertex_count == 0 || vertex_count > MAX_VERTICES {
            return Err(GraphError::VertexCount(vertex_count));
        }
        Ok(Graph {
            adjacency: vec![0; vertex_count],
        })
    }

    /// Decodes the dense encoding: bit `k` of `mask` is the `k`-th pair
    /// `(u, v)`, `u < v`, in lex order `(0,1), (0,2), ..., (1,2), ...`.
    pub fn from_edge_mask(vertex_count: usize, mask: u64) -> Result<Self, GraphError> {
        let pairs = pair_count(vertex_count);
        if pairs > 64 {
            return Err(GraphError::MaskTooWide { vertex_count });
        }
        let mut g = Self::edgeless(vertex_count)?;
        if pairs < 64 && mask >> pairs != 0 {
            return Err(GraphError::MaskTooWide { vertex_count });
        }
        for (k, (u, v)) in all_pairs(vertex_count).enumerate() {
            if (mask >> k) & 1 == 1 {
                g.adjacency[u] |= 1 << v;
                g.adjacency[v] |= 1 << u;
            }
        }
        Ok(g)
    }

    /// Inverse of [`Graph::from_edge_mask`]; `None` when `C(n, 2) > 64`.
    pub fn edge_mask(&self) -> Option<u64> {
        if pair_count(self.vertex_count()) > 64 {
            return None;
        }
        Some(
            all_pairs(self.vertex_count())
                .enumerate()
                .filter(|(_, (u, v))| self.has_edge(*u, *v))
                .fold(0, |m, (k, _)| m | (1 << k)),
        )
    }

    pub fn complete(vertex_count: usize) -> Result<Self, GraphError> {
        Self::new(vertex_count, all_pairs(vertex_count))
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency
            .iter()
            .map(|a| a.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges `(u, v)` with `u < v`, in lex order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        all_pairs(self.vertex_count()).filter(|&(u, v)| self.has_edge(u, v))
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        (self.adjacency[u] >> v) & 1 == 1
    }

    pub fn neighbours(&self, v: usize) -> VertexSet {
        VertexSet(self.adjacency[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].count_ones() as usize
    }

    /// The subgraph induced on `keep`, relabelled in increasing order.
    /// `None` if `keep` is empty.
    pub fn induced(&self, keep: VertexSet) -> Option<Graph> {
        let old: Vec<usize> = keep.iter().filter(|&v| v < self.vertex_count()).collect();
        if old.is_empty() {
            return None;
        }
        let edges = old.iter().enumerate().flat_map(|(i, &u)| {
            old.iter()
                .enumerate()
                .skip(i + 1)
                .filter(move |&(_, &w)| self.has_edge(u, w))
                .map(move |(j, _)| (i, j))
        });
        Some(Graph::new(old.len(), edges.collect::<Vec<_>>()).expect("induced graph is simple"))
    }

    /// Number of edges with both endpoints in `vertices`.
    pub fn edges_within(&self, vertices: VertexSet) -> usize {
        vertices
            .iter()
            .map(|v| (self.adjacency[v] & vertices.0).count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    fn all_vertices(&self) -> VertexSet {
        VertexSet(u64::MAX >> (64 - self.vertex_count()))
    }

    /// `I(G) = (x_i x_j | {x_i, x_j} ∈ E)` in `n` variables.
    pub fn edge_ideal(&self) -> MonomialIdeal {
        let n = self.vertex_count();
        let gens = self.edges().map(|(u, v)| Monomial::square_free(n, &[u, v]));
        MonomialIdeal::equigenerated(n, 2, gens).expect("edges are quadratic and square-free")
    }

    /// The independence complex, i.e. the Stanley-Reisner complex of `I(G)`.
    pub fn independence_complex(&self) -> SimplicialComplex {
        stanley_reisner_complex(&self.edge_ideal()).expect("every vertex is independent")
    }

    pub fn is_independent(&self, set: VertexSet) -> bool {
        self.edges_within(set) == 0
    }

    /// Some vertex meets every edge. The edgeless graph qualifies.
    pub fn is_star(&self) -> bool {
        let e = self.edge_count();
        (0..self.vertex_count()).any(|v| self.degree(v) == e)
    }

    /// `t`: 3-subsets of vertices containing at least one edge.
    pub fn count_dependent_triples(&self) -> u64 {
        let n = self.vertex_count();
        let mut t = 0;
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    if self.has_edge(a, b) || self.has_edge(a, c) || self.has_edge(b, c) {
                        t += 1;
                    }
                }
            }
        }
        t
    }

    /// `t_v`: dependent 3-subsets containing `v`, by enumeration.
    pub fn dependent_triples_through(&self, v: usize) -> u64 {
        let n = self.vertex_count();
        let others: Vec<usize> = (0..n).filter(|&w| w != v).collect();
        let mut t = 0;
        for (i, &a) in others.iter().enumerate() {
            for &b in &others[i + 1..] {
                if self.has_edge(v, a) || self.has_edge(v, b) || self.has_edge(a, b) {
                    t += 1;
                }
            }
        }
        t
    }

    /// `C(d, 2) + d(n - d - 1) + |E(G ∖ N[v])|` with `d = deg v`, where
    /// `G ∖ N[v]` removes `v` and all of its neighbours.
    pub fn dependent_triples_through_closed_form(&self, v: usize) -> u64 {
        let n = self.vertex_count() as u64;
        let d = self.degree(v) as u64;
        let closed = self.neighbours(v).with(v);
        let rest = VertexSet(self.all_vertices().0 & !closed.0);
        d * d.saturating_sub(1) / 2 + d * (n - d - 1) + self.edges_within(rest) as u64
    }

    /// Number of non-edges, `C(n, 2) - |E|`.
    pub fn non_edge_count(&self) -> u64 {
        pair_count(self.vertex_count()) as u64 - self.edge_count() as u64
    }

    /// `2e + t`, the degree-3 Hilbert value of the edge ideal.
    pub fn hilbert_edge_ideal_deg3(&self) -> BigUint {
        BigUint::from(2 * self.edge_count() as u64 + self.count_dependent_triples())
    }
}

impl fmt::Display for Graph {
    /// The graph file format: vertex count, then one `u v` line per edge.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.vertex_count())?;
        for (u, v) in self.edges() {
            writeln!(f, "{} {}", u + 1, v + 1)?;
        }
        Ok(())
    }
}

fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

fn all_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |u| (u + 1..n).map(move |v| (u, v)))
}
