//! Simple undirected graphs on at most 64 vertices, stored as one neighbor
//! bitmask per vertex.

use std::fmt;

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 64;

#[inline]
pub(crate) const fn bit(v: usize) -> u64 {
    1u64 << v
}

#[inline]
pub(crate) const fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates the set bits of a mask in ascending order.
#[derive(Clone, Copy)]
pub(crate) struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }
}

/// Keeps the bits of `mask` selected by `keep` and packs them into the low
/// positions, preserving order.
pub(crate) fn compress(mask: u64, keep: u64) -> u64 {
    let mut out = 0u64;
    for (i, v) in Bits(keep).enumerate() {
        if mask & bit(v) != 0 {
            out |= bit(i);
        }
    }
    out
}

/// An `n`-vertex simple graph. Vertices are `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::BadOrder { n });
        }
        Ok(Graph {
            n,
            adj: vec![0; n],
        })
    }

    /// Builds a graph from an edge list. Duplicate edges collapse; self-loops
    /// and out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn try_add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for x in [u, v] {
            if x >= self.n {
                return Err(Error::VertexOutOfRange { vertex: x, n: self.n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop { vertex: u });
        }
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
        Ok(())
    }

    #[inline]
    pub(crate) fn toggle_edge(&mut self, u: usize, v: usize) {
        self.adj[u] ^= bit(v);
        self.adj[v] ^= bit(u);
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        let all = low_mask(n);
        for v in 0..n {
            g.adj[v] = all & !bit(v);
        }
        Ok(g)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidParams(format!("a cycle needs at least 3 vertices, got {n}")));
        }
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges)
    }

    /// `K_{1,leaves}` with the center at vertex 0.
    pub fn star(leaves: usize) -> Result<Self> {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Graph::from_edges(leaves + 1, &edges)
    }

    /// `K_{a,b}` with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Result<Self> {
        let mut g = Graph::empty(a + b)?;
        for u in 0..a {
            for v in a..a + b {
                g.try_add_edge(u, v)?;
            }
        }
        Ok(g)
    }

    /// `k` disjoint edges `(0,1), (2,3), ...`.
    pub fn matching(k: usize) -> Result<Self> {
        let edges: Vec<_> = (0..k).map(|i| (2 * i, 2 * i + 1)).collect();
        Graph::from_edges(2 * k, &edges)
    }

    /// Disjoint union, relabelling the parts consecutively in the given order.
    pub fn disjoint_union(parts: &[Graph]) -> Result<Self> {
        let n: usize = parts.iter().map(Graph::order).sum();
        let mut g = Graph::empty(n)?;
        let mut offset = 0;
        for p in parts {
            for (u, v) in p.edges() {
                g.try_add_edge(u + offset, v + offset)?;
            }
            offset += p.n;
        }
        Ok(g)
    }

    /// `k` isolated vertices.
    pub fn independent(k: usize) -> Result<Self> {
        Graph::empty(k)
    }

    /// The same graph with isolated vertices appended up to order `n`.
    pub fn padded(&self, n: usize) -> Result<Self> {
        if n < self.n {
            return Err(Error::SizeMismatch { expected: self.n, found: n });
        }
        let mut g = Graph::empty(n)?;
        g.adj[..self.n].copy_from_slice(&self.adj);
        Ok(g)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn neighbor_list(&self, v: usize) -> Vec<usize> {
        Bits(self.adj[v]).collect()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] & bit(v) != 0
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| Bits(self.adj[u] & !low_mask(u + 1)).map(move |v| (u, v)))
    }

    pub fn complement(&self) -> Graph {
        let all = low_mask(self.n);
        Graph {
            n: self.n,
            adj: (0..self.n).map(|v| !self.adj[v] & all & !bit(v)).collect(),
        }
    }

    /// Induced subgraph on the vertices of `keep`, relabelled in ascending order.
    pub(crate) fn induced(&self, keep: u64) -> Graph {
        Graph {
            n: keep.count_ones() as usize,
            adj: Bits(keep).map(|v| compress(self.adj[v], keep)).collect(),
        }
    }

    #[cfg(test)]
    pub(crate) fn is_well_formed(&self) -> bool {
        let all = low_mask(self.n);
        (0..self.n).all(|v| {
            self.adj[v] & !all == 0
                && self.adj[v] & bit(v) == 0
                && Bits(self.adj[v]).all(|u| self.adj[u] & bit(v) != 0)
        })
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}
