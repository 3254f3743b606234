//! Graph triples `(G1, G2, G3)`, packing maps and the packing check.
//!
//! `G1` lives on `V1 = 0..n`, `G2` on `V2 = 0..n`; yellow pairs are always
//! stored oriented as `(V1 vertex, V2 vertex)`.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{bit, compress, low_mask, Bits, Graph};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Triple {
    n: usize,
    g1: Graph,
    g2: Graph,
    /// `yellow1[u]` is the mask of V2 vertices joined to `u`.
    yellow1: Vec<u64>,
    /// `yellow2[w]` is the mask of V1 vertices joined to `w`.
    yellow2: Vec<u64>,
}

/// Per-vertex degrees and the derived edge counts and maxima.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeSummary {
    pub d1: Vec<usize>,
    pub d2: Vec<usize>,
    /// Yellow degrees of the V1 vertices.
    pub d3_v1: Vec<usize>,
    /// Yellow degrees of the V2 vertices.
    pub d3_v2: Vec<usize>,
    pub e1: usize,
    pub e2: usize,
    pub e3: usize,
    pub delta1: usize,
    pub delta2: usize,
    /// Maximum yellow degree over `V1 ∪ V2`.
    pub delta3: usize,
}

impl DegreeSummary {
    pub fn edge_sum(&self) -> usize {
        self.e1 + self.e2 + self.e3
    }
}

/// Edge counts and maximum degrees without the per-vertex vectors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Counts {
    pub e1: usize,
    pub e2: usize,
    pub e3: usize,
    pub delta1: usize,
    pub delta2: usize,
    pub delta3: usize,
}

impl Counts {
    #[inline]
    pub fn edge_sum(&self) -> usize {
        self.e1 + self.e2 + self.e3
    }
}

/// A bijection `f: V1 -> V2`, stored as `perm[u] = f(u)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PackingMap {
    perm: Vec<usize>,
}

impl PackingMap {
    pub fn new(perm: Vec<usize>) -> Result<Self> {
        if !is_bijection(&perm) {
            return Err(Error::NotABijection);
        }
        Ok(PackingMap { perm })
    }

    pub fn identity(n: usize) -> Self {
        PackingMap {
            perm: (0..n).collect(),
        }
    }

    pub(crate) fn from_vec_unchecked(perm: Vec<usize>) -> Self {
        debug_assert!(is_bijection(&perm));
        PackingMap { perm }
    }

    pub fn len(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }

    #[inline]
    pub fn image(&self, u: usize) -> usize {
        self.perm[u]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.perm
    }

    pub fn inverse(&self) -> PackingMap {
        let mut inv = vec![0; self.perm.len()];
        for (u, &w) in self.perm.iter().enumerate() {
            inv[w] = u;
        }
        PackingMap { perm: inv }
    }

    /// Number of positions where the two maps differ.
    pub fn distance(&self, other: &PackingMap) -> usize {
        self.perm.iter().zip(&other.perm).filter(|(a, b)| a != b).count()
    }
}

fn is_bijection(perm: &[usize]) -> bool {
    let n = perm.len();
    let mut seen = vec![false; n];
    for &w in perm {
        if w >= n || seen[w] {
            return false;
        }
        seen[w] = true;
    }
    true
}

/// A violation of the packing condition under a specific map.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Conflict {
    /// `uv ∈ E1` with `f(u)f(v) ∈ E2`, reported with `u < v`.
    White { u: usize, v: usize },
    /// `v f(v) ∈ E3`.
    Yellow { v: usize },
}

/// Maps residual vertex indices back to the triple they were cut from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relabel {
    /// `kept1[i]` is the original V1 index of residual V1 vertex `i`.
    pub kept1: Vec<usize>,
    pub kept2: Vec<usize>,
    /// The assignments fixed when the residual was formed.
    pub fixed: Vec<(usize, usize)>,
}

impl Relabel {
    /// Extends a map of the residual to the original vertex sets.
    pub fn lift(&self, residual: &PackingMap) -> PackingMap {
        let n = self.kept1.len() + self.fixed.len();
        let mut perm = vec![usize::MAX; n];
        for (i, &u) in self.kept1.iter().enumerate() {
            perm[u] = self.kept2[residual.image(i)];
        }
        for &(v, w) in &self.fixed {
            perm[v] = w;
        }
        PackingMap::from_vec_unchecked(perm)
    }
}

impl Triple {
    /// The triple on `n + n` vertices with no edges.
    pub fn empty(n: usize) -> Result<Self> {
        Ok(Triple {
            n,
            g1: Graph::empty(n)?,
            g2: Graph::empty(n)?,
            yellow1: vec![0; n],
            yellow2: vec![0; n],
        })
    }

    pub fn new(g1: Graph, g2: Graph, yellow: &[(usize, usize)]) -> Result<Self> {
        let n = g1.order();
        if g2.order() != n {
            return Err(Error::SizeMismatch {
                expected: n,
                found: g2.order(),
            });
        }
        let mut t = Triple {
            n,
            g1,
            g2,
            yellow1: vec![0; n],
            yellow2: vec![0; n],
        };
        for &(u, w) in yellow {
            t.try_add_yellow(u, w)?;
        }
        Ok(t)
    }

    /// Builds a normalized triple from raw edge lists.
    pub fn build(
        n: usize,
        white1: &[(usize, usize)],
        white2: &[(usize, usize)],
        yellow: &[(usize, usize)],
    ) -> Result<Self> {
        Triple::new(Graph::from_edges(n, white1)?, Graph::from_edges(n, white2)?, yellow)
    }

    fn try_add_yellow(&mut self, u: usize, w: usize) -> Result<()> {
        for x in [u, w] {
            if x >= self.n {
                return Err(Error::VertexOutOfRange { vertex: x, n: self.n });
            }
        }
        self.yellow1[u] |= bit(w);
        self.yellow2[w] |= bit(u);
        Ok(())
    }

    #[inline]
    pub(crate) fn toggle_yellow(&mut self, u: usize, w: usize) {
        self.yellow1[u] ^= bit(w);
        self.yellow2[w] ^= bit(u);
    }

    #[inline]
    pub(crate) fn g1_mut(&mut self) -> &mut Graph {
        &mut self.g1
    }

    #[inline]
    pub(crate) fn g2_mut(&mut self) -> &mut Graph {
        &mut self.g2
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn g1(&self) -> &Graph {
        &self.g1
    }

    #[inline]
    pub fn g2(&self) -> &Graph {
        &self.g2
    }

    /// Mask of V2 vertices yellow-adjacent to `u ∈ V1`.
    #[inline]
    pub fn yellow_of_v1(&self, u: usize) -> u64 {
        self.yellow1[u]
    }

    /// Mask of V1 vertices yellow-adjacent to `w ∈ V2`.
    #[inline]
    pub fn yellow_of_v2(&self, w: usize) -> u64 {
        self.yellow2[w]
    }

    #[inline]
    pub fn has_yellow(&self, u: usize, w: usize) -> bool {
        self.yellow1[u] & bit(w) != 0
    }

    /// Yellow pairs in lexicographic order.
    pub fn yellow_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| Bits(self.yellow1[u]).map(move |w| (u, w)))
    }

    pub fn counts(&self) -> Counts {
        let mut c = Counts {
            e1: 0,
            e2: 0,
            e3: 0,
            delta1: 0,
            delta2: 0,
            delta3: 0,
        };
        for v in 0..self.n {
            let d1 = self.g1.neighbors(v).count_ones() as usize;
            let d2 = self.g2.neighbors(v).count_ones() as usize;
            let y1 = self.yellow1[v].count_ones() as usize;
            let y2 = self.yellow2[v].count_ones() as usize;
            c.e1 += d1;
            c.e2 += d2;
            c.e3 += y1;
            c.delta1 = c.delta1.max(d1);
            c.delta2 = c.delta2.max(d2);
            c.delta3 = c.delta3.max(y1).max(y2);
        }
        c.e1 /= 2;
        c.e2 /= 2;
        c
    }

    pub fn degrees(&self) -> DegreeSummary {
        let d1 = self.g1.degrees();
        let d2 = self.g2.degrees();
        let d3_v1: Vec<usize> = self.yellow1.iter().map(|m| m.count_ones() as usize).collect();
        let d3_v2: Vec<usize> = self.yellow2.iter().map(|m| m.count_ones() as usize).collect();
        let c = self.counts();
        DegreeSummary {
            d1,
            d2,
            d3_v1,
            d3_v2,
            e1: c.e1,
            e2: c.e2,
            e3: c.e3,
            delta1: c.delta1,
            delta2: c.delta2,
            delta3: c.delta3,
        }
    }

    /// Total degree `d1(u) + d3(u)` of `u ∈ V1`.
    #[inline]
    pub fn degree_v1(&self, u: usize) -> usize {
        (self.g1.neighbors(u).count_ones() + self.yellow1[u].count_ones()) as usize
    }

    /// Total degree `d2(w) + d3(w)` of `w ∈ V2`.
    #[inline]
    pub fn degree_v2(&self, w: usize) -> usize {
        (self.g2.neighbors(w).count_ones() + self.yellow2[w].count_ones()) as usize
    }

    /// Checks the list-packing condition for `f`.
    pub fn is_packing(&self, f: &PackingMap) -> Result<bool> {
        if f.len() != self.n {
            return Err(Error::SizeMismatch {
                expected: self.n,
                found: f.len(),
            });
        }
        Ok(is_bijection(f.as_slice()) && self.packs_with(f.as_slice()))
    }

    /// Packing check without the bijection test; `perm` must be a permutation.
    #[inline]
    pub(crate) fn packs_with(&self, perm: &[usize]) -> bool {
        for u in 0..self.n {
            let fu = perm[u];
            if self.yellow1[u] & bit(fu) != 0 {
                return false;
            }
            let blocked = self.g2.neighbors(fu);
            if blocked == 0 {
                continue;
            }
            for v in Bits(self.g1.neighbors(u) & !low_mask(u + 1)) {
                if blocked & bit(perm[v]) != 0 {
                    return false;
                }
            }
        }
        true
    }

    /// Every conflict of `f`, yellow ones first, each group in ascending order.
    pub fn conflicts(&self, f: &PackingMap) -> Result<Vec<Conflict>> {
        if f.len() != self.n {
            return Err(Error::SizeMismatch {
                expected: self.n,
                found: f.len(),
            });
        }
        let mut out = Vec::new();
        for u in 0..self.n {
            if self.has_yellow(u, f.image(u)) {
                out.push(Conflict::Yellow { v: u });
            }
        }
        for (u, v) in self.g1.edges() {
            if self.g2.has_edge(f.image(u), f.image(v)) {
                out.push(Conflict::White { u, v });
            }
        }
        Ok(out)
    }

    /// Removes `v` from V1 and `w` from V2.
    pub fn delete_pair(&self, v: usize, w: usize) -> Result<(Triple, Relabel)> {
        self.reduce(&[(v, w)], &[])
    }

    /// Removes every pair of `fixed` and then adds the yellow pairs in
    /// `extra_yellow` (given in original indices; endpoints must survive).
    pub fn reduce(
        &self,
        fixed: &[(usize, usize)],
        extra_yellow: &[(usize, usize)],
    ) -> Result<(Triple, Relabel)> {
        let mut drop1 = 0u64;
        let mut drop2 = 0u64;
        for &(v, w) in fixed {
            for x in [v, w] {
                if x >= self.n {
                    return Err(Error::VertexOutOfRange { vertex: x, n: self.n });
                }
            }
            if drop1 & bit(v) != 0 || drop2 & bit(w) != 0 {
                return Err(Error::InvalidParams(format!("vertex repeated in fixed pairs at ({v}, {w})")));
            }
            drop1 |= bit(v);
            drop2 |= bit(w);
        }
        let keep1 = low_mask(self.n) & !drop1;
        let keep2 = low_mask(self.n) & !drop2;
        let m = self.n - fixed.len();
        if m == 0 {
            return Err(Error::Precondition("cannot delete every vertex".into()));
        }
        let mut t = Triple {
            n: m,
            g1: self.g1.induced(keep1),
            g2: self.g2.induced(keep2),
            yellow1: Bits(keep1).map(|u| compress(self.yellow1[u], keep2)).collect(),
            yellow2: Bits(keep2).map(|w| compress(self.yellow2[w], keep1)).collect(),
        };
        let kept1: Vec<usize> = Bits(keep1).collect();
        let kept2: Vec<usize> = Bits(keep2).collect();
        for &(u, w) in extra_yellow {
            if keep1 & bit(u) == 0 || keep2 & bit(w) == 0 {
                return Err(Error::InvalidParams(format!("added yellow pair ({u}, {w}) touches a deleted vertex")));
            }
            let iu = (keep1 & low_mask(u)).count_ones() as usize;
            let iw = (keep2 & low_mask(w)).count_ones() as usize;
            t.yellow1[iu] |= bit(iw);
            t.yellow2[iw] |= bit(iu);
        }
        Ok((
            t,
            Relabel {
                kept1,
                kept2,
                fixed: fixed.to_vec(),
            },
        ))
    }

    pub fn add_yellow(&self, pairs: &[(usize, usize)]) -> Result<Triple> {
        let mut t = self.clone();
        for &(u, w) in pairs {
            t.try_add_yellow(u, w)?;
        }
        Ok(t)
    }

    /// Swaps the roles of the two sides.
    pub fn transpose(&self) -> Triple {
        Triple {
            n: self.n,
            g1: self.g2.clone(),
            g2: self.g1.clone(),
            yellow1: self.yellow2.clone(),
            yellow2: self.yellow1.clone(),
        }
    }

    /// The same white graphs with no yellow edges.
    pub fn white_only(&self) -> Triple {
        Triple {
            n: self.n,
            g1: self.g1.clone(),
            g2: self.g2.clone(),
            yellow1: vec![0; self.n],
            yellow2: vec![0; self.n],
        }
    }

    /// Relabels V1 by `p1` and V2 by `p2` (vertex `u` becomes `p[u]`).
    pub fn relabel(&self, p1: &PackingMap, p2: &PackingMap) -> Result<Triple> {
        if p1.len() != self.n || p2.len() != self.n {
            return Err(Error::SizeMismatch {
                expected: self.n,
                found: p1.len().min(p2.len()),
            });
        }
        let w1: Vec<_> = self.g1.edges().map(|(u, v)| (p1.image(u), p1.image(v))).collect();
        let w2: Vec<_> = self.g2.edges().map(|(u, v)| (p2.image(u), p2.image(v))).collect();
        let y: Vec<_> = self.yellow_pairs().map(|(u, w)| (p1.image(u), p2.image(w))).collect();
        Triple::build(self.n, &w1, &w2, &y)
    }

    #[cfg(test)]
    pub(crate) fn is_well_formed(&self) -> bool {
        self.g1.order() == self.n
            && self.g2.order() == self.n
            && self.g1.is_well_formed()
            && self.g2.is_well_formed()
            && (0..self.n).all(|u| {
                self.yellow1[u] & !low_mask(self.n) == 0
                    && Bits(self.yellow1[u]).all(|w| self.yellow2[w] & bit(u) != 0)
            })
            && self.yellow1.iter().map(|m| m.count_ones()).sum::<u32>()
                == self.yellow2.iter().map(|m| m.count_ones()).sum::<u32>()
    }
}

impl fmt::Debug for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Triple")
            .field("n", &self.n)
            .field("g1", &self.g1.edges().collect::<Vec<_>>())
            .field("g2", &self.g2.edges().collect::<Vec<_>>())
            .field("g3", &self.yellow_pairs().collect::<Vec<_>>())
            .finish()
    }
}
