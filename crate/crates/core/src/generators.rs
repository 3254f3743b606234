//! Constructors for the exceptional pairs, the sharpness families and the
//! encodings of other problems as list packing.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::triple::Triple;

/// Named triple families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyTag {
    /// One of the seven non-packing pairs with `e1 + e2 = 2n - 3`, `1..=7`.
    Be(u8),
    Fig2A,
    Fig2B,
    Fig2C,
    Fig2D,
    Fig2E,
    KkBipartite,
    KkClique,
}

impl FamilyTag {
    pub const ALL: [FamilyTag; 14] = [
        FamilyTag::Be(1),
        FamilyTag::Be(2),
        FamilyTag::Be(3),
        FamilyTag::Be(4),
        FamilyTag::Be(5),
        FamilyTag::Be(6),
        FamilyTag::Be(7),
        FamilyTag::Fig2A,
        FamilyTag::Fig2B,
        FamilyTag::Fig2C,
        FamilyTag::Fig2D,
        FamilyTag::Fig2E,
        FamilyTag::KkBipartite,
        FamilyTag::KkClique,
    ];
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyTag::Be(i) => write!(f, "BE{i}"),
            FamilyTag::Fig2A => f.write_str("FIG2A"),
            FamilyTag::Fig2B => f.write_str("FIG2B"),
            FamilyTag::Fig2C => f.write_str("FIG2C"),
            FamilyTag::Fig2D => f.write_str("FIG2D"),
            FamilyTag::Fig2E => f.write_str("FIG2E"),
            FamilyTag::KkBipartite => f.write_str("KK_BIPARTITE"),
            FamilyTag::KkClique => f.write_str("KK_CLIQUE"),
        }
    }
}

impl FromStr for FamilyTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let up = s.to_ascii_uppercase();
        if let Some(i) = up.strip_prefix("BE") {
            return match i.parse::<u8>() {
                Ok(i @ 1..=7) => Ok(FamilyTag::Be(i)),
                _ => Err(Error::InvalidParams(format!("unknown family `{s}`"))),
            };
        }
        Ok(match up.as_str() {
            "FIG2A" => FamilyTag::Fig2A,
            "FIG2B" => FamilyTag::Fig2B,
            "FIG2C" => FamilyTag::Fig2C,
            "FIG2D" => FamilyTag::Fig2D,
            "FIG2E" => FamilyTag::Fig2E,
            "KK_BIPARTITE" => FamilyTag::KkBipartite,
            "KK_CLIQUE" => FamilyTag::KkClique,
            _ => return Err(Error::InvalidParams(format!("unknown family `{s}`"))),
        })
    }
}

/// Extra integer parameters used by some families.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct FamilyParams {
    /// Star order in `G1` for FIG2D.
    pub m: Option<usize>,
    /// Star order in `G2` for FIG2D.
    pub mp: Option<usize>,
    /// Cycle length for FIG2E.
    pub k: Option<usize>,
}

fn union(parts: &[Graph]) -> Result<Graph> {
    Graph::disjoint_union(parts)
}

fn cliques(count: usize, size: usize) -> Result<Vec<Graph>> {
    (0..count).map(|_| Graph::complete(size)).collect()
}

/// The `index`-th (1-based) pair that meets the degree and edge-sum bounds
/// but does not pack. Components are laid out in the listed order, isolated
/// vertices first where the name starts with them.
pub fn be_bad_pair(index: usize) -> Result<(Graph, Graph)> {
    let ind = Graph::independent;
    let k = Graph::complete;
    let pair = match index {
        // {2K2, K1 ∪ K3}
        1 => (Graph::matching(2)?, union(&[ind(1)?, k(3)?])?),
        // {K̄2 ∪ K3, K2 ∪ K3}
        2 => (union(&[ind(2)?, k(3)?])?, union(&[k(2)?, k(3)?])?),
        // {3K2, K̄2 ∪ K4}
        3 => (Graph::matching(3)?, union(&[ind(2)?, k(4)?])?),
        // {K̄3 ∪ K3, 2K3}
        4 => (union(&[ind(3)?, k(3)?])?, union(&cliques(2, 3)?)?),
        // {2K2 ∪ K3, K̄3 ∪ K4}
        5 => (union(&[Graph::matching(2)?, k(3)?])?, union(&[ind(3)?, k(4)?])?),
        // {K̄4 ∪ K4, K2 ∪ 2K3}
        6 => (union(&[ind(4)?, k(4)?])?, union(&[k(2)?, k(3)?, k(3)?])?),
        // {K̄5 ∪ K4, 3K3}
        7 => (union(&[ind(5)?, k(4)?])?, union(&cliques(3, 3)?)?),
        _ => return Err(Error::InvalidParams(format!("bad pair index must be in 1..=7, got {index}"))),
    };
    Ok(pair)
}

/// The bad pair as a triple with no yellow edges.
pub fn be_bad_triple(index: usize) -> Result<Triple> {
    let (g1, g2) = be_bad_pair(index)?;
    Triple::new(g1, g2, &[])
}

/// Whether `(n, m, m')` gives a non-packing FIG2D instance.
///
/// The star center of `G1` can only land on the star center of `G2`, after
/// which the `m - 1` leaves need `m - 1` isolated targets among the `n - m'`
/// available; the instance fails to pack exactly when they do not fit.
pub fn fig2d_is_sharp(n: usize, m: usize, mp: usize) -> bool {
    (2..n).contains(&m) && (2..n).contains(&mp) && m + mp >= n + 2
}

/// Sharpness constructions. FIG2A needs only `n`; FIG2D reads `m` and `mp`;
/// FIG2E reads `k`.
pub fn sharpness_family(tag: FamilyTag, n: usize, params: FamilyParams) -> Result<Triple> {
    let need = |ok: bool, what: &str| {
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidParams(format!("{tag}: {what}")))
        }
    };
    match tag {
        FamilyTag::Fig2A => {
            need(n >= 1, "needs n >= 1")?;
            let yellow: Vec<_> = (0..n).map(|w| (0, w)).collect();
            Triple::build(n, &[], &[], &yellow)
        }
        FamilyTag::Fig2B => {
            need(n >= 2, "needs n >= 2")?;
            // x1 = 0 and x2 = 1 both miss the same vertex y = n - 1.
            let yellow: Vec<_> = (0..2).flat_map(|x| (0..n - 1).map(move |w| (x, w))).collect();
            Triple::build(n, &[], &[], &yellow)
        }
        FamilyTag::Fig2C => {
            need(n >= 4, "needs n >= 4")?;
            let yellow: Vec<_> = (0..2).flat_map(|x| (0..n - 2).map(move |w| (x, w))).collect();
            Triple::build(n, &[(0, 1)], &[(n - 2, n - 1)], &yellow)
        }
        FamilyTag::Fig2D => {
            let m = params.m.ok_or_else(|| Error::InvalidParams("FIG2D: missing m".into()))?;
            let mp = params.mp.ok_or_else(|| Error::InvalidParams("FIG2D: missing m'".into()))?;
            need(m >= 1 && mp >= 1 && m < n && mp < n, "needs 1 <= m, m' <= n - 1")?;
            // Stars centered at 0 with leaves 1..m; isolated vertices m..n.
            let w1: Vec<_> = (1..m).map(|v| (0, v)).collect();
            let w2: Vec<_> = (1..mp).map(|v| (0, v)).collect();
            let yellow: Vec<_> = (mp..n)
                .map(|w| (0, w))
                .chain((m..n).map(|u| (u, 0)))
                .collect();
            Triple::build(n, &w1, &w2, &yellow)
        }
        FamilyTag::Fig2E => {
            let k = params.k.ok_or_else(|| Error::InvalidParams("FIG2E: missing k".into()))?;
            need(k >= 3 && k < n, "needs 3 <= k <= n - 1")?;
            // K_{1,n-2} ∪ K1 against C_k ∪ K̄_{n-k}.
            let w1: Vec<_> = (1..n - 1).map(|v| (0, v)).collect();
            let w2: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
            let yellow: Vec<_> = (k..n).map(|w| (0, w)).collect();
            Triple::build(n, &w1, &w2, &yellow)
        }
        other => Err(Error::InvalidParams(format!("{other} is not a sharpness family"))),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KkKind {
    /// `K_{n/2,n/2}` with `n/2` odd.
    Bipartite,
    /// `K_{n/2+1} ∪ K̄_{n/2-1}`.
    Clique,
}

/// `((n/2) K2, partner, ∅)` for the two partner shapes that block packing.
pub fn kk_exception(kind: KkKind, n: usize) -> Result<Triple> {
    if n < 2 || !n.is_multiple_of(2) {
        return Err(Error::InvalidParams(format!("n must be even and positive, got {n}")));
    }
    let half = n / 2;
    let partner = match kind {
        KkKind::Bipartite => {
            if half.is_multiple_of(2) {
                return Err(Error::InvalidParams(format!("n/2 = {half} must be odd for the bipartite kind")));
            }
            Graph::complete_bipartite(half, half)?
        }
        KkKind::Clique => Graph::complete(half + 1)?.padded(n)?,
    };
    Triple::new(Graph::matching(half)?, partner, &[])
}

/// Any family by tag; `n` is ignored for the bad pairs.
pub fn generate(tag: FamilyTag, n: Option<usize>, params: FamilyParams) -> Result<Triple> {
    let need_n = || n.ok_or_else(|| Error::InvalidParams(format!("{tag}: missing n")));
    match tag {
        FamilyTag::Be(i) => be_bad_triple(i as usize),
        FamilyTag::KkBipartite => kk_exception(KkKind::Bipartite, need_n()?),
        FamilyTag::KkClique => kk_exception(KkKind::Clique, need_n()?),
        _ => sharpness_family(tag, need_n()?, params),
    }
}

/// Size of each color clique in [`from_list_coloring`].
pub fn list_coloring_block(order: usize) -> usize {
    order
}

/// Encodes list coloring of `g` with colors `0..k` as list packing.
///
/// `G2` is `k` disjoint cliques of size `|V(g)|`, clique `c` standing for
/// color `c` (vertices `c*s .. (c+1)*s`). `G1` is `g` padded with isolated
/// vertices. Each original vertex gets yellow edges to every clique of a
/// color in its forbidden list.
pub fn from_list_coloring(g: &Graph, k: usize, forbidden: &[Vec<usize>]) -> Result<Triple> {
    let order = g.order();
    if k == 0 {
        return Err(Error::InvalidParams("need at least one color".into()));
    }
    if forbidden.len() != order {
        return Err(Error::SizeMismatch {
            expected: order,
            found: forbidden.len(),
        });
    }
    let s = list_coloring_block(order);
    let n = s * k;
    if n > crate::MAX_VERTICES {
        return Err(Error::InvalidParams(format!("encoding needs {n} vertices, more than {}", crate::MAX_VERTICES)));
    }
    let g1 = g.padded(n)?;
    let g2 = union(&cliques(k, s)?)?;
    let mut yellow = Vec::new();
    for (v, list) in forbidden.iter().enumerate() {
        for &c in list {
            if c >= k {
                return Err(Error::InvalidParams(format!("color {c} out of range for k = {k}")));
            }
            yellow.extend((c * s..(c + 1) * s).map(|w| (v, w)));
        }
    }
    Triple::new(g1, g2, &yellow)
}

/// Reads the color of each original vertex off a packing of
/// [`from_list_coloring`]'s triple.
pub fn coloring_from_packing(order: usize, f: &crate::PackingMap) -> Vec<usize> {
    let s = list_coloring_block(order);
    (0..order).map(|v| f.image(v) / s).collect()
}

/// Bipartite packing: vertices with `in_x[v] = true` form `X`, the rest `Y`.
/// Yellow edges join `X1` to `Y2` and `Y1` to `X2`.
pub fn bipartite_packing_encoding(g1: &Graph, in_x1: &[bool], g2: &Graph, in_x2: &[bool]) -> Result<Triple> {
    let n = g1.order();
    if g2.order() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            found: g2.order(),
        });
    }
    for side in [in_x1, in_x2] {
        if side.len() != n {
            return Err(Error::SizeMismatch {
                expected: n,
                found: side.len(),
            });
        }
    }
    let mut yellow = Vec::new();
    for (u, &a) in in_x1.iter().enumerate() {
        for (w, &b) in in_x2.iter().enumerate() {
            if a != b {
                yellow.push((u, w));
            }
        }
    }
    Triple::new(g1.clone(), g2.clone(), &yellow)
}

/// `(g, g, {(v, v)})`: packings are fixed-point-free self-embeddings.
pub fn fixed_point_free_encoding(g: &Graph) -> Result<Triple> {
    let yellow: Vec<_> = (0..g.order()).map(|v| (v, v)).collect();
    Triple::new(g.clone(), g.clone(), &yellow)
}
