//! Recursive construction for triples with `Δ3 ≤ n-1` and
//! `e1 + e2 + e3 ≤ ⌊3n/2⌋ - 2`.
//!
//! Each step fixes one or two assignments, possibly adds yellow pairs that
//! forbid the placements the fixed ones would clash with, and recurses on
//! the residual triple. A candidate step is used only if its residual is
//! still inside the hypothesis, so the induction stays honest; the counters
//! in [`Lemma7Trace`] record which branches ran.

use crate::conditions::lemma7_holds;
use crate::error::{Error, Result};
use crate::graph::{bit, Bits};
use crate::triple::{PackingMap, Triple};

use super::{backtrack_pack, brute_force_pack, certify, hall_matching, Move};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Lemma7Trace {
    /// No edges at all.
    pub identity: usize,
    /// No yellow edges: solved as a classical packing by backtracking.
    pub classical: usize,
    /// One side without white edges: solved as a matching.
    pub hall: usize,
    /// `n ≤ 3` with edges of every kind.
    pub base: usize,
    /// A vertex of yellow degree `n-1` was placed first.
    pub full_yellow: usize,
    /// A vertex with no edges at all.
    pub case1: usize,
    /// A vertex with yellow but no white edges.
    pub case2: usize,
    /// A white leaf sent onto a vertex with a yellow edge.
    pub case3: usize,
    /// Candidate steps rejected because the residual left the hypothesis.
    pub skipped: usize,
    /// No step applied and plain backtracking finished the job.
    pub fallback: usize,
}

#[derive(Clone, Copy)]
enum Rule {
    FullYellow,
    Case1,
    Case2,
    Case3,
}

pub fn constructive_lemma7(t: &Triple) -> Result<PackingMap> {
    constructive_lemma7_traced(t).map(|(f, _)| f)
}

pub fn constructive_lemma7_traced(t: &Triple) -> Result<(PackingMap, Lemma7Trace)> {
    if !lemma7_holds(t.n(), &t.counts()) {
        return Err(Error::Precondition("edge-sum bound or yellow degree bound fails".into()));
    }
    let mut trace = Lemma7Trace::default();
    let f = solve(t, &mut trace)?;
    Ok((f, trace))
}

fn in_scope(t: &Triple) -> bool {
    let c = t.counts();
    c.edge_sum() == 0 || lemma7_holds(t.n(), &c)
}

fn must(f: Option<PackingMap>, what: &str) -> Result<PackingMap> {
    f.ok_or_else(|| Error::Internal(format!("{what} found no packing inside the edge-sum hypothesis")))
}

fn solve(t: &Triple, trace: &mut Lemma7Trace) -> Result<PackingMap> {
    let c = t.counts();
    if c.edge_sum() == 0 {
        trace.identity += 1;
        return Ok(PackingMap::identity(t.n()));
    }
    if c.e3 == 0 {
        trace.classical += 1;
        return must(backtrack_pack(t), "classical packing");
    }
    if c.e1 == 0 || c.e2 == 0 {
        trace.hall += 1;
        return must(hall_matching(t)?, "matching");
    }
    if t.n() <= 3 {
        trace.base += 1;
        return must(brute_force_pack(t)?, "base case");
    }
    for (rule, mv) in candidates(t, c.e1 <= c.e2) {
        let (residual, relabel) = t.reduce(&mv.fixed, &mv.extra)?;
        if !in_scope(&residual) {
            trace.skipped += 1;
            continue;
        }
        match rule {
            Rule::FullYellow => trace.full_yellow += 1,
            Rule::Case1 => trace.case1 += 1,
            Rule::Case2 => trace.case2 += 1,
            Rule::Case3 => trace.case3 += 1,
        }
        let g = solve(&residual, trace)?;
        return certify(t, relabel.lift(&g), "edge-sum reduction");
    }
    trace.fallback += 1;
    must(backtrack_pack(t), "fallback search")
}

/// All candidate steps in the order they are tried, in `t`'s coordinates.
fn candidates(t: &Triple, lighter_first: bool) -> Vec<(Rule, Move)> {
    let flipped = t.transpose();
    let sides = [(t, false), (&flipped, true)];
    let mut out = Vec::new();
    for (s, f) in sides {
        out.extend(full_yellow(s).into_iter().map(|m| (Rule::FullYellow, m.oriented(f))));
    }
    for (s, f) in sides {
        out.extend(case1(s).into_iter().map(|m| (Rule::Case1, m.oriented(f))));
    }
    for (s, f) in sides {
        out.extend(case2(s).into_iter().map(|m| (Rule::Case2, m.oriented(f))));
    }
    // White leaves are taken from the side with fewer white edges first.
    let order = if lighter_first { sides } else { [sides[1], sides[0]] };
    for (s, f) in order {
        out.extend(case3(s).into_iter().map(|m| (Rule::Case3, m.oriented(f))));
    }
    out
}

/// `v ∈ V1` with `d3(v) = n-1`: find `u ∈ V2` whose only possible neighbor
/// is `v`. Send `v` to `u` when they are not yellow-adjacent, otherwise send
/// some non-isolated `w` to `u`.
fn full_yellow(s: &Triple) -> Vec<Move> {
    let n = s.n();
    let mut out = Vec::new();
    for v in (0..n).filter(|&v| s.yellow_of_v1(v).count_ones() as usize == n - 1) {
        let lonely = (0..n).filter(|&u| s.g2().neighbors(u) == 0 && s.yellow_of_v2(u) & !bit(v) == 0);
        for u in lonely {
            if !s.has_yellow(v, u) {
                out.push(Move::fix(vec![(v, u)]));
            } else {
                for w in (0..n).filter(|&w| w != v && s.degree_v1(w) >= 1) {
                    out.push(Move::fix(vec![(w, u)]));
                }
            }
        }
    }
    out
}

/// `x ∈ V1` with no edges. Prefer an image of degree at least two; failing
/// that, send `x` to a leaf `y` of an edge `yz` and some `w` of degree at
/// least two onto `z`.
fn case1(s: &Triple) -> Vec<Move> {
    let n = s.n();
    let mut out = Vec::new();
    for x in (0..n).filter(|&x| s.degree_v1(x) == 0) {
        for y in (0..n).filter(|&y| s.degree_v2(y) >= 2) {
            out.push(Move::fix(vec![(x, y)]));
        }
        for y in (0..n).filter(|&y| s.degree_v2(y) == 1 && s.g2().degree(y) == 1) {
            let z = s.g2().neighbors(y).trailing_zeros() as usize;
            if s.degree_v2(z) != 1 {
                continue;
            }
            for w in (0..n).filter(|&w| w != x && s.degree_v1(w) >= 2 && !s.has_yellow(w, z)) {
                out.push(Move::fix(vec![(x, y), (w, z)]));
            }
        }
    }
    out
}

/// `x ∈ V1` with yellow but no white edges: any allowed image when
/// `d3(x) ≥ 2`, otherwise a non-isolated vertex other than its yellow
/// neighbor.
fn case2(s: &Triple) -> Vec<Move> {
    let n = s.n();
    let mut out = Vec::new();
    for x in (0..n).filter(|&x| s.g1().degree(x) == 0 && s.yellow_of_v1(x) != 0) {
        let forbidden = s.yellow_of_v1(x);
        let need_degree = usize::from(forbidden.count_ones() == 1);
        for z in (0..n).filter(|&z| forbidden & bit(z) == 0 && s.degree_v2(z) >= need_degree) {
            out.push(Move::fix(vec![(x, z)]));
        }
    }
    out
}

/// `x ∈ V1` whose only edge is white, sent to some `y` with a yellow edge;
/// the white neighbor of `x` may then not land on a white neighbor of `y`.
fn case3(s: &Triple) -> Vec<Move> {
    let n = s.n();
    let mut out = Vec::new();
    for x in (0..n).filter(|&x| s.degree_v1(x) == 1 && s.g1().degree(x) == 1) {
        let xp = s.g1().neighbors(x).trailing_zeros() as usize;
        for y in (0..n).filter(|&y| s.yellow_of_v2(y) != 0) {
            let extra = Bits(s.g2().neighbors(y)).map(|q| (xp, q)).collect();
            out.push(Move {
                fixed: vec![(x, y)],
                extra,
            });
        }
    }
    out
}
