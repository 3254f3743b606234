//! Reductions for triples with `Δ1, Δ2 ≤ n-2`, `Δ3 ≤ n-1` and
//! `e1 + e2 + e3 ≤ 2n-3`.
//!
//! The steps are a sound but partial transcription of the counterexample
//! analysis: each fires only on a cheaply detectable structure, and
//! [`constructive_pack_be`] finishes with backtracking whenever no step fires
//! or a residual leaves the hypothesis.

use std::fmt;

use crate::conditions::{check_be, Prediction};
use crate::error::{Error, Result};
use crate::graph::{bit, low_mask, Bits};
use crate::triple::{PackingMap, Relabel, Triple};

use super::{backtrack_pack, certify, Move};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ReductionRule {
    /// A vertex yellow-adjacent to all but one vertex of the other side.
    YellowStar,
    /// A vertex of white degree `n-2` and an image with no white edges.
    WhiteStarCase1,
    /// A vertex of white degree `n-2`, its non-neighbor, and a leaf of a
    /// tree component unreachable from the other side.
    WhiteStarCase2,
    /// A vertex with no white neighbor.
    IsolatedVertex,
    /// A vertex whose only edge is white, sent onto an endpoint of a yellow
    /// edge.
    LowDegreeYellow,
}

impl ReductionRule {
    pub const ALL: [ReductionRule; 5] = [
        ReductionRule::YellowStar,
        ReductionRule::WhiteStarCase1,
        ReductionRule::WhiteStarCase2,
        ReductionRule::IsolatedVertex,
        ReductionRule::LowDegreeYellow,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ReductionRule::YellowStar => "yellow_star",
            ReductionRule::WhiteStarCase1 => "white_star_case1",
            ReductionRule::WhiteStarCase2 => "white_star_case2",
            ReductionRule::IsolatedVertex => "isolated_vertex",
            ReductionRule::LowDegreeYellow => "low_degree_yellow",
        }
    }
}

impl fmt::Display for ReductionRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One reduction, in the coordinates of the triple it was computed from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionStep {
    pub rule: ReductionRule,
    /// Assignments `(V1 vertex, V2 vertex)` fixed by the step.
    pub removed: Vec<(usize, usize)>,
    /// Yellow pairs added to the residual, in original indices.
    pub added_yellow: Vec<(usize, usize)>,
    pub residual: Triple,
    pub relabel: Relabel,
}

impl ReductionStep {
    /// Extends a packing of the residual by the fixed assignments.
    pub fn lift(&self, residual: &PackingMap) -> PackingMap {
        self.relabel.lift(residual)
    }
}

/// Finds the first applicable reduction, trying the rules in the order of
/// [`ReductionRule::ALL`] and, for each, `V1` before `V2`.
pub fn be_reduction_step(t: &Triple) -> Result<Option<ReductionStep>> {
    let report = check_be(t);
    if report.predicted != Prediction::MustPack {
        return Err(Error::Precondition(format!("maximum-degree hypothesis does not predict a packing: {report}")));
    }
    let flipped = t.transpose();
    let sides = [(t, false), (&flipped, true)];
    type Finder = fn(&Triple) -> Option<(ReductionRule, Move)>;
    let finders: [Finder; 4] = [yellow_star, white_star, white_isolated, low_degree_yellow];
    for find in finders {
        for (s, f) in sides {
            if let Some((rule, mv)) = find(s) {
                let mv = mv.oriented(f);
                let (residual, relabel) = t.reduce(&mv.fixed, &mv.extra)?;
                return Ok(Some(ReductionStep {
                    rule,
                    removed: mv.fixed,
                    added_yellow: mv.extra,
                    residual,
                    relabel,
                }));
            }
        }
    }
    Ok(None)
}

/// `v ∈ V1` yellow to all of `V2` but `w`. With `A` the white neighbors of
/// `v` and `B` those of `w`: if either is empty send `v` to `w`; otherwise
/// also send `A` onto vertices of `V2` that have no other edges, or such
/// vertices of `V1` onto `B`.
fn yellow_star(s: &Triple) -> Option<(ReductionRule, Move)> {
    let n = s.n();
    let all = low_mask(n);
    let v = (0..n).find(|&v| s.yellow_of_v1(v).count_ones() as usize == n - 1)?;
    let w = (all & !s.yellow_of_v1(v)).trailing_zeros() as usize;
    let a = s.g1().neighbors(v);
    let b = s.g2().neighbors(w);
    let mut fixed = vec![(v, w)];
    if a != 0 && b != 0 {
        let singles2: Vec<usize> = (0..n)
            .filter(|&u| u != w && s.g2().degree(u) == 0 && s.yellow_of_v2(u) & !bit(v) == 0)
            .collect();
        let singles1: Vec<usize> = (0..n)
            .filter(|&u| u != v && s.g1().degree(u) == 0 && s.yellow_of_v1(u) & !bit(w) == 0)
            .collect();
        if singles2.len() >= a.count_ones() as usize {
            fixed.extend(Bits(a).zip(singles2));
        } else if singles1.len() >= b.count_ones() as usize {
            fixed.extend(singles1.into_iter().zip(Bits(b)));
        } else {
            return None;
        }
    }
    Some((ReductionRule::YellowStar, Move::fix(fixed)))
}

/// `v ∈ V1` adjacent to all of `V1` but `v'`. Send `v` to a non-yellow
/// neighbor without white edges if there is one. Otherwise take the part `W`
/// of `V2` not connected to `V1`, a leaf `y` of its smallest tree component
/// and the neighbor `y'` of `y`; send `v` to `y`, `v'` to `y'`, and forbid the
/// white neighbors of `v'` from the other white neighbors of `y'`.
fn white_star(s: &Triple) -> Option<(ReductionRule, Move)> {
    let n = s.n();
    if n < 2 {
        return None;
    }
    let all = low_mask(n);
    let v = (0..n).find(|&v| s.g1().degree(v) == n - 2)?;
    let vp = (all & !bit(v) & !s.g1().neighbors(v)).trailing_zeros() as usize;
    if let Some(w) = (0..n).find(|&w| !s.has_yellow(v, w) && s.g2().degree(w) == 0) {
        return Some((ReductionRule::WhiteStarCase1, Move::fix(vec![(v, w)])));
    }
    let reached = reachable_from_v1(s);
    let mut best: Option<(u32, u64)> = None;
    let mut left = all & !reached;
    while left != 0 {
        let comp = component(s, left.trailing_zeros() as usize);
        left &= !comp;
        let size = comp.count_ones();
        let edges: u32 = Bits(comp).map(|u| s.g2().degree(u) as u32).sum::<u32>() / 2;
        if size >= 2 && edges == size - 1 && best.is_none_or(|(bs, _)| size < bs) {
            best = Some((size, comp));
        }
    }
    let (_, comp) = best?;
    let y = Bits(comp).find(|&u| s.g2().degree(u) == 1)?;
    let yp = s.g2().neighbors(y).trailing_zeros() as usize;
    let extra = Bits(s.g1().neighbors(vp))
        .flat_map(|p| Bits(s.g2().neighbors(yp) & !bit(y)).map(move |q| (p, q)))
        .collect();
    Some((
        ReductionRule::WhiteStarCase2,
        Move {
            fixed: vec![(v, y), (vp, yp)],
            extra,
        },
    ))
}

/// V2 vertices joined to some V1 vertex by a path of white and yellow edges.
fn reachable_from_v1(s: &Triple) -> u64 {
    let n = s.n();
    let mut seen1 = low_mask(n);
    let mut seen2: u64 = 0;
    let mut frontier1 = seen1;
    let mut frontier2: u64 = 0;
    while frontier1 != 0 || frontier2 != 0 {
        let mut next1 = 0;
        let mut next2 = 0;
        for u in Bits(frontier1) {
            next2 |= s.yellow_of_v1(u);
        }
        for w in Bits(frontier2) {
            next2 |= s.g2().neighbors(w);
            next1 |= s.yellow_of_v2(w);
        }
        frontier1 = next1 & !seen1;
        frontier2 = next2 & !seen2;
        seen1 |= frontier1;
        seen2 |= frontier2;
    }
    seen2
}

/// The white component of `start` in G2.
fn component(s: &Triple, start: usize) -> u64 {
    let mut comp = bit(start);
    let mut frontier = comp;
    while frontier != 0 {
        let mut next = 0;
        for u in Bits(frontier) {
            next |= s.g2().neighbors(u);
        }
        frontier = next & !comp;
        comp |= frontier;
    }
    comp
}

/// `v ∈ V1` with no white neighbor. Isolated: send it to a vertex of maximum
/// degree when that degree is at least 2. With yellow edges: among the
/// allowed images of maximum degree, take one of least yellow degree.
fn white_isolated(s: &Triple) -> Option<(ReductionRule, Move)> {
    let n = s.n();
    for v in (0..n).filter(|&v| s.g1().degree(v) == 0) {
        let isolated = s.yellow_of_v1(v) == 0;
        let best = (0..n)
            .filter(|&w| !s.has_yellow(v, w))
            .max_by_key(|&w| (s.degree_v2(w), std::cmp::Reverse(s.yellow_of_v2(w).count_ones()), std::cmp::Reverse(w)));
        let Some(w) = best else { continue };
        if isolated && s.degree_v2(w) < 2 {
            continue;
        }
        return Some((ReductionRule::IsolatedVertex, Move::fix(vec![(v, w)])));
    }
    None
}

/// With a yellow edge `xy` present, a vertex `v ∈ V1` whose only edge is the
/// white edge `vv'` is sent to `y`, and `v'` is forbidden from the white
/// neighbors of `y`.
fn low_degree_yellow(s: &Triple) -> Option<(ReductionRule, Move)> {
    let n = s.n();
    let (_, y) = s.yellow_pairs().next()?;
    let v = (0..n).find(|&v| s.degree_v1(v) == 1 && s.g1().degree(v) == 1)?;
    let vp = s.g1().neighbors(v).trailing_zeros() as usize;
    let extra = Bits(s.g2().neighbors(y)).map(|q| (vp, q)).collect();
    Some((
        ReductionRule::LowDegreeYellow,
        Move {
            fixed: vec![(v, y)],
            extra,
        },
    ))
}

/// How [`constructive_pack_be`] got its answer.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BeTrace {
    /// Reductions applied, indexed like [`ReductionRule::ALL`].
    pub steps: [usize; 5],
    /// Residuals outside the hypothesis, finished by backtracking.
    pub residual_searches: usize,
    /// Reductions whose residual had no packing, so the parent was searched.
    pub dead_ends: usize,
    /// Triples finished by backtracking because no reduction fired.
    pub searches: usize,
}

pub fn constructive_pack_be(t: &Triple) -> Result<PackingMap> {
    constructive_pack_be_traced(t).map(|(f, _)| f)
}

pub fn constructive_pack_be_traced(t: &Triple) -> Result<(PackingMap, BeTrace)> {
    let report = check_be(t);
    if report.predicted != Prediction::MustPack {
        return Err(Error::Precondition(format!("maximum-degree hypothesis does not predict a packing: {report}")));
    }
    let mut trace = BeTrace::default();
    let f = solve(t, &mut trace)?
        .ok_or_else(|| Error::Internal("no packing found inside the maximum-degree hypothesis".into()))?;
    Ok((f, trace))
}

fn solve(t: &Triple, trace: &mut BeTrace) -> Result<Option<PackingMap>> {
    if check_be(t).predicted == Prediction::MustPack {
        if let Some(step) = be_reduction_step(t)? {
            let i = ReductionRule::ALL.iter().position(|&r| r == step.rule).expect("listed rule");
            trace.steps[i] += 1;
            let inner = if check_be(&step.residual).predicted == Prediction::MustPack {
                solve(&step.residual, trace)?
            } else {
                trace.residual_searches += 1;
                backtrack_pack(&step.residual)
            };
            match inner {
                Some(g) => return certify(t, step.lift(&g), "maximum-degree reduction").map(Some),
                None => trace.dead_ends += 1,
            }
        }
    }
    trace.searches += 1;
    Ok(backtrack_pack(t))
}
