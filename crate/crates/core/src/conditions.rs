//! Hypothesis checkers: for a triple, which packing theorem applies and what
//! it predicts.
//!
//! All `n/2` comparisons are done as `2·x` against `n` in integers.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::generators::be_bad_pair;
use crate::graph::Graph;
use crate::structure::{are_isomorphic, has_clique, is_complete_bipartite_balanced, is_perfect_matching};
use crate::triple::{Counts, Triple};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    /// `Δ1Δ2 + Δ3 ≤ n/2`: packs unless a perfect-matching exception.
    SsProduct,
    /// `Δ3 ≤ n-1`, `e1+e2+e3 ≤ ⌊3n/2⌋ - 2`: always packs.
    Lemma7,
    /// `e1+e2+e3 ≤ n`: packs, or a full yellow vertex, or `K2` vs `K2`.
    Cor8,
    /// `Δ1,Δ2 ≤ n-2`, `Δ3 ≤ n-1`, `e1+e2+e3 ≤ 2n-3`: packs unless a bad pair.
    Be,
}

impl TheoremId {
    /// Stable report order.
    pub const ALL: [TheoremId; 4] = [TheoremId::SsProduct, TheoremId::Lemma7, TheoremId::Cor8, TheoremId::Be];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::SsProduct => "ss_product",
            TheoremId::Lemma7 => "lemma7",
            TheoremId::Cor8 => "cor8",
            TheoremId::Be => "be",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| Error::InvalidParams(format!("unknown theorem `{s}` (expected ss_product, lemma7, cor8 or be)")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Prediction {
    MustPack,
    ExceptionNoPack,
    NoPrediction,
}

impl Prediction {
    pub fn as_str(self) -> &'static str {
        match self {
            Prediction::MustPack => "must_pack",
            Prediction::ExceptionNoPack => "exception_no_pack",
            Prediction::NoPrediction => "no_prediction",
        }
    }
}

/// The exceptional structure a checker recognized.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Exception {
    /// Perfect matching against `K_{n/2,n/2}` with `n/2` odd.
    KkBipartite,
    /// Perfect matching against a graph containing `K_{n/2+1}`.
    KkClique,
    /// The white pair is bad pair `i` and there are no yellow edges.
    BadPair(u8),
    /// Some vertex is yellow-adjacent to the whole other side.
    FullYellowVertex,
    /// `n = 2` and both white graphs are `K2`.
    K2K2,
}

impl fmt::Display for Exception {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Exception::KkBipartite => f.write_str("kk_bipartite"),
            Exception::KkClique => f.write_str("kk_clique"),
            Exception::BadPair(i) => write!(f, "bad_pair_{i}"),
            Exception::FullYellowVertex => f.write_str("full_yellow_vertex"),
            Exception::K2K2 => f.write_str("k2_k2"),
        }
    }
}

/// The three outcomes of the `e1+e2+e3 ≤ n` trichotomy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Cor8Outcome {
    Packs,
    FullYellowVertex,
    K2K2,
}

impl Cor8Outcome {
    pub fn as_str(self) -> &'static str {
        match self {
            Cor8Outcome::Packs => "packs",
            Cor8Outcome::FullYellowVertex => "full_yellow_vertex",
            Cor8Outcome::K2K2 => "k2_k2",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypothesisReport {
    pub theorem: TheoremId,
    pub hypothesis_holds: bool,
    /// Only for [`TheoremId::SsProduct`]: whether `Δ1Δ2 + Δ3 < n/2`.
    pub strict: Option<bool>,
    pub exception: Option<Exception>,
    pub predicted: Prediction,
    /// Only for [`TheoremId::Cor8`] when the hypothesis holds.
    pub cor8: Option<Cor8Outcome>,
}

impl HypothesisReport {
    fn new(theorem: TheoremId, hypothesis_holds: bool, exception: Option<Exception>) -> Self {
        let predicted = match (exception, hypothesis_holds) {
            (Some(_), _) => Prediction::ExceptionNoPack,
            (None, true) => Prediction::MustPack,
            (None, false) => Prediction::NoPrediction,
        };
        HypothesisReport {
            theorem,
            hypothesis_holds,
            strict: None,
            exception,
            predicted,
            cor8: None,
        }
    }
}

impl fmt::Display for HypothesisReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} hypothesis={}", self.theorem, self.hypothesis_holds)?;
        if let Some(s) = self.strict {
            write!(f, " strict={s}")?;
        }
        match self.exception {
            Some(e) => write!(f, " exception={e}")?,
            None => f.write_str(" exception=none")?,
        }
        if let Some(c) = self.cor8 {
            write!(f, " case={}", c.as_str())?;
        }
        write!(f, " predicted={}", self.predicted.as_str())
    }
}

fn kk_partner(matching: &Graph, other: &Graph) -> Option<Exception> {
    let n = matching.order();
    if !n.is_multiple_of(2) || !is_perfect_matching(matching) {
        return None;
    }
    if (n / 2) % 2 == 1 && is_complete_bipartite_balanced(other) {
        return Some(Exception::KkBipartite);
    }
    if has_clique(other, n / 2 + 1) {
        return Some(Exception::KkClique);
    }
    None
}

/// Product condition `Δ1Δ2 + Δ3 ≤ n/2`, with the perfect-matching exceptions
/// when there are no yellow edges.
pub fn check_ss_product(t: &Triple) -> HypothesisReport {
    let c = t.counts();
    check_ss_product_with(t, &c)
}

pub(crate) fn check_ss_product_with(t: &Triple, c: &Counts) -> HypothesisReport {
    let twice = 2 * (c.delta1 * c.delta2 + c.delta3);
    let n = t.n();
    let exception = if c.delta3 == 0 {
        kk_partner(t.g1(), t.g2()).or_else(|| kk_partner(t.g2(), t.g1()))
    } else {
        None
    };
    let mut r = HypothesisReport::new(TheoremId::SsProduct, twice <= n, exception);
    r.strict = Some(twice < n);
    r
}

/// `⌊3n/2⌋ - 2`, negative for `n = 1`.
pub fn lemma7_bound(n: usize) -> i64 {
    (3 * n / 2) as i64 - 2
}

pub(crate) fn lemma7_holds(n: usize, c: &Counts) -> bool {
    c.delta3 < n && (c.edge_sum() as i64) <= lemma7_bound(n)
}

/// `d3(v) ≤ n-1` everywhere and `e1+e2+e3 ≤ ⌊3n/2⌋ - 2`. No exceptions.
pub fn check_edge_sum_lemma7(t: &Triple) -> HypothesisReport {
    HypothesisReport::new(TheoremId::Lemma7, lemma7_holds(t.n(), &t.counts()), None)
}

/// The `e1+e2+e3 ≤ n` trichotomy. Requires `n ≥ 2`.
pub fn check_cor8(t: &Triple) -> Result<HypothesisReport> {
    let c = t.counts();
    check_cor8_with(t, &c)
}

pub(crate) fn check_cor8_with(t: &Triple, c: &Counts) -> Result<HypothesisReport> {
    let n = t.n();
    if n < 2 {
        return Err(Error::Precondition(format!("the edge-sum trichotomy needs n >= 2, got {n}")));
    }
    let holds = c.edge_sum() <= n;
    if !holds {
        return Ok(HypothesisReport::new(TheoremId::Cor8, false, None));
    }
    let (outcome, exception) = if c.delta3 == n {
        (Cor8Outcome::FullYellowVertex, Some(Exception::FullYellowVertex))
    } else if n == 2 && t.g1().edge_count() == 1 && t.g2().edge_count() == 1 {
        (Cor8Outcome::K2K2, Some(Exception::K2K2))
    } else {
        (Cor8Outcome::Packs, None)
    };
    let mut r = HypothesisReport::new(TheoremId::Cor8, true, exception);
    r.cor8 = Some(outcome);
    Ok(r)
}

/// Index of the bad pair `{g1, g2}` matches, as an unordered pair.
pub fn detect_be_bad_pair(g1: &Graph, g2: &Graph) -> Option<u8> {
    let n = g1.order();
    if g2.order() != n || !(4..=9).contains(&n) {
        return None;
    }
    let (e1, e2) = (g1.edge_count(), g2.edge_count());
    if e1 + e2 != 2 * n - 3 {
        return None;
    }
    (1..=7u8).find(|&i| {
        let (a, b) = be_bad_pair(i as usize).expect("index in range");
        if a.order() != n {
            return false;
        }
        let (ea, eb) = (a.edge_count(), b.edge_count());
        ((e1, e2) == (ea, eb) && are_isomorphic(g1, &a) && are_isomorphic(g2, &b))
            || ((e1, e2) == (eb, ea) && are_isomorphic(g1, &b) && are_isomorphic(g2, &a))
    })
}

pub(crate) fn be_holds(n: usize, c: &Counts) -> bool {
    let n = n as i64;
    (c.delta1 as i64) <= n - 2
        && (c.delta2 as i64) <= n - 2
        && (c.delta3 as i64) < n
        && (c.edge_sum() as i64) <= 2 * n - 3
}

/// Degree and edge-sum bounds of the list version of the maximum-degree
/// packing theorem, with the seven bad pairs as exceptions.
pub fn check_be(t: &Triple) -> HypothesisReport {
    let c = t.counts();
    check_be_with(t, &c, false)
}

pub(crate) fn check_be_with(t: &Triple, c: &Counts, drop_exception: bool) -> HypothesisReport {
    let holds = be_holds(t.n(), c);
    let exception = if drop_exception || c.e3 != 0 {
        None
    } else {
        detect_be_bad_pair(t.g1(), t.g2()).map(Exception::BadPair)
    };
    if exception.is_some() {
        // Every bad pair already uses 2n - 3 white edges.
        assert_eq!(c.e3, 0, "bad pair detected with yellow edges present");
    }
    HypothesisReport::new(TheoremId::Be, holds, exception)
}

/// Runs one checker by id. Cor8 fails for `n < 2`.
pub fn check(theorem: TheoremId, t: &Triple) -> Result<HypothesisReport> {
    Ok(match theorem {
        TheoremId::SsProduct => check_ss_product(t),
        TheoremId::Lemma7 => check_edge_sum_lemma7(t),
        TheoremId::Cor8 => check_cor8(t)?,
        TheoremId::Be => check_be(t),
    })
}
