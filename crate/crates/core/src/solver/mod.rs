//! Packing solvers: the exhaustive oracle, a pruned backtracking search, and
//! constructive algorithms that follow the reductions of the existence
//! proofs. Every map a solver returns has been re-checked with
//! [`Triple::is_packing`].

mod backtrack;
mod be;
mod hall;
mod lemma7;
mod swap;

pub use backtrack::backtrack_pack;
pub use be::{be_reduction_step, constructive_pack_be, constructive_pack_be_traced, BeTrace, ReductionRule, ReductionStep};
pub use hall::hall_matching;
pub use lemma7::{constructive_lemma7, constructive_lemma7_traced, Lemma7Trace};
pub use swap::{constructive_ss_product, swap_repair};

pub use crate::triple::Conflict;

use std::fmt;
use std::str::FromStr;

use crate::conditions::{check_be, check_edge_sum_lemma7, check_ss_product, Prediction};
use crate::error::{Error, Result};
use crate::triple::{PackingMap, Triple};

/// Largest `n` accepted by [`brute_force_pack`].
pub const BRUTE_FORCE_MAX: usize = 10;

/// Advances `perm` to the next permutation in lexicographic order. Returns
/// `false` (leaving `perm` sorted ascending) after the last one.
pub fn next_permutation(perm: &mut [usize]) -> bool {
    let n = perm.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && perm[i - 1] >= perm[i] {
        i -= 1;
    }
    if i == 0 {
        perm.reverse();
        return false;
    }
    let mut j = n - 1;
    while perm[j] <= perm[i - 1] {
        j -= 1;
    }
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}

/// The first packing in lexicographic order over all `n!` bijections.
pub fn brute_force_pack(t: &Triple) -> Result<Option<PackingMap>> {
    let n = t.n();
    if n > BRUTE_FORCE_MAX {
        return Err(Error::Guard(format!("brute force is limited to n <= {BRUTE_FORCE_MAX}, got {n}")));
    }
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        if t.packs_with(&perm) {
            let f = PackingMap::from_vec_unchecked(perm);
            assert!(t.is_packing(&f)?, "brute force returned a non-packing");
            return Ok(Some(f));
        }
        if !next_permutation(&mut perm) {
            return Ok(None);
        }
    }
}

/// Validates a solver result; a failure here is a bug.
pub(crate) fn certify(t: &Triple, f: PackingMap, who: &str) -> Result<PackingMap> {
    if t.is_packing(&f)? {
        Ok(f)
    } else {
        Err(Error::Internal(format!("{who} produced a map that does not pack: {:?}", f.as_slice())))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Brute,
    Backtrack,
    Constructive,
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "brute" => Ok(Method::Brute),
            "backtrack" => Ok(Method::Backtrack),
            "constructive" => Ok(Method::Constructive),
            _ => Err(Error::InvalidParams(format!("unknown method `{s}`"))),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Brute => "brute",
            Method::Backtrack => "backtrack",
            Method::Constructive => "constructive",
        })
    }
}

/// Which algorithm [`solve_constructive`] picked.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConstructiveRoute {
    SsProduct,
    Lemma7,
    Be,
    Backtrack,
}

/// Dispatches to the constructive algorithm whose hypothesis holds, or plain
/// backtracking when none does.
pub fn solve_constructive(t: &Triple) -> Result<(ConstructiveRoute, Option<PackingMap>)> {
    if check_ss_product(t).predicted == Prediction::MustPack {
        return Ok((ConstructiveRoute::SsProduct, Some(constructive_ss_product(t)?)));
    }
    if check_edge_sum_lemma7(t).predicted == Prediction::MustPack {
        return Ok((ConstructiveRoute::Lemma7, Some(constructive_lemma7(t)?)));
    }
    if check_be(t).predicted == Prediction::MustPack {
        return Ok((ConstructiveRoute::Be, Some(constructive_pack_be(t)?)));
    }
    Ok((ConstructiveRoute::Backtrack, backtrack_pack(t)))
}

pub fn solve(t: &Triple, method: Method) -> Result<Option<PackingMap>> {
    match method {
        Method::Brute => brute_force_pack(t),
        Method::Backtrack => Ok(backtrack_pack(t)),
        Method::Constructive => Ok(solve_constructive(t)?.1),
    }
}

/// Assignments to fix and yellow pairs to add before recursing on the rest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Move {
    pub fixed: Vec<(usize, usize)>,
    pub extra: Vec<(usize, usize)>,
}

impl Move {
    pub fn fix(fixed: Vec<(usize, usize)>) -> Self {
        Move { fixed, extra: Vec::new() }
    }

    /// Maps a move found on the transposed triple back to the original.
    pub fn oriented(self, flipped: bool) -> Self {
        if !flipped {
            return self;
        }
        let swap = |v: Vec<(usize, usize)>| v.into_iter().map(|(a, b)| (b, a)).collect();
        Move {
            fixed: swap(self.fixed),
            extra: swap(self.extra),
        }
    }
}
