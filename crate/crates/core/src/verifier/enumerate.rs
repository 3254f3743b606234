//! Labeled triples as subsets of a fixed edge-slot list.
//!
//! Slots are the G1 edges `(u, v)`, `u < v`, in lexicographic order, then
//! the G2 edges likewise, then the yellow pairs `(u, w)` lexicographically.
//! Slot classes whose degree cap is 0 are left out. Subsets are ranked by
//! size first and lexicographically (as sorted index lists) within a size;
//! every subset of size at most `max_edge_sum` has a rank, including those a
//! degree cap rejects, so shard boundaries do not depend on the caps.

use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::triple::Triple;

use super::{EnumSpec, Mode};

/// Exhaustive rank spaces larger than this need the override variable.
pub const GUARD_LIMIT: u64 = 100_000_000;

/// Environment variable that lifts [`GUARD_LIMIT`].
pub const GUARD_OVERRIDE_VAR: &str = "PACKTRIPLE_GUARD_OVERRIDE";

/// Rejections allowed per sampled size before a new size is drawn.
const SAMPLE_RETRIES: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Slot {
    G1(usize, usize),
    G2(usize, usize),
    Yellow(usize, usize),
}

#[derive(Clone, Debug)]
pub(crate) struct Layout {
    pub n: usize,
    pub slots: Vec<Slot>,
    pub kmax: usize,
    caps: [usize; 3],
    /// `binom[s][k]` for `s ≤ slots.len()`, `k ≤ kmax`, saturating.
    binom: Vec<Vec<u64>>,
}

impl Layout {
    pub fn new(spec: &EnumSpec) -> Result<Self> {
        let n = spec.n;
        if n == 0 || n > crate::MAX_VERTICES {
            return Err(Error::BadOrder { n });
        }
        let caps = match spec.degree_caps {
            Some((a, b, c)) => [a, b, c],
            None => [usize::MAX; 3],
        };
        let mut slots = Vec::new();
        if caps[0] > 0 {
            slots.extend((0..n).flat_map(|u| (u + 1..n).map(move |v| Slot::G1(u, v))));
        }
        if caps[1] > 0 {
            slots.extend((0..n).flat_map(|u| (u + 1..n).map(move |v| Slot::G2(u, v))));
        }
        if caps[2] > 0 {
            slots.extend((0..n).flat_map(|u| (0..n).map(move |w| Slot::Yellow(u, w))));
        }
        let kmax = spec.max_edge_sum.min(slots.len());
        let s = slots.len();
        let mut binom = vec![vec![0u64; kmax + 1]; s + 1];
        for i in 0..=s {
            binom[i][0] = 1;
            for k in 1..=kmax.min(i) {
                binom[i][k] = binom[i - 1][k - 1].saturating_add(if k < i { binom[i - 1][k] } else { 0 });
            }
        }
        Ok(Layout {
            n,
            slots,
            kmax,
            caps,
            binom,
        })
    }

    #[inline]
    fn choose(&self, s: usize, k: usize) -> u64 {
        if k > s {
            0
        } else {
            self.binom[s][k]
        }
    }

    /// Number of ranks: subsets of size `0..=kmax`, saturating.
    pub fn rank_space(&self) -> u64 {
        (0..=self.kmax).fold(0u64, |acc, k| acc.saturating_add(self.choose(self.slots.len(), k)))
    }
}

/// Number of ranks an exhaustive run of `spec` walks (before degree caps).
pub fn rank_space(spec: &EnumSpec) -> Result<u64> {
    Ok(Layout::new(spec)?.rank_space())
}

pub(crate) fn check_guard(spec: &EnumSpec) -> Result<()> {
    if let Mode::Exhaustive = spec.mode {
        let total = rank_space(spec)?;
        let overridden = std::env::var(GUARD_OVERRIDE_VAR).is_ok_and(|v| v == "1");
        if total > GUARD_LIMIT && !overridden {
            return Err(Error::Guard(format!(
                "exhaustive run over {total} subsets exceeds {GUARD_LIMIT}; set {GUARD_OVERRIDE_VAR}=1 to force it"
            )));
        }
    }
    Ok(())
}

/// Degree bookkeeping for cap checks while slots are toggled in and out.
#[derive(Clone)]
struct Degrees {
    d1: Vec<usize>,
    d2: Vec<usize>,
    y1: Vec<usize>,
    y2: Vec<usize>,
}

impl Degrees {
    fn new(n: usize) -> Self {
        Degrees {
            d1: vec![0; n],
            d2: vec![0; n],
            y1: vec![0; n],
            y2: vec![0; n],
        }
    }

    fn fits(&self, slot: Slot, caps: &[usize; 3]) -> bool {
        match slot {
            Slot::G1(u, v) => self.d1[u] < caps[0] && self.d1[v] < caps[0],
            Slot::G2(u, v) => self.d2[u] < caps[1] && self.d2[v] < caps[1],
            Slot::Yellow(u, w) => self.y1[u] < caps[2] && self.y2[w] < caps[2],
        }
    }

    fn add(&mut self, slot: Slot, delta: isize) {
        let bump = |x: &mut usize| *x = x.wrapping_add_signed(delta);
        match slot {
            Slot::G1(u, v) => {
                bump(&mut self.d1[u]);
                bump(&mut self.d1[v]);
            }
            Slot::G2(u, v) => {
                bump(&mut self.d2[u]);
                bump(&mut self.d2[v]);
            }
            Slot::Yellow(u, w) => {
                bump(&mut self.y1[u]);
                bump(&mut self.y2[w]);
            }
        }
    }
}

fn toggle(t: &mut Triple, slot: Slot) {
    match slot {
        Slot::G1(u, v) => t.g1_mut().toggle_edge(u, v),
        Slot::G2(u, v) => t.g2_mut().toggle_edge(u, v),
        Slot::Yellow(u, w) => t.toggle_yellow(u, w),
    }
}

/// Depth-first walk over the ranked subsets in `[lo, hi)`, editing one
/// triple in place. Subtrees that lie outside the range or break a cap are
/// skipped whole, advancing the rank by their size.
pub struct ExhaustiveWalk {
    layout: Layout,
    lo: u64,
    hi: u64,
    k: usize,
    chosen: Vec<usize>,
    next: usize,
    rank: u64,
    yielded: bool,
    triple: Triple,
    degrees: Degrees,
}

impl ExhaustiveWalk {
    pub(crate) fn new(layout: Layout, lo: u64, hi: u64) -> Result<Self> {
        let n = layout.n;
        Ok(ExhaustiveWalk {
            lo,
            hi,
            k: 0,
            chosen: Vec::new(),
            next: 0,
            rank: 0,
            yielded: false,
            triple: Triple::empty(n)?,
            degrees: Degrees::new(n),
            layout,
        })
    }

    fn pop(&mut self) {
        let c = self.chosen.pop().expect("non-empty prefix");
        let slot = self.layout.slots[c];
        toggle(&mut self.triple, slot);
        self.degrees.add(slot, -1);
        self.next = c + 1;
    }

    fn next_size(&mut self) {
        self.k += 1;
        self.next = 0;
    }

    /// The next triple and its rank, borrowed until the following call.
    pub fn next_triple(&mut self) -> Option<(u64, &Triple)> {
        let s = self.layout.slots.len();
        loop {
            if self.k > self.layout.kmax || self.rank >= self.hi {
                return None;
            }
            let depth = self.chosen.len();
            if depth == self.k {
                if self.yielded || self.rank < self.lo {
                    if self.yielded {
                        self.yielded = false;
                    }
                    self.rank += 1;
                    if self.k == 0 {
                        self.next_size();
                    } else {
                        self.pop();
                    }
                    continue;
                }
                self.yielded = true;
                return Some((self.rank, &self.triple));
            }
            let c = self.next;
            if c + (self.k - depth) > s {
                if depth == 0 {
                    self.next_size();
                } else {
                    self.pop();
                }
                continue;
            }
            let subtree = self.layout.choose(s - 1 - c, self.k - 1 - depth);
            let slot = self.layout.slots[c];
            if self.rank.saturating_add(subtree) <= self.lo || !self.degrees.fits(slot, &self.layout.caps) {
                self.rank = self.rank.saturating_add(subtree);
                self.next += 1;
                continue;
            }
            toggle(&mut self.triple, slot);
            self.degrees.add(slot, 1);
            self.chosen.push(c);
            self.next = c + 1;
        }
    }
}

/// Owned-triple adapter over [`ExhaustiveWalk`] or the sampler.
pub struct TripleStream {
    inner: StreamInner,
}

enum StreamInner {
    Exhaustive(Box<ExhaustiveWalk>),
    Sample { sampler: Sampler, next: u64, end: u64 },
}

impl Iterator for TripleStream {
    type Item = (u64, Triple);

    fn next(&mut self) -> Option<(u64, Triple)> {
        match &mut self.inner {
            StreamInner::Exhaustive(w) => w.next_triple().map(|(r, t)| (r, t.clone())),
            StreamInner::Sample { sampler, next, end } => {
                if *next >= *end {
                    return None;
                }
                let i = *next;
                *next += 1;
                Some((i, sampler.sample(i)))
            }
        }
    }
}

/// Seeded sampler: draw a size uniformly from `0..=kmax`, then a uniform
/// subset of that size, rejecting subsets that break a degree cap. After
/// [`SAMPLE_RETRIES`] rejections a fresh size is drawn. Sample `i` uses its
/// own ChaCha8 stream, so results do not depend on how samples are split.
#[derive(Clone, Debug)]
pub(crate) struct Sampler {
    layout: Layout,
    seed: u64,
}

impl Sampler {
    pub fn new(layout: Layout, seed: u64) -> Self {
        Sampler { layout, seed }
    }

    pub fn sample(&self, i: u64) -> Triple {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(i);
        let s = self.layout.slots.len();
        loop {
            let k = rng.random_range(0..=self.layout.kmax);
            for _ in 0..SAMPLE_RETRIES {
                let picked = index::sample(&mut rng, s, k);
                let mut degrees = Degrees::new(self.layout.n);
                let mut ok = true;
                for c in picked.iter() {
                    let slot = self.layout.slots[c];
                    if !degrees.fits(slot, &self.layout.caps) {
                        ok = false;
                        break;
                    }
                    degrees.add(slot, 1);
                }
                if ok {
                    let mut t = Triple::empty(self.layout.n).expect("order checked by layout");
                    for c in picked.iter() {
                        toggle(&mut t, self.layout.slots[c]);
                    }
                    return t;
                }
            }
        }
    }
}

/// The triples of `spec` with their ranks (sample index in sample mode).
pub fn enumerate_triples(spec: &EnumSpec) -> Result<TripleStream> {
    spec.validate()?;
    check_guard(spec)?;
    let layout = Layout::new(spec)?;
    let inner = match spec.mode {
        Mode::Exhaustive => {
            let range = spec.range.clone().unwrap_or(0..layout.rank_space());
            StreamInner::Exhaustive(Box::new(ExhaustiveWalk::new(layout, range.start, range.end)?))
        }
        Mode::Sample { count, seed } => {
            let range = spec.range.clone().unwrap_or(0..count);
            StreamInner::Sample {
                sampler: Sampler::new(layout, seed),
                next: range.start,
                end: range.end.min(count),
            }
        }
    };
    Ok(TripleStream { inner })
}
