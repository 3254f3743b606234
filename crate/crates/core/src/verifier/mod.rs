//! Empirical verification: enumerate triples, ask the hypothesis checker
//! what should happen, and confirm it with the solvers.

mod enumerate;

pub use enumerate::{enumerate_triples, rank_space, ExhaustiveWalk, TripleStream, GUARD_LIMIT, GUARD_OVERRIDE_VAR};

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::ops::Range;
use std::path::PathBuf;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use crate::conditions::{
    check_be_with, check_cor8_with, check_ss_product_with, lemma7_holds, Cor8Outcome, HypothesisReport, Prediction,
    TheoremId,
};
use crate::error::{Error, Result};
use crate::format::write_triple;
use crate::solver::{
    backtrack_pack, brute_force_pack, constructive_lemma7_traced, constructive_pack_be, constructive_ss_product,
    BRUTE_FORCE_MAX,
};
use crate::triple::{Counts, Triple};

use enumerate::{check_guard, ExhaustiveWalk as Walk, Layout, Sampler};

/// Largest `n` at which the backtracking answer is cross-checked against
/// brute force.
pub const CROSS_CHECK_MAX: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Mode {
    Exhaustive,
    Sample { count: u64, seed: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumSpec {
    pub n: usize,
    pub max_edge_sum: usize,
    /// Caps on `(Δ1, Δ2, Δ3)`.
    pub degree_caps: Option<(usize, usize, usize)>,
    pub mode: Mode,
    /// Restricts the run to ranks (or sample indices) in this range.
    pub range: Option<Range<u64>>,
}

impl EnumSpec {
    pub fn exhaustive(n: usize, max_edge_sum: usize) -> Self {
        EnumSpec {
            n,
            max_edge_sum,
            degree_caps: None,
            mode: Mode::Exhaustive,
            range: None,
        }
    }

    pub fn sample(n: usize, max_edge_sum: usize, count: u64, seed: u64) -> Self {
        EnumSpec {
            n,
            max_edge_sum,
            degree_caps: None,
            mode: Mode::Sample { count, seed },
            range: None,
        }
    }

    pub fn with_caps(mut self, d1: usize, d2: usize, d3: usize) -> Self {
        self.degree_caps = Some((d1, d2, d3));
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 || self.n > crate::MAX_VERTICES {
            return Err(Error::BadOrder { n: self.n });
        }
        if let Mode::Sample { count: 0, .. } = self.mode {
            return Err(Error::InvalidParams("sample count must be at least 1".into()));
        }
        if let Some(r) = &self.range {
            if r.start > r.end {
                return Err(Error::InvalidParams(format!("empty range {}..{}", r.start, r.end)));
            }
        }
        Ok(())
    }

    /// The index range this spec covers.
    fn span(&self) -> Result<Range<u64>> {
        let full = match self.mode {
            Mode::Exhaustive => 0..rank_space(self)?,
            Mode::Sample { count, .. } => 0..count,
        };
        Ok(match &self.range {
            Some(r) => r.start.max(full.start)..r.end.min(full.end).max(r.start.max(full.start)),
            None => full,
        })
    }
}

/// Splits `spec` into `workers` disjoint contiguous index ranges whose
/// union is the original. Some shards may be empty.
pub fn partition_work(spec: &EnumSpec, workers: usize) -> Result<Vec<EnumSpec>> {
    if workers == 0 {
        return Err(Error::InvalidParams("at least one worker is required".into()));
    }
    spec.validate()?;
    if workers == 1 {
        return Ok(vec![spec.clone()]);
    }
    let span = spec.span()?;
    let len = (span.end - span.start) as u128;
    let w = workers as u128;
    Ok((0..w)
        .map(|i| {
            let lo = span.start + (len * i / w) as u64;
            let hi = span.start + (len * (i + 1) / w) as u64;
            EnumSpec {
                range: Some(lo..hi),
                ..spec.clone()
            }
        })
        .collect())
}

#[derive(Clone, Debug, Default)]
pub struct VerifyOptions {
    pub workers: usize,
    /// Also run the theorem's constructive algorithm on predicted packings.
    pub constructive: bool,
    /// Negative-control hook: ignore the bad-pair exception.
    pub drop_be_exception: bool,
    /// Write each counterexample here as a triple file when found.
    pub counterexample_dir: Option<PathBuf>,
}

impl VerifyOptions {
    pub fn with_workers(workers: usize) -> Self {
        VerifyOptions {
            workers,
            ..VerifyOptions::default()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub rank: u64,
    pub reason: String,
    pub triple: Triple,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub theorem: TheoremId,
    pub spec: EnumSpec,
    pub instances_checked: u64,
    pub predicted_pack: u64,
    pub predicted_pack_confirmed: u64,
    pub predicted_nopack: u64,
    pub predicted_nopack_confirmed: u64,
    pub no_prediction: u64,
    /// Exception kinds, trichotomy cases and constructive-route counters.
    pub tallies: BTreeMap<String, u64>,
    /// Sorted by rank.
    pub counterexamples: Vec<Counterexample>,
    pub wall_time: Duration,
}

impl VerificationReport {
    fn empty(theorem: TheoremId, spec: EnumSpec) -> Self {
        VerificationReport {
            theorem,
            spec,
            instances_checked: 0,
            predicted_pack: 0,
            predicted_pack_confirmed: 0,
            predicted_nopack: 0,
            predicted_nopack_confirmed: 0,
            no_prediction: 0,
            tallies: BTreeMap::new(),
            counterexamples: Vec::new(),
            wall_time: Duration::ZERO,
        }
    }

    fn merge(&mut self, other: VerificationReport) {
        self.instances_checked += other.instances_checked;
        self.predicted_pack += other.predicted_pack;
        self.predicted_pack_confirmed += other.predicted_pack_confirmed;
        self.predicted_nopack += other.predicted_nopack;
        self.predicted_nopack_confirmed += other.predicted_nopack_confirmed;
        self.no_prediction += other.no_prediction;
        for (k, v) in other.tallies {
            *self.tallies.entry(k).or_default() += v;
        }
        self.counterexamples.extend(other.counterexamples);
    }

    fn tally(&mut self, key: impl Into<String>) {
        *self.tallies.entry(key.into()).or_default() += 1;
    }

    pub fn tally_of(&self, key: &str) -> u64 {
        self.tallies.get(key).copied().unwrap_or(0)
    }

    /// `theorem=<id> n=<n> checked=<k> counterexamples=<c>`
    pub fn summary_line(&self) -> String {
        format!(
            "theorem={} n={} checked={} counterexamples={}",
            self.theorem,
            self.spec.n,
            self.instances_checked,
            self.counterexamples.len()
        )
    }

    /// The full report without the wall time; identical for identical specs
    /// regardless of worker count.
    pub fn render_stable(&self) -> String {
        let mut out = String::new();
        let s = &self.spec;
        let _ = writeln!(out, "theorem: {}", self.theorem);
        let _ = writeln!(out, "n: {}", s.n);
        match s.mode {
            Mode::Exhaustive => {
                let _ = writeln!(out, "mode: exhaustive");
            }
            Mode::Sample { count, seed } => {
                let _ = writeln!(out, "mode: sample count={count} seed={seed}");
            }
        }
        let _ = writeln!(out, "max_edge_sum: {}", s.max_edge_sum);
        match s.degree_caps {
            Some((a, b, c)) => {
                let _ = writeln!(out, "degree_caps: {a},{b},{c}");
            }
            None => {
                let _ = writeln!(out, "degree_caps: none");
            }
        }
        if let Some(r) = &s.range {
            let _ = writeln!(out, "range: {}..{}", r.start, r.end);
        }
        let _ = writeln!(out, "instances_checked: {}", self.instances_checked);
        let _ = writeln!(out, "predicted_pack: {}", self.predicted_pack);
        let _ = writeln!(out, "predicted_pack_confirmed: {}", self.predicted_pack_confirmed);
        let _ = writeln!(out, "predicted_nopack: {}", self.predicted_nopack);
        let _ = writeln!(out, "predicted_nopack_confirmed: {}", self.predicted_nopack_confirmed);
        let _ = writeln!(out, "no_prediction: {}", self.no_prediction);
        for (k, v) in &self.tallies {
            let _ = writeln!(out, "{k}: {v}");
        }
        let _ = writeln!(out, "counterexamples: {}", self.counterexamples.len());
        for c in &self.counterexamples {
            let _ = writeln!(out, "counterexample: rank={} reason={}", c.rank, c.reason);
        }
        out
    }

    pub fn render(&self) -> String {
        format!("{}wall_time_ms: {}\n", self.render_stable(), self.wall_time.as_millis())
    }
}

struct Checker<'a> {
    theorem: TheoremId,
    opts: &'a VerifyOptions,
    /// Serializes counterexample file writes.
    sink: &'a Mutex<()>,
}

impl Checker<'_> {
    fn report_for(&self, t: &Triple, c: &Counts) -> Result<HypothesisReport> {
        Ok(match self.theorem {
            TheoremId::SsProduct => check_ss_product_with(t, c),
            TheoremId::Lemma7 => HypothesisReport {
                theorem: TheoremId::Lemma7,
                hypothesis_holds: lemma7_holds(t.n(), c),
                strict: None,
                exception: None,
                predicted: if lemma7_holds(t.n(), c) {
                    Prediction::MustPack
                } else {
                    Prediction::NoPrediction
                },
                cor8: None,
            },
            TheoremId::Cor8 => check_cor8_with(t, c)?,
            TheoremId::Be => check_be_with(t, c, self.opts.drop_be_exception),
        })
    }

    fn counterexample(&self, rep: &mut VerificationReport, rank: u64, t: &Triple, reason: String) -> Result<()> {
        if let Some(dir) = &self.opts.counterexample_dir {
            let _guard = self.sink.lock().unwrap_or_else(|e| e.into_inner());
            fs::create_dir_all(dir)?;
            let path = dir.join(format!("{}-n{}-r{}.triple", self.theorem, t.n(), rank));
            fs::write(path, format!("# {reason}\n{}", write_triple(t)))?;
        }
        rep.counterexamples.push(Counterexample {
            rank,
            reason,
            triple: t.clone(),
        });
        Ok(())
    }

    fn check_one(&self, rep: &mut VerificationReport, rank: u64, t: &Triple) -> Result<()> {
        let c = t.counts();
        let r = self.report_for(t, &c)?;
        rep.instances_checked += 1;
        if let Some(e) = r.exception {
            rep.tally(format!("exception.{e}"));
        }
        if let Some(case) = r.cor8 {
            rep.tally(format!("case.{}", case.as_str()));
            if let Some(reason) = cor8_inconsistency(t, &c, case) {
                return self.counterexample(rep, rank, t, reason);
            }
        }
        match r.predicted {
            Prediction::NoPrediction => rep.no_prediction += 1,
            Prediction::MustPack => {
                rep.predicted_pack += 1;
                match self.confirm_pack(rep, t)? {
                    None => rep.predicted_pack_confirmed += 1,
                    Some(reason) => self.counterexample(rep, rank, t, reason)?,
                }
            }
            Prediction::ExceptionNoPack => {
                rep.predicted_nopack += 1;
                let found = if t.n() <= BRUTE_FORCE_MAX {
                    brute_force_pack(t)?
                } else {
                    backtrack_pack(t)
                };
                match found {
                    None => rep.predicted_nopack_confirmed += 1,
                    Some(f) => {
                        let reason = format!("predicted no packing but found {:?}", f.as_slice());
                        self.counterexample(rep, rank, t, reason)?;
                    }
                }
            }
        }
        Ok(())
    }

    /// `None` when every check agrees that `t` packs.
    fn confirm_pack(&self, rep: &mut VerificationReport, t: &Triple) -> Result<Option<String>> {
        let found = backtrack_pack(t);
        if t.n() <= CROSS_CHECK_MAX && brute_force_pack(t)?.is_some() != found.is_some() {
            return Ok(Some("backtracking and brute force disagree".into()));
        }
        if found.is_none() {
            return Ok(Some("predicted a packing but none exists".into()));
        }
        if self.opts.constructive {
            let built = match self.theorem {
                TheoremId::SsProduct => constructive_ss_product(t),
                TheoremId::Lemma7 => constructive_lemma7_traced(t).map(|(f, trace)| {
                    if trace.fallback > 0 {
                        rep.tally("constructive.lemma7_fallback");
                    }
                    f
                }),
                TheoremId::Be => constructive_pack_be(t),
                TheoremId::Cor8 => return Ok(None),
            };
            match built {
                Ok(f) if t.is_packing(&f)? => rep.tally("constructive.validated"),
                Ok(_) => return Ok(Some("constructive map does not pack".into())),
                Err(e) => return Ok(Some(format!("constructive solver failed: {e}"))),
            }
        }
        Ok(None)
    }
}

fn cor8_inconsistency(t: &Triple, c: &Counts, case: Cor8Outcome) -> Option<String> {
    let n = t.n();
    let full = c.delta3 == n;
    let k2k2 = n == 2 && t.g1().edge_count() == 1 && t.g2().edge_count() == 1;
    let ok = match case {
        Cor8Outcome::FullYellowVertex => full,
        Cor8Outcome::K2K2 => k2k2 && !full,
        Cor8Outcome::Packs => !full && !k2k2,
    };
    (!ok).then(|| format!("trichotomy case {} inconsistent with the triple", case.as_str()))
}

fn run_shard(checker: &Checker<'_>, theorem: TheoremId, spec: &EnumSpec) -> Result<VerificationReport> {
    let mut rep = VerificationReport::empty(theorem, spec.clone());
    let layout = Layout::new(spec)?;
    let span = spec.span()?;
    match spec.mode {
        Mode::Exhaustive => {
            let mut walk = Walk::new(layout, span.start, span.end)?;
            while let Some((rank, t)) = walk.next_triple() {
                checker.check_one(&mut rep, rank, t)?;
            }
        }
        Mode::Sample { seed, .. } => {
            let sampler = Sampler::new(layout, seed);
            for i in span {
                checker.check_one(&mut rep, i, &sampler.sample(i))?;
            }
        }
    }
    Ok(rep)
}

/// Shards handed to each worker on average; more shards balance better.
const SHARDS_PER_WORKER: usize = 16;

/// Checks every triple of `spec` against `theorem`. The report does not
/// depend on `opts.workers` except for the wall time.
pub fn verify_theorem(theorem: TheoremId, spec: &EnumSpec, opts: &VerifyOptions) -> Result<VerificationReport> {
    spec.validate()?;
    check_guard(spec)?;
    if theorem == TheoremId::Cor8 && spec.n < 2 {
        return Err(Error::Precondition("the edge-sum trichotomy needs n >= 2".into()));
    }
    let start = Instant::now();
    let workers = opts.workers.max(1);
    let shards = partition_work(spec, workers * SHARDS_PER_WORKER)?;
    let sink = Mutex::new(());
    let checker = Checker {
        theorem,
        opts,
        sink: &sink,
    };
    let next = AtomicUsize::new(0);
    let results: Mutex<Vec<Option<Result<VerificationReport>>>> = Mutex::new(shards.iter().map(|_| None).collect());
    std::thread::scope(|scope| {
        for _ in 0..workers.min(shards.len()) {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(shard) = shards.get(i) else { break };
                let r = run_shard(&checker, theorem, shard);
                results.lock().unwrap_or_else(|e| e.into_inner())[i] = Some(r);
            });
        }
    });
    let mut report = VerificationReport::empty(theorem, spec.clone());
    for r in results.into_inner().unwrap_or_else(|e| e.into_inner()) {
        report.merge(r.expect("every shard ran")?);
    }
    report.counterexamples.sort_by_key(|c| c.rank);
    report.wall_time = start.elapsed();
    Ok(report)
}

/// Default edge-sum cap for verifying `theorem` at order `n`: the largest
/// edge sum the hypothesis allows.
pub fn default_max_edge_sum(theorem: TheoremId, n: usize) -> usize {
    match theorem {
        TheoremId::Be => (2 * n).saturating_sub(3),
        TheoremId::Lemma7 => (3 * n / 2).saturating_sub(2),
        TheoremId::Cor8 | TheoremId::SsProduct => n,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_covers_span() {
        let spec = EnumSpec::exhaustive(3, 4);
        let total = rank_space(&spec).unwrap();
        let shards = partition_work(&spec, 4).unwrap();
        assert_eq!(shards.len(), 4);
        let mut at = 0;
        for s in &shards {
            let r = s.range.clone().unwrap();
            assert_eq!(r.start, at);
            at = r.end;
        }
        assert_eq!(at, total);
        assert_eq!(partition_work(&spec, 1).unwrap(), vec![spec.clone()]);
        assert!(partition_work(&spec, 0).is_err());
    }

    #[test]
    fn cor8_at_two_vertices() {
        let rep = verify_theorem(TheoremId::Cor8, &EnumSpec::exhaustive(2, 2), &VerifyOptions::with_workers(2)).unwrap();
        assert!(rep.counterexamples.is_empty(), "{}", rep.render());
        // G1 = G2 = K2 with no yellow: exactly one labeled triple.
        assert_eq!(rep.tally_of("case.k2_k2"), 1);
        assert_eq!(rep.instances_checked, 1 + 6 + 15);
    }

    #[test]
    fn worker_count_does_not_change_the_report() {
        let spec = EnumSpec::exhaustive(3, 4);
        let a = verify_theorem(TheoremId::Be, &spec, &VerifyOptions::with_workers(1)).unwrap();
        let b = verify_theorem(TheoremId::Be, &spec, &VerifyOptions::with_workers(3)).unwrap();
        assert_eq!(a.render_stable(), b.render_stable());
    }

    #[test]
    fn counterexamples_are_written() {
        let tmp = tempfile::tempdir().unwrap();
        let dir = tmp.path().join("cx");
        let opts = VerifyOptions {
            workers: 2,
            drop_be_exception: true,
            counterexample_dir: Some(dir.clone()),
            ..VerifyOptions::default()
        };
        let spec = EnumSpec::exhaustive(4, 5).with_caps(2, 3, 0);
        let rep = verify_theorem(TheoremId::Be, &spec, &opts).unwrap();
        assert_eq!(rep.counterexamples.len(), 24);
        assert_eq!(fs::read_dir(&dir).unwrap().count(), 24);
    }
}
