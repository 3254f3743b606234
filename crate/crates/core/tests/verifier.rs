mod common;

use common::{all_triples, edge_total, max_degrees, oracle_pack, triples_up_to};
use packtriple::conditions::{check_edge_sum_lemma7, check_be};
use packtriple::solver::{constructive_lemma7_traced, constructive_pack_be_traced};
use packtriple::verifier::{enumerate_triples, partition_work, rank_space, verify_theorem, EnumSpec, VerifyOptions};
use packtriple::{Prediction, TheoremId};
use std::collections::HashSet;

#[test]
fn exhaustive_stream_counts_match_binomial_sums() {
    for (n, max) in [(1, 1), (2, 3), (3, 4), (4, 5)] {
        let spec = EnumSpec::exhaustive(n, max);
        assert_eq!(rank_space(&spec).unwrap(), triples_up_to(n as u64, max as u64));
        assert_eq!(enumerate_triples(&spec).unwrap().count() as u64, triples_up_to(n as u64, max as u64));
    }
    assert_eq!(triples_up_to(4, 5), 122_438);
    assert_eq!(rank_space(&EnumSpec::exhaustive(5, 7)).unwrap(), triples_up_to(5, 7));
}

#[test]
fn exhaustive_stream_is_the_set_of_all_small_triples() {
    let got: Vec<_> = enumerate_triples(&EnumSpec::exhaustive(3, 3)).unwrap().map(|(_, t)| t).collect();
    let want = all_triples(3, 3);
    assert_eq!(got.len(), want.len());
    let got_text: HashSet<_> = got.iter().map(packtriple::format::write_triple).collect();
    let want_text: HashSet<_> = want.iter().map(packtriple::format::write_triple).collect();
    assert_eq!(got_text, want_text);
}

#[test]
fn ranks_are_consecutive_and_capped_triples_respect_caps() {
    let ranks: Vec<u64> = enumerate_triples(&EnumSpec::exhaustive(3, 4)).unwrap().map(|(r, _)| r).collect();
    assert!(ranks.iter().enumerate().all(|(i, &r)| r == i as u64));
    let spec = EnumSpec::exhaustive(4, 5).with_caps(1, 2, 1);
    let mut count = 0;
    for (_, t) in enumerate_triples(&spec).unwrap() {
        let (d1, d2, d3) = max_degrees(&t);
        assert!(d1 <= 1 && d2 <= 2 && d3 <= 1);
        assert!(edge_total(&t) <= 5);
        count += 1;
    }
    let oracle = all_triples(4, 5)
        .iter()
        .filter(|t| {
            let (d1, d2, d3) = max_degrees(t);
            d1 <= 1 && d2 <= 2 && d3 <= 1
        })
        .count();
    assert_eq!(count, oracle);
}

#[test]
fn shards_cover_the_space_once() {
    let spec = EnumSpec::exhaustive(3, 4);
    let whole: Vec<u64> = enumerate_triples(&spec).unwrap().map(|(r, _)| r).collect();
    for workers in [1, 3, 8] {
        let mut pieces = Vec::new();
        for shard in partition_work(&spec, workers).unwrap() {
            pieces.extend(enumerate_triples(&shard).unwrap().map(|(r, _)| r));
        }
        assert_eq!(pieces, whole);
    }
}

#[test]
fn samples_are_reproducible() {
    let spec = EnumSpec::sample(7, 7, 200, 42).with_caps(2, 2, 1);
    let a: Vec<_> = enumerate_triples(&spec).unwrap().collect();
    let b: Vec<_> = enumerate_triples(&spec).unwrap().collect();
    assert_eq!(a, b);
    let c: Vec<_> = enumerate_triples(&EnumSpec::sample(7, 7, 200, 43).with_caps(2, 2, 1)).unwrap().collect();
    assert_ne!(a, c);
    for (_, t) in &a {
        let (d1, d2, d3) = max_degrees(t);
        assert!(d1 <= 2 && d2 <= 2 && d3 <= 1 && edge_total(t) <= 7);
    }
}

#[test]
fn small_exhaustive_runs_report_no_counterexamples() {
    let opts = VerifyOptions { constructive: true, ..VerifyOptions::with_workers(2) };
    for theorem in TheoremId::ALL {
        for n in 2..=4 {
            let max = packtriple::verifier::default_max_edge_sum(theorem, n);
            let report = verify_theorem(theorem, &EnumSpec::exhaustive(n, max), &opts).unwrap();
            assert!(report.counterexamples.is_empty(), "{theorem} n={n}: {:?}", report.counterexamples);
            assert_eq!(report.instances_checked, triples_up_to(n as u64, max as u64));
            assert_eq!(report.predicted_pack, report.predicted_pack_confirmed);
            assert_eq!(report.predicted_nopack, report.predicted_nopack_confirmed);
        }
    }
}

#[test]
fn predictions_match_the_oracle_on_all_three_vertex_triples() {
    for t in all_triples(3, 5) {
        let packs = oracle_pack(&t).is_some();
        for theorem in TheoremId::ALL {
            match packtriple::conditions::check(theorem, &t).unwrap().predicted {
                Prediction::MustPack => assert!(packs, "{theorem}"),
                Prediction::ExceptionNoPack => assert!(!packs, "{theorem}"),
                Prediction::NoPrediction => {}
            }
        }
    }
}

#[test]
fn constructive_routes_cover_all_four_vertex_hypothesis_triples() {
    let mut lemma7_total = 0;
    let mut be_total = 0;
    for (_, t) in enumerate_triples(&EnumSpec::exhaustive(4, 5)).unwrap() {
        if check_edge_sum_lemma7(&t).predicted == Prediction::MustPack {
            let (f, trace) = constructive_lemma7_traced(&t).unwrap();
            assert!(t.is_packing(&f).unwrap());
            assert_eq!(trace.fallback, 0);
            lemma7_total += 1;
        }
        if check_be(&t).predicted == Prediction::MustPack {
            let (f, _) = constructive_pack_be_traced(&t).unwrap();
            assert!(t.is_packing(&f).unwrap());
            be_total += 1;
        }
    }
    assert!(lemma7_total > 0 && be_total > 0);
}

#[test]
fn worker_count_does_not_change_reports() {
    let spec = EnumSpec::exhaustive(4, 5);
    let one = verify_theorem(TheoremId::Be, &spec, &VerifyOptions::with_workers(1)).unwrap();
    let many = verify_theorem(TheoremId::Be, &spec, &VerifyOptions::with_workers(8)).unwrap();
    assert_eq!(one.render_stable(), many.render_stable());
    let spec = EnumSpec::sample(8, 8, 2000, 9).with_caps(1, 2, 1);
    let one = verify_theorem(TheoremId::SsProduct, &spec, &VerifyOptions::with_workers(1)).unwrap();
    let many = verify_theorem(TheoremId::SsProduct, &spec, &VerifyOptions::with_workers(5)).unwrap();
    assert_eq!(one.render_stable(), many.render_stable());
}

#[test]
fn invalid_specs_are_rejected() {
    assert!(enumerate_triples(&EnumSpec::exhaustive(0, 1)).is_err());
    assert!(verify_theorem(TheoremId::Be, &EnumSpec::exhaustive(8, 13), &VerifyOptions::with_workers(1)).is_err());
}
