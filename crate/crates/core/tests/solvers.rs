mod common;

use common::{all_triples, oracle_is_packing, oracle_pack, random_triple};
use packtriple::conditions::{check_be, check_edge_sum_lemma7, check_ss_product};
use packtriple::format::{parse_triple, parse_witness, write_triple, write_witness};
use packtriple::solver::{
    constructive_lemma7, constructive_pack_be, constructive_ss_product, hall_matching, solve, swap_repair,
};
use packtriple::{backtrack_pack, brute_force_pack, Conflict, Method, PackingMap, Prediction, Triple};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_perm(r: &mut ChaCha8Rng, n: usize) -> PackingMap {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(r);
    PackingMap::new(p).unwrap()
}

#[test]
fn every_two_vertex_triple_agrees_with_the_oracle() {
    for t in all_triples(2, 6) {
        let want = oracle_pack(&t).is_some();
        assert_eq!(brute_force_pack(&t).unwrap().is_some(), want, "{}", write_triple(&t));
        assert_eq!(backtrack_pack(&t).is_some(), want, "{}", write_triple(&t));
    }
}

#[test]
fn brute_force_returns_the_lexicographically_first_packing() {
    let mut r = rng(11);
    for _ in 0..300 {
        let t = random_triple(&mut r, 4, 0.4, 0.3);
        let first = {
            let mut p: Vec<usize> = (0..4).collect();
            let mut found = None;
            loop {
                if oracle_is_packing(&t, &p) {
                    found = Some(p.clone());
                    break;
                }
                if !packtriple::solver::next_permutation(&mut p) {
                    break;
                }
            }
            found
        };
        let got = brute_force_pack(&t).unwrap().map(|f| f.as_slice().to_vec());
        assert_eq!(got, first);
    }
}

#[test]
fn brute_force_refuses_large_orders() {
    let t = Triple::empty(11).unwrap();
    assert!(brute_force_pack(&t).is_err());
}

#[test]
fn matching_route_agrees_with_the_oracle() {
    let mut r = rng(5);
    for n in 1..=6 {
        for _ in 0..200 {
            let t = random_triple(&mut r, n, 0.0, 0.5);
            let got = hall_matching(&t).unwrap();
            assert_eq!(got.is_some(), oracle_pack(&t).is_some());
            if let Some(f) = got {
                assert!(oracle_is_packing(&t, f.as_slice()));
            }
        }
    }
}

#[test]
fn constructive_solvers_return_valid_maps_on_random_hypothesis_triples() {
    let mut r = rng(17);
    let mut seen = [0usize; 3];
    for _ in 0..4000 {
        let n = 4 + (rand::Rng::random_range(&mut r, 0..5usize));
        let t = random_triple(&mut r, n, 0.15, 0.05);
        if check_ss_product(&t).predicted == Prediction::MustPack {
            let f = constructive_ss_product(&t).unwrap();
            assert!(oracle_is_packing(&t, f.as_slice()));
            seen[0] += 1;
        }
        if check_edge_sum_lemma7(&t).predicted == Prediction::MustPack {
            let f = constructive_lemma7(&t).unwrap();
            assert!(oracle_is_packing(&t, f.as_slice()));
            seen[1] += 1;
        }
        if check_be(&t).predicted == Prediction::MustPack {
            let f = constructive_pack_be(&t).unwrap();
            assert!(oracle_is_packing(&t, f.as_slice()));
            seen[2] += 1;
        }
    }
    assert!(seen.iter().all(|&s| s > 50), "too few hypothesis triples: {seen:?}");
}

#[test]
fn constructive_solvers_reject_triples_outside_their_hypothesis() {
    let full = Triple::build(3, &[(0, 1), (1, 2), (0, 2)], &[(0, 1), (1, 2), (0, 2)], &[]).unwrap();
    assert!(constructive_ss_product(&full).is_err());
    assert!(constructive_lemma7(&full).is_err());
    assert!(constructive_pack_be(&full).is_err());
}

fn triple_strategy(max_n: usize) -> impl Strategy<Value = (Triple, u64)> {
    (1..=max_n, any::<u64>(), 0.0f64..0.7, 0.0f64..0.5).prop_map(|(n, seed, pw, py)| {
        let mut r = rng(seed);
        (random_triple(&mut r, n, pw, py), seed)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn packability_is_invariant_under_transpose_and_relabel((t, seed) in triple_strategy(6)) {
        let base = backtrack_pack(&t).is_some();
        prop_assert_eq!(backtrack_pack(&t.transpose()).is_some(), base);
        let mut r = rng(seed ^ 0x9e37);
        let p1 = random_perm(&mut r, t.n());
        let p2 = random_perm(&mut r, t.n());
        let moved = t.relabel(&p1, &p2).unwrap();
        prop_assert_eq!(backtrack_pack(&moved).is_some(), base);
        prop_assert_eq!(moved.counts(), t.counts());
        for theorem in packtriple::TheoremId::ALL {
            let a = packtriple::conditions::check(theorem, &t).map(|r| r.predicted).ok();
            let b = packtriple::conditions::check(theorem, &moved).map(|r| r.predicted).ok();
            prop_assert_eq!(a, b);
            let c = packtriple::conditions::check(theorem, &t.transpose()).map(|r| r.predicted).ok();
            prop_assert_eq!(a, c);
        }
    }

    #[test]
    fn packings_transport_through_relabel_and_transpose((t, seed) in triple_strategy(6)) {
        if let Some(f) = backtrack_pack(&t) {
            let inv = f.inverse();
            prop_assert!(t.transpose().is_packing(&inv).unwrap());
            let mut r = rng(seed.wrapping_add(1));
            let p1 = random_perm(&mut r, t.n());
            let p2 = random_perm(&mut r, t.n());
            let moved = t.relabel(&p1, &p2).unwrap();
            // u' = p1(u) goes to p2(f(u)).
            let mut g = vec![0; t.n()];
            for u in 0..t.n() {
                g[p1.image(u)] = p2.image(f.image(u));
            }
            prop_assert!(oracle_is_packing(&moved, &g));
        }
    }

    #[test]
    fn checker_matches_the_definition((t, seed) in triple_strategy(7)) {
        let mut r = rng(seed);
        let f = random_perm(&mut r, t.n());
        let want = oracle_is_packing(&t, f.as_slice());
        prop_assert_eq!(t.is_packing(&f).unwrap(), want);
        prop_assert_eq!(t.conflicts(&f).unwrap().is_empty(), want);
    }

    #[test]
    fn backtracking_agrees_with_the_oracle((t, _) in triple_strategy(6)) {
        let got = backtrack_pack(&t);
        prop_assert_eq!(got.is_some(), oracle_pack(&t).is_some());
        if let Some(f) = got {
            prop_assert!(oracle_is_packing(&t, f.as_slice()));
        }
    }

    #[test]
    fn every_method_returns_a_valid_map((t, _) in triple_strategy(7)) {
        for method in [Method::Brute, Method::Backtrack, Method::Constructive] {
            if let Some(f) = solve(&t, method).unwrap() {
                prop_assert!(oracle_is_packing(&t, f.as_slice()), "{method}");
            }
        }
    }

    #[test]
    fn text_formats_round_trip((t, seed) in triple_strategy(10)) {
        prop_assert_eq!(parse_triple(&write_triple(&t)).unwrap(), t.clone());
        let f = random_perm(&mut rng(seed), t.n());
        prop_assert_eq!(parse_witness(&write_witness(&f)).unwrap(), f);
    }

    #[test]
    fn swap_repair_moves_exactly_two_vertices(seed in any::<u64>(), n in 4usize..=10) {
        let mut r = rng(seed);
        let t = random_triple(&mut r, n, 0.12, 0.04);
        prop_assume!(check_ss_product(&t).predicted == Prediction::MustPack);
        let f = constructive_ss_product(&t).unwrap();
        // Add one yellow edge on the packing and repair it.
        let v = rand::Rng::random_range(&mut r, 0..n);
        let bumped = t.add_yellow(&[(v, f.image(v))]).unwrap();
        prop_assume!(check_ss_product(&bumped).predicted == Prediction::MustPack);
        let g = swap_repair(&bumped, &f, Conflict::Yellow { v }).unwrap();
        let g = g.expect("a swap exists under the product condition");
        prop_assert_eq!(f.distance(&g), 2);
        prop_assert!(oracle_is_packing(&bumped, g.as_slice()));
    }
}
