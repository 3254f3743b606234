//! Test-side oracles built only from public accessors, independent of the
//! solver and checker code paths.

#![allow(dead_code)]

use packtriple::Triple;
use rand::Rng;

/// Direct definition check: no white edge lands on a white edge and no
/// vertex lands on a yellow neighbor.
pub fn oracle_is_packing(t: &Triple, perm: &[usize]) -> bool {
    let n = t.n();
    if perm.len() != n {
        return false;
    }
    let mut hit = vec![false; n];
    for &w in perm {
        if w >= n || hit[w] {
            return false;
        }
        hit[w] = true;
    }
    let white_ok = t.g1().edges().all(|(u, v)| !t.g2().has_edge(perm[u], perm[v]));
    let yellow_ok = t.yellow_pairs().all(|(u, w)| perm[u] != w);
    white_ok && yellow_ok
}

/// Heap's algorithm over every bijection; returns the first packing found.
pub fn oracle_pack(t: &Triple) -> Option<Vec<usize>> {
    let n = t.n();
    let mut perm: Vec<usize> = (0..n).collect();
    if oracle_is_packing(t, &perm) {
        return Some(perm);
    }
    let mut c = vec![0usize; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            if oracle_is_packing(t, &perm) {
                return Some(perm);
            }
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    None
}

/// Each white pair and each yellow pair is present independently with the
/// given probabilities.
pub fn random_triple<R: Rng>(rng: &mut R, n: usize, p_white: f64, p_yellow: f64) -> Triple {
    let mut w1 = Vec::new();
    let mut w2 = Vec::new();
    let mut y = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p_white) {
                w1.push((u, v));
            }
            if rng.random_bool(p_white) {
                w2.push((u, v));
            }
        }
        for w in 0..n {
            if rng.random_bool(p_yellow) {
                y.push((u, w));
            }
        }
    }
    Triple::build(n, &w1, &w2, &y).unwrap()
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// Number of triples on `n` vertices with at most `max` edges in total.
pub fn triples_up_to(n: u64, max: u64) -> u64 {
    let slots = n * (n - 1) + n * n;
    (0..=max).map(|j| binomial(slots, j)).sum()
}

pub fn max_degrees(t: &Triple) -> (usize, usize, usize) {
    let n = t.n();
    let d1 = (0..n).map(|v| t.g1().degree(v)).max().unwrap_or(0);
    let d2 = (0..n).map(|v| t.g2().degree(v)).max().unwrap_or(0);
    let mut deg1 = vec![0; n];
    let mut deg2 = vec![0; n];
    for (u, w) in t.yellow_pairs() {
        deg1[u] += 1;
        deg2[w] += 1;
    }
    let d3 = deg1.into_iter().chain(deg2).max().unwrap_or(0);
    (d1, d2, d3)
}

pub fn edge_total(t: &Triple) -> usize {
    t.g1().edges().count() + t.g2().edges().count() + t.yellow_pairs().count()
}

/// Every triple on `n` vertices with at most `max` edges in total, built
/// from a plain slot list independent of the library's enumerator.
pub fn all_triples(n: usize, max: usize) -> Vec<Triple> {
    #[derive(Clone, Copy)]
    enum Slot {
        W1(usize, usize),
        W2(usize, usize),
        Y(usize, usize),
    }
    let mut slots = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            slots.push(Slot::W1(u, v));
            slots.push(Slot::W2(u, v));
        }
        for w in 0..n {
            slots.push(Slot::Y(u, w));
        }
    }
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    fn rec(slots: &[Slot], start: usize, max: usize, chosen: &mut Vec<Slot>, n: usize, out: &mut Vec<Triple>) {
        let (mut w1, mut w2, mut y) = (Vec::new(), Vec::new(), Vec::new());
        for s in chosen.iter() {
            match *s {
                Slot::W1(a, b) => w1.push((a, b)),
                Slot::W2(a, b) => w2.push((a, b)),
                Slot::Y(a, b) => y.push((a, b)),
            }
        }
        out.push(Triple::build(n, &w1, &w2, &y).unwrap());
        if chosen.len() == max {
            return;
        }
        for i in start..slots.len() {
            chosen.push(slots[i]);
            rec(slots, i + 1, max, chosen, n, out);
            chosen.pop();
        }
    }
    rec(&slots, 0, max, &mut chosen, n, &mut out);
    out
}

/// Exhaustive list coloring: is there a proper coloring of `adj` with
/// colors `0..k` avoiding each vertex's forbidden list?
pub fn oracle_list_colorable(order: usize, edges: &[(usize, usize)], k: usize, forbidden: &[Vec<usize>]) -> bool {
    let total = k.pow(order as u32);
    (0..total).any(|code| {
        let mut c = vec![0; order];
        let mut x = code;
        for slot in c.iter_mut() {
            *slot = x % k;
            x /= k;
        }
        (0..order).all(|v| !forbidden[v].contains(&c[v])) && edges.iter().all(|&(u, v)| c[u] != c[v])
    })
}
