//! Depth-first search over partial maps with bitmask candidate filtering.

use crate::graph::{bit, low_mask, Bits};
use crate::triple::{PackingMap, Triple};

struct Search<'a> {
    t: &'a Triple,
    order: Vec<usize>,
    /// For each V1 vertex, its white neighbors placed earlier in `order`.
    earlier: Vec<u64>,
    /// Smallest V2 vertex interchangeable with each V2 vertex.
    class: Vec<usize>,
    perm: Vec<usize>,
    used: u64,
    all: u64,
}

impl Search<'_> {
    fn run(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let u = self.order[depth];
        let mut blocked = self.used | self.t.yellow_of_v1(u);
        for v in Bits(self.earlier[u]) {
            blocked |= self.t.g2().neighbors(self.perm[v]);
        }
        let mut tried = 0u64;
        for w in Bits(self.all & !blocked) {
            // Twins are interchangeable: trying one unused member of each
            // class covers the others.
            let c = self.class[w];
            if tried & bit(c) != 0 {
                continue;
            }
            tried |= bit(c);
            self.perm[u] = w;
            self.used |= bit(w);
            if self.run(depth + 1) {
                return true;
            }
            self.used &= !bit(w);
        }
        false
    }
}

/// Two V2 vertices are twins when they have the same white neighbors apart
/// from each other and the same yellow neighbors. This is an equivalence,
/// so the smallest twin names the class.
fn twin_classes(t: &Triple) -> Vec<usize> {
    let n = t.n();
    let g2 = t.g2();
    (0..n)
        .map(|w| {
            (0..w)
                .find(|&x| {
                    g2.neighbors(x) & !bit(w) == g2.neighbors(w) & !bit(x) && t.yellow_of_v2(x) == t.yellow_of_v2(w)
                })
                .unwrap_or(w)
        })
        .collect()
}

/// Finds a packing if one exists. V1 vertices are placed in descending order
/// of `d1 + d3` (ties by index); each candidate image must avoid the yellow
/// neighbors of the vertex and the G2-neighborhoods of the images of its
/// already-placed G1-neighbors.
pub fn backtrack_pack(t: &Triple) -> Option<PackingMap> {
    let n = t.n();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&u| (std::cmp::Reverse(t.degree_v1(u)), u));
    let mut placed = 0u64;
    let mut earlier = vec![0u64; n];
    for &u in &order {
        earlier[u] = t.g1().neighbors(u) & placed;
        placed |= bit(u);
    }
    let mut search = Search {
        t,
        order,
        earlier,
        class: twin_classes(t),
        perm: vec![0; n],
        used: 0,
        all: low_mask(n),
    };
    if !search.run(0) {
        return None;
    }
    let f = PackingMap::from_vec_unchecked(search.perm);
    assert_eq!(t.is_packing(&f).ok(), Some(true), "backtracking returned a non-packing");
    Some(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{be_bad_triple, kk_exception, KkKind};
    use crate::solver::brute_force_pack;

    #[test]
    fn bad_pairs_and_kk_have_no_packing() {
        for i in 1..=7 {
            assert_eq!(backtrack_pack(&be_bad_triple(i).unwrap()), None, "bad pair {i}");
        }
        for n in [6, 10, 14] {
            assert_eq!(backtrack_pack(&kk_exception(KkKind::Bipartite, n).unwrap()), None);
        }
        for n in [6, 8, 10] {
            assert_eq!(backtrack_pack(&kk_exception(KkKind::Clique, n).unwrap()), None);
        }
    }

    #[test]
    fn twins_group_as_expected() {
        // K3 on {0,1,2} plus isolated {3,4}; yellow at 4 splits it off.
        let t = Triple::build(5, &[], &[(0, 1), (0, 2), (1, 2)], &[(0, 4)]).unwrap();
        assert_eq!(twin_classes(&t), vec![0, 0, 0, 3, 4]);
    }

    #[test]
    fn agrees_with_brute_force_on_small_cases() {
        let cases = [
            Triple::build(3, &[(0, 1)], &[(0, 1)], &[(2, 2)]).unwrap(),
            Triple::build(3, &[(0, 1), (1, 2)], &[(0, 1)], &[]).unwrap(),
            Triple::build(2, &[(0, 1)], &[(0, 1)], &[]).unwrap(),
            Triple::build(4, &[(0, 1), (2, 3)], &[(0, 1), (1, 2), (2, 0)], &[(3, 3)]).unwrap(),
        ];
        for t in &cases {
            assert_eq!(backtrack_pack(t).is_some(), brute_force_pack(t).unwrap().is_some(), "{t:?}");
        }
    }
}
