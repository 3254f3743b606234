//! Small structural predicates on single graphs.

use crate::graph::{bit, low_mask, Bits, Graph};

/// Isomorphism test for small graphs by permutation search.
///
/// Candidates are pruned by a vertex signature (degree plus the sorted
/// degrees of the neighbors) and by adjacency consistency with the vertices
/// already mapped. Graphs of different order are simply not isomorphic.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    let n = g.order();
    if h.order() != n || g.edge_count() != h.edge_count() {
        return false;
    }
    let sig_g = signatures(g);
    let sig_h = signatures(h);
    let mut sorted_g = sig_g.clone();
    let mut sorted_h = sig_h.clone();
    sorted_g.sort();
    sorted_h.sort();
    if sorted_g != sorted_h {
        return false;
    }

    // Most constrained first: high degree, then rare signatures.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| {
        let rarity = sig_g.iter().filter(|s| **s == sig_g[v]).count();
        (rarity, std::cmp::Reverse(g.degree(v)), v)
    });

    let mut map = vec![usize::MAX; n];
    extend_iso(g, h, &sig_g, &sig_h, &order, 0, &mut map, 0)
}

fn signatures(g: &Graph) -> Vec<(usize, Vec<usize>)> {
    (0..g.order())
        .map(|v| {
            let mut nd: Vec<usize> = Bits(g.neighbors(v)).map(|u| g.degree(u)).collect();
            nd.sort_unstable();
            (g.degree(v), nd)
        })
        .collect()
}

#[allow(clippy::too_many_arguments)]
fn extend_iso(
    g: &Graph,
    h: &Graph,
    sig_g: &[(usize, Vec<usize>)],
    sig_h: &[(usize, Vec<usize>)],
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: u64,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    for w in Bits(low_mask(h.order()) & !used) {
        if sig_g[v] != sig_h[w] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&u| g.has_edge(u, v) == h.has_edge(map[u], w));
        if !consistent {
            continue;
        }
        map[v] = w;
        if extend_iso(g, h, sig_g, sig_h, order, depth + 1, map, used | bit(w)) {
            return true;
        }
    }
    map[v] = usize::MAX;
    false
}

/// Whether `g` has a complete subgraph on `k` vertices.
pub fn has_clique(g: &Graph, k: usize) -> bool {
    fn grow(g: &Graph, cand: u64, need: usize) -> bool {
        if need == 0 {
            return true;
        }
        if (cand.count_ones() as usize) < need {
            return false;
        }
        let mut rest = cand;
        while rest != 0 {
            if (rest.count_ones() as usize) < need {
                return false;
            }
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if grow(g, rest & g.neighbors(v), need - 1) {
                return true;
            }
        }
        false
    }
    k <= g.order() && grow(g, low_mask(g.order()), k)
}

/// Every vertex has degree exactly one.
pub fn is_perfect_matching(g: &Graph) -> bool {
    (0..g.order()).all(|v| g.degree(v) == 1)
}

/// Whether `g ≅ K_{n/2,n/2}`.
///
/// The part containing vertex 0 must be exactly its closed non-neighborhood;
/// both parts must be independent, of size `n/2`, and fully joined.
pub fn is_complete_bipartite_balanced(g: &Graph) -> bool {
    let n = g.order();
    if !n.is_multiple_of(2) {
        return false;
    }
    let all = low_mask(n);
    let part_b = g.neighbors(0);
    let part_a = all & !part_b;
    if part_a.count_ones() as usize != n / 2 {
        return false;
    }
    Bits(part_a).all(|v| g.neighbors(v) == part_b) && Bits(part_b).all(|v| g.neighbors(v) == part_a)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, e: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, e).unwrap()
    }

    fn k1_k3() -> Graph {
        Graph::disjoint_union(&[Graph::independent(1).unwrap(), Graph::complete(3).unwrap()]).unwrap()
    }

    #[test]
    fn isomorphism_examples() {
        assert!(are_isomorphic(&g(4, &[(0, 1), (2, 3)]), &g(4, &[(0, 2), (1, 3)])));
        assert!(!are_isomorphic(&Graph::matching(2).unwrap(), &k1_k3()));
        let k2bar_k4 =
            Graph::disjoint_union(&[Graph::independent(2).unwrap(), Graph::complete(4).unwrap()]).unwrap();
        assert!(!are_isomorphic(&k2bar_k4, &Graph::matching(3).unwrap()));
        assert!(!are_isomorphic(&g(3, &[]), &g(4, &[])));
    }

    #[test]
    fn isomorphism_needs_more_than_degrees() {
        // C6 and 2K3 share every degree statistic used for pruning.
        let two_k3 =
            Graph::disjoint_union(&[Graph::complete(3).unwrap(), Graph::complete(3).unwrap()]).unwrap();
        assert!(!are_isomorphic(&Graph::cycle(6).unwrap(), &two_k3));
        let c6_relabel = g(6, &[(0, 3), (3, 1), (1, 4), (4, 2), (2, 5), (5, 0)]);
        assert!(are_isomorphic(&Graph::cycle(6).unwrap(), &c6_relabel));
    }

    #[test]
    fn clique_examples() {
        let c5 = Graph::cycle(5).unwrap();
        assert!(has_clique(&c5, 0));
        assert!(has_clique(&c5, 1));
        assert!(has_clique(&c5, 2));
        assert!(!has_clique(&c5, 3));
        let k4_k2bar =
            Graph::disjoint_union(&[Graph::complete(4).unwrap(), Graph::independent(2).unwrap()]).unwrap();
        assert!(has_clique(&k4_k2bar, 4));
        assert!(!has_clique(&k4_k2bar, 5));
        assert!(!has_clique(&k4_k2bar, 7));
    }

    #[test]
    fn perfect_matching_examples() {
        assert!(is_perfect_matching(&Graph::matching(3).unwrap()));
        let m = Graph::disjoint_union(&[Graph::matching(2).unwrap(), Graph::independent(1).unwrap()]).unwrap();
        assert!(!is_perfect_matching(&m));
        assert!(!is_perfect_matching(&k1_k3()));
    }

    #[test]
    fn balanced_complete_bipartite_examples() {
        assert!(is_complete_bipartite_balanced(&Graph::complete_bipartite(3, 3).unwrap()));
        assert!(!is_complete_bipartite_balanced(&Graph::complete_bipartite(2, 4).unwrap()));
        assert!(!is_complete_bipartite_balanced(&Graph::cycle(6).unwrap()));
        assert!(is_complete_bipartite_balanced(&Graph::complete(2).unwrap()));
        // Relabelled K_{2,2}.
        assert!(is_complete_bipartite_balanced(&g(4, &[(0, 1), (1, 2), (2, 3), (3, 0)])));
        assert!(!is_complete_bipartite_balanced(&Graph::empty(1).unwrap()));
    }
}
