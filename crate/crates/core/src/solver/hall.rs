//! With no white edges on one side only the yellow edges constrain the map,
//! so a packing is a perfect matching in the complement of G3.

use crate::error::{Error, Result};
use crate::graph::{bit, low_mask, Bits};
use crate::triple::{PackingMap, Triple};

fn augment(t: &Triple, u: usize, all: u64, seen: &mut u64, owner: &mut [Option<usize>]) -> bool {
    let allowed = all & !t.yellow_of_v1(u);
    // A free image first, so unconstrained vertices keep their own index.
    if let Some(w) = Bits(allowed & !*seen).find(|&w| owner[w].is_none()) {
        owner[w] = Some(u);
        return true;
    }
    for w in Bits(allowed & !*seen) {
        *seen |= bit(w);
        if owner[w].is_none_or(|x| augment(t, x, all, seen, owner)) {
            owner[w] = Some(u);
            return true;
        }
    }
    false
}

/// Perfect matching in the bipartite complement of G3 by augmenting paths.
pub fn hall_matching(t: &Triple) -> Result<Option<PackingMap>> {
    if t.g1().edge_count() > 0 && t.g2().edge_count() > 0 {
        return Err(Error::Precondition("matching route needs one side without white edges".into()));
    }
    let n = t.n();
    let all = low_mask(n);
    let mut owner: Vec<Option<usize>> = vec![None; n];
    for u in 0..n {
        let mut seen = 0u64;
        if !augment(t, u, all, &mut seen, &mut owner) {
            return Ok(None);
        }
    }
    let mut perm = vec![0; n];
    for (w, u) in owner.iter().enumerate() {
        perm[u.expect("perfect matching covers V2")] = w;
    }
    super::certify(t, PackingMap::from_vec_unchecked(perm), "matching").map(Some)
}
