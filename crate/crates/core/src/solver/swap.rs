//! Repairing a single yellow conflict by exchanging two images, and the
//! edge-insertion algorithm built on it.

use crate::conditions::{check_ss_product, Prediction};
use crate::error::{Error, Result};
use crate::graph::Bits;
use crate::triple::{Conflict, PackingMap, Triple};

use super::{backtrack_pack, certify};

/// Fixes the yellow conflict `v ↦ w` of `f` by trading images with some
/// `a ↦ b`. Candidates `a` are scanned in ascending order; `a` qualifies when
/// (i) the new images of `N1(a)` avoid `N2(w)`, (ii) the new images of
/// `N1(v)` avoid `N2(b)`, (iii) `vb ∉ E3` and (iv) `aw ∉ E3`.
pub fn swap_repair(t: &Triple, f: &PackingMap, c: Conflict) -> Result<Option<PackingMap>> {
    let Conflict::Yellow { v } = c else {
        return Err(Error::Precondition("swap repair needs a yellow conflict".into()));
    };
    if t.conflicts(f)? != [c] {
        return Err(Error::Precondition(format!("swap repair needs {c:?} to be the only conflict")));
    }
    let w = f.image(v);
    let mut perm = f.as_slice().to_vec();
    for a in (0..t.n()).filter(|&a| a != v) {
        let b = f.image(a);
        perm[v] = b;
        perm[a] = w;
        let ok = Bits(t.g1().neighbors(a)).all(|x| !t.g2().has_edge(w, perm[x]))
            && Bits(t.g1().neighbors(v)).all(|x| !t.g2().has_edge(b, perm[x]))
            && !t.has_yellow(v, b)
            && !t.has_yellow(a, w);
        if ok {
            return certify(t, PackingMap::from_vec_unchecked(perm), "swap repair").map(Some);
        }
        perm[v] = w;
        perm[a] = b;
    }
    Ok(None)
}

/// Packs a triple satisfying the product condition: solve the white graphs
/// alone, then insert the yellow edges in lexicographic order, repairing each
/// new conflict with [`swap_repair`].
pub fn constructive_ss_product(t: &Triple) -> Result<PackingMap> {
    let report = check_ss_product(t);
    if report.predicted != Prediction::MustPack {
        return Err(Error::Precondition(format!("product condition does not predict a packing: {report}")));
    }
    let mut current = t.white_only();
    let mut f = backtrack_pack(&current)
        .ok_or_else(|| Error::Internal("white graphs under the product condition did not pack".into()))?;
    for (u, w) in t.yellow_pairs().collect::<Vec<_>>() {
        current.toggle_yellow(u, w);
        if f.image(u) == w {
            f = swap_repair(&current, &f, Conflict::Yellow { v: u })?
                .ok_or_else(|| Error::Internal(format!("no swap repairs the conflict at ({u}, {w})")))?;
        }
    }
    certify(t, f, "product-condition construction")
}
