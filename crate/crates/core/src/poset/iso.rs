//! Order isomorphism for small posets: colour refinement, then backtracking.

use std::collections::BTreeMap;

use super::Poset;
use crate::{Error, Result};

/// Default bound on `n` for [`isomorphic`].
pub const ISO_LIMIT: usize = 10;

/// A colour with the sorted colours below and above.
type Signature = (usize, Vec<usize>, Vec<usize>);

/// Refines element colours until stable. Colours are numbered by sorting
/// their signatures, so equal colours mean the same thing in every poset
/// passed through the same call.
fn refine(parts: &[&Poset]) -> Vec<Vec<usize>> {
    let mut colors: Vec<Vec<usize>> = parts
        .iter()
        .map(|p| {
            (0..p.n())
                .map(|x| p.down_set(x).count() * 1024 + p.up_set(x).count())
                .collect()
        })
        .collect();
    let mut classes = usize::MAX;
    loop {
        let sigs: Vec<Vec<Signature>> = parts
            .iter()
            .zip(&colors)
            .map(|(p, col)| {
                (0..p.n())
                    .map(|x| {
                        let mut below: Vec<usize> = p.down_set(x).iter().map(|y| col[y]).collect();
                        let mut above: Vec<usize> = p.up_set(x).iter().map(|y| col[y]).collect();
                        below.sort_unstable();
                        above.sort_unstable();
                        (col[x], below, above)
                    })
                    .collect()
            })
            .collect();
        let mut ids = BTreeMap::new();
        for s in sigs.iter().flatten() {
            ids.insert(s.clone(), 0);
        }
        for (i, v) in ids.values_mut().enumerate() {
            *v = i;
        }
        colors = sigs
            .iter()
            .map(|ps| ps.iter().map(|s| ids[s]).collect())
            .collect();
        if ids.len() == classes {
            return colors;
        }
        classes = ids.len();
    }
}

pub fn isomorphic(p: &Poset, q: &Poset) -> Result<bool> {
    isomorphic_with_limit(p, q, ISO_LIMIT)
}

pub fn isomorphic_with_limit(p: &Poset, q: &Poset, limit: usize) -> Result<bool> {
    for n in [p.n(), q.n()] {
        if n > limit {
            return Err(Error::SizeLimitExceeded {
                what: "isomorphism test",
                n,
                limit,
            });
        }
    }
    if p.n() != q.n() {
        return Ok(false);
    }
    let colors = refine(&[p, q]);
    let (cp, cq) = (&colors[0], &colors[1]);
    let mut sp = cp.clone();
    let mut sq = cq.clone();
    sp.sort_unstable();
    sq.sort_unstable();
    if sp != sq {
        return Ok(false);
    }
    // map elements of p with rarest colours first
    let mut freq = vec![0usize; p.n() + cp.iter().max().copied().unwrap_or(0) + 1];
    for &c in cp {
        freq[c] += 1;
    }
    let mut order: Vec<usize> = (0..p.n()).collect();
    order.sort_by_key(|&x| (freq[cp[x]], x));
    let mut image = vec![usize::MAX; p.n()];
    let mut used = vec![false; q.n()];
    Ok(extend(p, q, cp, cq, &order, 0, &mut image, &mut used))
}

#[allow(clippy::too_many_arguments)]
fn extend(
    p: &Poset,
    q: &Poset,
    cp: &[usize],
    cq: &[usize],
    order: &[usize],
    depth: usize,
    image: &mut [usize],
    used: &mut [bool],
) -> bool {
    let Some(&x) = order.get(depth) else {
        return true;
    };
    for y in 0..q.n() {
        if used[y] || cq[y] != cp[x] {
            continue;
        }
        let consistent = order[..depth].iter().all(|&w| {
            let v = image[w];
            p.lt(w, x) == q.lt(v, y) && p.lt(x, w) == q.lt(y, v)
        });
        if !consistent {
            continue;
        }
        image[x] = y;
        used[y] = true;
        if extend(p, q, cp, cq, order, depth + 1, image, used) {
            return true;
        }
        used[y] = false;
    }
    image[x] = usize::MAX;
    false
}

/// A complete isomorphism invariant for posets with at most 11 elements.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: usize,
    bits: u128,
}

/// The lexicographically least relation matrix over all orderings that
/// list colour classes in colour order.
pub fn canonical_form(p: &Poset) -> Result<CanonicalForm> {
    let n = p.n();
    if n > 11 {
        return Err(Error::SizeLimitExceeded {
            what: "canonical form",
            n,
            limit: 11,
        });
    }
    let colors = refine(&[p]).pop().unwrap();
    let mut slots: Vec<usize> = colors.clone();
    slots.sort_unstable();
    let mut best = None;
    let mut perm = Vec::with_capacity(n);
    let mut used = vec![false; n];
    search(p, &colors, &slots, &mut perm, &mut used, 0, &mut best);
    Ok(CanonicalForm {
        n,
        bits: best.unwrap(),
    })
}

fn search(
    p: &Poset,
    colors: &[usize],
    slots: &[usize],
    perm: &mut Vec<usize>,
    used: &mut [bool],
    acc: u128,
    best: &mut Option<u128>,
) {
    let n = p.n();
    let i = perm.len();
    if i == n {
        if best.is_none_or(|b| acc < b) {
            *best = Some(acc);
        }
        return;
    }
    for x in 0..n {
        if used[x] || colors[x] != slots[i] {
            continue;
        }
        // the new row/column block for position i
        let mut block = 0u128;
        for (j, &w) in perm.iter().enumerate() {
            block |= (p.lt(w, x) as u128) << (2 * j);
            block |= (p.lt(x, w) as u128) << (2 * j + 1);
        }
        // blocks are packed from the top bits down, so numeric order is
        // lexicographic order of the blocks
        let total = n * (n - 1);
        let top = (i + 1) * i;
        let next = acc | (block << (total - top));
        if let Some(b) = *best {
            let shift = total - top;
            if shift < 128 && next >> shift > b >> shift {
                continue;
            }
        }
        used[x] = true;
        perm.push(x);
        search(p, colors, slots, perm, used, next, best);
        perm.pop();
        used[x] = false;
    }
}
