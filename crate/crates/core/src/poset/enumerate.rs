//! One representative per isomorphism class of small posets.

use std::collections::HashSet;

use super::{canonical_form, Poset};
use crate::{Error, Result};

pub const ENUMERATE_LIMIT: usize = 6;

/// All `n`-element posets up to isomorphism, in a fixed order.
///
/// Naturally labelled orders are generated by choosing, for each element in
/// turn, a down-closed set of earlier elements as its down-set; isomorphs are
/// then discarded by canonical form, keeping the first one generated.
pub fn enumerate_posets(n: usize) -> Result<Vec<Poset>> {
    if n > ENUMERATE_LIMIT {
        return Err(Error::SizeLimitExceeded {
            what: "poset enumeration",
            n,
            limit: ENUMERATE_LIMIT,
        });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut downs: Vec<u64> = Vec::with_capacity(n);
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    grow(n, &mut downs, &mut seen, &mut out)?;
    Ok(out)
}

fn grow(
    n: usize,
    downs: &mut Vec<u64>,
    seen: &mut HashSet<super::CanonicalForm>,
    out: &mut Vec<Poset>,
) -> Result<()> {
    let y = downs.len();
    if y == n {
        let (p, _) = Poset::from_relation(n, |a, b| downs[b] >> a & 1 == 1)?;
        if seen.insert(canonical_form(&p)?) {
            out.push(p);
        }
        return Ok(());
    }
    for set in 0u64..(1 << y) {
        let closed = crate::bitset::bits(set).all(|x| downs[x] & !set == 0);
        if closed {
            downs.push(set);
            grow(n, downs, seen, out)?;
            downs.pop();
        }
    }
    Ok(())
}
