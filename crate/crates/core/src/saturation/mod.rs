//! Chain partitions, k-norms and saturation.
//!
//! The k-norm of a chain partition is `m_k = Σ min(k, |C|)`; it bounds the
//! largest k-family from above, and a partition attaining the bound is
//! k-saturated. Jointly saturated partitions are found by minimising a sum of
//! norms, see [`min_joint_norm`].

mod report;
mod search;

use std::ops::ControlFlow;

use serde::{Serialize, Serializer};

use crate::bitset::full_mask;
use crate::kfamily::dk;
use crate::{Chain, Error, Limits, Poset, Result};

pub use report::{is_polyunsaturated, PairVerdict, PolyunsatReport, Verdict};
pub use search::{find_saturated, min_joint_norm, min_norm, min_sum_norm};

/// A partition of the ground set into chains, ordered by least element.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ChainPartition {
    n: usize,
    chains: Vec<Chain>,
}

impl ChainPartition {
    pub fn new(p: &Poset, chains: Vec<Vec<usize>>) -> Result<ChainPartition> {
        let n = p.n();
        let mut seen = vec![false; n];
        let mut out = Vec::with_capacity(chains.len());
        for elems in chains {
            if elems.is_empty() {
                return Err(Error::PartitionMismatch("empty chain".into()));
            }
            let chain = Chain::new(p, elems)?;
            for &x in chain.elems() {
                if std::mem::replace(&mut seen[x], true) {
                    return Err(Error::PartitionMismatch(format!(
                        "element {x} appears twice"
                    )));
                }
            }
            out.push(chain);
        }
        if let Some(x) = seen.iter().position(|s| !s) {
            return Err(Error::PartitionMismatch(format!(
                "element {x} is not covered"
            )));
        }
        Ok(Self::from_chains_unchecked(n, out))
    }

    pub(crate) fn from_chains_unchecked(n: usize, mut chains: Vec<Chain>) -> ChainPartition {
        chains.sort_by_key(|c| c.elems()[0]);
        ChainPartition { n, chains }
    }

    pub(crate) fn from_raw(n: usize, chains: &[Vec<usize>]) -> ChainPartition {
        Self::from_chains_unchecked(
            n,
            chains
                .iter()
                .map(|c| Chain::from_sorted_unchecked(c.clone()))
                .collect(),
        )
    }

    /// All singletons.
    pub fn singletons(p: &Poset) -> ChainPartition {
        Self::from_raw(p.n(), &(0..p.n()).map(|x| vec![x]).collect::<Vec<_>>())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn chains(&self) -> &[Chain] {
        &self.chains
    }

    pub fn len(&self) -> usize {
        self.chains.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chains.is_empty()
    }

    /// Index of the chain containing `x`.
    pub fn chain_of(&self, x: usize) -> Option<usize> {
        self.chains.iter().position(|c| c.contains(x))
    }

    pub fn same_chain(&self, x: usize, y: usize) -> bool {
        self.chain_of(x).is_some() && self.chain_of(x) == self.chain_of(y)
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.chains.iter().map(Chain::len).collect()
    }

    pub fn mk(&self, k: usize) -> usize {
        mk(self, k)
    }

    /// Checks that this is a chain partition of `p`.
    pub fn validate(&self, p: &Poset) -> Result<()> {
        if self.n != p.n() {
            return Err(Error::PartitionMismatch(format!(
                "partition covers {} elements, poset has {}",
                self.n,
                p.n()
            )));
        }
        ChainPartition::new(p, self.chains.iter().map(|c| c.elems().to_vec()).collect()).map(|_| ())
    }
}

impl Serialize for ChainPartition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.chains.iter().map(Chain::elems))
    }
}

/// The k-norm `Σ min(k, |C|)`.
pub fn mk(cp: &ChainPartition, k: usize) -> usize {
    cp.chains.iter().map(|c| c.len().min(k)).sum()
}

pub fn is_k_saturated(p: &Poset, cp: &ChainPartition, k: usize) -> Result<bool> {
    cp.validate(p)?;
    Ok(mk(cp, k) == dk(p, k)?)
}

/// Visits every chain partition of `p` exactly once.
///
/// The chain through the lowest uncovered element is fixed first and grown
/// upward through uncovered elements above its current top, so no partition
/// is produced twice.
pub fn for_each_chain_partition<F>(p: &Poset, limits: &Limits, mut visit: F) -> Result<()>
where
    F: FnMut(&ChainPartition) -> ControlFlow<()>,
{
    limits.check("chain partition enumeration", p.n())?;
    let up: Vec<u64> = (0..p.n()).map(|x| p.up_mask(x)).collect();
    let mut walker = Walker {
        n: p.n(),
        up,
        chains: Vec::new(),
        clock: limits.clock(),
        visit: &mut visit,
    };
    let _ = walker.start(0)?;
    Ok(())
}

pub fn enumerate_chain_partitions(p: &Poset, limits: &Limits) -> Result<Vec<ChainPartition>> {
    let mut out = Vec::new();
    for_each_chain_partition(p, limits, |cp| {
        out.push(cp.clone());
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

struct Walker<'a, F> {
    n: usize,
    up: Vec<u64>,
    chains: Vec<Vec<usize>>,
    clock: crate::limits::Clock,
    visit: &'a mut F,
}

impl<F: FnMut(&ChainPartition) -> ControlFlow<()>> Walker<'_, F> {
    fn start(&mut self, covered: u64) -> Result<ControlFlow<()>> {
        self.clock.tick()?;
        let free = full_mask(self.n) & !covered;
        if free == 0 {
            let cp = ChainPartition::from_raw(self.n, &self.chains);
            return Ok((self.visit)(&cp));
        }
        let x = free.trailing_zeros() as usize;
        self.chains.push(vec![x]);
        let flow = self.extend(x, covered | 1 << x)?;
        self.chains.pop();
        Ok(flow)
    }

    fn extend(&mut self, last: usize, covered: u64) -> Result<ControlFlow<()>> {
        if self.start(covered)?.is_break() {
            return Ok(ControlFlow::Break(()));
        }
        let mut options = self.up[last] & !covered;
        while options != 0 {
            let y = options.trailing_zeros() as usize;
            options &= options - 1;
            self.chains.last_mut().unwrap().push(y);
            let flow = self.extend(y, covered | 1 << y)?;
            self.chains.last_mut().unwrap().pop();
            if flow.is_break() {
                return Ok(flow);
            }
        }
        Ok(ControlFlow::Continue(()))
    }
}
