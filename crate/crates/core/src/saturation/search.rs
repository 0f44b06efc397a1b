//! Branch and bound over chain partitions minimising a sum of k-norms.
//!
//! For a set `K` of indices the cost of a chain of size `s` is
//! `Σ_{k∈K} min(k, s)`, so the total cost of a partition is `Σ_{k∈K} m_k`.
//! Since `m_k ≥ d_k` for every partition, a partition saturated for all of
//! `K` exists iff the minimum equals `Σ_{k∈K} d_k`; the search stops as soon
//! as it reaches that floor.
//!
//! Lower bound at a node: elements already in closed chains contribute their
//! exact cost. The rest `S` (the open chain plus everything uncovered) ends up
//! partitioned into chains, so it contributes at least `Σ_{k∈K} d_k(S)`, and
//! `d_k(S)` is at least the total size of the `k` largest levels of `S`,
//! where levels are taken by longest chain from below or from above.

use crate::bitset::{bits, full_mask};
use crate::kfamily::d_sequence;
use crate::limits::Clock;
use crate::{Error, Limits, Poset, Result};

use super::ChainPartition;

pub(crate) struct NormSearch<'a> {
    n: usize,
    up: Vec<u64>,
    down: Vec<u64>,
    ks: &'a [usize],
    floor: usize,
    clock: Clock,
    best: usize,
    best_chains: Vec<Vec<usize>>,
    chains: Vec<Vec<usize>>,
}

impl<'a> NormSearch<'a> {
    pub(crate) fn new(p: &Poset, ks: &'a [usize], floor: usize, clock: Clock) -> Self {
        NormSearch {
            n: p.n(),
            up: (0..p.n()).map(|x| p.up_mask(x)).collect(),
            down: (0..p.n()).map(|x| p.down_mask(x)).collect(),
            ks,
            floor,
            clock,
            best: usize::MAX,
            best_chains: Vec::new(),
            chains: Vec::new(),
        }
    }

    /// Minimum cost and the first minimiser found in search order.
    pub(crate) fn run(mut self) -> Result<(usize, ChainPartition)> {
        self.start(0, 0)?;
        Ok((
            self.best,
            ChainPartition::from_raw(self.n, &self.best_chains),
        ))
    }

    fn weight(&self, size: usize) -> usize {
        self.ks.iter().map(|&k| k.min(size)).sum()
    }

    fn lower_bound(&self, set: u64) -> usize {
        let mut from_below = [0usize; 65];
        let mut from_above = [0usize; 65];
        let mut level = [0usize; 64];
        for x in bits(set) {
            let l = 1 + bits(self.down[x] & set)
                .map(|w| level[w])
                .max()
                .unwrap_or(0);
            level[x] = l;
            from_below[l] += 1;
        }
        for x in bits(set).collect::<Vec<_>>().into_iter().rev() {
            let l = 1 + bits(self.up[x] & set).map(|w| level[w]).max().unwrap_or(0);
            level[x] = l;
            from_above[l] += 1;
        }
        let top_sums = |counts: &mut [usize; 65]| {
            counts.sort_unstable_by(|a, b| b.cmp(a));
            counts
                .iter()
                .scan(0, |acc, &c| {
                    *acc += c;
                    Some(*acc)
                })
                .collect::<Vec<_>>()
        };
        let below = top_sums(&mut from_below);
        let above = top_sums(&mut from_above);
        self.ks
            .iter()
            .map(|&k| below[k.min(64) - 1].max(above[k.min(64) - 1]))
            .sum()
    }

    fn done(&self) -> bool {
        self.best <= self.floor
    }

    fn start(&mut self, covered: u64, closed: usize) -> Result<()> {
        self.clock.tick()?;
        let free = full_mask(self.n) & !covered;
        if free == 0 {
            if closed < self.best {
                self.best = closed;
                self.best_chains = self.chains.clone();
            }
            return Ok(());
        }
        if closed + self.lower_bound(free) >= self.best {
            return Ok(());
        }
        let x = free.trailing_zeros() as usize;
        self.chains.push(vec![x]);
        let r = self.extend(x, covered | 1 << x, closed, 1);
        self.chains.pop();
        r
    }

    fn extend(&mut self, last: usize, covered: u64, closed: usize, size: usize) -> Result<()> {
        let mut options = self.up[last] & !covered;
        while options != 0 && !self.done() {
            let y = options.trailing_zeros() as usize;
            options &= options - 1;
            self.chains.last_mut().unwrap().push(y);
            let r = self.extend(y, covered | 1 << y, closed, size + 1);
            self.chains.last_mut().unwrap().pop();
            r?;
        }
        if self.done() {
            return Ok(());
        }
        self.start(covered, closed + self.weight(size))
    }
}

fn check_ks(ks: &[usize]) -> Result<()> {
    if let Some(&k) = ks.iter().find(|&&k| k == 0) {
        return Err(Error::BadK { k, max: 64 });
    }
    Ok(())
}

/// Minimum of `Σ_{k∈ks} m_k` over all chain partitions, with a minimiser.
pub fn min_sum_norm(p: &Poset, ks: &[usize], limits: &Limits) -> Result<(usize, ChainPartition)> {
    limits.check("saturation search", p.n())?;
    check_ks(ks)?;
    let d = d_sequence(p)?;
    let floor = ks.iter().map(|&k| d.get(k)).sum();
    NormSearch::new(p, ks, floor, limits.clock()).run()
}

/// Minimum k-norm over chain partitions; equals `d_k` by Greene-Kleitman.
pub fn min_norm(p: &Poset, k: usize, limits: &Limits) -> Result<(usize, ChainPartition)> {
    let found = min_sum_norm(p, &[k], limits)?;
    debug_assert_eq!(found.0, crate::kfamily::dk(p, k)?);
    Ok(found)
}

/// Minimum of `m_k + m_l` over chain partitions.
pub fn min_joint_norm(
    p: &Poset,
    k: usize,
    l: usize,
    limits: &Limits,
) -> Result<(usize, ChainPartition)> {
    if k >= l {
        return Err(Error::BadParameters(format!(
            "need k < l, got k = {k}, l = {l}"
        )));
    }
    min_sum_norm(p, &[k, l], limits)
}

/// A chain partition that is k-saturated for every `k` in `ks`, if one exists.
pub fn find_saturated(p: &Poset, ks: &[usize], limits: &Limits) -> Result<Option<ChainPartition>> {
    let mut ks = ks.to_vec();
    ks.sort_unstable();
    ks.dedup();
    limits.check("saturation search", p.n())?;
    check_ks(&ks)?;
    let d = d_sequence(p)?;
    let floor: usize = ks.iter().map(|&k| d.get(k)).sum();
    let (value, cp) = NormSearch::new(p, &ks, floor, limits.clock()).run()?;
    Ok((value == floor).then_some(cp))
}
